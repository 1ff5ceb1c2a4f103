#include <doctest.h>

#include "dblcat/constructions.hpp"
#include "dblcat/error.hpp"
#include "dblcat/fixtures.hpp"
#include "oracles.hpp"

using namespace dblcat;

TEST_SUITE("core") {
    TEST_CASE("vertical identity composes to itself") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto a : d.objects().ids()) CHECK(d.compose_v(d.v_id(a), d.v_id(a)) == d.v_id(a));
        }
    }

    TEST_CASE("unit law in the square category of the walking arrow") {
        auto d = double_fixture("WALKING_ARROW_SQ");
        CHECK(d.compose_v(d.v("u"), d.v("id_a")) == d.v("u"));
        CHECK(d.compose_h(d.h("id_b"), d.h("u")) == d.h("u"));
    }

    TEST_CASE("horizontal composite in POS2_QUIN matches function composition") {
        auto d = double_fixture("POS2_QUIN");
        auto values = oracle::pos2_values();
        // ! after const0: Q → P → Q
        std::vector<int> composite;
        for (int x : values.at("const0")) composite.push_back(values.at("!")[x]);
        CHECK(composite == values.at("id_Q"));
        CHECK(d.compose_h(d.h("!"), d.h("const0")) == d.h("id_Q"));
        // every composite agrees with the functions
        for (auto f : d.h_arrows().ids()) {
            for (auto g : d.h_arrows().ids()) {
                if (d.h_arrow(f).tgt != d.h_arrow(g).src) continue;
                std::vector<int> gf;
                for (int x : values.at(d.name(f))) gf.push_back(values.at(d.name(g))[x]);
                CHECK(values.at(d.name(d.compose_h(g, f))) == gf);
            }
        }
    }

    TEST_CASE("composition errors") {
        auto d = double_fixture("POS2_QUIN");
        CHECK_THROWS_AS(d.compose_v(d.v("id_P"), d.v("id_Q")), Error);
        try {
            d.hcomp(d.id_of_v(d.v("id_P")), d.id_of_v(d.v("id_Q")));
            FAIL("expected NotComposable");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotComposable);
        }
    }

    TEST_CASE("identity squares compose to identity squares") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto e : d.h_compose_table().entries()) {
                CHECK(d.hcomp(d.id_of_h(e.first), d.id_of_h(e.second)) == d.id_of_h(e.result));
            }
            for (auto e : d.v_compose_table().entries()) {
                CHECK(d.vcomp(d.id_of_v(e.first), d.id_of_v(e.second)) == d.id_of_v(e.result));
            }
        }
    }

    TEST_CASE("unit laws for every square") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto s : d.squares().ids()) {
                const auto& b = d.boundary(s);
                CHECK(d.hcomp(d.id_of_v(b.left), s) == s);
                CHECK(d.hcomp(s, d.id_of_v(b.right)) == s);
                CHECK(d.vcomp(d.id_of_h(b.top), s) == s);
                CHECK(d.vcomp(s, d.id_of_h(b.bottom)) == s);
            }
        }
    }

    TEST_CASE("square category of the walking arrow has the commutative quadruples") {
        auto c = walking_arrow();
        auto quads = oracle::commutative_quadruples(c);
        auto d = double_fixture("WALKING_ARROW_SQ");
        CHECK(quads.size() == 6);
        CHECK(d.squares().size() == quads.size());
        std::size_t h_globular = 0;
        for (const auto& q : quads) {
            if (q[1] == c.identity(c.arrow(q[1]).src) && q[2] == c.identity(c.arrow(q[2]).src)) ++h_globular;
        }
        CHECK(h_globular == 3);
        std::size_t found = 0;
        for (auto s : d.squares().ids()) found += d.is_h_globular(s);
        CHECK(found == h_globular);
        // one hcomp output per composable pair
        std::size_t composable = 0;
        for (auto x : d.squares().ids()) composable += d.by_left(d.boundary(x).right).size();
        CHECK(d.hcomp_table().size() == composable);
    }

    TEST_CASE("terminal identities") {
        auto d = double_fixture("TERMINAL");
        CHECK(d.objects().size() == 1);
        CHECK(d.v_arrows().size() == 1);
        CHECK(d.h_arrows().size() == 1);
        CHECK(d.squares().size() == 1);
        auto ids = d.identities(d.objects().ids().front());
        CHECK(ids.square == d.squares().ids().front());
    }

    TEST_CASE("the identity square of a vertical identity is that of the horizontal identity") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto a : d.objects().ids()) CHECK(d.id_of_v(d.v_id(a)) == d.id_of_h(d.h_id(a)));
        }
    }

    TEST_CASE("quintet identities are identity quintets") {
        auto k = pos2();
        auto d = quin(k);
        for (auto a : d.objects().ids()) {
            auto ids = d.identities(a);
            CHECK(ids.v.value == k.identity(a).value);
            CHECK(ids.h.value == k.identity(a).value);
            auto q = quintets(k)[ids.square.index()];
            CHECK(q.alpha == k.identity(k.identity(a)));
        }
    }

    TEST_CASE("validate accepts the valid fixtures") {
        for (const auto& n : valid_double_fixtures()) CHECK_MESSAGE(validate(double_fixture(n)).ok(), n);
    }

    TEST_CASE("mutants fail in their target family") {
        for (const auto& n : mutant_double_fixtures()) {
            auto r = validate(double_fixture(n));
            CHECK_MESSAGE(!r.ok(), n);
            CHECK_MESSAGE(r.has_family(mutant_target_family(n)), n);
        }
        auto r = validate(double_fixture("MUTANT_INTERCHANGE"));
        CHECK(r.families() == std::set<std::string>{"interchange"});
        // the witness is the 2x2 grid
        CHECK(r.violations().front().witness.size() == 4);
    }

    TEST_CASE("interchange holds on every compatible grid of POS2_QUIN") {
        auto d = double_fixture("POS2_QUIN");
        std::size_t grids = 0;
        oracle::for_each_2x2(d, [&](const PastingGrid& g) {
            ++grids;
            auto rows = d.vcomp(d.hcomp(g.at(0, 0), g.at(0, 1)), d.hcomp(g.at(1, 0), g.at(1, 1)));
            auto cols = d.hcomp(d.vcomp(g.at(0, 0), g.at(1, 0)), d.vcomp(g.at(0, 1), g.at(1, 1)));
            CHECK(rows == cols);
        });
        CHECK(grids > 0);
    }

    TEST_CASE("H and V of the terminal double category") {
        auto d = double_fixture("TERMINAL");
        auto h = horizontal_2category(d);
        CHECK(h.objects().size() == 1);
        CHECK(h.one_cells().size() == 1);
        CHECK(h.two_cells().size() == 1);
        CHECK(h.validate().ok());
        CHECK(vertical_2category(d).validate().ok());
    }

    TEST_CASE("H and V of the quintets of POS2 recover POS2") {
        auto k = pos2();
        auto d = quin(k);
        auto h = horizontal_2category(d);
        auto v = vertical_2category(d);
        CHECK(same_tables(h, k, k.objects().ids(), k.one_cells().ids(), oracle::h_quin_cells(k, h)));
        CHECK(same_tables(v, k, k.objects().ids(), k.one_cells().ids(), oracle::v_quin_cells(k, v)));
    }

    TEST_CASE("inverses of globular squares") {
        auto d = double_fixture("CYCLIC_QUIN");
        for (auto s : d.squares().ids()) {
            if (!d.is_h_globular(s)) continue;
            auto inv = d.h_inverse(s);
            REQUIRE(inv);
            CHECK(d.vcomp(s, *inv) == d.id_of_h(d.boundary(s).top));
        }
    }
}
