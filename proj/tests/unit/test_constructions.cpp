#include <doctest.h>

#include "dblcat/companions.hpp"
#include "dblcat/conjunctions.hpp"
#include "dblcat/constructions.hpp"
#include "dblcat/error.hpp"
#include "dblcat/fixtures.hpp"
#include "oracles.hpp"

using namespace dblcat;

TEST_SUITE("constructions") {
    TEST_CASE("quin of the terminal 2-category is terminal") {
        auto d = quin(terminal_2category());
        CHECK(d.objects().size() == 1);
        CHECK(d.v_arrows().size() == 1);
        CHECK(d.h_arrows().size() == 1);
        CHECK(d.squares().size() == 1);
        CHECK(validate(d).ok());
    }

    TEST_CASE("POS2 has the monotone maps") {
        auto p = oracle::chain2();
        auto q = oracle::point();
        CHECK(oracle::monotone_maps(p, p).size() == 3);
        CHECK(oracle::monotone_maps(p, q).size() == 1);
        CHECK(oracle::monotone_maps(q, p).size() == 2);
        CHECK(oracle::monotone_maps(q, q).size() == 1);
        auto k = pos2();
        auto d = quin(k);
        CHECK(d.v_arrows().size() == 7);
        CHECK(d.h_arrows().size() == 7);
        const std::vector<oracle::Poset> obj = {p, q};
        for (auto a : k.objects().ids()) {
            for (auto b : k.objects().ids()) {
                auto maps = oracle::monotone_maps(obj[a.index()], obj[b.index()]);
                CHECK(k.one_hom(a, b).size() == maps.size());
            }
        }
        // 2-cells are the pointwise order
        auto values = oracle::pos2_values();
        for (auto f : k.one_cells().ids()) {
            for (auto g : k.one_cells().ids()) {
                if (k.one_cell(f).src != k.one_cell(g).src || k.one_cell(f).tgt != k.one_cell(g).tgt) continue;
                const auto& cod = obj[k.one_cell(f).tgt.index()];
                bool leq = oracle::pointwise_leq(cod, values.at(k.one_cells().name(f)), values.at(k.one_cells().name(g)));
                CHECK(k.hom(f, g).size() == (leq ? 1u : 0u));
            }
        }
    }

    TEST_CASE("each 1-cell of a quintet double category is its own companion") {
        for (const auto& name : {"POS2", "CYCLIC", "MONOID", "TERMINAL_2CAT"}) {
            auto k = two_fixture(name);
            auto d = quin(k);
            for (auto f : k.one_cells().ids()) {
                auto a = k.one_cell(f).src;
                auto b = k.one_cell(f).tgt;
                auto idf = k.identity(f);
                auto phi = quintet_square(d, k, {f, k.identity(b), f, k.identity(b), idf});
                auto psi = quintet_square(d, k, {k.identity(a), f, k.identity(a), f, idf});
                CompanionPair p{VArrowId{f.value}, HArrowId{f.value}, phi, psi};
                CHECK(check_companion(d, p));
            }
        }
    }

    TEST_CASE("quin outputs validate") {
        for (const auto& name : {"TERMINAL_2CAT", "POS2", "CYCLIC", "MONOID"}) CHECK(validate(quin(two_fixture(name))).ok());
    }

    TEST_CASE("square category") {
        CHECK(square_category(terminal_category()).squares().size() == 1);
        auto w = square_category(walking_arrow());
        CHECK(w.squares().size() == oracle::commutative_quadruples(walking_arrow()).size());
        CHECK(validate(w).ok());
    }

    TEST_CASE("conjoints in square categories exist exactly for invertible arrows") {
        for (const auto& c : {walking_arrow(), walking_iso(), terminal_category()}) {
            auto d = square_category(c);
            for (auto f : c.arrows().ids()) {
                auto expected = oracle::inverses(c, f);
                auto found = find_conjoints(d, VArrowId{f.value});
                std::set<std::uint32_t> a, b;
                for (auto g : expected) a.insert(g.value);
                for (const auto& x : found) b.insert(x.g.value);
                CHECK(a == b);
            }
        }
    }

    TEST_CASE("transpose") {
        auto t = double_fixture("TERMINAL");
        CHECK(same_tables(transpose(t), t));
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            auto td = transpose(d);
            CHECK(same_tables(transpose(td), d));
            CHECK(validate(td).ok());
            CHECK(td.v_arrows().size() == d.h_arrows().size());
            CHECK(td.h_arrows().size() == d.v_arrows().size());
            CHECK(td.squares().size() == d.squares().size());
        }
        CHECK(!validate(transpose(double_fixture("MUTANT_INTERCHANGE"))).ok());
    }

    TEST_CASE("transpose of quintets counts like quintets of the 2-cell dual") {
        // A square of quin(K^co) with boundary (top, left, right, bottom) is a
        // 2-cell bottom∘left ⇒ right∘top of K.
        for (const auto& name : {"POS2", "CYCLIC", "MONOID"}) {
            auto k = two_fixture(name);
            auto td = transpose(quin(k));
            std::size_t total = 0;
            for (auto top : k.one_cells().ids()) {
                for (auto left : k.one_cells().ids()) {
                    if (k.one_cell(top).src != k.one_cell(left).src) continue;
                    for (auto right : k.one_cells().ids()) {
                        if (k.one_cell(right).src != k.one_cell(top).tgt) continue;
                        for (auto bottom : k.one_cells().ids()) {
                            if (k.one_cell(bottom).src != k.one_cell(left).tgt ||
                                k.one_cell(bottom).tgt != k.one_cell(right).tgt) {
                                continue;
                            }
                            auto n = k.hom(k.compose(bottom, left), k.compose(right, top)).size();
                            total += n;
                            Boundary b{HArrowId{top.value}, VArrowId{left.value}, VArrowId{right.value},
                                       HArrowId{bottom.value}};
                            CHECK(td.squares_with(b).size() == n);
                        }
                    }
                }
            }
            CHECK(td.squares().size() == total);
        }
    }

    TEST_CASE("companions of the transpose") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            auto td = transpose(d);
            std::size_t here = 0, there = 0;
            for (auto f : d.v_arrows().ids()) here += find_companions(d, f).size();
            for (auto f : td.v_arrows().ids()) there += find_companions(td, f).size();
            // a companion pair (f, f', φ, ψ) transposes to (f', f, φ, ψ)
            for (auto f : d.v_arrows().ids()) {
                for (const auto& p : find_companions(d, f)) {
                    CompanionPair tp{VArrowId{p.f_prime.value}, HArrowId{p.f.value}, p.phi, p.psi};
                    CHECK(check_companion(td, tp));
                }
            }
            CHECK(here == there);
        }
    }

    TEST_CASE("fixtures") {
        auto t = double_fixture("TERMINAL");
        CHECK(t.objects().size() == 1);
        CHECK(validate(double_fixture("POS2_QUIN")).ok());
        CHECK(validate(double_fixture("MUTANT_INTERCHANGE")).families().size() == 1);
        CHECK_THROWS_AS(double_fixture("NOPE"), Error);
        CHECK_THROWS_AS(fixture_kind("NOPE"), Error);
        for (const auto& n : fixture_names()) CHECK_NOTHROW(fixture_kind(n));
    }
}
