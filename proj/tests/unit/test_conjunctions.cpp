#include <doctest.h>

#include "dblcat/conjunctions.hpp"
#include "dblcat/constructions.hpp"
#include "dblcat/error.hpp"
#include "dblcat/fixtures.hpp"
#include "oracles.hpp"

using namespace dblcat;

namespace {

std::vector<Conjunction> all_conjunctions(const DoubleCategory& d) {
    std::vector<Conjunction> out;
    for (auto f : d.v_arrows().ids()) {
        for (const auto& c : find_conjoints(d, f)) out.push_back(c);
    }
    return out;
}

oracle::Poset pos2_object(const std::string& name) { return name == "P" ? oracle::chain2() : oracle::point(); }

}  // namespace

TEST_SUITE("conjunctions") {
    TEST_CASE("identity conjunctions") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto a : d.objects().ids()) {
                auto c = identity_conjunction(d, a);
                CHECK(check_conjunction(d, c));
                auto found = find_conjoints(d, d.v_id(a));
                CHECK(std::find(found.begin(), found.end(), c) != found.end());
            }
        }
    }

    TEST_CASE("conjunctions in POS2_QUIN are Galois connections") {
        auto d = double_fixture("POS2_QUIN");
        auto values = oracle::pos2_values();
        std::size_t total = 0;
        for (auto f : d.v_arrows().ids()) {
            auto p = pos2_object(d.name(d.v_arrow(f).src));
            auto q = pos2_object(d.name(d.v_arrow(f).tgt));
            std::set<std::string> expected;
            for (auto g : d.h_hom(d.v_arrow(f).tgt, d.v_arrow(f).src)) {
                if (oracle::galois(p, q, values.at(d.name(f)), values.at(d.name(g)))) expected.insert(d.name(g));
            }
            std::set<std::string> found;
            for (const auto& c : find_conjoints(d, f)) {
                CHECK(check_conjunction(d, c));
                found.insert(d.name(c.g));
            }
            CHECK_MESSAGE(found == expected, d.name(f));
            total += found.size();
        }
        CHECK(total == 5);
        auto c = find_conjoints(d, d.v("const0"));
        REQUIRE(c.size() == 1);
        CHECK(d.name(c.front().g) == "!");
    }

    TEST_CASE("a corrupted unit is rejected") {
        auto d = double_fixture("CYCLIC_QUIN");
        std::size_t tried = 0;
        for (const auto& c : all_conjunctions(d)) {
            for (auto other : d.squares_with(d.boundary(c.eta))) {
                if (other == c.eta) continue;
                auto bad = c;
                bad.eta = other;
                CHECK(!check_conjunction(d, bad));
                ++tried;
            }
        }
        CHECK(tried > 0);
    }

    TEST_CASE("u has no conjoint") {
        auto d = double_fixture("WALKING_ARROW_SQ");
        CHECK(find_conjoints(d, d.v("u")).empty());
    }

    TEST_CASE("composition") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            auto cs = all_conjunctions(d);
            for (const auto& c : cs) {
                auto a = d.v_arrow(c.f).src;
                auto b = d.v_arrow(c.f).tgt;
                CHECK(compose_conjunctions(d, c, identity_conjunction(d, b)) == c);
                CHECK(compose_conjunctions(d, identity_conjunction(d, a), c) == c);
            }
            for (const auto& c1 : cs) {
                for (const auto& c2 : cs) {
                    if (d.v_arrow(c1.f).tgt != d.v_arrow(c2.f).src) continue;
                    auto c12 = compose_conjunctions(d, c1, c2);
                    CHECK(c12.f == d.compose_v(c2.f, c1.f));
                    CHECK(c12.g == d.compose_h(c1.g, c2.g));
                    CHECK(check_conjunction(d, c12));
                    for (const auto& c3 : cs) {
                        if (d.v_arrow(c2.f).tgt != d.v_arrow(c3.f).src) continue;
                        CHECK(compose_conjunctions(d, c12, c3) ==
                              compose_conjunctions(d, c1, compose_conjunctions(d, c2, c3)));
                    }
                }
            }
        }
        auto d = double_fixture("POS2_QUIN");
        auto c = find_conjoints(d, d.v("const0")).front();
        CHECK_THROWS_AS(compose_conjunctions(d, c, c), Error);
    }

    TEST_CASE("the mate of an identity square is an identity") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (const auto& c : all_conjunctions(d)) {
                auto a = d.v_arrow(c.f).src;
                auto b = d.v_arrow(c.f).tgt;
                ConjMateBoundary m{d.h_id(a), d.v_id(a), d.v_id(b), d.h_id(b)};
                CHECK(conj_mate(d, c, c, d.id_of_v(c.f), MateDirection::ToBeta, m) == d.id_of_h(c.g));
                CHECK(conj_mate(d, c, c, d.id_of_h(c.g), MateDirection::ToAlpha, m) == d.id_of_v(c.f));
            }
        }
    }

    TEST_CASE("mate round trips") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            auto cs = all_conjunctions(d);
            std::size_t trips = 0;
            for (const auto& c1 : cs) {
                for (const auto& c2 : cs) {
                    for (auto s : d.squares().ids()) {
                        for (const auto& m : conj_factorizations(d, c1, c2, s, MateDirection::ToBeta)) {
                            auto beta = conj_mate(d, c1, c2, s, MateDirection::ToBeta, m);
                            CHECK(conj_mate(d, c1, c2, beta, MateDirection::ToAlpha, m) == s);
                            ++trips;
                        }
                        for (const auto& m : conj_factorizations(d, c1, c2, s, MateDirection::ToAlpha)) {
                            auto alpha = conj_mate(d, c1, c2, s, MateDirection::ToAlpha, m);
                            CHECK(conj_mate(d, c1, c2, alpha, MateDirection::ToBeta, m) == s);
                        }
                    }
                }
            }
            if (n == "POS2_QUIN") CHECK(trips == 1248);
        }
    }

    TEST_CASE("POS2 mates are the unique cells on the predicted boundary") {
        auto d = double_fixture("POS2_QUIN");
        auto cs = all_conjunctions(d);
        for (const auto& c1 : cs) {
            for (const auto& c2 : cs) {
                for (auto s : d.squares().ids()) {
                    for (const auto& m : conj_factorizations(d, c1, c2, s, MateDirection::ToBeta)) {
                        Boundary predicted{d.compose_h(m.i, c2.g), m.m, m.j, d.compose_h(c1.g, m.n)};
                        CHECK(d.squares_with(predicted).size() == 1);
                        CHECK(d.boundary(conj_mate(d, c1, c2, s, MateDirection::ToBeta, m)) == predicted);
                    }
                }
            }
        }
    }

    TEST_CASE("golden mate for const0 and the identity on P") {
        auto d = double_fixture("POS2_QUIN");
        auto c1 = find_conjoints(d, d.v("const0")).front();
        auto id = identity_conjunction(d, d.object("P"));
        auto counit = d.sq("(id_P,id_P,id_P,const0P,const0P<=id_P)");
        auto idP = d.v("id_P");
        auto hP = d.h("id_P");
        ConjMateBoundary m{hP, d.v("!"), idP, hP};
        CHECK(d.name(conj_mate(d, c1, id, counit, MateDirection::ToBeta, m)) == "(id_P,!,id_P,!,!<=!)");
    }

    TEST_CASE("Conj") {
        struct Golden {
            const char* name;
            std::size_t one_cells, two_cells;
        };
        for (auto g : {Golden{"TERMINAL", 1, 1}, Golden{"WALKING_ARROW_SQ", 2, 2}, Golden{"POS2_QUIN", 5, 6},
                       Golden{"CYCLIC_QUIN", 6, 54}, Golden{"MONOID_QUIN", 1, 3}}) {
            auto c = conj_2category(double_fixture(g.name));
            CHECK_MESSAGE(c.cat.validate().ok(), g.name);
            CHECK_MESSAGE(c.mates.ok(), g.name);
            CHECK(c.cat.one_cells().size() == g.one_cells);
            CHECK(c.cat.two_cells().size() == g.two_cells);
        }
    }

    TEST_CASE("any two of companion, conjunction and adjunction give the third") {
        std::size_t seen = 0;
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            auto h = horizontal_2category(d);
            for (const auto& c : all_conjunctions(d)) {
                for (const auto& p : find_companions(d, c.f)) {
                    auto adj = adjunction_from(d, p, c);
                    CHECK(check_h_adjunction(d, adj));
                    CHECK(check_adjunction(h, to_adjunction2(d, h, adj)));
                    CHECK(conjunction_from(d, p, adj) == c);
                    CHECK(companion_from(d, c, adj) == p);
                    ++seen;
                }
            }
        }
        CHECK(seen > 0);
    }

    TEST_CASE("base change with identity conjunctions") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto a : d.objects().ids()) {
                auto id = identity_conjunction(d, a);
                BaseChangeSetup s{id, id, id, id};
                auto seed = d.identities(a).square;
                auto t = base_change_table(d, s, seed, seed);
                for (const auto& row : t.cells) {
                    for (auto cell : row) CHECK(cell == seed);
                }
                CHECK(t.linkage[0]);
                CHECK(t.linkage[1]);
            }
        }
    }

    TEST_CASE("base change linkage holds for every setup and seed") {
        for (const auto& n : {"WALKING_ARROW_SQ", "POS2_QUIN", "CYCLIC_QUIN"}) {
            auto d = double_fixture(n);
            auto cs = all_conjunctions(d);
            std::size_t tables = 0;
            for (const auto& ia : cs) {
                for (const auto& ib : cs) {
                    for (const auto& fc : cs) {
                        if (d.v_arrow(fc.f).src != d.v_arrow(ib.f).src || d.v_arrow(fc.f).tgt != d.v_arrow(ia.f).src)
                            continue;
                        for (const auto& fd : cs) {
                            if (d.v_arrow(fd.f).src != d.v_arrow(ib.f).tgt ||
                                d.v_arrow(fd.f).tgt != d.v_arrow(ia.f).tgt)
                                continue;
                            BaseChangeSetup s{ia, ib, fc, fd};
                            for (auto s1 : d.squares_with(base_change_seed_boundary(d, s, 0))) {
                                for (auto s2 : d.squares_with(base_change_seed_boundary(d, s, 1))) {
                                    auto t = base_change_table(d, s, s1, s2);
                                    CHECK(t.linkage[0]);
                                    CHECK(t.linkage[1]);
                                    for (int c = 0; c < 2; ++c) CHECK(t.invertible[0][c] == t.invertible[2][c]);
                                    ++tables;
                                }
                            }
                        }
                    }
                }
            }
            CHECK_MESSAGE(tables > 0, n);
        }
    }
}
