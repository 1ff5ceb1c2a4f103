#include <algorithm>
#include <set>

#include <doctest.h>

#include "dblcat/companions.hpp"
#include "dblcat/constructions.hpp"
#include "dblcat/error.hpp"
#include "dblcat/fixtures.hpp"
#include "oracles.hpp"

using namespace dblcat;

namespace {

std::vector<CompanionPair> all_pairs(const DoubleCategory& d) {
    std::vector<CompanionPair> out;
    for (auto f : d.v_arrows().ids()) {
        for (const auto& p : find_companions(d, f)) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_SUITE("companions") {
    TEST_CASE("identity pairs") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto a : d.objects().ids()) {
                auto p = identity_companion(d, a);
                CHECK(p.phi == d.identities(a).square);
                CHECK(p.psi == d.identities(a).square);
                CHECK(check_companion(d, p));
            }
        }
    }

    TEST_CASE("find_companions agrees with brute force") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto f : d.v_arrows().ids()) {
                auto brute = oracle::brute_companions(d, f);
                auto found = find_companions(d, f);
                CHECK(found.size() == brute.size());
                for (const auto& p : found) {
                    CHECK(check_companion(d, p));
                    CHECK(std::find(brute.begin(), brute.end(), std::tuple{p.f_prime, p.phi, p.psi}) != brute.end());
                }
            }
        }
    }

    TEST_CASE("every vertical arrow of POS2_QUIN is strong") {
        auto d = double_fixture("POS2_QUIN");
        for (auto f : d.v_arrows().ids()) CHECK(!oracle::brute_companions(d, f).empty());
    }

    TEST_CASE("terminal and walking arrow counts") {
        auto t = double_fixture("TERMINAL");
        CHECK(find_companions(t, t.v_arrows().ids().front()).size() == 1);
        auto w = double_fixture("WALKING_ARROW_SQ");
        CHECK(find_companions(w, w.v("u")).size() == 1);
    }

    TEST_CASE("a corrupted phi is rejected") {
        auto d = double_fixture("CYCLIC_QUIN");
        std::size_t tried = 0;
        for (const auto& p : all_pairs(d)) {
            for (auto other : d.squares_with(d.boundary(p.phi))) {
                if (other == p.phi) continue;
                CompanionPair q = p;
                q.phi = other;
                CHECK(!check_companion(d, q));
                ++tried;
            }
        }
        CHECK(tried > 0);
        auto p = all_pairs(d).front();
        p.phi = d.id_of_v(d.v("s"));
        CHECK_THROWS_AS(check_companion(d, p), Error);
    }

    TEST_CASE("companion isos are mutually inverse") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            for (auto f : d.v_arrows().ids()) {
                auto ps = find_companions(d, f);
                for (const auto& p1 : ps) {
                    CHECK(companion_iso(d, p1, p1) == d.id_of_h(p1.f_prime));
                    for (const auto& p2 : ps) {
                        auto there = companion_iso(d, p1, p2);
                        auto back = companion_iso(d, p2, p1);
                        CHECK(d.vcomp(there, back) == d.id_of_h(p1.f_prime));
                        CHECK(d.vcomp(back, there) == d.id_of_h(p2.f_prime));
                    }
                }
            }
        }
        auto d = double_fixture("POS2_QUIN");
        auto a = find_companions(d, d.v("const0P")).front();
        auto b = find_companions(d, d.v("const1P")).front();
        CHECK_THROWS_AS(companion_iso(d, a, b), Error);
    }

    TEST_CASE("composite pairs are companions") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            auto ps = all_pairs(d);
            for (const auto& p : ps) {
                for (const auto& q : ps) {
                    if (d.v_arrow(p.f).tgt != d.v_arrow(q.f).src) continue;
                    auto c = compose_companions(d, p, q);
                    CHECK(c.f == d.compose_v(q.f, p.f));
                    CHECK(c.f_prime == d.compose_h(q.f_prime, p.f_prime));
                    CHECK(check_companion(d, c));
                }
            }
        }
    }

    TEST_CASE("mates under identity pairs are the identity") {
        auto d = double_fixture("POS2_QUIN");
        for (auto s : d.squares().ids()) {
            const auto& b = d.boundary(s);
            auto pa = identity_companion(d, d.v_arrow(b.left).tgt);
            auto pb = identity_companion(d, d.v_arrow(b.right).src);
            MateBoundary m{b.left, b.top, b.right, b.bottom};
            CHECK(companion_mate(d, pa, pb, s, MateDirection::ToBeta, m) == s);
            CHECK(companion_mate(d, pa, pb, s, MateDirection::ToAlpha, m) == s);
        }
    }

    TEST_CASE("mate round trips") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            auto ps = all_pairs(d);
            std::size_t trips = 0;
            for (const auto& pf : ps) {
                for (const auto& pg : ps) {
                    for (auto s : d.squares().ids()) {
                        for (const auto& m : companion_factorizations(d, pf, pg, s, MateDirection::ToBeta)) {
                            auto beta = companion_mate(d, pf, pg, s, MateDirection::ToBeta, m);
                            CHECK(companion_mate(d, pf, pg, beta, MateDirection::ToAlpha, m) == s);
                            ++trips;
                        }
                        for (const auto& m : companion_factorizations(d, pf, pg, s, MateDirection::ToAlpha)) {
                            auto alpha = companion_mate(d, pf, pg, s, MateDirection::ToAlpha, m);
                            CHECK(companion_mate(d, pf, pg, alpha, MateDirection::ToBeta, m) == s);
                        }
                    }
                }
            }
            if (n == "POS2_QUIN") CHECK(trips == 2262);
        }
    }

    TEST_CASE("vertical 2-cells correspond to horizontal ones") {
        // With identity outer arrows the mate is a bijection from v-globular
        // squares f ⇒ g to h-globular squares g' ⇒ f'.
        for (const auto& n : valid_double_fixtures()) {
            auto d = double_fixture(n);
            auto ps = all_pairs(d);
            for (const auto& pf : ps) {
                for (const auto& pg : ps) {
                    auto a = d.v_arrow(pf.f).src;
                    auto b = d.v_arrow(pf.f).tgt;
                    if (d.v_arrow(pg.f).src != a || d.v_arrow(pg.f).tgt != b) continue;
                    MateBoundary m{d.v_id(a), d.h_id(a), d.v_id(b), d.h_id(b)};
                    const auto& vs = d.squares_with({d.h_id(a), pf.f, pg.f, d.h_id(b)});
                    const auto& hs = d.squares_with({pg.f_prime, d.v_id(a), d.v_id(b), pf.f_prime});
                    CHECK(vs.size() == hs.size());
                    std::set<SquareId> image;
                    for (auto s : vs) image.insert(companion_mate(d, pf, pg, s, MateDirection::ToBeta, m));
                    CHECK(image.size() == hs.size());
                }
            }
        }
    }

    TEST_CASE("errors from companion_mate") {
        auto d = double_fixture("POS2_QUIN");
        auto pf = find_companions(d, d.v("const0P")).front();
        auto s = d.id_of_v(d.v("const1"));
        try {
            companion_mate(d, pf, pf, s, MateDirection::ToBeta);
            FAIL("expected BoundaryNotFactorable");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::BoundaryNotFactorable);
        }
    }

    TEST_CASE("Str") {
        auto t = str_2category(double_fixture("TERMINAL"));
        CHECK(t.cat.objects().size() == 1);
        CHECK(t.cat.one_cells().size() == 1);
        CHECK(t.cat.two_cells().size() == 1);
        for (const auto& n : valid_double_fixtures()) {
            auto s = str_2category(double_fixture(n));
            CHECK_MESSAGE(s.cat.validate().ok(), n);
            CHECK_MESSAGE(s.projection.ok(), n);
        }
        auto w = str_2category(double_fixture("WALKING_ARROW_SQ"));
        CHECK(w.cat.objects().size() == 2);
        CHECK(w.cat.one_cells().size() == 3);
        CHECK(w.cat.two_cells().size() == 3);
        auto p = str_2category(double_fixture("POS2_QUIN"));
        CHECK(p.cat.objects().size() == 2);
        CHECK(p.cat.one_cells().size() == 7);
        CHECK(p.cat.two_cells().size() == 11);
    }

    TEST_CASE("Quin of Str includes into quintet double categories") {
        for (const auto& n : {"TERMINAL", "POS2_QUIN", "CYCLIC_QUIN", "MONOID_QUIN"}) {
            auto d = double_fixture(n);
            auto r = quin_str_inclusion(d);
            CHECK_MESSAGE(r.report.ok(), n);
            CHECK(r.covers_all);
            CHECK(r.squares_mapped >= d.squares().size());
        }
    }

    TEST_CASE("unit triangle of Quin and Str") {
        for (const auto& n : {"TERMINAL_2CAT", "POS2", "CYCLIC", "MONOID"}) CHECK(quin_str_unit_triangle(two_fixture(n)).ok());
    }
}
