#include <array>
#include <set>

#include <doctest.h>

#include "dblcat/companions.hpp"
#include "dblcat/conjunctions.hpp"
#include "dblcat/constructions.hpp"
#include "dblcat/fixtures.hpp"
#include "dblcat/psfunctor.hpp"
#include "oracles.hpp"

using namespace dblcat;

namespace {

using Cocycle = std::array<std::array<int, 2>, 2>;

// Normalized 2-cocycles Z/2 × Z/2 → Z/3 with trivial action.
bool normalized_cocycle(const Cocycle& c) {
    for (int x = 0; x < 2; ++x) {
        if (c[0][x] % 3 != 0 || c[x][0] % 3 != 0) return false;
    }
    for (int g = 0; g < 2; ++g) {
        for (int h = 0; h < 2; ++h) {
            for (int k = 0; k < 2; ++k) {
                if ((c[g][h] + c[(g + h) % 2][k] - c[h][k] - c[g][(h + k) % 2]) % 3 != 0) return false;
            }
        }
    }
    return true;
}

std::vector<Conjunction> all_conjunctions(const DoubleCategory& d) {
    std::vector<Conjunction> out;
    for (auto f : d.v_arrows().ids()) {
        for (const auto& c : find_conjoints(d, f)) out.push_back(c);
    }
    return out;
}

std::set<std::string> families(const ValidationReport& r) {
    auto f = r.families();
    return {f.begin(), f.end()};
}

}  // namespace

TEST_SUITE("psfunctor") {
    TEST_CASE("2-category fixtures") {
        for (const auto& n : pseudofunctor2_fixture_names()) {
            auto r = check_pseudofunctor2(pseudofunctor2_fixture(n));
            if (n == "MUTANT_COCYCLE") {
                CHECK(families(r) == std::set<std::string>{"associativity", "unit"});
            } else {
                CHECK_MESSAGE(r.ok(), n);
            }
        }
        CHECK(check_pseudofunctor2(identity_pseudofunctor2(std::make_shared<TwoCategory>(two_fixture("POS2")))).ok());
    }

    TEST_CASE("cyclic constraints are coherent exactly for normalized cocycles") {
        struct Case {
            const char* name;
            Cocycle c;
        };
        for (const auto& k : {Case{"ID_CYCLIC", {{{0, 0}, {0, 0}}}}, Case{"TWISTED_CYCLIC", {{{0, 0}, {0, 2}}}},
                              Case{"MUTANT_COCYCLE", {{{0, 1}, {0, 0}}}}}) {
            CHECK_MESSAGE(check_pseudofunctor2(pseudofunctor2_fixture(k.name)).ok() == normalized_cocycle(k.c), k.name);
            CHECK(check_double_pseudofunctor(psfunctor_fixture(k.name)).ok() == normalized_cocycle(k.c));
        }
    }

    TEST_CASE("double pseudofunctor fixtures") {
        for (const auto& fx : psfunctor_fixtures()) {
            auto r = check_double_pseudofunctor(psfunctor_fixture(fx.name));
            CHECK_MESSAGE(r.ok() == fx.coherent, fx.name);
        }
        auto fam = [](const char* n) { return families(check_double_pseudofunctor(psfunctor_fixture(n))); };
        CHECK(fam("MUTANT_COMP_H") == std::set<std::string>{"h_associativity", "h_unit", "naturality_h"});
        CHECK(fam("MUTANT_COMP_V") == std::set<std::string>{"naturality_v", "v_associativity", "v_unit"});
        CHECK(fam("MUTANT_POS2_SQUARE") ==
              std::set<std::string>{"boundary", "naturality_h", "naturality_v", "unit_naturality_h"});
        auto cocycle = fam("MUTANT_COCYCLE");
        for (const auto* f : {"h_associativity", "v_associativity", "h_unit", "v_unit"}) CHECK(cocycle.count(f) == 1);
    }

    TEST_CASE("identity pseudofunctors") {
        for (const auto& n : valid_double_fixtures()) {
            auto d = std::make_shared<DoubleCategory>(double_fixture(n));
            auto id = identity_psfunctor(d);
            CHECK(check_double_pseudofunctor(id).ok());
            for (auto s : d->squares().ids()) CHECK(id(s) == s);
        }
    }

    TEST_CASE("composition") {
        for (const auto& fx : psfunctor_fixtures()) {
            if (!fx.coherent) continue;
            auto f = psfunctor_fixture(fx.name);
            auto id_dom = identity_psfunctor(f.dom);
            auto id_cod = identity_psfunctor(f.cod);
            for (const auto& g : {compose_psfunctors(f, id_dom), compose_psfunctors(id_cod, f)}) {
                CHECK(g.obj == f.obj);
                CHECK(g.v_map == f.v_map);
                CHECK(g.h_map == f.h_map);
                CHECK(g.sq_map == f.sq_map);
                CHECK(g.unit_h == f.unit_h);
                CHECK(g.unit_v == f.unit_v);
            }
            for (const auto& gx : psfunctor_fixtures()) {
                if (!gx.coherent || gx.domain != fx.domain) continue;
                auto g = psfunctor_fixture(gx.name);
                if (g.dom->squares().size() != f.cod->squares().size()) continue;
                CHECK_MESSAGE(check_double_pseudofunctor(compose_psfunctors(g, f)).ok(), gx.name << " after " << fx.name);
            }
        }
        auto a = psfunctor_fixture("ID_CYCLIC");
        auto b = psfunctor_fixture("ID_POS2");
        CHECK_THROWS_AS(compose_psfunctors(a, b), Error);
    }

    TEST_CASE("induced pseudofunctors of 2-categories") {
        for (const auto& fx : psfunctor_fixtures()) {
            if (!fx.coherent) continue;
            auto f = psfunctor_fixture(fx.name);
            CHECK_MESSAGE(check_pseudofunctor2(induced_h(f)).ok(), fx.name);
            CHECK_MESSAGE(check_pseudofunctor2(induced_v(f)).ok(), fx.name);
        }
    }

    TEST_CASE("the horizontal part of Quin(F) is F") {
        for (const auto& n : pseudofunctor2_fixture_names()) {
            auto f2 = pseudofunctor2_fixture(n);
            if (!check_pseudofunctor2(f2).ok()) continue;
            auto h = induced_h(quin_of_pseudofunctor(f2));
            auto dom_cells = oracle::h_quin_cells(*f2.dom, *h.dom);
            auto cod_cells = oracle::h_quin_cells(*f2.cod, *h.cod);
            CHECK(h.obj == f2.obj);
            CHECK(h.one == f2.one);
            for (auto t : f2.dom->two_cells().ids()) {
                CHECK(h.two.at(dom_cells[t.index()].index()) == cod_cells[f2.two[t.index()].index()]);
            }
            for (auto a : f2.dom->objects().ids()) CHECK(h.unit[a.index()] == cod_cells[f2.unit[a.index()].index()]);
            for (const auto& e : f2.comp.entries()) CHECK(h.comp.get(e.first, e.second) == cod_cells[e.result.index()]);
        }
    }

    TEST_CASE("transpose") {
        for (const auto& fx : psfunctor_fixtures()) {
            auto f = psfunctor_fixture(fx.name);
            if (!fx.coherent) continue;
            auto t = transpose_psfunctor(f);
            CHECK_MESSAGE(check_double_pseudofunctor(t).ok(), fx.name);
            for (std::size_t i = 0; i < f.v_map.size(); ++i) CHECK(t.h_map[i].value == f.v_map[i].value);
            for (std::size_t i = 0; i < f.h_map.size(); ++i) CHECK(t.v_map[i].value == f.h_map[i].value);
            CHECK(t.sq_map == f.sq_map);
            auto tt = transpose_psfunctor(t);
            CHECK(tt.comp_h == f.comp_h);
            CHECK(tt.comp_v == f.comp_v);
        }
    }

    TEST_CASE("companions and conjunctions are preserved") {
        for (const auto& fx : psfunctor_fixtures()) {
            if (!fx.coherent) continue;
            auto f = psfunctor_fixture(fx.name);
            const auto& d = *f.dom;
            for (auto a : d.v_arrows().ids()) {
                for (const auto& p : find_companions(d, a)) {
                    auto q = map_companion(f, p);
                    CHECK(q.f == f(p.f));
                    CHECK(q.f_prime == f(p.f_prime));
                    CHECK_MESSAGE(check_companion(*f.cod, q), fx.name);
                }
                for (const auto& c : find_conjoints(d, a)) {
                    auto e = map_conjunction(f, c);
                    CHECK(e.f == f(c.f));
                    CHECK(e.g == f(c.g));
                    CHECK_MESSAGE(check_conjunction(*f.cod, e), fx.name);
                }
            }
        }
    }

    TEST_CASE("mates are preserved") {
        const std::map<std::string, std::size_t> cells = {
            {"TERMINAL", 1}, {"WALKING_ARROW_SQ", 6}, {"POS2_QUIN", 738}, {"CYCLIC_QUIN", 864}};
        for (const auto& fx : psfunctor_fixtures()) {
            auto f = psfunctor_fixture(fx.name);
            const auto& d = *f.dom;
            auto cs = all_conjunctions(d);
            std::size_t checked = 0, failed = 0;
            for (const auto& c1 : cs) {
                for (const auto& c2 : cs) {
                    for (auto s : d.squares().ids()) {
                        if (conj_factorizations(d, c1, c2, s, MateDirection::ToBeta).empty()) continue;
                        ++checked;
                        if (!mate_preservation_check(f, c1, c2, s)) ++failed;
                    }
                }
            }
            CHECK(checked == cells.at(fx.domain));
            if (fx.coherent) {
                CHECK_MESSAGE(failed == 0, fx.name);
            } else {
                CHECK_MESSAGE(failed > 0, fx.name);
            }
        }
    }
}
