#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/companions.hpp"
#include "dblcat/conjunctions.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/report.hpp"
#include "dblcat/table.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

/// A double pseudofunctor F: dom → cod. Constraint squares:
///   unit_h[a]       F_a      h-globular, top F(1^a), bottom 1^{Fa}
///   unit_v[a]       F^a      v-globular, left 1_{Fa}, right F(1_a)
///   comp_v(f, g)    F^{gf}   v-globular, left Fg∘Ff, right F(gf)
///   comp_h(h, k)    F_{kh}   h-globular, top F(kh), bottom Fk∘Fh
/// comp_v and comp_h are keyed with the first arrow first.
struct DoublePseudofunctor {
    std::shared_ptr<const DoubleCategory> dom;
    std::shared_ptr<const DoubleCategory> cod;
    std::vector<ObjectId> obj;
    std::vector<VArrowId> v_map;
    std::vector<HArrowId> h_map;
    std::vector<SquareId> sq_map;
    std::vector<SquareId> unit_h;
    std::vector<SquareId> unit_v;
    PairTable<VArrowId, VArrowId, SquareId> comp_v;
    PairTable<HArrowId, HArrowId, SquareId> comp_h;

    ObjectId operator()(ObjectId a) const { return obj.at(a.index()); }
    VArrowId operator()(VArrowId f) const { return v_map.at(f.index()); }
    HArrowId operator()(HArrowId f) const { return h_map.at(f.index()); }
    SquareId operator()(SquareId s) const { return sq_map.at(s.index()); }
};

/// A pseudofunctor of 2-categories with unit[a]: F(1_a) ⇒ 1_{Fa} and
/// comp(f, g): F(gf) ⇒ Fg∘Ff.
struct Pseudofunctor2 {
    std::shared_ptr<const TwoCategory> dom;
    std::shared_ptr<const TwoCategory> cod;
    std::vector<ObjectId> obj;
    std::vector<OneCellId> one;
    std::vector<TwoCellId> two;
    std::vector<TwoCellId> unit;
    PairTable<OneCellId, OneCellId, TwoCellId> comp;
};

DoublePseudofunctor identity_psfunctor(std::shared_ptr<const DoubleCategory> d);
Pseudofunctor2 identity_pseudofunctor2(std::shared_ptr<const TwoCategory> k);

/// Exhaustive check of boundaries, invertibility of the constraints, the
/// associativity and unit coherences in both directions and both
/// naturality families with their transposes.
ValidationReport check_double_pseudofunctor(const DoublePseudofunctor& f);
ValidationReport check_pseudofunctor2(const Pseudofunctor2& f);

/// G∘F. Throws Mismatch unless F.cod and G.dom have the same tables.
DoublePseudofunctor compose_psfunctors(const DoublePseudofunctor& g, const DoublePseudofunctor& f);

/// HF and VF. Their domains and codomains are freshly extracted
/// horizontal_2category / vertical_2category values; cells keep their names.
Pseudofunctor2 induced_h(const DoublePseudofunctor& f);
Pseudofunctor2 induced_v(const DoublePseudofunctor& f);

/// Quin(F) between quin(dom) and quin(cod).
DoublePseudofunctor quin_of_pseudofunctor(const Pseudofunctor2& f);

/// The same functor between the transposed double categories.
DoublePseudofunctor transpose_psfunctor(const DoublePseudofunctor& f);

/// Ff' with
///     phi' = [ F(phi) | (F^b)^-1 ]      psi' = [ 1      | (F_a)^-1 ]
///            [ F_b    | 1        ]             [ F^a    | F(psi)   ]
CompanionPair map_companion(const DoublePseudofunctor& f, const CompanionPair& p);

/// Ff ⧏ Fg with
///     eta' = [ (F_a)^-1 | 1        ]    eps' = [ F^b | F(eps) ]
///            [ F(eta)   | (F^a)^-1 ]           [ 1   | F_b    ]
Conjunction map_conjunction(const DoublePseudofunctor& f, const Conjunction& c);

/// For an alpha-shaped cell with boundary (i, j, m, n), compares
///     norm_beta(F(conj_mate(cell)))
/// with
///     conj_mate(Fc1, Fc2, norm_alpha(F(cell))) over (Fi, Fj, Fm, Fn)
/// where norm_alpha(x) = [ F^{mh} | x | (F^{fj})^-1 ] and
/// norm_beta(y) = vertical paste of (F_{ik})^-1, y, F_{gn}.
/// Without a boundary every factorization must pass. Failures of any kind,
/// including missing cells, count as false.
bool mate_preservation_check(const DoublePseudofunctor& f, const Conjunction& c1, const Conjunction& c2,
                             SquareId cell, std::optional<ConjMateBoundary> boundary = std::nullopt);

/// The square data of a 2-functor-like map, named for reports.
struct PsfunctorFixture {
    std::string name;
    std::string domain;  // double category fixture name
    bool coherent;
};

std::vector<PsfunctorFixture> psfunctor_fixtures();
DoublePseudofunctor psfunctor_fixture(const std::string& name);
/// The 2-categorical data behind the quin-lifted fixtures.
Pseudofunctor2 pseudofunctor2_fixture(const std::string& name);
std::vector<std::string> pseudofunctor2_fixture_names();

}  // namespace dblcat
