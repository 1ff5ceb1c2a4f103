#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/companions.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/report.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

/// f ⧏ g with f: a → b vertical and g: b → a horizontal.
///   eta: top 1^a, left f, right 1_a, bottom g
///   eps: top g, left 1_b, right f, bottom 1^b
struct Conjunction {
    VArrowId f;
    HArrowId g;
    SquareId eta;
    SquareId eps;

    auto operator<=>(const Conjunction&) const = default;
};

/// Outer arrows of a conjunction mate boundary. For c1 = f ⧏ g and c2 = h ⧏ k
///   alpha: top i, left m∘h, right f∘j, bottom n
///   beta:  top i∘k, left m, right j, bottom g∘n
struct ConjMateBoundary {
    HArrowId i;
    VArrowId j;
    VArrowId m;
    HArrowId n;

    auto operator<=>(const ConjMateBoundary&) const = default;
};

/// hcomp(eps, eta) = 1_g and vcomp(eta, eps) = 1^f. Throws BoundaryMismatch.
bool check_conjunction(const DoubleCategory& d, const Conjunction& c);
std::vector<Conjunction> find_conjoints(const DoubleCategory& d, VArrowId f);
Conjunction identity_conjunction(const DoubleCategory& d, ObjectId a);

/// (h∘f) ⧏ (g∘k) for c1 = f ⧏ g and c2 = h ⧏ k. Throws NotComposable.
Conjunction compose_conjunctions(const DoubleCategory& d, const Conjunction& c1, const Conjunction& c2);

std::vector<ConjMateBoundary> conj_factorizations(const DoubleCategory& d, const Conjunction& c1,
                                                  const Conjunction& c2, SquareId cell, MateDirection dir);

/// ToBeta pastes
///     [ eps_h ]           [ 1^j   ]
///     [ 1^m   ]  | alpha |  [ eta_f ]
/// and ToAlpha pastes
///     [ eta_h | 1_i ]
///     [     beta    ]
///     [ 1_n | eps_f ]
/// Factorization errors as for companion_mate.
SquareId conj_mate(const DoubleCategory& d, const Conjunction& c1, const Conjunction& c2, SquareId cell,
                   MateDirection dir, std::optional<ConjMateBoundary> boundary = std::nullopt);

/// Conj(D). One-cell i is conjunctions[i], pointing along its left conjoint;
/// two-cell t is the v-globular square cells[t].square with left target.f and
/// right source.f, paired with its h-globular mate k ⇒ g.
struct ConjResult {
    struct Cell {
        OneCellId source;
        OneCellId target;
        SquareId square;
        SquareId mate;
    };
    TwoCategory cat;
    std::vector<Conjunction> conjunctions;
    std::vector<Cell> cells;
    /// Bijectivity of the mate correspondence on each hom.
    ValidationReport mates;
};

ConjResult conj_2category(const DoubleCategory& d);

/// An adjunction left ⊣ right in the horizontal 2-category, as squares.
struct HAdjunction {
    HArrowId left;
    HArrowId right;
    SquareId unit;
    SquareId counit;

    auto operator<=>(const HAdjunction&) const = default;
};

/// Boundaries and both triangle identities, computed with square operations.
bool check_h_adjunction(const DoubleCategory& d, const HAdjunction& adj);
/// The same adjunction inside horizontal_2category(d).
Adjunction2 to_adjunction2(const DoubleCategory& d, const TwoCategory& h, const HAdjunction& adj);

// Any two of companion f' of f, conjunction f ⧏ g and adjunction f' ⊣ g
// determine the third. All throw IncompatibleData when the inputs disagree.
HAdjunction adjunction_from(const DoubleCategory& d, const CompanionPair& p, const Conjunction& c);
Conjunction conjunction_from(const DoubleCategory& d, const CompanionPair& p, const HAdjunction& adj);
CompanionPair companion_from(const DoubleCategory& d, const Conjunction& c, const HAdjunction& adj);

/// Two base change situations C, D over an arrow A ← B, compared by
/// iota_a: ι*_A ⧏ ι_⋆A (C_A → D_A), iota_b: ι*_B ⧏ ι_⋆B (C_B → D_B),
/// fstar_c: f*_C ⧏ f_*C (C_B → C_A) and fstar_d: f*_D ⧏ f_*D (D_B → D_A).
struct BaseChangeSetup {
    Conjunction iota_a;
    Conjunction iota_b;
    Conjunction fstar_c;
    Conjunction fstar_d;
};

/// The six transformations in the layout
///     ι*∘f* → f*∘ι*      f*∘ι* → ι*∘f*
///     f*∘ι⋆ → ι⋆∘f*      ι*∘f⋆ → f⋆∘ι*
///     ι⋆∘f⋆ → f⋆∘ι⋆      f⋆∘ι⋆ → ι⋆∘f⋆
/// Row 1 holds squares, rows 2 and 3 h-globular squares.
struct MateTable {
    std::array<std::array<SquareId, 2>, 3> cells{};
    std::array<std::array<bool, 2>, 3> invertible{};
    /// Row 1 moved to h-globular form with companions.
    std::array<SquareId, 2> row1_globular{};
    /// Row 1 invertible exactly when row 3 is, per column.
    std::array<bool, 2> linkage{};
    /// Horizontal companions of f*_C, f*_D, ι*_A, ι*_B used by the table.
    std::array<CompanionPair, 4> companions{};
};

/// Column 1 starts from seed1: top f*_C', left ι*_B, right ι*_A, bottom f*_D'.
/// Column 2 starts from seed2: top ι*_B', left f*_C, right f*_D, bottom ι*_A'.
/// Primes are horizontal companions. Throws ShapeMismatch.
MateTable base_change_table(const DoubleCategory& d, const BaseChangeSetup& setup, SquareId seed1, SquareId seed2);

/// The boundaries seeds must have, given a setup.
Boundary base_change_seed_boundary(const DoubleCategory& d, const BaseChangeSetup& setup, int column);

std::string describe(const DoubleCategory& d, const Conjunction& c);

}  // namespace dblcat
