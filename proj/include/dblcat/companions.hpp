#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblcat/double_category.hpp"
#include "dblcat/report.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

/// f: a → b vertical, f_prime: a → b horizontal.
///   phi: top f', left f, right 1_b, bottom 1^b
///   psi: top 1^a, left 1_a, right f, bottom f'
struct CompanionPair {
    VArrowId f;
    HArrowId f_prime;
    SquareId phi;
    SquareId psi;

    auto operator<=>(const CompanionPair&) const = default;
};

enum class MateDirection { ToBeta, ToAlpha };

/// Outer arrows of a companion mate boundary. For pf (companion of f) and
/// pg (companion of g)
///   alpha: top j, left f∘i, right m∘g, bottom n
///   beta:  top g'∘j, left i, right m, bottom n∘f'
struct MateBoundary {
    VArrowId i;
    HArrowId j;
    VArrowId m;
    HArrowId n;

    auto operator<=>(const MateBoundary&) const = default;
};

/// Checks both defining equations; throws BoundaryMismatch on ill-shaped data.
bool check_companion(const DoubleCategory& d, const CompanionPair& p);
std::vector<CompanionPair> find_companions(const DoubleCategory& d, VArrowId f);
CompanionPair identity_companion(const DoubleCategory& d, ObjectId a);

/// Companion of g∘f with horizontal part g'∘f'.
CompanionPair compose_companions(const DoubleCategory& d, const CompanionPair& p, const CompanionPair& q);

/// The h-globular comparison f1' ⇒ f2', hcomp(psi2, phi1). Its inverse is
/// companion_iso(d, p2, p1). Throws MismatchedVertical.
SquareId companion_iso(const DoubleCategory& d, const CompanionPair& p1, const CompanionPair& p2);

/// Every (i, j, m, n) for which cell has the requested shape.
std::vector<MateBoundary> companion_factorizations(const DoubleCategory& d, const CompanionPair& pf,
                                                   const CompanionPair& pg, SquareId cell, MateDirection dir);

/// ToBeta pastes
///     [ 1^i  ]            [ phi_g ]
///     [ psi_f ]  | alpha |  [ 1^m   ]
/// and ToAlpha pastes
///     [ 1_j | psi_g ]
///     [     beta    ]
///     [ phi_f | 1_n ]
/// Without a boundary every factorization is tried; differing results throw
/// AmbiguousFactorization, none throws BoundaryNotFactorable.
SquareId companion_mate(const DoubleCategory& d, const CompanionPair& pf, const CompanionPair& pg, SquareId cell,
                        MateDirection dir, std::optional<MateBoundary> boundary = std::nullopt);

/// Str(D). One-cell i is pairs[i]; two-cell t is a v-globular square
/// cells[t].square with left target.f and right source.f, read source ⇒ target.
struct StrResult {
    struct Cell {
        OneCellId source;
        OneCellId target;
        SquareId square;
    };
    TwoCategory cat;
    std::vector<CompanionPair> pairs;
    std::vector<Cell> cells;
    /// Bijectivity of the projection onto the horizontal 2-category.
    ValidationReport projection;
};

StrResult str_2category(const DoubleCategory& d);

struct DoubleFunctorReport {
    ValidationReport report;
    std::size_t squares_mapped = 0;
    std::size_t boundaries_checked = 0;
    /// True when every square of the codomain is hit.
    bool covers_all = false;
};

/// Quin(Str(D)) → D, checked for strict functoriality and for bijectivity on
/// each boundary of the image.
DoubleFunctorReport quin_str_inclusion(const DoubleCategory& d);

/// Quin(K) → Quin(Str(Quin(K))) → Quin(K) is the identity on squares, where
/// the first map sends f to (f, f, identity, identity).
ValidationReport quin_str_unit_triangle(const TwoCategory& k);

std::string describe(const DoubleCategory& d, const CompanionPair& p);

}  // namespace dblcat
