#pragma once

#include <string>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

/// A quintet (f, g, h, k, α) of a 2-category: top f, bottom g, left h,
/// right k and α: k∘f ⇒ g∘h.
struct Quintet {
    OneCellId f;
    OneCellId g;
    OneCellId h;
    OneCellId k;
    TwoCellId alpha;

    auto operator<=>(const Quintet&) const = default;
};

/// All quintets of k in the order quin(k) numbers its squares.
std::vector<Quintet> quintets(const TwoCategory& k);

std::string quintet_name(const TwoCategory& k, const Quintet& q);

/// Quin(K). Objects, vertical arrows and horizontal arrows carry the ids and
/// names of k's objects and 1-cells; square i is quintets(k)[i].
DoubleCategory quin(const TwoCategory& k);

/// The square of quin(k) for a quintet.
SquareId quintet_square(const DoubleCategory& q, const TwoCategory& k, const Quintet& x);

/// c as a 2-category whose only 2-cells are identities.
TwoCategory locally_discrete(const Category& c);

/// Commutative squares of c: quin of the locally discrete 2-category.
DoubleCategory square_category(const Category& c);

/// Vertical and horizontal arrows swapped; square boundaries reflected in
/// the diagonal, hcomp and vcomp exchanged.
DoubleCategory transpose(const DoubleCategory& d);

}  // namespace dblcat
