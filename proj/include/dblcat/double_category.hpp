#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/ids.hpp"
#include "dblcat/names.hpp"
#include "dblcat/report.hpp"
#include "dblcat/table.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

/// Boundary of a square drawn as
///
///     a --top--> c
///     |          |
///   left       right
///     v          v
///     b -bottom-> d
struct Boundary {
    HArrowId top;
    VArrowId left;
    VArrowId right;
    HArrowId bottom;

    auto operator<=>(const Boundary&) const = default;
};

/// (1_a, 1^a, 1^{1_a} = 1_{1^a}) for one object.
struct ObjectIdentities {
    VArrowId v;
    HArrowId h;
    SquareId square;
};

/// A finite strict double category given by explicit composition tables.
///
/// Orientation is fixed throughout the library:
///   - `compose_v(g, f)` / `compose_h(g, f)` mean g after f;
///   - `hcomp(a, b)` places a on the left and b on the right (a.right == b.left);
///   - `vcomp(a, b)` places a on top and b below (a.bottom == b.top).
/// Squares are atoms: two squares are equal only when their ids are.
class DoubleCategory {
public:
    class Builder;

    struct Arrow {
        ObjectId src;
        ObjectId tgt;
    };

    const NameTable<ObjectId>& objects() const { return objects_; }
    const NameTable<VArrowId>& v_arrows() const { return v_arrows_; }
    const NameTable<HArrowId>& h_arrows() const { return h_arrows_; }
    const NameTable<SquareId>& squares() const { return squares_; }

    const Arrow& v_arrow(VArrowId f) const { return v_data_.at(f.index()); }
    const Arrow& h_arrow(HArrowId f) const { return h_data_.at(f.index()); }
    const Boundary& boundary(SquareId s) const { return sq_data_.at(s.index()); }

    ObjectId object(const std::string& n) const { return objects_.at(n, "object"); }
    VArrowId v(const std::string& n) const { return v_arrows_.at(n, "vertical arrow"); }
    HArrowId h(const std::string& n) const { return h_arrows_.at(n, "horizontal arrow"); }
    SquareId sq(const std::string& n) const { return squares_.at(n, "square"); }

    const std::string& name(ObjectId x) const { return objects_.name(x); }
    const std::string& name(VArrowId x) const { return v_arrows_.name(x); }
    const std::string& name(HArrowId x) const { return h_arrows_.name(x); }
    const std::string& name(SquareId x) const { return squares_.name(x); }

    VArrowId compose_v(VArrowId g, VArrowId f) const;
    HArrowId compose_h(HArrowId g, HArrowId f) const;
    SquareId hcomp(SquareId left, SquareId right) const;
    SquareId vcomp(SquareId top, SquareId bottom) const;

    VArrowId v_id(ObjectId a) const { return v_id_.at(a.index()); }
    HArrowId h_id(ObjectId a) const { return h_id_.at(a.index()); }
    /// 1^g: top and bottom horizontal identities, both sides g.
    SquareId id_of_v(VArrowId g) const { return id_of_v_.at(g.index()); }
    /// 1_f: left and right vertical identities, top and bottom f.
    SquareId id_of_h(HArrowId f) const { return id_of_h_.at(f.index()); }
    ObjectIdentities identities(ObjectId a) const;

    bool is_v_identity(VArrowId f) const { return v_id(v_arrow(f).src) == f; }
    bool is_h_identity(HArrowId f) const { return h_id(h_arrow(f).src) == f; }
    bool is_h_globular(SquareId s) const;
    bool is_v_globular(SquareId s) const;

    /// Squares with exactly this boundary, in id order.
    const std::vector<SquareId>& squares_with(const Boundary& b) const;
    const std::vector<SquareId>& by_left(VArrowId f) const { return by_left_.at(f.index()); }
    const std::vector<SquareId>& by_top(HArrowId f) const { return by_top_.at(f.index()); }
    const std::vector<VArrowId>& v_hom(ObjectId a, ObjectId b) const;
    const std::vector<HArrowId>& h_hom(ObjectId a, ObjectId b) const;

    /// Inverse of an h-globular square under vcomp (both orders give identities).
    std::optional<SquareId> h_inverse(SquareId s) const;
    /// Inverse of a v-globular square under hcomp.
    std::optional<SquareId> v_inverse(SquareId s) const;

    // Raw tables. Keys are in diagrammatic order: (f, g) ↦ g∘f for arrows,
    // (left, right) for hcomp and (top, bottom) for vcomp.
    const PairTable<VArrowId, VArrowId, VArrowId>& v_compose_table() const { return v_compose_; }
    const PairTable<HArrowId, HArrowId, HArrowId>& h_compose_table() const { return h_compose_; }
    const PairTable<SquareId, SquareId, SquareId>& hcomp_table() const { return hcomp_; }
    const PairTable<SquareId, SquareId, SquareId>& vcomp_table() const { return vcomp_; }

private:
    void index();

    NameTable<ObjectId> objects_;
    NameTable<VArrowId> v_arrows_;
    NameTable<HArrowId> h_arrows_;
    NameTable<SquareId> squares_;
    std::vector<Arrow> v_data_;
    std::vector<Arrow> h_data_;
    std::vector<Boundary> sq_data_;

    PairTable<VArrowId, VArrowId, VArrowId> v_compose_;
    PairTable<HArrowId, HArrowId, HArrowId> h_compose_;
    PairTable<SquareId, SquareId, SquareId> hcomp_;
    PairTable<SquareId, SquareId, SquareId> vcomp_;
    std::vector<VArrowId> v_id_;
    std::vector<HArrowId> h_id_;
    std::vector<SquareId> id_of_v_;
    std::vector<SquareId> id_of_h_;

    std::map<Boundary, std::vector<SquareId>> by_boundary_;
    std::vector<std::vector<SquareId>> by_left_;
    std::vector<std::vector<SquareId>> by_top_;
    std::vector<std::vector<VArrowId>> v_hom_;
    std::vector<std::vector<HArrowId>> h_hom_;
};

class DoubleCategory::Builder {
public:
    Builder() = default;
    /// Start from an existing structure, e.g. to corrupt a table entry.
    explicit Builder(DoubleCategory base);

    ObjectId add_object(std::string name);
    VArrowId add_v_arrow(std::string name, ObjectId src, ObjectId tgt);
    HArrowId add_h_arrow(std::string name, ObjectId src, ObjectId tgt);
    SquareId add_square(std::string name, const Boundary& b);

    void set_compose_v(VArrowId g, VArrowId f, VArrowId result);
    void set_compose_h(HArrowId g, HArrowId f, HArrowId result);
    void set_hcomp(SquareId left, SquareId right, SquareId result);
    void set_vcomp(SquareId top, SquareId bottom, SquareId result);
    void set_v_id(ObjectId a, VArrowId id);
    void set_h_id(ObjectId a, HArrowId id);
    void set_id_of_v(VArrowId g, SquareId s);
    void set_id_of_h(HArrowId f, SquareId s);

    const DoubleCategory& current() const { return dc_; }

    /// Checks that every identity slot is filled; axioms are left to validate().
    DoubleCategory build() &&;

private:
    DoubleCategory dc_;
};

/// Full axiom check: category laws for both arrow kinds, table totality and
/// boundaries, associativity and unit laws for both square compositions,
/// identity functoriality, middle-four interchange and 1^{1_a} = 1_{1^a}.
ValidationReport validate(const DoubleCategory& d);

/// Objects, horizontal arrows and h-globular squares. 2-cell src is the top
/// arrow, tgt the bottom one; names are carried over unchanged.
TwoCategory horizontal_2category(const DoubleCategory& d);
/// Objects, vertical arrows and v-globular squares. 2-cell src is the right
/// arrow, tgt the left one (a square reads "right∘top ⇒ bottom∘left").
TwoCategory vertical_2category(const DoubleCategory& d);

/// Name-for-name equality of every cell and table.
bool same_tables(const DoubleCategory& a, const DoubleCategory& b);

}  // namespace dblcat
