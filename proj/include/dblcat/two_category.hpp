#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblcat/ids.hpp"
#include "dblcat/names.hpp"
#include "dblcat/report.hpp"
#include "dblcat/table.hpp"

namespace dblcat {

/// A finite strict 2-category stored as explicit tables.
///
/// Conventions (shared with DoubleCategory): `compose(g, f)` is g after f;
/// `vcomp(θ, χ)` applies θ first (θ: f⇒g, χ: g⇒h gives f⇒h); `hcomp(θ, χ)`
/// has θ on the source side (θ: f⇒f' on a→b, χ: g⇒g' on b→c gives gf⇒g'f').
class TwoCategory {
public:
    class Builder;

    struct OneCell {
        ObjectId src;
        ObjectId tgt;
    };
    struct TwoCell {
        OneCellId src;
        OneCellId tgt;
    };

    const NameTable<ObjectId>& objects() const { return objects_; }
    const NameTable<OneCellId>& one_cells() const { return one_cells_; }
    const NameTable<TwoCellId>& two_cells() const { return two_cells_; }

    const OneCell& one_cell(OneCellId f) const { return one_data_.at(f.index()); }
    const TwoCell& two_cell(TwoCellId a) const { return two_data_.at(a.index()); }

    OneCellId compose(OneCellId g, OneCellId f) const;
    TwoCellId vcomp(TwoCellId first, TwoCellId second) const;
    TwoCellId hcomp(TwoCellId left, TwoCellId right) const;
    OneCellId identity(ObjectId a) const { return id1_.at(a.index()); }
    TwoCellId identity(OneCellId f) const { return id2_.at(f.index()); }

    /// Whiskering shorthands: θ∘f (precompose) and g∘θ (postcompose).
    TwoCellId whisker_pre(OneCellId f, TwoCellId theta) const { return hcomp(identity(f), theta); }
    TwoCellId whisker_post(TwoCellId theta, OneCellId g) const { return hcomp(theta, identity(g)); }

    /// 2-cells from src to tgt, in id order.
    const std::vector<TwoCellId>& hom(OneCellId src, OneCellId tgt) const;
    /// 1-cells a → b, in id order.
    const std::vector<OneCellId>& one_hom(ObjectId a, ObjectId b) const;

    /// Two-sided inverse under vertical composition, if one exists.
    std::optional<TwoCellId> inverse(TwoCellId theta) const;

    const PairTable<OneCellId, OneCellId, OneCellId>& compose_table() const { return compose_; }
    const PairTable<TwoCellId, TwoCellId, TwoCellId>& vcomp_table() const { return vcomp_; }
    const PairTable<TwoCellId, TwoCellId, TwoCellId>& hcomp_table() const { return hcomp_; }

    /// Exhaustive strict 2-category axiom check.
    ValidationReport validate() const;

private:
    void index();

    NameTable<ObjectId> objects_;
    NameTable<OneCellId> one_cells_;
    NameTable<TwoCellId> two_cells_;
    std::vector<OneCell> one_data_;
    std::vector<TwoCell> two_data_;
    PairTable<OneCellId, OneCellId, OneCellId> compose_;  // keyed (f, g) = g∘f
    PairTable<TwoCellId, TwoCellId, TwoCellId> vcomp_;
    PairTable<TwoCellId, TwoCellId, TwoCellId> hcomp_;
    std::vector<OneCellId> id1_;
    std::vector<TwoCellId> id2_;

    std::vector<std::vector<TwoCellId>> hom_;       // src * n + tgt
    std::vector<std::vector<OneCellId>> one_hom_;   // a * n + b
    std::vector<std::vector<TwoCellId>> out_;       // 2-cells by source 1-cell
};

class TwoCategory::Builder {
public:
    ObjectId add_object(std::string name);
    OneCellId add_one_cell(std::string name, ObjectId src, ObjectId tgt);
    TwoCellId add_two_cell(std::string name, OneCellId src, OneCellId tgt);

    void set_compose(OneCellId g, OneCellId f, OneCellId result);
    void set_vcomp(TwoCellId first, TwoCellId second, TwoCellId result);
    void set_hcomp(TwoCellId left, TwoCellId right, TwoCellId result);
    void set_identity(ObjectId a, OneCellId id);
    void set_identity(OneCellId f, TwoCellId id);

    ObjectId object(const std::string& n) const { return cat_.objects_.at(n, "object"); }
    OneCellId one_cell(const std::string& n) const { return cat_.one_cells_.at(n, "1-cell"); }
    TwoCellId two_cell(const std::string& n) const { return cat_.two_cells_.at(n, "2-cell"); }

    TwoCategory build() &&;

private:
    TwoCategory cat_;
    std::vector<std::optional<OneCellId>> id1_;
    std::vector<std::optional<TwoCellId>> id2_;
};

/// The same 1-cells with every 2-cell reversed.
TwoCategory co_dual(const TwoCategory& k);

/// Adjunction left ⊣ right inside a 2-category: unit 1 ⇒ right∘left,
/// counit left∘right ⇒ 1.
struct Adjunction2 {
    OneCellId left;
    OneCellId right;
    TwoCellId unit;
    TwoCellId counit;

    auto operator<=>(const Adjunction2&) const = default;
};

/// Boundaries plus both triangle identities.
bool check_adjunction(const TwoCategory& k, const Adjunction2& adj);

/// Every adjunction of the 2-category, by brute force over units and counits.
std::vector<Adjunction2> find_adjunctions(const TwoCategory& k);

/// True when both have identical names and tables (name-for-name).
bool same_tables(const TwoCategory& a, const TwoCategory& b);
/// Table equality under an explicit correspondence from b's ids to a's.
bool same_tables(const TwoCategory& a, const TwoCategory& b, const std::vector<ObjectId>& obj,
                 const std::vector<OneCellId>& one, const std::vector<TwoCellId>& two);

}  // namespace dblcat
