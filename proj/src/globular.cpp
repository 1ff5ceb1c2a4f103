#include <unordered_map>

#include "dblcat/double_category.hpp"

namespace dblcat {

namespace {

template <class ArrowIdT>
TwoCategory globular(const DoubleCategory& d, const NameTable<ArrowIdT>& arrows, auto arrow, auto globular_pred,
                     auto src_of, auto tgt_of, auto ident, auto compose_table, bool vertical) {
    TwoCategory::Builder b;
    for (auto a : d.objects().ids()) b.add_object(d.name(a));
    for (auto f : arrows.ids()) b.add_one_cell(arrows.name(f), ObjectId{arrow(f).src}, ObjectId{arrow(f).tgt});

    std::unordered_map<SquareId, TwoCellId> cell;
    for (auto s : d.squares().ids()) {
        if (!globular_pred(s)) continue;
        cell[s] = b.add_two_cell(d.name(s), OneCellId{src_of(s).value}, OneCellId{tgt_of(s).value});
    }
    for (auto e : compose_table.entries()) {
        b.set_compose(OneCellId{e.second.value}, OneCellId{e.first.value}, OneCellId{e.result.value});
    }
    auto lookup = [&](SquareId s) -> std::optional<TwoCellId> {
        auto it = cell.find(s);
        if (it == cell.end()) return std::nullopt;
        return it->second;
    };
    auto copy = [&](const auto& table, bool as_vcomp2) {
        for (auto e : table.entries()) {
            auto x = lookup(e.first);
            auto y = lookup(e.second);
            auto r = lookup(e.result);
            if (!x || !y || !r) continue;
            if (as_vcomp2) {
                b.set_vcomp(*x, *y, *r);
            } else {
                b.set_hcomp(*x, *y, *r);
            }
        }
    };
    if (vertical) {
        // V: vcomp2(θ, χ) is the square χ beside θ; hcomp2(θ, χ) stacks θ over χ.
        for (auto e : d.hcomp_table().entries()) {
            auto x = lookup(e.first);
            auto y = lookup(e.second);
            auto r = lookup(e.result);
            if (x && y && r) b.set_vcomp(*y, *x, *r);
        }
        copy(d.vcomp_table(), false);
    } else {
        copy(d.vcomp_table(), true);
        copy(d.hcomp_table(), false);
    }
    for (auto a : d.objects().ids()) b.set_identity(a, OneCellId{ident(a).value});
    for (auto f : arrows.ids()) {
        if (auto c = lookup(vertical ? d.id_of_v(VArrowId{f.value}) : d.id_of_h(HArrowId{f.value}))) {
            b.set_identity(OneCellId{f.value}, *c);
        }
    }
    return std::move(b).build();
}

}  // namespace

TwoCategory horizontal_2category(const DoubleCategory& d) {
    return globular(
        d, d.h_arrows(), [&](HArrowId f) { return d.h_arrow(f); }, [&](SquareId s) { return d.is_h_globular(s); },
        [&](SquareId s) { return d.boundary(s).top; }, [&](SquareId s) { return d.boundary(s).bottom; },
        [&](ObjectId a) { return d.h_id(a); }, d.h_compose_table(), false);
}

TwoCategory vertical_2category(const DoubleCategory& d) {
    return globular(
        d, d.v_arrows(), [&](VArrowId f) { return d.v_arrow(f); }, [&](SquareId s) { return d.is_v_globular(s); },
        [&](SquareId s) { return d.boundary(s).right; }, [&](SquareId s) { return d.boundary(s).left; },
        [&](ObjectId a) { return d.v_id(a); }, d.v_compose_table(), true);
}

}  // namespace dblcat
