#include "dblcat/constructions.hpp"

#include <map>

namespace dblcat {

std::vector<Quintet> quintets(const TwoCategory& k) {
    std::vector<Quintet> out;
    const auto objects = k.objects().ids();
    for (auto h : k.one_cells().ids()) {
        const auto a = k.one_cell(h).src;
        const auto b = k.one_cell(h).tgt;
        for (auto c : objects) {
            for (auto f : k.one_hom(a, c)) {
                for (auto d : objects) {
                    for (auto kk : k.one_hom(c, d)) {
                        for (auto g : k.one_hom(b, d)) {
                            for (auto alpha : k.hom(k.compose(kk, f), k.compose(g, h))) {
                                out.push_back({f, g, h, kk, alpha});
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::string quintet_name(const TwoCategory& k, const Quintet& q) {
    const auto& n = k.one_cells();
    return "(" + n.name(q.f) + "," + n.name(q.g) + "," + n.name(q.h) + "," + n.name(q.k) + "," +
           k.two_cells().name(q.alpha) + ")";
}

SquareId quintet_square(const DoubleCategory& q, const TwoCategory& k, const Quintet& x) {
    return q.sq(quintet_name(k, x));
}

DoubleCategory quin(const TwoCategory& k) {
    DoubleCategory::Builder b;
    for (auto a : k.objects().ids()) b.add_object(k.objects().name(a));
    for (auto f : k.one_cells().ids()) {
        const auto& c = k.one_cell(f);
        b.add_v_arrow(k.one_cells().name(f), c.src, c.tgt);
    }
    for (auto f : k.one_cells().ids()) {
        const auto& c = k.one_cell(f);
        b.add_h_arrow(k.one_cells().name(f), c.src, c.tgt);
    }
    auto v = [](OneCellId f) { return VArrowId{f.value}; };
    auto h = [](OneCellId f) { return HArrowId{f.value}; };

    const auto all = quintets(k);
    std::map<Quintet, SquareId> index;
    std::vector<std::vector<std::size_t>> by_left(k.one_cells().size());
    std::vector<std::vector<std::size_t>> by_top(k.one_cells().size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& q = all[i];
        index[q] = b.add_square(quintet_name(k, q), {h(q.f), v(q.h), v(q.k), h(q.g)});
        by_left[q.h.index()].push_back(i);
        by_top[q.f.index()].push_back(i);
    }

    for (auto e : k.compose_table().entries()) {
        b.set_compose_v(v(e.second), v(e.first), v(e.result));
        b.set_compose_h(h(e.second), h(e.first), h(e.result));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& x = all[i];
        for (auto j : by_left[x.k.index()]) {
            const auto& y = all[j];
            auto alpha = k.vcomp(k.hcomp(k.identity(x.f), y.alpha), k.hcomp(x.alpha, k.identity(y.g)));
            Quintet r{k.compose(y.f, x.f), k.compose(y.g, x.g), x.h, y.k, alpha};
            b.set_hcomp(index.at(x), index.at(y), index.at(r));
        }
        for (auto j : by_top[x.g.index()]) {
            const auto& y = all[j];
            auto alpha = k.vcomp(k.hcomp(x.alpha, k.identity(y.k)), k.hcomp(k.identity(x.h), y.alpha));
            Quintet r{x.f, y.g, k.compose(y.h, x.h), k.compose(y.k, x.k), alpha};
            b.set_vcomp(index.at(x), index.at(y), index.at(r));
        }
    }
    for (auto a : k.objects().ids()) {
        b.set_v_id(a, v(k.identity(a)));
        b.set_h_id(a, h(k.identity(a)));
    }
    for (auto f : k.one_cells().ids()) {
        const auto& c = k.one_cell(f);
        auto ida = k.identity(c.src);
        auto idb = k.identity(c.tgt);
        b.set_id_of_v(v(f), index.at(Quintet{ida, idb, f, f, k.identity(f)}));
        b.set_id_of_h(h(f), index.at(Quintet{f, f, ida, idb, k.identity(f)}));
    }
    return std::move(b).build();
}

TwoCategory locally_discrete(const Category& c) {
    TwoCategory::Builder b;
    for (auto a : c.objects().ids()) b.add_object(c.objects().name(a));
    for (auto f : c.arrows().ids()) b.add_one_cell(c.arrows().name(f), c.arrow(f).src, c.arrow(f).tgt);
    for (auto f : c.arrows().ids()) {
        auto one = OneCellId{f.value};
        b.set_identity(one, b.add_two_cell("=" + c.arrows().name(f), one, one));
    }
    for (auto e : c.compose_table().entries()) {
        OneCellId f{e.first.value};
        OneCellId g{e.second.value};
        OneCellId r{e.result.value};
        b.set_compose(g, f, r);
        b.set_hcomp(TwoCellId{f.value}, TwoCellId{g.value}, TwoCellId{r.value});
    }
    for (auto f : c.arrows().ids()) b.set_vcomp(TwoCellId{f.value}, TwoCellId{f.value}, TwoCellId{f.value});
    for (auto a : c.objects().ids()) b.set_identity(a, OneCellId{c.identity(a).value});
    return std::move(b).build();
}

DoubleCategory square_category(const Category& c) { return quin(locally_discrete(c)); }

DoubleCategory transpose(const DoubleCategory& d) {
    DoubleCategory::Builder b;
    for (auto a : d.objects().ids()) b.add_object(d.name(a));
    for (auto f : d.h_arrows().ids()) b.add_v_arrow(d.name(f), d.h_arrow(f).src, d.h_arrow(f).tgt);
    for (auto f : d.v_arrows().ids()) b.add_h_arrow(d.name(f), d.v_arrow(f).src, d.v_arrow(f).tgt);
    auto v = [](HArrowId f) { return VArrowId{f.value}; };
    auto h = [](VArrowId f) { return HArrowId{f.value}; };
    for (auto s : d.squares().ids()) {
        const auto& x = d.boundary(s);
        b.add_square(d.name(s), {h(x.left), v(x.top), v(x.bottom), h(x.right)});
    }
    for (auto e : d.h_compose_table().entries()) b.set_compose_v(v(e.second), v(e.first), v(e.result));
    for (auto e : d.v_compose_table().entries()) b.set_compose_h(h(e.second), h(e.first), h(e.result));
    for (auto e : d.vcomp_table().entries()) b.set_hcomp(e.first, e.second, e.result);
    for (auto e : d.hcomp_table().entries()) b.set_vcomp(e.first, e.second, e.result);
    for (auto a : d.objects().ids()) {
        b.set_v_id(a, v(d.h_id(a)));
        b.set_h_id(a, h(d.v_id(a)));
    }
    for (auto f : d.h_arrows().ids()) b.set_id_of_v(v(f), d.id_of_h(f));
    for (auto f : d.v_arrows().ids()) b.set_id_of_h(h(f), d.id_of_v(f));
    return std::move(b).build();
}

}  // namespace dblcat
