#include "dblcat/double_category.hpp"

namespace dblcat {

namespace {

template <class Id, class Table>
void check_arrow_category(const DoubleCategory& d, const NameTable<Id>& arrows, const Table& table,
                          auto arrow, auto identity, const std::string& family, ValidationReport& report) {
    auto n = [&](Id x) { return arrows.name(x); };
    const auto all = arrows.ids();
    for (auto f : all) {
        auto left = table.get(identity(arrow(f).src), f);
        auto right = table.get(f, identity(arrow(f).tgt));
        if (left != f || right != f) report.add(family, {n(f)}, "unit law");
    }
    for (auto f : all) {
        for (auto g : all) {
            if (arrow(f).tgt != arrow(g).src) continue;
            auto gf = table.get(f, g);
            if (!gf) continue;
            for (auto h : all) {
                if (arrow(g).tgt != arrow(h).src) continue;
                auto hg = table.get(g, h);
                if (!hg) continue;
                if (table.get(*gf, h) != table.get(f, *hg)) report.add(family, {n(f), n(g), n(h)}, "associativity");
            }
        }
    }
    (void)d;
}

}  // namespace

ValidationReport validate(const DoubleCategory& d) {
    ValidationReport report;
    auto n = [&](auto x) { return d.name(x); };
    const auto objects = d.objects().ids();
    const auto vs = d.v_arrows().ids();
    const auto hs = d.h_arrows().ids();
    const auto sqs = d.squares().ids();
    auto varrow = [&](VArrowId f) { return d.v_arrow(f); };
    auto harrow = [&](HArrowId f) { return d.h_arrow(f); };

    // boundary
    for (auto a : objects) {
        const auto& v = d.v_arrow(d.v_id(a));
        const auto& h = d.h_arrow(d.h_id(a));
        if (v.src != a || v.tgt != a) report.add("boundary", {n(a), n(d.v_id(a))}, "vertical identity");
        if (h.src != a || h.tgt != a) report.add("boundary", {n(a), n(d.h_id(a))}, "horizontal identity");
    }
    for (auto g : vs) {
        const auto& ga = d.v_arrow(g);
        Boundary want{d.h_id(ga.src), g, g, d.h_id(ga.tgt)};
        if (d.boundary(d.id_of_v(g)) != want) report.add("boundary", {n(g), n(d.id_of_v(g))}, "identity square 1^g");
    }
    for (auto f : hs) {
        const auto& fa = d.h_arrow(f);
        Boundary want{f, d.v_id(fa.src), d.v_id(fa.tgt), f};
        if (d.boundary(d.id_of_h(f)) != want) report.add("boundary", {n(f), n(d.id_of_h(f))}, "identity square 1_f");
    }
    for (auto e : d.v_compose_table().entries()) {
        const auto& f = d.v_arrow(e.first);
        const auto& g = d.v_arrow(e.second);
        const auto& r = d.v_arrow(e.result);
        if (f.tgt != g.src || r.src != f.src || r.tgt != g.tgt) {
            report.add("boundary", {n(e.first), n(e.second), n(e.result)}, "vertical composite");
        }
    }
    for (auto e : d.h_compose_table().entries()) {
        const auto& f = d.h_arrow(e.first);
        const auto& g = d.h_arrow(e.second);
        const auto& r = d.h_arrow(e.result);
        if (f.tgt != g.src || r.src != f.src || r.tgt != g.tgt) {
            report.add("boundary", {n(e.first), n(e.second), n(e.result)}, "horizontal composite");
        }
    }
    for (auto e : d.hcomp_table().entries()) {
        const auto& a = d.boundary(e.first);
        const auto& b = d.boundary(e.second);
        bool ok = a.right == b.left;
        if (ok) {
            auto top = d.h_compose_table().get(a.top, b.top);
            auto bottom = d.h_compose_table().get(a.bottom, b.bottom);
            ok = top && bottom && d.boundary(e.result) == Boundary{*top, a.left, b.right, *bottom};
        }
        if (!ok) report.add("boundary", {n(e.first), n(e.second), n(e.result)}, "hcomp");
    }
    for (auto e : d.vcomp_table().entries()) {
        const auto& a = d.boundary(e.first);
        const auto& b = d.boundary(e.second);
        bool ok = a.bottom == b.top;
        if (ok) {
            auto left = d.v_compose_table().get(a.left, b.left);
            auto right = d.v_compose_table().get(a.right, b.right);
            ok = left && right && d.boundary(e.result) == Boundary{a.top, *left, *right, b.bottom};
        }
        if (!ok) report.add("boundary", {n(e.first), n(e.second), n(e.result)}, "vcomp");
    }

    // totality
    for (auto f : vs) {
        for (auto g : vs) {
            if (d.v_arrow(f).tgt == d.v_arrow(g).src && !d.v_compose_table().contains(f, g)) {
                report.add("totality", {n(f), n(g)}, "vertical composite");
            }
        }
    }
    for (auto f : hs) {
        for (auto g : hs) {
            if (d.h_arrow(f).tgt == d.h_arrow(g).src && !d.h_compose_table().contains(f, g)) {
                report.add("totality", {n(f), n(g)}, "horizontal composite");
            }
        }
    }
    for (auto a : sqs) {
        for (auto b : d.by_left(d.boundary(a).right)) {
            if (!d.hcomp_table().contains(a, b)) report.add("totality", {n(a), n(b)}, "hcomp");
        }
        for (auto b : d.by_top(d.boundary(a).bottom)) {
            if (!d.vcomp_table().contains(a, b)) report.add("totality", {n(a), n(b)}, "vcomp");
        }
    }

    check_arrow_category(d, d.v_arrows(), d.v_compose_table(), varrow, [&](ObjectId a) { return d.v_id(a); },
                         "v_category", report);
    check_arrow_category(d, d.h_arrows(), d.h_compose_table(), harrow, [&](ObjectId a) { return d.h_id(a); },
                         "h_category", report);

    const auto& hc = d.hcomp_table();
    const auto& vc = d.vcomp_table();

    // associativity and units for squares
    for (auto a : sqs) {
        const auto& ba = d.boundary(a);
        if (vc.get(d.id_of_h(ba.top), a) != a || vc.get(a, d.id_of_h(ba.bottom)) != a) {
            report.add("vcomp_unit", {n(a)});
        }
        if (hc.get(d.id_of_v(ba.left), a) != a || hc.get(a, d.id_of_v(ba.right)) != a) {
            report.add("hcomp_unit", {n(a)});
        }
        for (auto b : d.by_left(ba.right)) {
            auto ab = hc.get(a, b);
            if (!ab) continue;
            for (auto c : d.by_left(d.boundary(b).right)) {
                auto bc = hc.get(b, c);
                if (!bc) continue;
                if (hc.get(*ab, c) != hc.get(a, *bc)) report.add("hcomp_assoc", {n(a), n(b), n(c)});
            }
        }
        for (auto b : d.by_top(ba.bottom)) {
            auto ab = vc.get(a, b);
            if (!ab) continue;
            for (auto c : d.by_top(d.boundary(b).bottom)) {
                auto bc = vc.get(b, c);
                if (!bc) continue;
                if (vc.get(*ab, c) != vc.get(a, *bc)) report.add("vcomp_assoc", {n(a), n(b), n(c)});
            }
        }
    }

    // identity functoriality
    for (auto g : vs) {
        for (auto g2 : vs) {
            if (d.v_arrow(g).tgt != d.v_arrow(g2).src) continue;
            auto comp = d.v_compose_table().get(g, g2);
            if (!comp) continue;
            if (vc.get(d.id_of_v(g), d.id_of_v(g2)) != d.id_of_v(*comp)) {
                report.add("identity_functoriality", {n(g), n(g2)}, "vertical");
            }
        }
    }
    for (auto f : hs) {
        for (auto f2 : hs) {
            if (d.h_arrow(f).tgt != d.h_arrow(f2).src) continue;
            auto comp = d.h_compose_table().get(f, f2);
            if (!comp) continue;
            if (hc.get(d.id_of_h(f), d.id_of_h(f2)) != d.id_of_h(*comp)) {
                report.add("identity_functoriality", {n(f), n(f2)}, "horizontal");
            }
        }
    }

    // middle-four interchange: a b / c d
    for (auto a : sqs) {
        const auto& ba = d.boundary(a);
        for (auto b : d.by_left(ba.right)) {
            auto ab = hc.get(a, b);
            for (auto c : d.by_top(ba.bottom)) {
                auto ac = vc.get(a, c);
                for (auto dd : d.by_left(d.boundary(c).right)) {
                    if (d.boundary(dd).top != d.boundary(b).bottom) continue;
                    auto cd = hc.get(c, dd);
                    auto bd = vc.get(b, dd);
                    if (!ab || !ac || !cd || !bd) continue;
                    auto rows = vc.get(*ab, *cd);
                    auto cols = hc.get(*ac, *bd);
                    if (rows != cols) report.add("interchange", {n(a), n(b), n(c), n(dd)});
                }
            }
        }
    }

    for (auto a : objects) {
        if (d.id_of_v(d.v_id(a)) != d.id_of_h(d.h_id(a))) report.add("identity_cell", {n(a)});
    }

    report.finish();
    return report;
}

}  // namespace dblcat
