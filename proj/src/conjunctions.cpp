#include "dblcat/conjunctions.hpp"

#include <map>
#include <set>
#include <tuple>

#include "dblcat/error.hpp"

namespace dblcat {

std::string describe(const DoubleCategory& d, const Conjunction& c) {
    return "{" + d.name(c.f) + "," + d.name(c.g) + "," + d.name(c.eta) + "," + d.name(c.eps) + "}";
}

bool check_conjunction(const DoubleCategory& d, const Conjunction& c) {
    const auto a = d.v_arrow(c.f).src;
    const auto b = d.v_arrow(c.f).tgt;
    const auto& g = d.h_arrow(c.g);
    if (g.src != b || g.tgt != a || d.boundary(c.eta) != Boundary{d.h_id(a), c.f, d.v_id(a), c.g} ||
        d.boundary(c.eps) != Boundary{c.g, d.v_id(b), c.f, d.h_id(b)}) {
        throw Error(ErrorKind::BoundaryMismatch, "ill-shaped conjunction data " + describe(d, c));
    }
    return d.hcomp(c.eps, c.eta) == d.id_of_h(c.g) && d.vcomp(c.eta, c.eps) == d.id_of_v(c.f);
}

std::vector<Conjunction> find_conjoints(const DoubleCategory& d, VArrowId f) {
    std::vector<Conjunction> out;
    const auto a = d.v_arrow(f).src;
    const auto b = d.v_arrow(f).tgt;
    for (auto g : d.h_hom(b, a)) {
        for (auto eta : d.squares_with({d.h_id(a), f, d.v_id(a), g})) {
            for (auto eps : d.squares_with({g, d.v_id(b), f, d.h_id(b)})) {
                Conjunction c{f, g, eta, eps};
                if (check_conjunction(d, c)) out.push_back(c);
            }
        }
    }
    return out;
}

Conjunction identity_conjunction(const DoubleCategory& d, ObjectId a) {
    auto ids = d.identities(a);
    return {ids.v, ids.h, ids.square, ids.square};
}

Conjunction compose_conjunctions(const DoubleCategory& d, const Conjunction& c1, const Conjunction& c2) {
    if (d.v_arrow(c1.f).tgt != d.v_arrow(c2.f).src) {
        throw Error(ErrorKind::NotComposable, describe(d, c2) + " after " + describe(d, c1));
    }
    auto f = d.compose_v(c2.f, c1.f);
    auto g = d.compose_h(c1.g, c2.g);
    auto eta = d.vcomp(c1.eta, d.hcomp(c2.eta, d.id_of_h(c1.g)));
    auto eps = d.vcomp(d.hcomp(d.id_of_h(c2.g), c1.eps), c2.eps);
    return {f, g, eta, eps};
}

namespace {

bool fits(const DoubleCategory& d, const Conjunction& c1, const Conjunction& c2, SquareId cell, MateDirection dir,
          const ConjMateBoundary& m) {
    const auto& b = d.boundary(cell);
    const auto& vt = d.v_compose_table();
    const auto& ht = d.h_compose_table();
    if (dir == MateDirection::ToBeta) {
        return b.top == m.i && b.bottom == m.n && vt.get(c2.f, m.m) == b.left && vt.get(m.j, c1.f) == b.right;
    }
    return b.left == m.m && b.right == m.j && ht.get(c2.g, m.i) == b.top && ht.get(m.n, c1.g) == b.bottom;
}

SquareId mate_with(const DoubleCategory& d, const Conjunction& c1, const Conjunction& c2, SquareId cell,
                   MateDirection dir, const ConjMateBoundary& m) {
    if (dir == MateDirection::ToBeta) {
        auto left = d.vcomp(c2.eps, d.id_of_v(m.m));
        auto right = d.vcomp(d.id_of_v(m.j), c1.eta);
        return d.hcomp(d.hcomp(left, cell), right);
    }
    auto top = d.hcomp(c2.eta, d.id_of_h(m.i));
    auto bottom = d.hcomp(d.id_of_h(m.n), c1.eps);
    return d.vcomp(d.vcomp(top, cell), bottom);
}

}  // namespace

std::vector<ConjMateBoundary> conj_factorizations(const DoubleCategory& d, const Conjunction& c1,
                                                  const Conjunction& c2, SquareId cell, MateDirection dir) {
    std::vector<ConjMateBoundary> out;
    const auto& b = d.boundary(cell);
    if (dir == MateDirection::ToBeta) {
        for (auto m : d.v_hom(d.v_arrow(c2.f).tgt, d.v_arrow(b.left).tgt)) {
            for (auto j : d.v_hom(d.v_arrow(b.right).src, d.v_arrow(c1.f).src)) {
                ConjMateBoundary mb{b.top, j, m, b.bottom};
                if (fits(d, c1, c2, cell, dir, mb)) out.push_back(mb);
            }
        }
    } else {
        for (auto i : d.h_hom(d.h_arrow(c2.g).tgt, d.h_arrow(b.top).tgt)) {
            for (auto n : d.h_hom(d.h_arrow(b.bottom).src, d.h_arrow(c1.g).src)) {
                ConjMateBoundary mb{i, b.right, b.left, n};
                if (fits(d, c1, c2, cell, dir, mb)) out.push_back(mb);
            }
        }
    }
    return out;
}

SquareId conj_mate(const DoubleCategory& d, const Conjunction& c1, const Conjunction& c2, SquareId cell,
                   MateDirection dir, std::optional<ConjMateBoundary> boundary) {
    if (boundary) {
        if (!fits(d, c1, c2, cell, dir, *boundary)) {
            throw Error(ErrorKind::BoundaryNotFactorable, "square " + d.name(cell) + " does not have the given shape");
        }
        return mate_with(d, c1, c2, cell, dir, *boundary);
    }
    auto all = conj_factorizations(d, c1, c2, cell, dir);
    if (all.empty()) {
        throw Error(ErrorKind::BoundaryNotFactorable, "no factorization of the boundary of " + d.name(cell));
    }
    auto result = mate_with(d, c1, c2, cell, dir, all.front());
    for (std::size_t k = 1; k < all.size(); ++k) {
        if (mate_with(d, c1, c2, cell, dir, all[k]) != result) {
            std::string list;
            for (const auto& m : all) {
                list += " (" + d.name(m.i) + "," + d.name(m.j) + "," + d.name(m.m) + "," + d.name(m.n) + ")";
            }
            throw Error(ErrorKind::AmbiguousFactorization, "factorizations of " + d.name(cell) + " disagree:" + list);
        }
    }
    return result;
}

ConjResult conj_2category(const DoubleCategory& d) {
    ConjResult out;
    for (auto f : d.v_arrows().ids()) {
        for (const auto& c : find_conjoints(d, f)) out.conjunctions.push_back(c);
    }
    const auto n = out.conjunctions.size();
    auto one = [](std::size_t i) { return OneCellId{static_cast<std::uint32_t>(i)}; };
    std::map<Conjunction, OneCellId> index;
    TwoCategory::Builder b;
    for (auto a : d.objects().ids()) b.add_object(d.name(a));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = out.conjunctions[i];
        index[c] = b.add_one_cell(describe(d, c), d.v_arrow(c.f).src, d.v_arrow(c.f).tgt);
    }
    auto lookup = [&](const Conjunction& c) {
        auto it = index.find(c);
        if (it == index.end()) {
            throw Error(ErrorKind::Structure, "composite conjunction " + describe(d, c) + " was not found");
        }
        return it->second;
    };

    std::map<std::tuple<OneCellId, OneCellId, SquareId>, TwoCellId> cell_index;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            const auto& target = out.conjunctions[p];
            const auto& source = out.conjunctions[q];
            const auto& fa = d.v_arrow(target.f);
            const auto& fb = d.v_arrow(source.f);
            if (fa.src != fb.src || fa.tgt != fb.tgt) continue;
            ConjMateBoundary mb{d.h_id(fa.src), d.v_id(fa.src), d.v_id(fa.tgt), d.h_id(fa.tgt)};
            std::set<SquareId> image;
            std::size_t count = 0;
            for (auto s : d.squares_with({d.h_id(fa.src), target.f, source.f, d.h_id(fa.tgt)})) {
                auto name = "[" + d.name(s) + ":" + describe(d, source) + "=>" + describe(d, target) + "]";
                auto id = b.add_two_cell(name, one(q), one(p));
                auto mate = conj_mate(d, source, target, s, MateDirection::ToBeta, mb);
                out.cells.push_back({one(q), one(p), s, mate});
                cell_index[{one(q), one(p), s}] = id;
                image.insert(mate);
                ++count;
            }
            auto codomain = d.squares_with({target.g, d.v_id(fa.tgt), d.v_id(fa.src), source.g}).size();
            std::vector<std::string> w = {describe(d, source), describe(d, target)};
            if (image.size() != count) out.mates.add("mate_injective", w);
            if (image.size() != codomain) out.mates.add("mate_surjective", w);
        }
    }
    auto cell_of = [&](OneCellId source, OneCellId target, SquareId s) {
        auto it = cell_index.find({source, target, s});
        if (it == cell_index.end()) throw Error(ErrorKind::Structure, "Conj 2-cell " + d.name(s) + " missing");
        return it->second;
    };

    std::vector<std::vector<std::size_t>> composite(n, std::vector<std::size_t>(n, SIZE_MAX));
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (d.v_arrow(out.conjunctions[p].f).tgt != d.v_arrow(out.conjunctions[q].f).src) continue;
            auto r = lookup(compose_conjunctions(d, out.conjunctions[p], out.conjunctions[q]));
            composite[p][q] = r.index();
            b.set_compose(one(q), one(p), r);
        }
    }
    for (std::size_t x = 0; x < out.cells.size(); ++x) {
        const auto& c1 = out.cells[x];
        for (std::size_t y = 0; y < out.cells.size(); ++y) {
            const auto& c2 = out.cells[y];
            TwoCellId t1{static_cast<std::uint32_t>(x)};
            TwoCellId t2{static_cast<std::uint32_t>(y)};
            if (c1.target == c2.source) {
                b.set_vcomp(t1, t2, cell_of(c1.source, c2.target, d.hcomp(c2.square, c1.square)));
            }
            auto src = composite[c1.source.index()][c2.source.index()];
            auto tgt = composite[c1.target.index()][c2.target.index()];
            if (src != SIZE_MAX && tgt != SIZE_MAX) {
                b.set_hcomp(t1, t2, cell_of(one(src), one(tgt), d.vcomp(c1.square, c2.square)));
            }
        }
    }
    for (auto a : d.objects().ids()) b.set_identity(a, lookup(identity_conjunction(d, a)));
    for (std::size_t p = 0; p < n; ++p) b.set_identity(one(p), cell_of(one(p), one(p), d.id_of_v(out.conjunctions[p].f)));
    out.cat = std::move(b).build();
    out.mates.finish();
    return out;
}

bool check_h_adjunction(const DoubleCategory& d, const HAdjunction& adj) {
    const auto& f = d.h_arrow(adj.left);
    const auto& g = d.h_arrow(adj.right);
    if (f.src != g.tgt || f.tgt != g.src) return false;
    const auto a = f.src;
    const auto b = f.tgt;
    if (d.boundary(adj.unit) != Boundary{d.h_id(a), d.v_id(a), d.v_id(a), d.compose_h(adj.right, adj.left)}) {
        return false;
    }
    if (d.boundary(adj.counit) != Boundary{d.compose_h(adj.left, adj.right), d.v_id(b), d.v_id(b), d.h_id(b)}) {
        return false;
    }
    auto left = d.vcomp(d.hcomp(adj.unit, d.id_of_h(adj.left)), d.hcomp(d.id_of_h(adj.left), adj.counit));
    auto right = d.vcomp(d.hcomp(d.id_of_h(adj.right), adj.unit), d.hcomp(adj.counit, d.id_of_h(adj.right)));
    return left == d.id_of_h(adj.left) && right == d.id_of_h(adj.right);
}

Adjunction2 to_adjunction2(const DoubleCategory& d, const TwoCategory& h, const HAdjunction& adj) {
    return {h.one_cells().at(d.name(adj.left), "1-cell"), h.one_cells().at(d.name(adj.right), "1-cell"),
            h.two_cells().at(d.name(adj.unit), "2-cell"), h.two_cells().at(d.name(adj.counit), "2-cell")};
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::IncompatibleData, what);
}

MateBoundary unit_boundary(const DoubleCategory& d, const Conjunction& c) {
    auto a = d.v_arrow(c.f).src;
    return {d.v_id(a), d.h_id(a), d.v_id(a), c.g};
}

MateBoundary counit_boundary(const DoubleCategory& d, const Conjunction& c) {
    auto b = d.v_arrow(c.f).tgt;
    return {d.v_id(b), c.g, d.v_id(b), d.h_id(b)};
}

}  // namespace

HAdjunction adjunction_from(const DoubleCategory& d, const CompanionPair& p, const Conjunction& c) {
    require(p.f == c.f, "companion and conjunction have different vertical arrows");
    auto a = d.v_arrow(p.f).src;
    auto b = d.v_arrow(p.f).tgt;
    auto unit = companion_mate(d, p, identity_companion(d, a), c.eta, MateDirection::ToBeta, unit_boundary(d, c));
    auto counit = companion_mate(d, identity_companion(d, b), p, c.eps, MateDirection::ToBeta, counit_boundary(d, c));
    return {p.f_prime, c.g, unit, counit};
}

Conjunction conjunction_from(const DoubleCategory& d, const CompanionPair& p, const HAdjunction& adj) {
    require(adj.left == p.f_prime, "adjunction's left adjoint is not the companion");
    auto a = d.v_arrow(p.f).src;
    auto b = d.v_arrow(p.f).tgt;
    require(d.h_arrow(adj.right).src == b && d.h_arrow(adj.right).tgt == a, "right adjoint has the wrong endpoints");
    Conjunction shape{p.f, adj.right, adj.unit, adj.counit};
    auto eta = companion_mate(d, p, identity_companion(d, a), adj.unit, MateDirection::ToAlpha,
                              unit_boundary(d, shape));
    auto eps = companion_mate(d, identity_companion(d, b), p, adj.counit, MateDirection::ToAlpha,
                              counit_boundary(d, shape));
    return {p.f, adj.right, eta, eps};
}

CompanionPair companion_from(const DoubleCategory& d, const Conjunction& c, const HAdjunction& adj) {
    require(adj.right == c.g, "adjunction's right adjoint is not the conjoint");
    auto a = d.v_arrow(c.f).src;
    auto b = d.v_arrow(c.f).tgt;
    require(d.h_arrow(adj.left).src == a && d.h_arrow(adj.left).tgt == b, "left adjoint has the wrong endpoints");
    auto psi = d.vcomp(adj.unit, d.hcomp(d.id_of_h(adj.left), c.eps));
    auto phi = d.vcomp(d.hcomp(c.eta, d.id_of_h(adj.left)), adj.counit);
    return {c.f, adj.left, phi, psi};
}

namespace {

CompanionPair companion_of(const DoubleCategory& d, VArrowId f) {
    auto all = find_companions(d, f);
    if (all.empty()) throw Error(ErrorKind::ShapeMismatch, d.name(f) + " has no companion");
    return all.front();
}

bool h_invertible(const DoubleCategory& d, SquareId s) { return d.h_inverse(s).has_value(); }

}  // namespace

Boundary base_change_seed_boundary(const DoubleCategory& d, const BaseChangeSetup& s, int column) {
    if (column == 0) {
        return {companion_of(d, s.fstar_c.f).f_prime, s.iota_b.f, s.iota_a.f, companion_of(d, s.fstar_d.f).f_prime};
    }
    return {companion_of(d, s.iota_b.f).f_prime, s.fstar_c.f, s.fstar_d.f, companion_of(d, s.iota_a.f).f_prime};
}

MateTable base_change_table(const DoubleCategory& d, const BaseChangeSetup& s, SquareId seed1, SquareId seed2) {
    auto src = [&](const Conjunction& c) { return d.v_arrow(c.f).src; };
    auto tgt = [&](const Conjunction& c) { return d.v_arrow(c.f).tgt; };
    // C_A, C_B, D_A, D_B
    if (src(s.fstar_c) != src(s.iota_b) || tgt(s.fstar_c) != src(s.iota_a) || src(s.fstar_d) != tgt(s.iota_b) ||
        tgt(s.fstar_d) != tgt(s.iota_a)) {
        throw Error(ErrorKind::ShapeMismatch, "conjunctions do not form a base change square");
    }
    for (const auto& c : {s.iota_a, s.iota_b, s.fstar_c, s.fstar_d}) {
        if (!check_conjunction(d, c)) throw Error(ErrorKind::ShapeMismatch, describe(d, c) + " is not a conjunction");
    }
    MateTable t;
    auto fc = companion_of(d, s.fstar_c.f);
    auto fd = companion_of(d, s.fstar_d.f);
    auto ia = companion_of(d, s.iota_a.f);
    auto ib = companion_of(d, s.iota_b.f);
    t.companions = {fc, fd, ia, ib};
    if (d.boundary(seed1) != base_change_seed_boundary(d, s, 0)) {
        throw Error(ErrorKind::ShapeMismatch, "first seed " + d.name(seed1) + " has the wrong boundary");
    }
    if (d.boundary(seed2) != base_change_seed_boundary(d, s, 1)) {
        throw Error(ErrorKind::ShapeMismatch, "second seed " + d.name(seed2) + " has the wrong boundary");
    }
    const auto ca = src(s.iota_a);
    const auto cb = src(s.iota_b);
    const auto da = tgt(s.iota_a);
    const auto db = tgt(s.iota_b);

    // Column 1: ι*∘f* → f*∘ι*, then f*∘ι⋆ → ι⋆∘f*, then ι⋆∘f⋆ → f⋆∘ι⋆.
    t.cells[0][0] = seed1;
    t.cells[1][0] = conj_mate(d, s.iota_a, s.iota_b, seed1, MateDirection::ToBeta,
                              ConjMateBoundary{fc.f_prime, d.v_id(ca), d.v_id(db), fd.f_prime});
    auto row2_square = companion_mate(d, fd, fc, t.cells[1][0], MateDirection::ToAlpha,
                                      MateBoundary{d.v_id(db), s.iota_b.g, d.v_id(ca), s.iota_a.g});
    t.cells[2][0] = conj_mate(d, s.fstar_c, s.fstar_d, row2_square, MateDirection::ToBeta,
                              ConjMateBoundary{s.iota_b.g, d.v_id(cb), d.v_id(da), s.iota_a.g});
    t.row1_globular[0] = companion_mate(d, ib, ia, seed1, MateDirection::ToBeta,
                                        MateBoundary{d.v_id(cb), fc.f_prime, d.v_id(da), fd.f_prime});

    // Column 2: f*∘ι* → ι*∘f*, then ι*∘f⋆ → f⋆∘ι*, then f⋆∘ι⋆ → ι⋆∘f⋆.
    t.cells[0][1] = seed2;
    t.cells[1][1] = conj_mate(d, s.fstar_d, s.fstar_c, seed2, MateDirection::ToBeta,
                              ConjMateBoundary{ib.f_prime, d.v_id(db), d.v_id(ca), ia.f_prime});
    auto row2b_square = companion_mate(d, ia, ib, t.cells[1][1], MateDirection::ToAlpha,
                                       MateBoundary{d.v_id(ca), s.fstar_c.g, d.v_id(db), s.fstar_d.g});
    t.cells[2][1] = conj_mate(d, s.iota_b, s.iota_a, row2b_square, MateDirection::ToBeta,
                              ConjMateBoundary{s.fstar_c.g, d.v_id(cb), d.v_id(da), s.fstar_d.g});
    t.row1_globular[1] = companion_mate(d, fc, fd, seed2, MateDirection::ToBeta,
                                        MateBoundary{d.v_id(cb), ib.f_prime, d.v_id(da), ia.f_prime});

    for (int c = 0; c < 2; ++c) {
        t.invertible[0][c] = h_invertible(d, t.row1_globular[c]);
        t.invertible[1][c] = h_invertible(d, t.cells[1][c]);
        t.invertible[2][c] = h_invertible(d, t.cells[2][c]);
        t.linkage[c] = t.invertible[0][c] == t.invertible[2][c];
    }
    return t;
}

}  // namespace dblcat
