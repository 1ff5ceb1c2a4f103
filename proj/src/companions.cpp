#include "dblcat/companions.hpp"

#include <map>
#include <set>
#include <tuple>

#include "dblcat/constructions.hpp"
#include "dblcat/error.hpp"

namespace dblcat {

std::string describe(const DoubleCategory& d, const CompanionPair& p) {
    return "{" + d.name(p.f) + "," + d.name(p.f_prime) + "," + d.name(p.phi) + "," + d.name(p.psi) + "}";
}

bool check_companion(const DoubleCategory& d, const CompanionPair& p) {
    const auto a = d.v_arrow(p.f).src;
    const auto b = d.v_arrow(p.f).tgt;
    const auto& fp = d.h_arrow(p.f_prime);
    if (fp.src != a || fp.tgt != b || d.boundary(p.phi) != Boundary{p.f_prime, p.f, d.v_id(b), d.h_id(b)} ||
        d.boundary(p.psi) != Boundary{d.h_id(a), d.v_id(a), p.f, p.f_prime}) {
        throw Error(ErrorKind::BoundaryMismatch, "ill-shaped companion data " + describe(d, p));
    }
    return d.vcomp(p.psi, p.phi) == d.id_of_v(p.f) && d.hcomp(p.psi, p.phi) == d.id_of_h(p.f_prime);
}

std::vector<CompanionPair> find_companions(const DoubleCategory& d, VArrowId f) {
    std::vector<CompanionPair> out;
    const auto a = d.v_arrow(f).src;
    const auto b = d.v_arrow(f).tgt;
    for (auto fp : d.h_hom(a, b)) {
        for (auto phi : d.squares_with({fp, f, d.v_id(b), d.h_id(b)})) {
            for (auto psi : d.squares_with({d.h_id(a), d.v_id(a), f, fp})) {
                CompanionPair p{f, fp, phi, psi};
                if (check_companion(d, p)) out.push_back(p);
            }
        }
    }
    return out;
}

CompanionPair identity_companion(const DoubleCategory& d, ObjectId a) {
    auto ids = d.identities(a);
    return {ids.v, ids.h, ids.square, ids.square};
}

CompanionPair compose_companions(const DoubleCategory& d, const CompanionPair& p, const CompanionPair& q) {
    auto f = d.compose_v(q.f, p.f);
    auto fp = d.compose_h(q.f_prime, p.f_prime);
    auto phi = d.hcomp(d.vcomp(p.phi, d.id_of_v(q.f)), q.phi);
    auto psi = d.hcomp(p.psi, d.vcomp(d.id_of_v(p.f), q.psi));
    return {f, fp, phi, psi};
}

SquareId companion_iso(const DoubleCategory& d, const CompanionPair& p1, const CompanionPair& p2) {
    if (p1.f != p2.f) {
        throw Error(ErrorKind::MismatchedVertical, "companions of " + d.name(p1.f) + " and " + d.name(p2.f));
    }
    return d.hcomp(p2.psi, p1.phi);
}

namespace {

bool fits(const DoubleCategory& d, const CompanionPair& pf, const CompanionPair& pg, SquareId cell,
          MateDirection dir, const MateBoundary& m) {
    const auto& b = d.boundary(cell);
    const auto& vt = d.v_compose_table();
    const auto& ht = d.h_compose_table();
    if (dir == MateDirection::ToBeta) {
        return b.top == m.j && b.bottom == m.n && vt.get(m.i, pf.f) == b.left && vt.get(pg.f, m.m) == b.right;
    }
    return b.left == m.i && b.right == m.m && ht.get(m.j, pg.f_prime) == b.top && ht.get(pf.f_prime, m.n) == b.bottom;
}

SquareId mate_with(const DoubleCategory& d, const CompanionPair& pf, const CompanionPair& pg, SquareId cell,
                   MateDirection dir, const MateBoundary& m) {
    if (dir == MateDirection::ToBeta) {
        auto left = d.vcomp(d.id_of_v(m.i), pf.psi);
        auto right = d.vcomp(pg.phi, d.id_of_v(m.m));
        return d.hcomp(d.hcomp(left, cell), right);
    }
    auto top = d.hcomp(d.id_of_h(m.j), pg.psi);
    auto bottom = d.hcomp(pf.phi, d.id_of_h(m.n));
    return d.vcomp(d.vcomp(top, cell), bottom);
}

}  // namespace

std::vector<MateBoundary> companion_factorizations(const DoubleCategory& d, const CompanionPair& pf,
                                                   const CompanionPair& pg, SquareId cell, MateDirection dir) {
    std::vector<MateBoundary> out;
    const auto& b = d.boundary(cell);
    if (dir == MateDirection::ToBeta) {
        for (auto i : d.v_hom(d.v_arrow(b.left).src, d.v_arrow(pf.f).src)) {
            for (auto m : d.v_hom(d.v_arrow(pg.f).tgt, d.v_arrow(b.right).tgt)) {
                MateBoundary mb{i, b.top, m, b.bottom};
                if (fits(d, pf, pg, cell, dir, mb)) out.push_back(mb);
            }
        }
    } else {
        for (auto j : d.h_hom(d.h_arrow(b.top).src, d.h_arrow(pg.f_prime).src)) {
            for (auto n : d.h_hom(d.h_arrow(pf.f_prime).tgt, d.h_arrow(b.bottom).tgt)) {
                MateBoundary mb{b.left, j, b.right, n};
                if (fits(d, pf, pg, cell, dir, mb)) out.push_back(mb);
            }
        }
    }
    return out;
}

SquareId companion_mate(const DoubleCategory& d, const CompanionPair& pf, const CompanionPair& pg, SquareId cell,
                        MateDirection dir, std::optional<MateBoundary> boundary) {
    if (boundary) {
        if (!fits(d, pf, pg, cell, dir, *boundary)) {
            throw Error(ErrorKind::BoundaryNotFactorable, "square " + d.name(cell) + " does not have the given shape");
        }
        return mate_with(d, pf, pg, cell, dir, *boundary);
    }
    auto all = companion_factorizations(d, pf, pg, cell, dir);
    if (all.empty()) {
        throw Error(ErrorKind::BoundaryNotFactorable, "no factorization of the boundary of " + d.name(cell));
    }
    auto result = mate_with(d, pf, pg, cell, dir, all.front());
    for (std::size_t k = 1; k < all.size(); ++k) {
        if (mate_with(d, pf, pg, cell, dir, all[k]) != result) {
            std::string list;
            for (const auto& m : all) {
                list += " (" + d.name(m.i) + "," + d.name(m.j) + "," + d.name(m.m) + "," + d.name(m.n) + ")";
            }
            throw Error(ErrorKind::AmbiguousFactorization, "factorizations of " + d.name(cell) + " disagree:" + list);
        }
    }
    return result;
}

StrResult str_2category(const DoubleCategory& d) {
    StrResult out;
    for (auto f : d.v_arrows().ids()) {
        for (const auto& p : find_companions(d, f)) out.pairs.push_back(p);
    }
    std::map<CompanionPair, OneCellId> pair_index;
    TwoCategory::Builder b;
    for (auto a : d.objects().ids()) b.add_object(d.name(a));
    for (const auto& p : out.pairs) {
        const auto& f = d.v_arrow(p.f);
        pair_index[p] = b.add_one_cell(describe(d, p), f.src, f.tgt);
    }
    auto lookup = [&](const CompanionPair& p) {
        auto it = pair_index.find(p);
        if (it == pair_index.end()) {
            throw Error(ErrorKind::Structure, "composite companion " + describe(d, p) + " was not found");
        }
        return it->second;
    };

    const auto n = out.pairs.size();
    std::map<std::tuple<OneCellId, OneCellId, SquareId>, TwoCellId> cell_index;
    std::vector<std::vector<TwoCellId>> by_pair(n * n);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            const auto& fp = d.v_arrow(out.pairs[p].f);
            const auto& fq = d.v_arrow(out.pairs[q].f);
            if (fp.src != fq.src || fp.tgt != fq.tgt) continue;
            OneCellId source{static_cast<std::uint32_t>(q)};
            OneCellId target{static_cast<std::uint32_t>(p)};
            for (auto s : d.squares_with({d.h_id(fp.src), out.pairs[p].f, out.pairs[q].f, d.h_id(fp.tgt)})) {
                auto name = "[" + d.name(s) + ":" + describe(d, out.pairs[q]) + "=>" + describe(d, out.pairs[p]) + "]";
                auto id = b.add_two_cell(name, source, target);
                out.cells.push_back({source, target, s});
                cell_index[{source, target, s}] = id;
                by_pair[q * n + p].push_back(id);
            }
        }
    }
    auto cell_of = [&](OneCellId source, OneCellId target, SquareId s) {
        auto it = cell_index.find({source, target, s});
        if (it == cell_index.end()) throw Error(ErrorKind::Structure, "Str 2-cell " + d.name(s) + " missing");
        return it->second;
    };

    std::vector<std::vector<std::size_t>> composite(n, std::vector<std::size_t>(n, SIZE_MAX));
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (d.v_arrow(out.pairs[p].f).tgt != d.v_arrow(out.pairs[q].f).src) continue;
            auto r = lookup(compose_companions(d, out.pairs[p], out.pairs[q]));
            composite[p][q] = r.index();
            b.set_compose(OneCellId{static_cast<std::uint32_t>(q)}, OneCellId{static_cast<std::uint32_t>(p)}, r);
        }
    }
    for (std::size_t x = 0; x < out.cells.size(); ++x) {
        const auto& c1 = out.cells[x];
        TwoCellId t1{static_cast<std::uint32_t>(x)};
        for (std::size_t y = 0; y < out.cells.size(); ++y) {
            const auto& c2 = out.cells[y];
            TwoCellId t2{static_cast<std::uint32_t>(y)};
            if (c1.target == c2.source) {
                b.set_vcomp(t1, t2, cell_of(c1.source, c2.target, d.hcomp(c2.square, c1.square)));
            }
            auto src = composite[c1.source.index()][c2.source.index()];
            auto tgt = composite[c1.target.index()][c2.target.index()];
            if (src != SIZE_MAX && tgt != SIZE_MAX) {
                b.set_hcomp(t1, t2,
                            cell_of(OneCellId{static_cast<std::uint32_t>(src)},
                                    OneCellId{static_cast<std::uint32_t>(tgt)}, d.vcomp(c1.square, c2.square)));
            }
        }
    }
    for (auto a : d.objects().ids()) b.set_identity(a, lookup(identity_companion(d, a)));
    for (std::size_t p = 0; p < n; ++p) {
        OneCellId id{static_cast<std::uint32_t>(p)};
        b.set_identity(id, cell_of(id, id, d.id_of_v(out.pairs[p].f)));
    }
    out.cat = std::move(b).build();

    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            const auto& pp = out.pairs[p];
            const auto& pq = out.pairs[q];
            const auto& f = d.v_arrow(pp.f);
            if (f.src != d.v_arrow(pq.f).src || f.tgt != d.v_arrow(pq.f).tgt) continue;
            MateBoundary mb{d.v_id(f.src), d.h_id(f.src), d.v_id(f.tgt), d.h_id(f.tgt)};
            std::set<SquareId> image;
            for (auto t : by_pair[q * n + p]) {
                image.insert(companion_mate(d, pp, pq, out.cells[t.index()].square, MateDirection::ToBeta, mb));
            }
            auto codomain = d.squares_with({pq.f_prime, d.v_id(f.src), d.v_id(f.tgt), pp.f_prime}).size();
            std::vector<std::string> w = {describe(d, pq), describe(d, pp)};
            if (image.size() != by_pair[q * n + p].size()) out.projection.add("projection_injective", w);
            if (image.size() != codomain) out.projection.add("projection_surjective", w);
        }
    }
    out.projection.finish();
    return out;
}

DoubleFunctorReport quin_str_inclusion(const DoubleCategory& d) {
    DoubleFunctorReport out;
    auto str = str_2category(d);
    const auto& s = str.cat;
    auto q = quin(s);
    auto qs = quintets(s);
    const auto& pairs = str.pairs;
    auto pname = [&](OneCellId p) { return s.one_cells().name(p); };

    std::vector<SquareId> image(qs.size());
    for (std::size_t x = 0; x < qs.size(); ++x) {
        const auto& t = qs[x];
        const auto& cell = str.cells[t.alpha.index()];
        auto a = d.v_arrow(pairs[t.h.index()].f).src;
        auto dd = d.v_arrow(pairs[t.k.index()].f).tgt;
        MateBoundary mb{pairs[t.h.index()].f, d.h_id(a), pairs[t.k.index()].f, d.h_id(dd)};
        image[x] = companion_mate(d, pairs[t.g.index()], pairs[t.f.index()], cell.square, MateDirection::ToBeta, mb);
    }
    out.squares_mapped = qs.size();
    auto sq = [&](SquareId x) { return image[x.index()]; };

    for (auto e : q.v_compose_table().entries()) {
        if (pairs[e.result.index()].f != d.compose_v(pairs[e.second.index()].f, pairs[e.first.index()].f)) {
            out.report.add("functoriality_v", {pname(OneCellId{e.first.value}), pname(OneCellId{e.second.value})});
        }
    }
    for (auto e : q.h_compose_table().entries()) {
        if (pairs[e.result.index()].f_prime !=
            d.compose_h(pairs[e.second.index()].f_prime, pairs[e.first.index()].f_prime)) {
            out.report.add("functoriality_h", {pname(OneCellId{e.first.value}), pname(OneCellId{e.second.value})});
        }
    }
    for (auto e : q.hcomp_table().entries()) {
        if (sq(e.result) != d.hcomp(sq(e.first), sq(e.second))) {
            out.report.add("functoriality_hcomp", {q.name(e.first), q.name(e.second)});
        }
    }
    for (auto e : q.vcomp_table().entries()) {
        if (sq(e.result) != d.vcomp(sq(e.first), sq(e.second))) {
            out.report.add("functoriality_vcomp", {q.name(e.first), q.name(e.second)});
        }
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (sq(q.id_of_v(VArrowId{static_cast<std::uint32_t>(p)})) != d.id_of_v(pairs[p].f) ||
            sq(q.id_of_h(HArrowId{static_cast<std::uint32_t>(p)})) != d.id_of_h(pairs[p].f_prime)) {
            out.report.add("identities", {pname(OneCellId{static_cast<std::uint32_t>(p)})});
        }
    }
    for (auto a : q.objects().ids()) {
        if (pairs[q.v_id(a).index()].f != d.v_id(a)) out.report.add("identities", {q.name(a)});
    }

    std::set<SquareId> hit(image.begin(), image.end());
    for (std::size_t l = 0; l < pairs.size(); ++l) {
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            if (d.v_arrow(pairs[l].f).src != d.v_arrow(pairs[t].f).src) continue;
            for (std::size_t r = 0; r < pairs.size(); ++r) {
                if (d.v_arrow(pairs[r].f).src != d.v_arrow(pairs[t].f).tgt) continue;
                for (std::size_t bt = 0; bt < pairs.size(); ++bt) {
                    if (d.v_arrow(pairs[bt].f).src != d.v_arrow(pairs[l].f).tgt ||
                        d.v_arrow(pairs[bt].f).tgt != d.v_arrow(pairs[r].f).tgt) {
                        continue;
                    }
                    auto id = [](std::size_t i) { return static_cast<std::uint32_t>(i); };
                    const auto& dom = q.squares_with({HArrowId{id(t)}, VArrowId{id(l)}, VArrowId{id(r)}, HArrowId{id(bt)}});
                    const auto& cod = d.squares_with({pairs[t].f_prime, pairs[l].f, pairs[r].f, pairs[bt].f_prime});
                    std::set<SquareId> img;
                    for (auto x : dom) img.insert(sq(x));
                    std::vector<std::string> w = {pname(OneCellId{id(t)}), pname(OneCellId{id(l)}),
                                                  pname(OneCellId{id(r)}), pname(OneCellId{id(bt)})};
                    if (img.size() != dom.size()) out.report.add("injective", w);
                    if (img.size() != cod.size()) out.report.add("surjective", w);
                    ++out.boundaries_checked;
                }
            }
        }
    }
    out.covers_all = hit.size() == d.squares().size();
    out.report.finish();
    return out;
}

ValidationReport quin_str_unit_triangle(const TwoCategory& k) {
    ValidationReport report;
    auto q = quin(k);
    auto str = str_2category(q);
    std::map<CompanionPair, OneCellId> index;
    for (std::size_t i = 0; i < str.pairs.size(); ++i) index[str.pairs[i]] = OneCellId{static_cast<std::uint32_t>(i)};
    std::map<std::tuple<OneCellId, OneCellId, SquareId>, TwoCellId> cells;
    for (std::size_t i = 0; i < str.cells.size(); ++i) {
        const auto& c = str.cells[i];
        cells[{c.source, c.target, c.square}] = TwoCellId{static_cast<std::uint32_t>(i)};
    }
    auto unit = [&](OneCellId f) {
        const auto& c = k.one_cell(f);
        auto ia = k.identity(c.src);
        auto ib = k.identity(c.tgt);
        CompanionPair p{VArrowId{f.value}, HArrowId{f.value},
                        quintet_square(q, k, {f, ib, f, ib, k.identity(f)}),
                        quintet_square(q, k, {ia, f, ia, f, k.identity(f)})};
        return p;
    };
    for (auto f : k.one_cells().ids()) {
        if (!index.contains(unit(f))) report.add("unit_missing", {k.one_cells().name(f)});
    }
    if (!report.ok()) return report;
    for (auto e : k.compose_table().entries()) {
        auto composite = compose_companions(q, unit(e.first), unit(e.second));
        if (composite != unit(e.result)) {
            report.add("unit_functorial", {k.one_cells().name(e.first), k.one_cells().name(e.second)});
        }
    }
    for (const auto& x : quintets(k)) {
        auto a = k.one_cell(x.f).src;
        auto dd = k.one_cell(x.g).tgt;
        auto kf = k.compose(x.k, x.f);
        auto gh = k.compose(x.g, x.h);
        auto s = quintet_square(q, k, {k.identity(a), k.identity(dd), gh, kf, x.alpha});
        if (!cells.contains({index.at(unit(kf)), index.at(unit(gh)), s})) {
            report.add("unit_cell", {quintet_name(k, x)});
            continue;
        }
        MateBoundary mb{VArrowId{x.h.value}, HArrowId{k.identity(a).value}, VArrowId{x.k.value},
                        HArrowId{k.identity(dd).value}};
        auto back = companion_mate(q, unit(x.g), unit(x.f), s, MateDirection::ToBeta, mb);
        if (back != quintet_square(q, k, x)) report.add("triangle", {quintet_name(k, x)});
    }
    report.finish();
    return report;
}

}  // namespace dblcat
