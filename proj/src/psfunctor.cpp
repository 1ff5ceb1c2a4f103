#include "dblcat/psfunctor.hpp"

#include "dblcat/constructions.hpp"
#include "dblcat/error.hpp"
#include "dblcat/pasting.hpp"

namespace dblcat {

namespace {

SquareId h_inv(const DoubleCategory& d, SquareId s) {
    if (auto r = d.h_inverse(s)) return *r;
    throw Error(ErrorKind::MissingInverse, "no inverse for " + d.name(s));
}

SquareId v_inv(const DoubleCategory& d, SquareId s) {
    if (auto r = d.v_inverse(s)) return *r;
    throw Error(ErrorKind::MissingInverse, "no inverse for " + d.name(s));
}

TwoCellId inv2(const TwoCategory& k, TwoCellId t) {
    if (auto r = k.inverse(t)) return *r;
    throw Error(ErrorKind::MissingInverse, "no inverse for " + k.two_cells().name(t));
}

template <class A, class R>
R entry(const PairTable<A, A, R>& t, A x, A y, const std::string& what) {
    if (auto r = t.get(x, y)) return *r;
    throw Error(ErrorKind::MissingEntry, "missing constraint " + what);
}

SquareId cv(const DoublePseudofunctor& F, VArrowId f, VArrowId g) {
    return entry(F.comp_v, f, g, "F^{" + F.dom->name(g) + "," + F.dom->name(f) + "}");
}

SquareId ch(const DoublePseudofunctor& F, HArrowId h, HArrowId k) {
    return entry(F.comp_h, h, k, "F_{" + F.dom->name(k) + "," + F.dom->name(h) + "}");
}

class Checker {
public:
    explicit Checker(ValidationReport& r) : report_(r) {}

    template <class Fn>
    void operator()(const std::string& family, std::vector<std::string> witness, Fn&& fn) {
        try {
            if (!fn()) report_.add(family, std::move(witness));
        } catch (const Error& e) {
            report_.add(family, std::move(witness), e.what());
        }
    }

private:
    ValidationReport& report_;
};

}  // namespace

DoublePseudofunctor identity_psfunctor(std::shared_ptr<const DoubleCategory> d) {
    DoublePseudofunctor F;
    F.dom = d;
    F.cod = d;
    F.obj = d->objects().ids();
    F.v_map = d->v_arrows().ids();
    F.h_map = d->h_arrows().ids();
    F.sq_map = d->squares().ids();
    for (auto a : d->objects().ids()) {
        F.unit_h.push_back(d->identities(a).square);
        F.unit_v.push_back(d->identities(a).square);
    }
    for (auto e : d->v_compose_table().entries()) F.comp_v.set(e.first, e.second, d->id_of_v(e.result));
    for (auto e : d->h_compose_table().entries()) F.comp_h.set(e.first, e.second, d->id_of_h(e.result));
    return F;
}

Pseudofunctor2 identity_pseudofunctor2(std::shared_ptr<const TwoCategory> k) {
    Pseudofunctor2 F;
    F.dom = k;
    F.cod = k;
    F.obj = k->objects().ids();
    F.one = k->one_cells().ids();
    F.two = k->two_cells().ids();
    for (auto a : k->objects().ids()) F.unit.push_back(k->identity(k->identity(a)));
    for (auto e : k->compose_table().entries()) F.comp.set(e.first, e.second, k->identity(e.result));
    return F;
}

ValidationReport check_double_pseudofunctor(const DoublePseudofunctor& F) {
    ValidationReport report;
    const auto& D = *F.dom;
    const auto& E = *F.cod;
    if (F.obj.size() != D.objects().size() || F.v_map.size() != D.v_arrows().size() ||
        F.h_map.size() != D.h_arrows().size() || F.sq_map.size() != D.squares().size() ||
        F.unit_h.size() != D.objects().size() || F.unit_v.size() != D.objects().size()) {
        report.add("boundary", {}, "cell maps do not cover the domain");
        return report;
    }
    Checker check(report);
    auto n = [&](auto x) { return D.name(x); };
    const auto vs = D.v_arrows().ids();
    const auto hs = D.h_arrows().ids();

    // Boundaries.
    for (auto f : vs) {
        check("boundary", {n(f)}, [&] {
            return E.v_arrow(F(f)).src == F(D.v_arrow(f).src) && E.v_arrow(F(f)).tgt == F(D.v_arrow(f).tgt);
        });
    }
    for (auto f : hs) {
        check("boundary", {n(f)}, [&] {
            return E.h_arrow(F(f)).src == F(D.h_arrow(f).src) && E.h_arrow(F(f)).tgt == F(D.h_arrow(f).tgt);
        });
    }
    for (auto s : D.squares().ids()) {
        check("boundary", {n(s)}, [&] {
            const auto& b = D.boundary(s);
            return E.boundary(F(s)) == Boundary{F(b.top), F(b.left), F(b.right), F(b.bottom)};
        });
    }
    for (auto a : D.objects().ids()) {
        auto fa = F(a);
        check("boundary", {n(a), "F_a"}, [&] {
            return E.boundary(F.unit_h[a.index()]) == Boundary{F(D.h_id(a)), E.v_id(fa), E.v_id(fa), E.h_id(fa)};
        });
        check("boundary", {n(a), "F^a"}, [&] {
            return E.boundary(F.unit_v[a.index()]) == Boundary{E.h_id(fa), E.v_id(fa), F(D.v_id(a)), E.h_id(fa)};
        });
        check("invertible", {n(a), "F_a"}, [&] { return h_inv(E, F.unit_h[a.index()]).value < UINT32_MAX; });
        check("invertible", {n(a), "F^a"}, [&] { return v_inv(E, F.unit_v[a.index()]).value < UINT32_MAX; });
    }
    for (auto f : vs) {
        for (auto g : vs) {
            if (D.v_arrow(f).tgt != D.v_arrow(g).src) continue;
            check("boundary", {n(f), n(g), "F^{gf}"}, [&] {
                auto a = F(D.v_arrow(f).src);
                auto c = F(D.v_arrow(g).tgt);
                return E.boundary(cv(F, f, g)) ==
                       Boundary{E.h_id(a), E.compose_v(F(g), F(f)), F(D.compose_v(g, f)), E.h_id(c)};
            });
            check("invertible", {n(f), n(g), "F^{gf}"}, [&] { return v_inv(E, cv(F, f, g)).value < UINT32_MAX; });
        }
    }
    for (auto h : hs) {
        for (auto k : hs) {
            if (D.h_arrow(h).tgt != D.h_arrow(k).src) continue;
            check("boundary", {n(h), n(k), "F_{kh}"}, [&] {
                auto a = F(D.h_arrow(h).src);
                auto c = F(D.h_arrow(k).tgt);
                return E.boundary(ch(F, h, k)) ==
                       Boundary{F(D.compose_h(k, h)), E.v_id(a), E.v_id(c), E.compose_h(F(k), F(h))};
            });
            check("invertible", {n(h), n(k), "F_{kh}"}, [&] { return h_inv(E, ch(F, h, k)).value < UINT32_MAX; });
        }
    }

    // Vertical coherence: associativity and the two unit laws.
    for (auto f : vs) {
        const auto a = D.v_arrow(f).src;
        const auto b = D.v_arrow(f).tgt;
        check("v_unit", {n(f), "left"}, [&] {
            auto lhs = E.hcomp(E.vcomp(E.id_of_v(F(f)), F.unit_v[b.index()]), cv(F, f, D.v_id(b)));
            return lhs == E.id_of_v(F(f));
        });
        check("v_unit", {n(f), "right"}, [&] {
            auto lhs = E.hcomp(E.vcomp(F.unit_v[a.index()], E.id_of_v(F(f))), cv(F, D.v_id(a), f));
            return lhs == E.id_of_v(F(f));
        });
        check("unit_naturality_h", {n(f)}, [&] {
            auto lhs = E.vcomp(E.vcomp(h_inv(E, F.unit_h[a.index()]), F(D.id_of_v(f))), F.unit_h[b.index()]);
            return lhs == E.id_of_v(F(f));
        });
        for (auto g : vs) {
            if (D.v_arrow(f).tgt != D.v_arrow(g).src) continue;
            auto gf = D.compose_v(g, f);
            for (auto h : vs) {
                if (D.v_arrow(g).tgt != D.v_arrow(h).src) continue;
                auto hg = D.compose_v(h, g);
                check("v_associativity", {n(f), n(g), n(h)}, [&] {
                    auto lhs = E.hcomp(E.vcomp(cv(F, f, g), E.id_of_v(F(h))), cv(F, gf, h));
                    auto rhs = E.hcomp(E.vcomp(E.id_of_v(F(f)), cv(F, g, h)), cv(F, f, hg));
                    return lhs == rhs;
                });
            }
        }
    }

    // Horizontal coherence.
    for (auto f : hs) {
        const auto a = D.h_arrow(f).src;
        const auto b = D.h_arrow(f).tgt;
        check("h_unit", {n(f), "left"}, [&] {
            auto lhs = E.vcomp(ch(F, D.h_id(a), f), E.hcomp(F.unit_h[a.index()], E.id_of_h(F(f))));
            return lhs == E.id_of_h(F(f));
        });
        check("h_unit", {n(f), "right"}, [&] {
            auto lhs = E.vcomp(ch(F, f, D.h_id(b)), E.hcomp(E.id_of_h(F(f)), F.unit_h[b.index()]));
            return lhs == E.id_of_h(F(f));
        });
        check("unit_naturality_v", {n(f)}, [&] {
            auto lhs = E.hcomp(E.hcomp(F.unit_v[a.index()], F(D.id_of_h(f))), v_inv(E, F.unit_v[b.index()]));
            return lhs == E.id_of_h(F(f));
        });
        for (auto g : hs) {
            if (D.h_arrow(f).tgt != D.h_arrow(g).src) continue;
            auto gf = D.compose_h(g, f);
            for (auto h : hs) {
                if (D.h_arrow(g).tgt != D.h_arrow(h).src) continue;
                auto hg = D.compose_h(h, g);
                check("h_associativity", {n(f), n(g), n(h)}, [&] {
                    auto lhs = E.vcomp(ch(F, gf, h), E.hcomp(ch(F, f, g), E.id_of_h(F(h))));
                    auto rhs = E.vcomp(ch(F, f, hg), E.hcomp(E.id_of_h(F(f)), ch(F, g, h)));
                    return lhs == rhs;
                });
            }
        }
    }

    // Naturality of the composition constraints.
    for (auto x : D.squares().ids()) {
        const auto& bx = D.boundary(x);
        for (auto y : D.by_left(bx.right)) {
            const auto& by = D.boundary(y);
            check("naturality_h", {n(x), n(y)}, [&] {
                auto lhs = E.vcomp(ch(F, bx.top, by.top), E.hcomp(F(x), F(y)));
                auto rhs = E.vcomp(F(D.hcomp(x, y)), ch(F, bx.bottom, by.bottom));
                return lhs == rhs;
            });
        }
        for (auto y : D.by_top(bx.bottom)) {
            const auto& by = D.boundary(y);
            check("naturality_v", {n(x), n(y)}, [&] {
                auto lhs = E.hcomp(E.vcomp(F(x), F(y)), cv(F, bx.right, by.right));
                auto rhs = E.hcomp(cv(F, bx.left, by.left), F(D.vcomp(x, y)));
                return lhs == rhs;
            });
        }
    }
    report.finish();
    return report;
}

ValidationReport check_pseudofunctor2(const Pseudofunctor2& F) {
    ValidationReport report;
    const auto& K = *F.dom;
    const auto& L = *F.cod;
    if (F.obj.size() != K.objects().size() || F.one.size() != K.one_cells().size() ||
        F.two.size() != K.two_cells().size() || F.unit.size() != K.objects().size()) {
        report.add("boundary", {}, "cell maps do not cover the domain");
        return report;
    }
    Checker check(report);
    auto n1 = [&](OneCellId f) { return K.one_cells().name(f); };
    auto n2 = [&](TwoCellId t) { return K.two_cells().name(t); };
    auto o = [&](ObjectId a) { return F.obj[a.index()]; };
    auto m1 = [&](OneCellId f) { return F.one[f.index()]; };
    auto m2 = [&](TwoCellId t) { return F.two[t.index()]; };
    auto comp = [&](OneCellId f, OneCellId g) {
        return entry(F.comp, f, g, "comp(" + n1(f) + "," + n1(g) + ")");
    };
    const auto ones = K.one_cells().ids();

    for (auto f : ones) {
        check("boundary", {n1(f)}, [&] {
            return L.one_cell(m1(f)).src == o(K.one_cell(f).src) && L.one_cell(m1(f)).tgt == o(K.one_cell(f).tgt);
        });
    }
    for (auto t : K.two_cells().ids()) {
        check("boundary", {n2(t)}, [&] {
            return L.two_cell(m2(t)).src == m1(K.two_cell(t).src) && L.two_cell(m2(t)).tgt == m1(K.two_cell(t).tgt);
        });
    }
    for (auto a : K.objects().ids()) {
        check("boundary", {K.objects().name(a), "unit"}, [&] {
            const auto& u = L.two_cell(F.unit[a.index()]);
            return u.src == m1(K.identity(a)) && u.tgt == L.identity(o(a));
        });
        check("invertible", {K.objects().name(a), "unit"}, [&] { return L.inverse(F.unit[a.index()]).has_value(); });
    }
    for (auto f : ones) {
        for (auto g : ones) {
            if (K.one_cell(f).tgt != K.one_cell(g).src) continue;
            check("boundary", {n1(f), n1(g), "comp"}, [&] {
                const auto& c = L.two_cell(comp(f, g));
                return c.src == m1(K.compose(g, f)) && c.tgt == L.compose(m1(g), m1(f));
            });
            check("invertible", {n1(f), n1(g), "comp"}, [&] { return L.inverse(comp(f, g)).has_value(); });
        }
    }
    for (auto f : ones) {
        check("functoriality", {n1(f)}, [&] { return m2(K.identity(f)) == L.identity(m1(f)); });
    }
    for (auto e : K.vcomp_table().entries()) {
        check("functoriality", {n2(e.first), n2(e.second)},
              [&] { return m2(e.result) == L.vcomp(m2(e.first), m2(e.second)); });
    }
    for (auto e : K.hcomp_table().entries()) {
        const auto& x = K.two_cell(e.first);
        const auto& y = K.two_cell(e.second);
        check("naturality", {n2(e.first), n2(e.second)}, [&] {
            auto lhs = L.vcomp(comp(x.src, y.src), L.hcomp(m2(e.first), m2(e.second)));
            auto rhs = L.vcomp(m2(e.result), comp(x.tgt, y.tgt));
            return lhs == rhs;
        });
    }
    for (auto f : ones) {
        const auto a = K.one_cell(f).src;
        const auto b = K.one_cell(f).tgt;
        check("unit", {n1(f), "right"}, [&] {
            auto lhs = L.vcomp(comp(f, K.identity(b)), L.hcomp(L.identity(m1(f)), F.unit[b.index()]));
            return lhs == L.identity(m1(f));
        });
        check("unit", {n1(f), "left"}, [&] {
            auto lhs = L.vcomp(comp(K.identity(a), f), L.hcomp(F.unit[a.index()], L.identity(m1(f))));
            return lhs == L.identity(m1(f));
        });
        for (auto g : ones) {
            if (K.one_cell(f).tgt != K.one_cell(g).src) continue;
            auto gf = K.compose(g, f);
            for (auto h : ones) {
                if (K.one_cell(g).tgt != K.one_cell(h).src) continue;
                auto hg = K.compose(h, g);
                check("associativity", {n1(f), n1(g), n1(h)}, [&] {
                    auto lhs = L.vcomp(comp(f, hg), L.hcomp(L.identity(m1(f)), comp(g, h)));
                    auto rhs = L.vcomp(comp(gf, h), L.hcomp(comp(f, g), L.identity(m1(h))));
                    return lhs == rhs;
                });
            }
        }
    }
    report.finish();
    return report;
}

DoublePseudofunctor compose_psfunctors(const DoublePseudofunctor& G, const DoublePseudofunctor& F) {
    if (F.cod != G.dom &&
        !(same_tables(*F.cod, *G.dom) && F.cod->squares().names() == G.dom->squares().names() &&
          F.cod->v_arrows().names() == G.dom->v_arrows().names() &&
          F.cod->h_arrows().names() == G.dom->h_arrows().names() &&
          F.cod->objects().names() == G.dom->objects().names())) {
        throw Error(ErrorKind::Mismatch, "codomain of the first functor is not the domain of the second");
    }
    const auto& D = *F.dom;
    const auto& M = *F.cod;
    const auto& E = *G.cod;
    DoublePseudofunctor H;
    H.dom = F.dom;
    H.cod = G.cod;
    for (auto a : F.obj) H.obj.push_back(G(a));
    for (auto f : F.v_map) H.v_map.push_back(G(f));
    for (auto f : F.h_map) H.h_map.push_back(G(f));
    for (auto s : F.sq_map) H.sq_map.push_back(G(s));
    auto Gu_v = [&](ObjectId x) { return G.unit_v[x.index()]; };
    auto Gu_h = [&](ObjectId x) { return G.unit_h[x.index()]; };
    // HG and VG applied to a constraint square of F.
    auto hG = [&](SquareId s) {
        const auto& b = M.boundary(s);
        auto a = M.v_arrow(b.left).src;
        auto c = M.v_arrow(b.right).src;
        return E.hcomp(E.hcomp(Gu_v(a), G(s)), v_inv(E, Gu_v(c)));
    };
    auto vG = [&](SquareId s) {
        const auto& b = M.boundary(s);
        auto a = M.h_arrow(b.top).src;
        auto c = M.h_arrow(b.bottom).src;
        return E.vcomp(E.vcomp(h_inv(E, Gu_h(a)), G(s)), Gu_h(c));
    };
    for (auto a : D.objects().ids()) {
        auto fa = F(a);
        H.unit_h.push_back(E.vcomp(hG(F.unit_h[a.index()]), Gu_h(fa)));
        H.unit_v.push_back(E.hcomp(Gu_v(fa), vG(F.unit_v[a.index()])));
    }
    for (auto e : D.h_compose_table().entries()) {
        auto s = F.comp_h.get(e.first, e.second);
        if (!s) continue;
        auto gc = G.comp_h.get(F(e.first), F(e.second));
        if (!gc) throw Error(ErrorKind::MissingEntry, "missing horizontal constraint of the second functor");
        H.comp_h.set(e.first, e.second, E.vcomp(hG(*s), *gc));
    }
    for (auto e : D.v_compose_table().entries()) {
        auto s = F.comp_v.get(e.first, e.second);
        if (!s) continue;
        auto gc = G.comp_v.get(F(e.first), F(e.second));
        if (!gc) throw Error(ErrorKind::MissingEntry, "missing vertical constraint of the second functor");
        H.comp_v.set(e.first, e.second, E.hcomp(*gc, vG(*s)));
    }
    return H;
}

Pseudofunctor2 induced_h(const DoublePseudofunctor& F) {
    const auto& D = *F.dom;
    const auto& E = *F.cod;
    auto dom = std::make_shared<const TwoCategory>(horizontal_2category(D));
    auto cod = std::make_shared<const TwoCategory>(horizontal_2category(E));
    Pseudofunctor2 P;
    P.dom = dom;
    P.cod = cod;
    P.obj = F.obj;
    for (auto f : F.h_map) P.one.push_back(OneCellId{f.value});
    auto cell = [&](SquareId s) { return cod->two_cells().at(E.name(s), "2-cell"); };
    for (auto t : dom->two_cells().ids()) {
        auto s = D.sq(dom->two_cells().name(t));
        const auto& b = D.boundary(s);
        auto a = D.v_arrow(b.left).src;
        auto c = D.v_arrow(b.right).src;
        auto image = E.hcomp(E.hcomp(F.unit_v[a.index()], F(s)), v_inv(E, F.unit_v[c.index()]));
        P.two.push_back(cell(image));
    }
    for (auto a : D.objects().ids()) P.unit.push_back(cell(F.unit_h[a.index()]));
    for (auto e : F.comp_h.entries()) P.comp.set(OneCellId{e.first.value}, OneCellId{e.second.value}, cell(e.result));
    return P;
}

Pseudofunctor2 induced_v(const DoublePseudofunctor& F) {
    const auto& D = *F.dom;
    const auto& E = *F.cod;
    auto dom = std::make_shared<const TwoCategory>(vertical_2category(D));
    auto cod = std::make_shared<const TwoCategory>(vertical_2category(E));
    Pseudofunctor2 P;
    P.dom = dom;
    P.cod = cod;
    P.obj = F.obj;
    for (auto f : F.v_map) P.one.push_back(OneCellId{f.value});
    auto cell = [&](SquareId s) { return cod->two_cells().at(E.name(s), "2-cell"); };
    for (auto t : dom->two_cells().ids()) {
        auto s = D.sq(dom->two_cells().name(t));
        const auto& b = D.boundary(s);
        auto a = D.h_arrow(b.top).src;
        auto c = D.h_arrow(b.bottom).src;
        auto image = E.vcomp(E.vcomp(h_inv(E, F.unit_h[a.index()]), F(s)), F.unit_h[c.index()]);
        P.two.push_back(cell(image));
    }
    for (auto a : D.objects().ids()) P.unit.push_back(cell(F.unit_v[a.index()]));
    for (auto e : F.comp_v.entries()) P.comp.set(OneCellId{e.first.value}, OneCellId{e.second.value}, cell(e.result));
    return P;
}

DoublePseudofunctor quin_of_pseudofunctor(const Pseudofunctor2& P) {
    const auto& K = *P.dom;
    const auto& L = *P.cod;
    auto dom = std::make_shared<const DoubleCategory>(quin(K));
    auto cod = std::make_shared<const DoubleCategory>(quin(L));
    auto m1 = [&](OneCellId f) { return P.one[f.index()]; };
    auto comp = [&](OneCellId f, OneCellId g) { return entry(P.comp, f, g, "pseudofunctor composition constraint"); };
    auto sq = [&](const Quintet& q) { return quintet_square(*cod, L, q); };
    DoublePseudofunctor F;
    F.dom = dom;
    F.cod = cod;
    F.obj = P.obj;
    for (auto f : P.one) {
        F.v_map.push_back(VArrowId{f.value});
        F.h_map.push_back(HArrowId{f.value});
    }
    for (const auto& x : quintets(K)) {
        auto alpha = L.vcomp(L.vcomp(inv2(L, comp(x.f, x.k)), P.two[x.alpha.index()]), comp(x.h, x.g));
        F.sq_map.push_back(sq({m1(x.f), m1(x.g), m1(x.h), m1(x.k), alpha}));
    }
    for (auto a : K.objects().ids()) {
        auto fa = P.obj[a.index()];
        auto id = L.identity(fa);
        auto fid = m1(K.identity(a));
        F.unit_h.push_back(sq({fid, id, id, id, P.unit[a.index()]}));
        F.unit_v.push_back(sq({id, id, id, fid, P.unit[a.index()]}));
    }
    for (auto e : K.compose_table().entries()) {
        auto a = P.obj[K.one_cell(e.first).src.index()];
        auto c = P.obj[K.one_cell(e.second).tgt.index()];
        auto composite = L.compose(m1(e.second), m1(e.first));
        auto c2 = comp(e.first, e.second);
        F.comp_h.set(HArrowId{e.first.value}, HArrowId{e.second.value},
                     sq({m1(e.result), composite, L.identity(a), L.identity(c), c2}));
        F.comp_v.set(VArrowId{e.first.value}, VArrowId{e.second.value},
                     sq({L.identity(a), L.identity(c), composite, m1(e.result), c2}));
    }
    return F;
}

DoublePseudofunctor transpose_psfunctor(const DoublePseudofunctor& F) {
    const auto& E = *F.cod;
    DoublePseudofunctor T;
    T.dom = std::make_shared<const DoubleCategory>(transpose(*F.dom));
    T.cod = std::make_shared<const DoubleCategory>(transpose(E));
    T.obj = F.obj;
    for (auto f : F.h_map) T.v_map.push_back(VArrowId{f.value});
    for (auto f : F.v_map) T.h_map.push_back(HArrowId{f.value});
    T.sq_map = F.sq_map;
    for (std::size_t a = 0; a < F.obj.size(); ++a) {
        T.unit_h.push_back(v_inv(E, F.unit_v[a]));
        T.unit_v.push_back(h_inv(E, F.unit_h[a]));
    }
    for (auto e : F.comp_h.entries()) {
        T.comp_v.set(VArrowId{e.first.value}, VArrowId{e.second.value}, h_inv(E, e.result));
    }
    for (auto e : F.comp_v.entries()) {
        T.comp_h.set(HArrowId{e.first.value}, HArrowId{e.second.value}, v_inv(E, e.result));
    }
    return T;
}

CompanionPair map_companion(const DoublePseudofunctor& F, const CompanionPair& p) {
    const auto& D = *F.dom;
    const auto& E = *F.cod;
    auto a = D.v_arrow(p.f).src;
    auto b = D.v_arrow(p.f).tgt;
    auto ida = E.identities(F(a)).square;
    auto idb = E.identities(F(b)).square;
    auto phi = paste(E, {{F(p.phi), v_inv(E, F.unit_v[b.index()])}, {F.unit_h[b.index()], idb}});
    auto psi = paste(E, {{ida, h_inv(E, F.unit_h[a.index()])}, {F.unit_v[a.index()], F(p.psi)}});
    return {F(p.f), F(p.f_prime), phi, psi};
}

Conjunction map_conjunction(const DoublePseudofunctor& F, const Conjunction& c) {
    const auto& D = *F.dom;
    const auto& E = *F.cod;
    auto a = D.v_arrow(c.f).src;
    auto b = D.v_arrow(c.f).tgt;
    auto ida = E.identities(F(a)).square;
    auto idb = E.identities(F(b)).square;
    auto eta = paste(E, {{h_inv(E, F.unit_h[a.index()]), ida}, {F(c.eta), v_inv(E, F.unit_v[a.index()])}});
    auto eps = paste(E, {{F.unit_v[b.index()], F(c.eps)}, {idb, F.unit_h[b.index()]}});
    return {F(c.f), F(c.g), eta, eps};
}

bool mate_preservation_check(const DoublePseudofunctor& F, const Conjunction& c1, const Conjunction& c2,
                             SquareId cell, std::optional<ConjMateBoundary> boundary) {
    const auto& D = *F.dom;
    const auto& E = *F.cod;
    try {
        std::vector<ConjMateBoundary> all;
        if (boundary) {
            all.push_back(*boundary);
        } else {
            all = conj_factorizations(D, c1, c2, cell, MateDirection::ToBeta);
        }
        if (all.empty()) return false;
        auto fc1 = map_conjunction(F, c1);
        auto fc2 = map_conjunction(F, c2);
        for (const auto& m : all) {
            auto beta = conj_mate(D, c1, c2, cell, MateDirection::ToBeta, m);
            auto lhs = E.vcomp(E.vcomp(h_inv(E, ch(F, c2.g, m.i)), F(beta)), ch(F, m.n, c1.g));
            auto normalized = E.hcomp(E.hcomp(cv(F, c2.f, m.m), F(cell)), v_inv(E, cv(F, m.j, c1.f)));
            auto rhs = conj_mate(E, fc1, fc2, normalized, MateDirection::ToBeta,
                                 ConjMateBoundary{F(m.i), F(m.j), F(m.m), F(m.n)});
            if (lhs != rhs) return false;
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace dblcat
