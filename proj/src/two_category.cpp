#include "dblcat/two_category.hpp"

#include "dblcat/error.hpp"

namespace dblcat {

namespace {
const std::vector<TwoCellId> kNoTwoCells;
const std::vector<OneCellId> kNoOneCells;
}  // namespace

OneCellId TwoCategory::compose(OneCellId g, OneCellId f) const {
    if (one_cell(f).tgt != one_cell(g).src) {
        throw Error(ErrorKind::NotComposable, one_cells_.name(g) + " after " + one_cells_.name(f));
    }
    if (auto r = compose_.get(f, g)) return *r;
    throw Error(ErrorKind::MissingEntry, one_cells_.name(g) + " after " + one_cells_.name(f));
}

TwoCellId TwoCategory::vcomp(TwoCellId first, TwoCellId second) const {
    if (two_cell(first).tgt != two_cell(second).src) {
        throw Error(ErrorKind::NotComposable,
                    two_cells_.name(first) + " then " + two_cells_.name(second));
    }
    if (auto r = vcomp_.get(first, second)) return *r;
    throw Error(ErrorKind::MissingEntry, two_cells_.name(first) + " then " + two_cells_.name(second));
}

TwoCellId TwoCategory::hcomp(TwoCellId left, TwoCellId right) const {
    if (one_cell(two_cell(left).src).tgt != one_cell(two_cell(right).src).src) {
        throw Error(ErrorKind::NotComposable,
                    two_cells_.name(left) + " beside " + two_cells_.name(right));
    }
    if (auto r = hcomp_.get(left, right)) return *r;
    throw Error(ErrorKind::MissingEntry, two_cells_.name(left) + " beside " + two_cells_.name(right));
}

const std::vector<TwoCellId>& TwoCategory::hom(OneCellId src, OneCellId tgt) const {
    const auto n = one_cells_.size();
    if (src.index() >= n || tgt.index() >= n) return kNoTwoCells;
    return hom_[src.index() * n + tgt.index()];
}

const std::vector<OneCellId>& TwoCategory::one_hom(ObjectId a, ObjectId b) const {
    const auto n = objects_.size();
    if (a.index() >= n || b.index() >= n) return kNoOneCells;
    return one_hom_[a.index() * n + b.index()];
}

std::optional<TwoCellId> TwoCategory::inverse(TwoCellId theta) const {
    const auto& t = two_cell(theta);
    for (auto cand : hom(t.tgt, t.src)) {
        if (vcomp_.get(theta, cand) == identity(t.src) && vcomp_.get(cand, theta) == identity(t.tgt)) {
            return cand;
        }
    }
    return std::nullopt;
}

void TwoCategory::index() {
    const auto n1 = one_cells_.size();
    hom_.assign(n1 * n1, {});
    for (auto a : two_cells_.ids()) {
        const auto& t = two_cell(a);
        hom_[t.src.index() * n1 + t.tgt.index()].push_back(a);
    }
    out_.assign(n1, {});
    for (auto a : two_cells_.ids()) out_[two_cell(a).src.index()].push_back(a);
    const auto n0 = objects_.size();
    one_hom_.assign(n0 * n0, {});
    for (auto f : one_cells_.ids()) {
        const auto& c = one_cell(f);
        one_hom_[c.src.index() * n0 + c.tgt.index()].push_back(f);
    }
}

ValidationReport TwoCategory::validate() const {
    ValidationReport report;
    auto n1 = [&](OneCellId f) { return one_cells_.name(f); };
    auto n2 = [&](TwoCellId a) { return two_cells_.name(a); };
    const auto ones = one_cells_.ids();
    const auto twos = two_cells_.ids();
    auto src0 = [&](TwoCellId a) { return one_cell(two_cell(a).src).src; };
    auto tgt0 = [&](TwoCellId a) { return one_cell(two_cell(a).src).tgt; };

    // boundaries of stored entries
    for (auto e : compose_.entries()) {
        const auto& f = one_cell(e.first);
        const auto& g = one_cell(e.second);
        const auto& r = one_cell(e.result);
        if (f.tgt != g.src || r.src != f.src || r.tgt != g.tgt) {
            report.add("boundary", {n1(e.first), n1(e.second), n1(e.result)}, "1-cell composite");
        }
    }
    for (auto e : vcomp_.entries()) {
        const auto& x = two_cell(e.first);
        const auto& y = two_cell(e.second);
        const auto& r = two_cell(e.result);
        if (x.tgt != y.src || r.src != x.src || r.tgt != y.tgt) {
            report.add("boundary", {n2(e.first), n2(e.second), n2(e.result)}, "vertical composite");
        }
    }
    for (auto e : hcomp_.entries()) {
        const auto& x = two_cell(e.first);
        const auto& y = two_cell(e.second);
        const auto& r = two_cell(e.result);
        auto s = compose_.get(x.src, y.src);
        auto t = compose_.get(x.tgt, y.tgt);
        if (!s || !t || r.src != *s || r.tgt != *t) {
            report.add("boundary", {n2(e.first), n2(e.second), n2(e.result)}, "horizontal composite");
        }
    }
    for (auto a : objects_.ids()) {
        const auto& c = one_cell(identity(a));
        if (c.src != a || c.tgt != a) report.add("boundary", {objects_.name(a)}, "identity 1-cell");
    }
    for (auto f : ones) {
        const auto& t = two_cell(identity(f));
        if (t.src != f || t.tgt != f) report.add("boundary", {n1(f)}, "identity 2-cell");
    }

    // totality
    for (auto f : ones) {
        for (auto g : ones) {
            if (one_cell(f).tgt == one_cell(g).src && !compose_.contains(f, g)) {
                report.add("totality", {n1(f), n1(g)}, "1-cell composite");
            }
        }
    }
    for (auto x : twos) {
        for (auto y : twos) {
            if (two_cell(x).tgt == two_cell(y).src && !vcomp_.contains(x, y)) {
                report.add("totality", {n2(x), n2(y)}, "vertical composite");
            }
            if (tgt0(x) == src0(y) && !hcomp_.contains(x, y)) {
                report.add("totality", {n2(x), n2(y)}, "horizontal composite");
            }
        }
    }

    // 1-cell category
    for (auto f : ones) {
        const auto& c = one_cell(f);
        if (compose_.get(identity(c.src), f) != f || compose_.get(f, identity(c.tgt)) != f) {
            report.add("one_category", {n1(f)}, "unit law");
        }
        for (auto g : ones) {
            if (c.tgt != one_cell(g).src) continue;
            auto gf = compose_.get(f, g);
            for (auto h : ones) {
                if (one_cell(g).tgt != one_cell(h).src) continue;
                auto hg = compose_.get(g, h);
                if (!gf || !hg) continue;
                if (compose_.get(*gf, h) != compose_.get(f, *hg)) {
                    report.add("one_category", {n1(f), n1(g), n1(h)}, "associativity");
                }
            }
        }
    }

    // vertical composition of 2-cells
    for (auto x : twos) {
        const auto& t = two_cell(x);
        if (vcomp_.get(identity(t.src), x) != x || vcomp_.get(x, identity(t.tgt)) != x) {
            report.add("vcomp_category", {n2(x)}, "unit law");
        }
        for (auto y : out_[t.tgt.index()]) {
            auto xy = vcomp_.get(x, y);
            if (!xy) continue;
            for (auto z : out_[two_cell(y).tgt.index()]) {
                auto yz = vcomp_.get(y, z);
                if (!yz) continue;
                if (vcomp_.get(*xy, z) != vcomp_.get(x, *yz)) {
                    report.add("vcomp_category", {n2(x), n2(y), n2(z)}, "associativity");
                }
            }
        }
    }

    // horizontal composition of 2-cells
    for (auto x : twos) {
        auto a = src0(x);
        auto b = tgt0(x);
        if (hcomp_.get(identity(identity(a)), x) != x || hcomp_.get(x, identity(identity(b))) != x) {
            report.add("hcomp_unit", {n2(x)});
        }
        for (auto y : twos) {
            if (src0(y) != b) continue;
            auto xy = hcomp_.get(x, y);
            if (!xy) continue;
            for (auto z : twos) {
                if (src0(z) != tgt0(y)) continue;
                auto yz = hcomp_.get(y, z);
                if (!yz) continue;
                if (hcomp_.get(*xy, z) != hcomp_.get(x, *yz)) {
                    report.add("hcomp_assoc", {n2(x), n2(y), n2(z)});
                }
            }
        }
    }

    for (auto f : ones) {
        for (auto g : ones) {
            if (one_cell(f).tgt != one_cell(g).src) continue;
            auto gf = compose_.get(f, g);
            if (!gf) continue;
            if (hcomp_.get(identity(f), identity(g)) != identity(*gf)) {
                report.add("identity_functoriality", {n1(f), n1(g)});
            }
        }
    }

    // middle-four interchange: (x ; x') * (y ; y') = (x * y) ; (x' * y')
    for (auto x : twos) {
        for (auto x2 : out_[two_cell(x).tgt.index()]) {
            auto xx = vcomp_.get(x, x2);
            if (!xx) continue;
            for (auto y : twos) {
                if (src0(y) != tgt0(x)) continue;
                for (auto y2 : out_[two_cell(y).tgt.index()]) {
                    auto yy = vcomp_.get(y, y2);
                    auto xy = hcomp_.get(x, y);
                    auto xy2 = hcomp_.get(x2, y2);
                    if (!yy || !xy || !xy2) continue;
                    if (hcomp_.get(*xx, *yy) != vcomp_.get(*xy, *xy2)) {
                        report.add("interchange", {n2(x), n2(x2), n2(y), n2(y2)});
                    }
                }
            }
        }
    }

    report.finish();
    return report;
}

ObjectId TwoCategory::Builder::add_object(std::string name) {
    auto id = cat_.objects_.add(std::move(name));
    cat_.id1_.push_back(OneCellId{});
    id1_.push_back(std::nullopt);
    return id;
}

OneCellId TwoCategory::Builder::add_one_cell(std::string name, ObjectId src, ObjectId tgt) {
    if (!cat_.objects_.contains(src) || !cat_.objects_.contains(tgt)) {
        throw Error(ErrorKind::DanglingId, "1-cell '" + name + "' has an unknown endpoint");
    }
    auto id = cat_.one_cells_.add(std::move(name));
    cat_.one_data_.push_back({src, tgt});
    cat_.id2_.push_back(TwoCellId{});
    id2_.push_back(std::nullopt);
    return id;
}

TwoCellId TwoCategory::Builder::add_two_cell(std::string name, OneCellId src, OneCellId tgt) {
    if (!cat_.one_cells_.contains(src) || !cat_.one_cells_.contains(tgt)) {
        throw Error(ErrorKind::DanglingId, "2-cell '" + name + "' has an unknown endpoint");
    }
    const auto& s = cat_.one_data_[src.index()];
    const auto& t = cat_.one_data_[tgt.index()];
    if (s.src != t.src || s.tgt != t.tgt) {
        throw Error(ErrorKind::Structure, "2-cell '" + name + "' between non-parallel 1-cells");
    }
    auto id = cat_.two_cells_.add(std::move(name));
    cat_.two_data_.push_back({src, tgt});
    return id;
}

void TwoCategory::Builder::set_compose(OneCellId g, OneCellId f, OneCellId result) {
    cat_.compose_.set(f, g, result);
}
void TwoCategory::Builder::set_vcomp(TwoCellId first, TwoCellId second, TwoCellId result) {
    cat_.vcomp_.set(first, second, result);
}
void TwoCategory::Builder::set_hcomp(TwoCellId left, TwoCellId right, TwoCellId result) {
    cat_.hcomp_.set(left, right, result);
}
void TwoCategory::Builder::set_identity(ObjectId a, OneCellId id) { id1_.at(a.index()) = id; }
void TwoCategory::Builder::set_identity(OneCellId f, TwoCellId id) { id2_.at(f.index()) = id; }

TwoCategory TwoCategory::Builder::build() && {
    for (std::size_t i = 0; i < id1_.size(); ++i) {
        if (!id1_[i]) {
            throw Error(ErrorKind::Structure, "object '" + cat_.objects_.names()[i] + "' has no identity 1-cell");
        }
        cat_.id1_[i] = *id1_[i];
    }
    for (std::size_t i = 0; i < id2_.size(); ++i) {
        if (!id2_[i]) {
            throw Error(ErrorKind::Structure, "1-cell '" + cat_.one_cells_.names()[i] + "' has no identity 2-cell");
        }
        cat_.id2_[i] = *id2_[i];
    }
    cat_.index();
    return std::move(cat_);
}

TwoCategory co_dual(const TwoCategory& k) {
    TwoCategory::Builder b;
    for (const auto& n : k.objects().names()) b.add_object(n);
    for (auto f : k.one_cells().ids()) {
        const auto& c = k.one_cell(f);
        b.add_one_cell(k.one_cells().name(f), c.src, c.tgt);
    }
    for (auto a : k.two_cells().ids()) {
        const auto& t = k.two_cell(a);
        b.add_two_cell(k.two_cells().name(a), t.tgt, t.src);
    }
    for (auto e : k.compose_table().entries()) b.set_compose(e.second, e.first, e.result);
    for (auto e : k.vcomp_table().entries()) b.set_vcomp(e.second, e.first, e.result);
    for (auto e : k.hcomp_table().entries()) b.set_hcomp(e.first, e.second, e.result);
    for (auto a : k.objects().ids()) b.set_identity(a, k.identity(a));
    for (auto f : k.one_cells().ids()) b.set_identity(f, k.identity(f));
    return std::move(b).build();
}

bool check_adjunction(const TwoCategory& k, const Adjunction2& adj) {
    const auto& f = k.one_cell(adj.left);
    const auto& g = k.one_cell(adj.right);
    if (f.src != g.tgt || f.tgt != g.src) return false;
    auto gf = k.compose(adj.right, adj.left);
    auto fg = k.compose(adj.left, adj.right);
    const auto& u = k.two_cell(adj.unit);
    const auto& c = k.two_cell(adj.counit);
    if (u.src != k.identity(f.src) || u.tgt != gf) return false;
    if (c.src != fg || c.tgt != k.identity(f.tgt)) return false;
    // f = f∘1 ⇒ f∘g∘f ⇒ 1∘f
    auto left_triangle = k.vcomp(k.hcomp(adj.unit, k.identity(adj.left)),
                                 k.hcomp(k.identity(adj.left), adj.counit));
    // g = 1∘g ⇒ g∘f∘g ⇒ g∘1
    auto right_triangle = k.vcomp(k.hcomp(k.identity(adj.right), adj.unit),
                                  k.hcomp(adj.counit, k.identity(adj.right)));
    return left_triangle == k.identity(adj.left) && right_triangle == k.identity(adj.right);
}

std::vector<Adjunction2> find_adjunctions(const TwoCategory& k) {
    std::vector<Adjunction2> out;
    for (auto f : k.one_cells().ids()) {
        const auto& fc = k.one_cell(f);
        for (auto g : k.one_hom(fc.tgt, fc.src)) {
            auto gf = k.compose(g, f);
            auto fg = k.compose(f, g);
            for (auto u : k.hom(k.identity(fc.src), gf)) {
                for (auto c : k.hom(fg, k.identity(fc.tgt))) {
                    Adjunction2 adj{f, g, u, c};
                    if (check_adjunction(k, adj)) out.push_back(adj);
                }
            }
        }
    }
    return out;
}

bool same_tables(const TwoCategory& a, const TwoCategory& b, const std::vector<ObjectId>& obj,
                 const std::vector<OneCellId>& one, const std::vector<TwoCellId>& two) {
    if (a.objects().size() != b.objects().size() || a.one_cells().size() != b.one_cells().size() ||
        a.two_cells().size() != b.two_cells().size()) {
        return false;
    }
    if (obj.size() != b.objects().size() || one.size() != b.one_cells().size() || two.size() != b.two_cells().size()) {
        return false;
    }
    for (auto f : b.one_cells().ids()) {
        const auto& x = a.one_cell(one[f.index()]);
        const auto& y = b.one_cell(f);
        if (x.src != obj[y.src.index()] || x.tgt != obj[y.tgt.index()]) return false;
    }
    for (auto t : b.two_cells().ids()) {
        const auto& x = a.two_cell(two[t.index()]);
        const auto& y = b.two_cell(t);
        if (x.src != one[y.src.index()] || x.tgt != one[y.tgt.index()]) return false;
    }
    if (a.compose_table().size() != b.compose_table().size() ||
        a.vcomp_table().size() != b.vcomp_table().size() ||
        a.hcomp_table().size() != b.hcomp_table().size()) {
        return false;
    }
    for (auto e : b.compose_table().entries()) {
        if (a.compose_table().get(one[e.first.index()], one[e.second.index()]) != one[e.result.index()]) return false;
    }
    for (auto e : b.vcomp_table().entries()) {
        if (a.vcomp_table().get(two[e.first.index()], two[e.second.index()]) != two[e.result.index()]) return false;
    }
    for (auto e : b.hcomp_table().entries()) {
        if (a.hcomp_table().get(two[e.first.index()], two[e.second.index()]) != two[e.result.index()]) return false;
    }
    for (auto x : b.objects().ids()) {
        if (a.identity(obj[x.index()]) != one[b.identity(x).index()]) return false;
    }
    for (auto f : b.one_cells().ids()) {
        if (a.identity(one[f.index()]) != two[b.identity(f).index()]) return false;
    }
    return true;
}

bool same_tables(const TwoCategory& a, const TwoCategory& b) {
    std::vector<ObjectId> obj;
    std::vector<OneCellId> one;
    std::vector<TwoCellId> two;
    for (const auto& n : b.objects().names()) {
        auto m = a.objects().find(n);
        if (!m) return false;
        obj.push_back(*m);
    }
    for (const auto& n : b.one_cells().names()) {
        auto m = a.one_cells().find(n);
        if (!m) return false;
        one.push_back(*m);
    }
    for (const auto& n : b.two_cells().names()) {
        auto m = a.two_cells().find(n);
        if (!m) return false;
        two.push_back(*m);
    }
    return same_tables(a, b, obj, one, two);
}

}  // namespace dblcat
