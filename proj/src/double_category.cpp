#include "dblcat/double_category.hpp"

#include "dblcat/error.hpp"

namespace dblcat {

namespace {
const std::vector<SquareId> kNoSquares;
const std::vector<VArrowId> kNoV;
const std::vector<HArrowId> kNoH;
}  // namespace

VArrowId DoubleCategory::compose_v(VArrowId g, VArrowId f) const {
    if (v_arrow(f).tgt != v_arrow(g).src) {
        throw Error(ErrorKind::NotComposable, name(g) + " after " + name(f));
    }
    if (auto r = v_compose_.get(f, g)) return *r;
    throw Error(ErrorKind::MissingEntry, "vertical composite " + name(g) + " after " + name(f));
}

HArrowId DoubleCategory::compose_h(HArrowId g, HArrowId f) const {
    if (h_arrow(f).tgt != h_arrow(g).src) {
        throw Error(ErrorKind::NotComposable, name(g) + " after " + name(f));
    }
    if (auto r = h_compose_.get(f, g)) return *r;
    throw Error(ErrorKind::MissingEntry, "horizontal composite " + name(g) + " after " + name(f));
}

SquareId DoubleCategory::hcomp(SquareId left, SquareId right) const {
    if (boundary(left).right != boundary(right).left) {
        throw Error(ErrorKind::NotComposable,
                    "hcomp: right edge of " + name(left) + " is not the left edge of " + name(right));
    }
    if (auto r = hcomp_.get(left, right)) return *r;
    throw Error(ErrorKind::MissingEntry, "hcomp(" + name(left) + ", " + name(right) + ")");
}

SquareId DoubleCategory::vcomp(SquareId top, SquareId bottom) const {
    if (boundary(top).bottom != boundary(bottom).top) {
        throw Error(ErrorKind::NotComposable,
                    "vcomp: bottom edge of " + name(top) + " is not the top edge of " + name(bottom));
    }
    if (auto r = vcomp_.get(top, bottom)) return *r;
    throw Error(ErrorKind::MissingEntry, "vcomp(" + name(top) + ", " + name(bottom) + ")");
}

ObjectIdentities DoubleCategory::identities(ObjectId a) const {
    return {v_id(a), h_id(a), id_of_v(v_id(a))};
}

bool DoubleCategory::is_h_globular(SquareId s) const {
    const auto& b = boundary(s);
    return is_v_identity(b.left) && is_v_identity(b.right);
}

bool DoubleCategory::is_v_globular(SquareId s) const {
    const auto& b = boundary(s);
    return is_h_identity(b.top) && is_h_identity(b.bottom);
}

const std::vector<SquareId>& DoubleCategory::squares_with(const Boundary& b) const {
    auto it = by_boundary_.find(b);
    return it == by_boundary_.end() ? kNoSquares : it->second;
}

const std::vector<VArrowId>& DoubleCategory::v_hom(ObjectId a, ObjectId b) const {
    const auto n = objects_.size();
    if (a.index() >= n || b.index() >= n) return kNoV;
    return v_hom_[a.index() * n + b.index()];
}

const std::vector<HArrowId>& DoubleCategory::h_hom(ObjectId a, ObjectId b) const {
    const auto n = objects_.size();
    if (a.index() >= n || b.index() >= n) return kNoH;
    return h_hom_[a.index() * n + b.index()];
}

std::optional<SquareId> DoubleCategory::h_inverse(SquareId s) const {
    if (!is_h_globular(s)) return std::nullopt;
    const auto& b = boundary(s);
    Boundary inv{b.bottom, b.left, b.right, b.top};
    for (auto cand : squares_with(inv)) {
        if (vcomp_.get(s, cand) == id_of_h(b.top) && vcomp_.get(cand, s) == id_of_h(b.bottom)) {
            return cand;
        }
    }
    return std::nullopt;
}

std::optional<SquareId> DoubleCategory::v_inverse(SquareId s) const {
    if (!is_v_globular(s)) return std::nullopt;
    const auto& b = boundary(s);
    Boundary inv{b.top, b.right, b.left, b.bottom};
    for (auto cand : squares_with(inv)) {
        if (hcomp_.get(s, cand) == id_of_v(b.left) && hcomp_.get(cand, s) == id_of_v(b.right)) {
            return cand;
        }
    }
    return std::nullopt;
}

void DoubleCategory::index() {
    by_boundary_.clear();
    by_left_.assign(v_arrows_.size(), {});
    by_top_.assign(h_arrows_.size(), {});
    for (auto s : squares_.ids()) {
        const auto& b = boundary(s);
        by_boundary_[b].push_back(s);
        by_left_[b.left.index()].push_back(s);
        by_top_[b.top.index()].push_back(s);
    }
    const auto n = objects_.size();
    v_hom_.assign(n * n, {});
    h_hom_.assign(n * n, {});
    for (auto f : v_arrows_.ids()) v_hom_[v_arrow(f).src.index() * n + v_arrow(f).tgt.index()].push_back(f);
    for (auto f : h_arrows_.ids()) h_hom_[h_arrow(f).src.index() * n + h_arrow(f).tgt.index()].push_back(f);
}

DoubleCategory::Builder::Builder(DoubleCategory base) : dc_(std::move(base)) {}

ObjectId DoubleCategory::Builder::add_object(std::string name) {
    auto id = dc_.objects_.add(std::move(name));
    dc_.v_id_.push_back(VArrowId{UINT32_MAX});
    dc_.h_id_.push_back(HArrowId{UINT32_MAX});
    return id;
}

VArrowId DoubleCategory::Builder::add_v_arrow(std::string name, ObjectId src, ObjectId tgt) {
    if (!dc_.objects_.contains(src) || !dc_.objects_.contains(tgt)) {
        throw Error(ErrorKind::DanglingId, "vertical arrow '" + name + "' has an unknown endpoint");
    }
    auto id = dc_.v_arrows_.add(std::move(name));
    dc_.v_data_.push_back({src, tgt});
    dc_.id_of_v_.push_back(SquareId{UINT32_MAX});
    return id;
}

HArrowId DoubleCategory::Builder::add_h_arrow(std::string name, ObjectId src, ObjectId tgt) {
    if (!dc_.objects_.contains(src) || !dc_.objects_.contains(tgt)) {
        throw Error(ErrorKind::DanglingId, "horizontal arrow '" + name + "' has an unknown endpoint");
    }
    auto id = dc_.h_arrows_.add(std::move(name));
    dc_.h_data_.push_back({src, tgt});
    dc_.id_of_h_.push_back(SquareId{UINT32_MAX});
    return id;
}

SquareId DoubleCategory::Builder::add_square(std::string name, const Boundary& b) {
    if (!dc_.h_arrows_.contains(b.top) || !dc_.h_arrows_.contains(b.bottom) ||
        !dc_.v_arrows_.contains(b.left) || !dc_.v_arrows_.contains(b.right)) {
        throw Error(ErrorKind::DanglingId, "square '" + name + "' has an unknown edge");
    }
    const auto& top = dc_.h_data_[b.top.index()];
    const auto& bottom = dc_.h_data_[b.bottom.index()];
    const auto& left = dc_.v_data_[b.left.index()];
    const auto& right = dc_.v_data_[b.right.index()];
    if (top.src != left.src || top.tgt != right.src || bottom.src != left.tgt || bottom.tgt != right.tgt) {
        throw Error(ErrorKind::Structure, "square '" + name + "' has mismatched corners");
    }
    auto id = dc_.squares_.add(std::move(name));
    dc_.sq_data_.push_back(b);
    return id;
}

void DoubleCategory::Builder::set_compose_v(VArrowId g, VArrowId f, VArrowId r) { dc_.v_compose_.set(f, g, r); }
void DoubleCategory::Builder::set_compose_h(HArrowId g, HArrowId f, HArrowId r) { dc_.h_compose_.set(f, g, r); }
void DoubleCategory::Builder::set_hcomp(SquareId l, SquareId r, SquareId out) { dc_.hcomp_.set(l, r, out); }
void DoubleCategory::Builder::set_vcomp(SquareId t, SquareId b, SquareId out) { dc_.vcomp_.set(t, b, out); }
void DoubleCategory::Builder::set_v_id(ObjectId a, VArrowId id) { dc_.v_id_.at(a.index()) = id; }
void DoubleCategory::Builder::set_h_id(ObjectId a, HArrowId id) { dc_.h_id_.at(a.index()) = id; }
void DoubleCategory::Builder::set_id_of_v(VArrowId g, SquareId s) { dc_.id_of_v_.at(g.index()) = s; }
void DoubleCategory::Builder::set_id_of_h(HArrowId f, SquareId s) { dc_.id_of_h_.at(f.index()) = s; }

DoubleCategory DoubleCategory::Builder::build() && {
    auto missing = [](auto id) { return id.value == UINT32_MAX; };
    for (auto a : dc_.objects_.ids()) {
        if (missing(dc_.v_id_[a.index()]) || missing(dc_.h_id_[a.index()])) {
            throw Error(ErrorKind::Structure, "object '" + dc_.name(a) + "' lacks an identity arrow");
        }
    }
    for (auto f : dc_.v_arrows_.ids()) {
        if (missing(dc_.id_of_v_[f.index()])) {
            throw Error(ErrorKind::Structure, "vertical arrow '" + dc_.name(f) + "' lacks an identity square");
        }
    }
    for (auto f : dc_.h_arrows_.ids()) {
        if (missing(dc_.id_of_h_[f.index()])) {
            throw Error(ErrorKind::Structure, "horizontal arrow '" + dc_.name(f) + "' lacks an identity square");
        }
    }
    dc_.index();
    return std::move(dc_);
}

bool same_tables(const DoubleCategory& a, const DoubleCategory& b) {
    if (a.objects().size() != b.objects().size() || a.v_arrows().size() != b.v_arrows().size() ||
        a.h_arrows().size() != b.h_arrows().size() || a.squares().size() != b.squares().size()) {
        return false;
    }
    std::vector<ObjectId> obj(b.objects().size());
    std::vector<VArrowId> v(b.v_arrows().size());
    std::vector<HArrowId> h(b.h_arrows().size());
    std::vector<SquareId> s(b.squares().size());
    for (auto x : b.objects().ids()) {
        auto m = a.objects().find(b.name(x));
        if (!m) return false;
        obj[x.index()] = *m;
    }
    for (auto x : b.v_arrows().ids()) {
        auto m = a.v_arrows().find(b.name(x));
        if (!m) return false;
        v[x.index()] = *m;
        if (a.v_arrow(*m).src != obj[b.v_arrow(x).src.index()] || a.v_arrow(*m).tgt != obj[b.v_arrow(x).tgt.index()]) {
            return false;
        }
    }
    for (auto x : b.h_arrows().ids()) {
        auto m = a.h_arrows().find(b.name(x));
        if (!m) return false;
        h[x.index()] = *m;
        if (a.h_arrow(*m).src != obj[b.h_arrow(x).src.index()] || a.h_arrow(*m).tgt != obj[b.h_arrow(x).tgt.index()]) {
            return false;
        }
    }
    for (auto x : b.squares().ids()) {
        auto m = a.squares().find(b.name(x));
        if (!m) return false;
        s[x.index()] = *m;
        const auto& bb = b.boundary(x);
        Boundary mapped{h[bb.top.index()], v[bb.left.index()], v[bb.right.index()], h[bb.bottom.index()]};
        if (a.boundary(*m) != mapped) return false;
    }
    auto same = [](const auto& ta, const auto& tb, const auto& m1, const auto& m2, const auto& mr) {
        if (ta.size() != tb.size()) return false;
        for (auto e : tb.entries()) {
            if (ta.get(m1[e.first.index()], m2[e.second.index()]) != mr[e.result.index()]) return false;
        }
        return true;
    };
    if (!same(a.v_compose_table(), b.v_compose_table(), v, v, v)) return false;
    if (!same(a.h_compose_table(), b.h_compose_table(), h, h, h)) return false;
    if (!same(a.hcomp_table(), b.hcomp_table(), s, s, s)) return false;
    if (!same(a.vcomp_table(), b.vcomp_table(), s, s, s)) return false;
    for (auto x : b.objects().ids()) {
        if (a.v_id(obj[x.index()]) != v[b.v_id(x).index()]) return false;
        if (a.h_id(obj[x.index()]) != h[b.h_id(x).index()]) return false;
    }
    for (auto x : b.v_arrows().ids()) {
        if (a.id_of_v(v[x.index()]) != s[b.id_of_v(x).index()]) return false;
    }
    for (auto x : b.h_arrows().ids()) {
        if (a.id_of_h(h[x.index()]) != s[b.id_of_h(x).index()]) return false;
    }
    return true;
}

}  // namespace dblcat
