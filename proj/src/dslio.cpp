#include "dblcat/dslio.hpp"

#include <algorithm>
#include <array>

#include "dblcat/error.hpp"
#include "dblcat/fixtures.hpp"

namespace dblcat {

using json = nlohmann::json;
using Pointer = json::json_pointer;

namespace {

[[noreturn]] void fail(ErrorKind kind, const Pointer& at, const std::string& msg) {
    std::string where = at.empty() ? std::string("/") : at.to_string();
    throw Error(kind, "at " + where + ": " + msg);
}

// A JSON value together with its location, for error messages.
class Node {
public:
    Node(const json& j, Pointer p) : j_(j), p_(std::move(p)) {}

    const json& value() const { return j_; }
    const Pointer& pointer() const { return p_; }

    Node operator[](const std::string& key) const {
        if (!j_.is_object()) fail(ErrorKind::ParseError, p_, "expected an object");
        auto it = j_.find(key);
        if (it == j_.end()) fail(ErrorKind::ParseError, p_, "missing field '" + key + "'");
        return {*it, p_ / key};
    }
    Node operator[](std::size_t i) const { return {j_.at(i), p_ / i}; }

    std::optional<Node> find(const std::string& key) const {
        if (!j_.is_object()) fail(ErrorKind::ParseError, p_, "expected an object");
        auto it = j_.find(key);
        if (it == j_.end()) return std::nullopt;
        return Node{*it, p_ / key};
    }

    const std::string& str() const {
        if (!j_.is_string()) fail(ErrorKind::ParseError, p_, "expected a string");
        return j_.get_ref<const std::string&>();
    }
    bool boolean() const {
        if (!j_.is_boolean()) fail(ErrorKind::ParseError, p_, "expected a boolean");
        return j_.get<bool>();
    }
    std::vector<Node> items() const {
        if (!j_.is_array()) fail(ErrorKind::ParseError, p_, "expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_.size(); ++i) out.emplace_back(j_[i], p_ / i);
        return out;
    }
    std::vector<std::pair<std::string, Node>> entries() const {
        if (!j_.is_object()) fail(ErrorKind::ParseError, p_, "expected an object");
        std::vector<std::pair<std::string, Node>> out;
        for (auto it = j_.begin(); it != j_.end(); ++it) out.emplace_back(it.key(), Node{it.value(), p_ / it.key()});
        return out;
    }
    std::vector<Node> tuple(std::size_t n) const {
        auto xs = items();
        if (xs.size() != n) fail(ErrorKind::ParseError, p_, "expected " + std::to_string(n) + " entries");
        return xs;
    }

private:
    const json& j_;
    Pointer p_;
};

template <class IdT>
IdT lookup(const NameTable<IdT>& t, const Node& n, const std::string& what) {
    const auto& s = n.str();
    if (auto id = t.find(s)) return *id;
    fail(ErrorKind::DanglingId, n.pointer(), "undefined " + what + " '" + s + "'");
}

// Builder errors become parse errors at the offending node.
template <class Fn>
auto at_node(const Node& n, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DanglingId) fail(ErrorKind::DanglingId, n.pointer(), e.what());
        fail(ErrorKind::ParseError, n.pointer(), e.what());
    }
}

// Only strings, integers, booleans, arrays and objects are allowed.
void check_subset(const json& j, const Pointer& p) {
    if (j.is_null()) fail(ErrorKind::ParseError, p, "null is not allowed");
    if (j.is_number_float()) fail(ErrorKind::ParseError, p, "only integer numbers are allowed");
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) check_subset(j[i], p / i);
    } else if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) check_subset(it.value(), p / it.key());
    }
}

json sorted_triples(std::vector<std::array<std::string, 3>> rows) {
    std::sort(rows.begin(), rows.end());
    json out = json::array();
    for (auto& r : rows) out.push_back({r[0], r[1], r[2]});
    return out;
}

json header(DocKind k) {
    return {{"kind", std::string(to_string(k))}, {"schema_version", schema_version}};
}

void check_header(const Node& root, DocKind expected) {
    auto kind = doc_kind(root["kind"].str());
    if (kind != expected) {
        fail(ErrorKind::ParseError, root.pointer() / "kind", "expected a " + std::string(to_string(expected)));
    }
    auto v = root["schema_version"];
    if (!v.value().is_number_integer() || v.value().get<long long>() != schema_version) {
        fail(ErrorKind::ParseError, v.pointer(), "unsupported schema version");
    }
}

// Double categories.

json encode_double(const DoubleCategory& d) {
    json out = header(DocKind::DoubleCategory);
    out["objects"] = d.objects().names();
    auto arrows = [&](const auto& table, const auto& data) {
        json a = json::array();
        for (auto f : table.ids()) {
            a.push_back({{"name", table.name(f)}, {"src", d.name(data(f).src)}, {"tgt", d.name(data(f).tgt)}});
        }
        return a;
    };
    out["v_arrows"] = arrows(d.v_arrows(), [&](VArrowId f) { return d.v_arrow(f); });
    out["h_arrows"] = arrows(d.h_arrows(), [&](HArrowId f) { return d.h_arrow(f); });
    json squares = json::array();
    for (auto s : d.squares().ids()) {
        const auto& b = d.boundary(s);
        squares.push_back({{"name", d.name(s)},
                           {"top", d.name(b.top)},
                           {"left", d.name(b.left)},
                           {"right", d.name(b.right)},
                           {"bottom", d.name(b.bottom)}});
    }
    out["squares"] = squares;
    json vid = json::object(), hid = json::object(), sv = json::object(), sh = json::object();
    for (auto a : d.objects().ids()) {
        vid[d.name(a)] = d.name(d.v_id(a));
        hid[d.name(a)] = d.name(d.h_id(a));
    }
    for (auto f : d.v_arrows().ids()) sv[d.name(f)] = d.name(d.id_of_v(f));
    for (auto f : d.h_arrows().ids()) sh[d.name(f)] = d.name(d.id_of_h(f));
    out["v_identity"] = vid;
    out["h_identity"] = hid;
    out["v_identity_square"] = sv;
    out["h_identity_square"] = sh;
    auto table = [&](const auto& t) {
        std::vector<std::array<std::string, 3>> rows;
        for (auto e : t.entries()) rows.push_back({d.name(e.first), d.name(e.second), d.name(e.result)});
        return sorted_triples(std::move(rows));
    };
    out["compose_v"] = table(d.v_compose_table());
    out["compose_h"] = table(d.h_compose_table());
    out["hcomp"] = table(d.hcomp_table());
    out["vcomp"] = table(d.vcomp_table());
    return out;
}

DoubleCategory decode_double(const Node& root) {
    check_header(root, DocKind::DoubleCategory);
    DoubleCategory::Builder b;
    const auto& cur = b.current();
    for (const auto& n : root["objects"].items()) at_node(n, [&] { return b.add_object(n.str()); });
    for (const auto& n : root["v_arrows"].items()) {
        auto src = lookup(cur.objects(), n["src"], "object");
        auto tgt = lookup(cur.objects(), n["tgt"], "object");
        at_node(n, [&] { return b.add_v_arrow(n["name"].str(), src, tgt); });
    }
    for (const auto& n : root["h_arrows"].items()) {
        auto src = lookup(cur.objects(), n["src"], "object");
        auto tgt = lookup(cur.objects(), n["tgt"], "object");
        at_node(n, [&] { return b.add_h_arrow(n["name"].str(), src, tgt); });
    }
    for (const auto& n : root["squares"].items()) {
        Boundary bd{lookup(cur.h_arrows(), n["top"], "horizontal arrow"),
                    lookup(cur.v_arrows(), n["left"], "vertical arrow"),
                    lookup(cur.v_arrows(), n["right"], "vertical arrow"),
                    lookup(cur.h_arrows(), n["bottom"], "horizontal arrow")};
        at_node(n, [&] { return b.add_square(n["name"].str(), bd); });
    }
    auto obj = [&](const std::string& key, const Node& n) {
        auto id = cur.objects().find(key);
        if (!id) fail(ErrorKind::DanglingId, n.pointer(), "undefined object '" + key + "'");
        return *id;
    };
    for (const auto& [k, n] : root["v_identity"].entries()) {
        b.set_v_id(obj(k, n), lookup(cur.v_arrows(), n, "vertical arrow"));
    }
    for (const auto& [k, n] : root["h_identity"].entries()) {
        b.set_h_id(obj(k, n), lookup(cur.h_arrows(), n, "horizontal arrow"));
    }
    for (const auto& [k, n] : root["v_identity_square"].entries()) {
        auto f = cur.v_arrows().find(k);
        if (!f) fail(ErrorKind::DanglingId, n.pointer(), "undefined vertical arrow '" + k + "'");
        b.set_id_of_v(*f, lookup(cur.squares(), n, "square"));
    }
    for (const auto& [k, n] : root["h_identity_square"].entries()) {
        auto f = cur.h_arrows().find(k);
        if (!f) fail(ErrorKind::DanglingId, n.pointer(), "undefined horizontal arrow '" + k + "'");
        b.set_id_of_h(*f, lookup(cur.squares(), n, "square"));
    }
    for (const auto& n : root["compose_v"].items()) {
        auto t = n.tuple(3);
        auto f = lookup(cur.v_arrows(), t[0], "vertical arrow");
        auto g = lookup(cur.v_arrows(), t[1], "vertical arrow");
        auto r = lookup(cur.v_arrows(), t[2], "vertical arrow");
        at_node(n, [&] { b.set_compose_v(g, f, r); return 0; });
    }
    for (const auto& n : root["compose_h"].items()) {
        auto t = n.tuple(3);
        auto f = lookup(cur.h_arrows(), t[0], "horizontal arrow");
        auto g = lookup(cur.h_arrows(), t[1], "horizontal arrow");
        auto r = lookup(cur.h_arrows(), t[2], "horizontal arrow");
        at_node(n, [&] { b.set_compose_h(g, f, r); return 0; });
    }
    for (const auto& n : root["hcomp"].items()) {
        auto t = n.tuple(3);
        auto x = lookup(cur.squares(), t[0], "square");
        auto y = lookup(cur.squares(), t[1], "square");
        auto r = lookup(cur.squares(), t[2], "square");
        at_node(n, [&] { b.set_hcomp(x, y, r); return 0; });
    }
    for (const auto& n : root["vcomp"].items()) {
        auto t = n.tuple(3);
        auto x = lookup(cur.squares(), t[0], "square");
        auto y = lookup(cur.squares(), t[1], "square");
        auto r = lookup(cur.squares(), t[2], "square");
        at_node(n, [&] { b.set_vcomp(x, y, r); return 0; });
    }
    return at_node(root, [&] { return std::move(b).build(); });
}

DoubleCategory decode_ref(const Node& n) {
    if (n.value().is_string()) {
        return at_node(n, [&] { return double_fixture(n.str()); });
    }
    return decode_double(n);
}

json canonical_ref(const Node& n) {
    if (n.value().is_string()) return n.value();
    return encode_double(decode_double(n));
}

// Two-categories and categories.

json encode_two(const TwoCategory& k) {
    json out = header(DocKind::TwoCategory);
    out["objects"] = k.objects().names();
    json ones = json::array(), twos = json::array();
    for (auto f : k.one_cells().ids()) {
        const auto& c = k.one_cell(f);
        ones.push_back({{"name", k.one_cells().name(f)},
                        {"src", k.objects().name(c.src)},
                        {"tgt", k.objects().name(c.tgt)}});
    }
    for (auto t : k.two_cells().ids()) {
        const auto& c = k.two_cell(t);
        twos.push_back({{"name", k.two_cells().name(t)},
                        {"src", k.one_cells().name(c.src)},
                        {"tgt", k.one_cells().name(c.tgt)}});
    }
    out["one_cells"] = ones;
    out["two_cells"] = twos;
    json id1 = json::object(), id2 = json::object();
    for (auto a : k.objects().ids()) id1[k.objects().name(a)] = k.one_cells().name(k.identity(a));
    for (auto f : k.one_cells().ids()) id2[k.one_cells().name(f)] = k.two_cells().name(k.identity(f));
    out["identity"] = id1;
    out["identity_2cell"] = id2;
    auto table = [](const auto& t, const auto& names, const auto& rnames) {
        std::vector<std::array<std::string, 3>> rows;
        for (auto e : t.entries()) rows.push_back({names.name(e.first), names.name(e.second), rnames.name(e.result)});
        return sorted_triples(std::move(rows));
    };
    out["compose"] = table(k.compose_table(), k.one_cells(), k.one_cells());
    out["vcomp"] = table(k.vcomp_table(), k.two_cells(), k.two_cells());
    out["hcomp"] = table(k.hcomp_table(), k.two_cells(), k.two_cells());
    return out;
}

TwoCategory decode_two(const Node& root) {
    check_header(root, DocKind::TwoCategory);
    TwoCategory::Builder b;
    NameTable<ObjectId> objects;
    NameTable<OneCellId> ones;
    NameTable<TwoCellId> twos;
    for (const auto& n : root["objects"].items()) {
        at_node(n, [&] { objects.add(n.str()); return b.add_object(n.str()); });
    }
    for (const auto& n : root["one_cells"].items()) {
        auto src = lookup(objects, n["src"], "object");
        auto tgt = lookup(objects, n["tgt"], "object");
        at_node(n, [&] { ones.add(n["name"].str()); return b.add_one_cell(n["name"].str(), src, tgt); });
    }
    for (const auto& n : root["two_cells"].items()) {
        auto src = lookup(ones, n["src"], "1-cell");
        auto tgt = lookup(ones, n["tgt"], "1-cell");
        at_node(n, [&] { twos.add(n["name"].str()); return b.add_two_cell(n["name"].str(), src, tgt); });
    }
    for (const auto& [key, n] : root["identity"].entries()) {
        auto a = objects.find(key);
        if (!a) fail(ErrorKind::DanglingId, n.pointer(), "undefined object '" + key + "'");
        b.set_identity(*a, lookup(ones, n, "1-cell"));
    }
    for (const auto& [key, n] : root["identity_2cell"].entries()) {
        auto f = ones.find(key);
        if (!f) fail(ErrorKind::DanglingId, n.pointer(), "undefined 1-cell '" + key + "'");
        b.set_identity(*f, lookup(twos, n, "2-cell"));
    }
    for (const auto& n : root["compose"].items()) {
        auto t = n.tuple(3);
        auto f = lookup(ones, t[0], "1-cell");
        auto g = lookup(ones, t[1], "1-cell");
        auto r = lookup(ones, t[2], "1-cell");
        at_node(n, [&] { b.set_compose(g, f, r); return 0; });
    }
    for (const auto& n : root["vcomp"].items()) {
        auto t = n.tuple(3);
        auto x = lookup(twos, t[0], "2-cell");
        auto y = lookup(twos, t[1], "2-cell");
        auto r = lookup(twos, t[2], "2-cell");
        at_node(n, [&] { b.set_vcomp(x, y, r); return 0; });
    }
    for (const auto& n : root["hcomp"].items()) {
        auto t = n.tuple(3);
        auto x = lookup(twos, t[0], "2-cell");
        auto y = lookup(twos, t[1], "2-cell");
        auto r = lookup(twos, t[2], "2-cell");
        at_node(n, [&] { b.set_hcomp(x, y, r); return 0; });
    }
    return at_node(root, [&] { return std::move(b).build(); });
}

json encode_category(const Category& c) {
    json out = header(DocKind::Category);
    out["objects"] = c.objects().names();
    json arrows = json::array();
    for (auto f : c.arrows().ids()) {
        arrows.push_back({{"name", c.arrows().name(f)},
                          {"src", c.objects().name(c.arrow(f).src)},
                          {"tgt", c.objects().name(c.arrow(f).tgt)}});
    }
    out["arrows"] = arrows;
    json ids = json::object();
    for (auto a : c.objects().ids()) ids[c.objects().name(a)] = c.arrows().name(c.identity(a));
    out["identity"] = ids;
    std::vector<std::array<std::string, 3>> rows;
    for (auto e : c.compose_table().entries()) {
        rows.push_back({c.arrows().name(e.first), c.arrows().name(e.second), c.arrows().name(e.result)});
    }
    out["compose"] = sorted_triples(std::move(rows));
    return out;
}

Category decode_category(const Node& root) {
    check_header(root, DocKind::Category);
    Category::Builder b;
    NameTable<ObjectId> objects;
    NameTable<ArrowId> arrows;
    for (const auto& n : root["objects"].items()) {
        at_node(n, [&] { objects.add(n.str()); return b.add_object(n.str()); });
    }
    for (const auto& n : root["arrows"].items()) {
        auto src = lookup(objects, n["src"], "object");
        auto tgt = lookup(objects, n["tgt"], "object");
        at_node(n, [&] { arrows.add(n["name"].str()); return b.add_arrow(n["name"].str(), src, tgt); });
    }
    for (const auto& [key, n] : root["identity"].entries()) {
        auto a = objects.find(key);
        if (!a) fail(ErrorKind::DanglingId, n.pointer(), "undefined object '" + key + "'");
        b.set_identity(*a, lookup(arrows, n, "arrow"));
    }
    for (const auto& n : root["compose"].items()) {
        auto t = n.tuple(3);
        auto f = lookup(arrows, t[0], "arrow");
        auto g = lookup(arrows, t[1], "arrow");
        auto r = lookup(arrows, t[2], "arrow");
        at_node(n, [&] { b.set_compose(g, f, r); return 0; });
    }
    return at_node(root, [&] { return std::move(b).build(); });
}

// Pseudofunctors.

json encode_psfunctor(const DoublePseudofunctor& F, const json& domain, const json& codomain) {
    const auto& D = *F.dom;
    const auto& E = *F.cod;
    json out = header(DocKind::Psfunctor);
    out["domain"] = domain;
    out["codomain"] = codomain;
    json obj = json::object(), v = json::object(), h = json::object(), sq = json::object();
    json uh = json::object(), uv = json::object();
    for (auto a : D.objects().ids()) {
        obj[D.name(a)] = E.name(F(a));
        uh[D.name(a)] = E.name(F.unit_h[a.index()]);
        uv[D.name(a)] = E.name(F.unit_v[a.index()]);
    }
    for (auto f : D.v_arrows().ids()) v[D.name(f)] = E.name(F(f));
    for (auto f : D.h_arrows().ids()) h[D.name(f)] = E.name(F(f));
    for (auto s : D.squares().ids()) sq[D.name(s)] = E.name(F(s));
    out["objects"] = obj;
    out["v_arrows"] = v;
    out["h_arrows"] = h;
    out["squares"] = sq;
    out["unit_h"] = uh;
    out["unit_v"] = uv;
    auto table = [&](const auto& t) {
        std::vector<std::array<std::string, 3>> rows;
        for (auto e : t.entries()) rows.push_back({D.name(e.first), D.name(e.second), E.name(e.result)});
        return sorted_triples(std::move(rows));
    };
    out["comp_v"] = table(F.comp_v);
    out["comp_h"] = table(F.comp_h);
    return out;
}

template <class IdT, class CodT>
std::vector<CodT> decode_map(const Node& n, const NameTable<IdT>& dom, const NameTable<CodT>& cod,
                             const std::string& what) {
    std::vector<std::optional<CodT>> out(dom.size());
    for (const auto& [key, v] : n.entries()) {
        auto id = dom.find(key);
        if (!id) fail(ErrorKind::DanglingId, v.pointer(), "undefined " + what + " '" + key + "'");
        out[id->index()] = lookup(cod, v, what);
    }
    std::vector<CodT> result;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!out[i]) fail(ErrorKind::ParseError, n.pointer(), "no image for " + what + " '" + dom.names()[i] + "'");
        result.push_back(*out[i]);
    }
    return result;
}

DoublePseudofunctor decode_psfunctor(const Node& root) {
    check_header(root, DocKind::Psfunctor);
    DoublePseudofunctor F;
    F.dom = std::make_shared<const DoubleCategory>(decode_ref(root["domain"]));
    F.cod = std::make_shared<const DoubleCategory>(decode_ref(root["codomain"]));
    const auto& D = *F.dom;
    const auto& E = *F.cod;
    F.obj = decode_map(root["objects"], D.objects(), E.objects(), "object");
    F.v_map = decode_map(root["v_arrows"], D.v_arrows(), E.v_arrows(), "vertical arrow");
    F.h_map = decode_map(root["h_arrows"], D.h_arrows(), E.h_arrows(), "horizontal arrow");
    F.sq_map = decode_map(root["squares"], D.squares(), E.squares(), "square");
    F.unit_h = decode_map(root["unit_h"], D.objects(), E.squares(), "square");
    F.unit_v = decode_map(root["unit_v"], D.objects(), E.squares(), "square");
    for (const auto& n : root["comp_v"].items()) {
        auto t = n.tuple(3);
        F.comp_v.set(lookup(D.v_arrows(), t[0], "vertical arrow"), lookup(D.v_arrows(), t[1], "vertical arrow"),
                     lookup(E.squares(), t[2], "square"));
    }
    for (const auto& n : root["comp_h"].items()) {
        auto t = n.tuple(3);
        F.comp_h.set(lookup(D.h_arrows(), t[0], "horizontal arrow"), lookup(D.h_arrows(), t[1], "horizontal arrow"),
                     lookup(E.squares(), t[2], "square"));
    }
    return F;
}

// Grids and mate requests.

GridRequest decode_grid(const Node& root) {
    check_header(root, DocKind::Grid);
    GridRequest g;
    g.over = std::make_shared<const DoubleCategory>(decode_ref(root["over"]));
    for (const auto& row : root["rows"].items()) {
        std::vector<SquareId> cells;
        for (const auto& c : row.items()) cells.push_back(lookup(g.over->squares(), c, "square"));
        g.rows.push_back(std::move(cells));
    }
    return g;
}

CompanionPair decode_pair(const DoubleCategory& d, const Node& n) {
    return {lookup(d.v_arrows(), n["f"], "vertical arrow"), lookup(d.h_arrows(), n["f_prime"], "horizontal arrow"),
            lookup(d.squares(), n["phi"], "square"), lookup(d.squares(), n["psi"], "square")};
}

Conjunction decode_conjunction(const DoubleCategory& d, const Node& n) {
    return {lookup(d.v_arrows(), n["f"], "vertical arrow"), lookup(d.h_arrows(), n["g"], "horizontal arrow"),
            lookup(d.squares(), n["eta"], "square"), lookup(d.squares(), n["eps"], "square")};
}

MateRequest decode_mate(const Node& root) {
    check_header(root, DocKind::MateRequest);
    MateRequest r;
    r.over = std::make_shared<const DoubleCategory>(decode_ref(root["over"]));
    const auto& d = *r.over;
    auto mode = root["mode"];
    if (mode.str() == "companion") {
        r.mode = MateRequest::Mode::Companion;
    } else if (mode.str() == "conjunction") {
        r.mode = MateRequest::Mode::Conjunction;
    } else if (mode.str() == "base_change") {
        r.mode = MateRequest::Mode::BaseChange;
    } else {
        fail(ErrorKind::ParseError, mode.pointer(), "mode must be companion, conjunction or base_change");
    }
    if (r.mode == MateRequest::Mode::BaseChange) {
        auto s = root["setup"];
        r.setup = {decode_conjunction(d, s["iota_a"]), decode_conjunction(d, s["iota_b"]),
                   decode_conjunction(d, s["fstar_c"]), decode_conjunction(d, s["fstar_d"])};
        auto seeds = root["seeds"].tuple(2);
        r.seed1 = lookup(d.squares(), seeds[0], "square");
        r.seed2 = lookup(d.squares(), seeds[1], "square");
        return r;
    }
    auto dir = root["direction"];
    if (dir.str() == "to_beta") {
        r.direction = MateDirection::ToBeta;
    } else if (dir.str() == "to_alpha") {
        r.direction = MateDirection::ToAlpha;
    } else {
        fail(ErrorKind::ParseError, dir.pointer(), "direction must be to_beta or to_alpha");
    }
    r.cell = lookup(d.squares(), root["cell"], "square");
    auto b = root.find("boundary");
    if (r.mode == MateRequest::Mode::Companion) {
        r.pf = decode_pair(d, root["first"]);
        r.pg = decode_pair(d, root["second"]);
        if (b) {
            r.boundary = MateBoundary{lookup(d.v_arrows(), (*b)["i"], "vertical arrow"),
                                      lookup(d.h_arrows(), (*b)["j"], "horizontal arrow"),
                                      lookup(d.v_arrows(), (*b)["m"], "vertical arrow"),
                                      lookup(d.h_arrows(), (*b)["n"], "horizontal arrow")};
        }
    } else {
        r.c1 = decode_conjunction(d, root["first"]);
        r.c2 = decode_conjunction(d, root["second"]);
        if (b) {
            r.conj_boundary = ConjMateBoundary{lookup(d.h_arrows(), (*b)["i"], "horizontal arrow"),
                                               lookup(d.v_arrows(), (*b)["j"], "vertical arrow"),
                                               lookup(d.v_arrows(), (*b)["m"], "vertical arrow"),
                                               lookup(d.h_arrows(), (*b)["n"], "horizontal arrow")};
        }
    }
    return r;
}

void check_report(const Node& root) {
    check_header(root, DocKind::Report);
    root["command"].str();
    root["ok"].boolean();
    root["result"];
    for (const auto& v : root["violations"].items()) {
        v["family"].str();
        v["detail"].str();
        for (const auto& w : v["witness"].items()) w.str();
    }
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

std::string_view to_string(DocKind k) {
    switch (k) {
        case DocKind::DoubleCategory: return "double_category";
        case DocKind::TwoCategory: return "two_category";
        case DocKind::Category: return "category";
        case DocKind::Psfunctor: return "psfunctor";
        case DocKind::Grid: return "grid";
        case DocKind::MateRequest: return "mate_request";
        case DocKind::Report: return "report";
    }
    return "unknown";
}

DocKind doc_kind(const std::string& name) {
    for (auto k : {DocKind::DoubleCategory, DocKind::TwoCategory, DocKind::Category, DocKind::Psfunctor, DocKind::Grid,
                   DocKind::MateRequest, DocKind::Report}) {
        if (to_string(k) == name) return k;
    }
    throw Error(ErrorKind::UnknownKind, "unknown document kind '" + name + "'");
}

Document parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte);
        std::string msg = e.what();
        if (auto pos = msg.find(": ", msg.find("column")); pos != std::string::npos) msg = msg.substr(pos + 2);
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }
    check_subset(j, Pointer{});
    Node root(j, Pointer{});
    auto kind = doc_kind(root["kind"].str());
    switch (kind) {
        case DocKind::DoubleCategory: return {kind, encode_double(decode_double(root))};
        case DocKind::TwoCategory: return {kind, encode_two(decode_two(root))};
        case DocKind::Category: return {kind, encode_category(decode_category(root))};
        case DocKind::Psfunctor: {
            auto F = decode_psfunctor(root);
            return {kind, encode_psfunctor(F, canonical_ref(root["domain"]), canonical_ref(root["codomain"]))};
        }
        case DocKind::Grid: {
            decode_grid(root);
            j["over"] = canonical_ref(root["over"]);
            return {kind, j};
        }
        case DocKind::MateRequest: {
            decode_mate(root);
            j["over"] = canonical_ref(root["over"]);
            return {kind, j};
        }
        case DocKind::Report: check_report(root); return {kind, j};
    }
    throw Error(ErrorKind::UnknownKind, "unhandled document kind");
}

std::string serialize(const Document& doc) { return doc.body.dump(2) + "\n"; }

Document to_document(const DoubleCategory& d) { return {DocKind::DoubleCategory, encode_double(d)}; }
Document to_document(const TwoCategory& k) { return {DocKind::TwoCategory, encode_two(k)}; }
Document to_document(const Category& c) { return {DocKind::Category, encode_category(c)}; }

Document to_document(const DoublePseudofunctor& f, const json& domain, const json& codomain) {
    return {DocKind::Psfunctor, encode_psfunctor(f, domain, codomain)};
}

Document to_document(const DoublePseudofunctor& f) {
    return to_document(f, encode_double(*f.dom), encode_double(*f.cod));
}

Document grid_document(const DoubleCategory& d, const PastingGrid& g, const json& over) {
    json out = header(DocKind::Grid);
    out["over"] = over;
    json rows = json::array();
    for (std::size_t r = 0; r < g.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < g.cols; ++c) row.push_back(d.name(g.at(r, c)));
        rows.push_back(row);
    }
    out["rows"] = rows;
    return {DocKind::Grid, out};
}

namespace {
Node root_of(const Document& doc, DocKind expected) {
    if (doc.kind != expected) {
        throw Error(ErrorKind::ParseError, "expected a " + std::string(to_string(expected)) + " document");
    }
    return Node(doc.body, Pointer{});
}
}  // namespace

DoubleCategory to_double_category(const Document& doc) { return decode_double(root_of(doc, DocKind::DoubleCategory)); }
TwoCategory to_two_category(const Document& doc) { return decode_two(root_of(doc, DocKind::TwoCategory)); }
Category to_category(const Document& doc) { return decode_category(root_of(doc, DocKind::Category)); }
DoublePseudofunctor to_psfunctor(const Document& doc) { return decode_psfunctor(root_of(doc, DocKind::Psfunctor)); }
GridRequest to_grid(const Document& doc) { return decode_grid(root_of(doc, DocKind::Grid)); }
MateRequest to_mate_request(const Document& doc) { return decode_mate(root_of(doc, DocKind::MateRequest)); }

DoubleCategory resolve_double(const json& ref) { return decode_ref(Node(ref, Pointer{})); }

Document report_document(const std::string& command, const ValidationReport& report, const json& result) {
    json out = header(DocKind::Report);
    out["command"] = command;
    out["ok"] = report.ok();
    json vs = json::array();
    for (const auto& v : report.violations()) {
        vs.push_back({{"family", v.family}, {"witness", v.witness}, {"detail", v.detail}});
    }
    out["violations"] = vs;
    out["families"] = report.families();
    out["result"] = result;
    return {DocKind::Report, out};
}

json encode(const DoubleCategory& d, const CompanionPair& p) {
    return {{"f", d.name(p.f)}, {"f_prime", d.name(p.f_prime)}, {"phi", d.name(p.phi)}, {"psi", d.name(p.psi)}};
}

json encode(const DoubleCategory& d, const Conjunction& c) {
    return {{"f", d.name(c.f)}, {"g", d.name(c.g)}, {"eta", d.name(c.eta)}, {"eps", d.name(c.eps)}};
}

json encode(const DoubleCategory& d, const MateTable& t) {
    json cells = json::array(), inv = json::array();
    for (std::size_t r = 0; r < 3; ++r) {
        cells.push_back({d.name(t.cells[r][0]), d.name(t.cells[r][1])});
        inv.push_back({t.invertible[r][0], t.invertible[r][1]});
    }
    json comps = json::array();
    for (const auto& p : t.companions) comps.push_back(encode(d, p));
    return {{"cells", cells},
            {"invertible", inv},
            {"row1_globular", {d.name(t.row1_globular[0]), d.name(t.row1_globular[1])}},
            {"linkage", {t.linkage[0], t.linkage[1]}},
            {"companions", comps}};
}

}  // namespace dblcat
