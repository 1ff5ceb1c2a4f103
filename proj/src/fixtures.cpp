#include "dblcat/fixtures.hpp"

#include <algorithm>
#include <map>

#include "dblcat/constructions.hpp"
#include "dblcat/error.hpp"

namespace dblcat {

namespace {

const std::vector<std::pair<std::string, FixtureKind>>& registry() {
    static const std::vector<std::pair<std::string, FixtureKind>> r = {
        {"TERMINAL", FixtureKind::DoubleCategory},
        {"WALKING_ARROW_SQ", FixtureKind::DoubleCategory},
        {"POS2_QUIN", FixtureKind::DoubleCategory},
        {"CYCLIC_QUIN", FixtureKind::DoubleCategory},
        {"MONOID_QUIN", FixtureKind::DoubleCategory},
        {"MUTANT_INTERCHANGE", FixtureKind::DoubleCategory},
        {"MUTANT_BOUNDARY", FixtureKind::DoubleCategory},
        {"MUTANT_UNIT", FixtureKind::DoubleCategory},
        {"MUTANT_IDENTITY_CELL", FixtureKind::DoubleCategory},
        {"MUTANT_CATEGORY", FixtureKind::DoubleCategory},
        {"TERMINAL_2CAT", FixtureKind::TwoCategory},
        {"POS2", FixtureKind::TwoCategory},
        {"CYCLIC", FixtureKind::TwoCategory},
        {"MONOID", FixtureKind::TwoCategory},
        {"TERMINAL_CAT", FixtureKind::Category},
        {"WALKING_ARROW", FixtureKind::Category},
        {"WALKING_ISO", FixtureKind::Category},
    };
    return r;
}

[[noreturn]] void unknown(const std::string& name) {
    throw Error(ErrorKind::UnknownFixture, "no fixture named '" + name + "'");
}

struct MonotoneMap {
    std::string name;
    int src;
    int tgt;
    std::vector<int> values;
};

DoubleCategory corrupt(DoubleCategory base, auto&& edit) {
    DoubleCategory::Builder b(std::move(base));
    edit(b, b.current());
    return std::move(b).build();
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [n, k] : registry()) out.push_back(n);
    return out;
}

FixtureKind fixture_kind(const std::string& name) {
    for (const auto& [n, k] : registry()) {
        if (n == name) return k;
    }
    unknown(name);
}

std::vector<std::string> valid_double_fixtures() {
    return {"TERMINAL", "WALKING_ARROW_SQ", "POS2_QUIN", "CYCLIC_QUIN", "MONOID_QUIN"};
}

std::vector<std::string> mutant_double_fixtures() {
    return {"MUTANT_INTERCHANGE", "MUTANT_BOUNDARY", "MUTANT_UNIT", "MUTANT_IDENTITY_CELL", "MUTANT_CATEGORY"};
}

std::string mutant_target_family(const std::string& name) {
    static const std::map<std::string, std::string> targets = {
        {"MUTANT_INTERCHANGE", "interchange"}, {"MUTANT_BOUNDARY", "boundary"},
        {"MUTANT_UNIT", "vcomp_unit"},         {"MUTANT_IDENTITY_CELL", "identity_cell"},
        {"MUTANT_CATEGORY", "v_category"},
    };
    auto it = targets.find(name);
    if (it == targets.end()) unknown(name);
    return it->second;
}

Category terminal_category() {
    Category::Builder b;
    auto a = b.add_object("*");
    auto id = b.add_arrow("id", a, a);
    b.set_identity(a, id);
    b.set_compose(id, id, id);
    return std::move(b).build();
}

Category walking_arrow() {
    Category::Builder b;
    auto a = b.add_object("a");
    auto c = b.add_object("b");
    auto ia = b.add_arrow("id_a", a, a);
    auto ib = b.add_arrow("id_b", c, c);
    auto u = b.add_arrow("u", a, c);
    b.set_identity(a, ia);
    b.set_identity(c, ib);
    b.set_compose(ia, ia, ia);
    b.set_compose(ib, ib, ib);
    b.set_compose(u, ia, u);
    b.set_compose(ib, u, u);
    return std::move(b).build();
}

Category walking_iso() {
    Category::Builder b;
    auto a = b.add_object("a");
    auto c = b.add_object("b");
    auto ia = b.add_arrow("id_a", a, a);
    auto ib = b.add_arrow("id_b", c, c);
    auto u = b.add_arrow("u", a, c);
    auto v = b.add_arrow("v", c, a);
    b.set_identity(a, ia);
    b.set_identity(c, ib);
    b.set_compose(ia, ia, ia);
    b.set_compose(ib, ib, ib);
    b.set_compose(u, ia, u);
    b.set_compose(ib, u, u);
    b.set_compose(v, ib, v);
    b.set_compose(ia, v, v);
    b.set_compose(v, u, ia);
    b.set_compose(u, v, ib);
    return std::move(b).build();
}

TwoCategory terminal_2category() {
    TwoCategory::Builder b;
    auto a = b.add_object("*");
    auto id = b.add_one_cell("id", a, a);
    auto id2 = b.add_two_cell("id", id, id);
    b.set_identity(a, id);
    b.set_identity(id, id2);
    b.set_compose(id, id, id);
    b.set_vcomp(id2, id2, id2);
    b.set_hcomp(id2, id2, id2);
    return std::move(b).build();
}

TwoCategory pos2() {
    // Object 0 is P = {0 < 1}, object 1 is Q = {0}.
    const std::vector<int> size = {2, 1};
    const std::vector<MonotoneMap> maps = {
        {"id_P", 0, 0, {0, 1}}, {"const0P", 0, 0, {0, 0}}, {"const1P", 0, 0, {1, 1}}, {"!", 0, 1, {0, 0}},
        {"const0", 1, 0, {0}},  {"const1", 1, 0, {1}},     {"id_Q", 1, 1, {0}},
    };
    TwoCategory::Builder b;
    std::vector<ObjectId> obj = {b.add_object("P"), b.add_object("Q")};
    std::vector<OneCellId> one;
    for (const auto& m : maps) one.push_back(b.add_one_cell(m.name, obj[m.src], obj[m.tgt]));

    auto find = [&](int src, int tgt, const std::vector<int>& values) {
        for (std::size_t i = 0; i < maps.size(); ++i) {
            if (maps[i].src == src && maps[i].tgt == tgt && maps[i].values == values) return i;
        }
        throw Error(ErrorKind::Structure, "map missing from POS2");
    };
    auto leq = [&](std::size_t i, std::size_t j) {
        for (int x = 0; x < size[maps[i].src]; ++x) {
            if (maps[i].values[x] > maps[j].values[x]) return false;
        }
        return true;
    };

    std::map<std::pair<std::size_t, std::size_t>, TwoCellId> cell;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (std::size_t j = 0; j < maps.size(); ++j) {
            if (maps[i].src != maps[j].src || maps[i].tgt != maps[j].tgt || !leq(i, j)) continue;
            cell[{i, j}] = b.add_two_cell(maps[i].name + "<=" + maps[j].name, one[i], one[j]);
        }
    }
    auto composite = [&](std::size_t g, std::size_t f) {
        std::vector<int> values;
        for (int x : maps[f].values) values.push_back(maps[g].values[x]);
        return find(maps[f].src, maps[g].tgt, values);
    };
    for (std::size_t f = 0; f < maps.size(); ++f) {
        for (std::size_t g = 0; g < maps.size(); ++g) {
            if (maps[f].tgt != maps[g].src) continue;
            b.set_compose(one[g], one[f], one[composite(g, f)]);
        }
    }
    for (const auto& [p, c] : cell) {
        for (const auto& [q, d] : cell) {
            if (p.second == q.first) b.set_vcomp(c, d, cell.at({p.first, q.second}));
            if (maps[p.first].tgt == maps[q.first].src) {
                auto lo = composite(q.first, p.first);
                auto hi = composite(q.second, p.second);
                b.set_hcomp(c, d, cell.at({lo, hi}));
            }
        }
    }
    b.set_identity(obj[0], one[0]);
    b.set_identity(obj[1], one[6]);
    for (std::size_t i = 0; i < maps.size(); ++i) b.set_identity(one[i], cell.at({i, i}));
    return std::move(b).build();
}

TwoCategory cyclic() {
    TwoCategory::Builder b;
    auto a = b.add_object("*");
    const std::vector<std::string> names = {"e", "s"};
    std::vector<OneCellId> one;
    for (const auto& n : names) one.push_back(b.add_one_cell(n, a, a));
    std::vector<std::vector<TwoCellId>> two(2);
    for (int f = 0; f < 2; ++f) {
        for (int x = 0; x < 3; ++x) {
            two[f].push_back(b.add_two_cell(names[f] + ":" + std::to_string(x), one[f], one[f]));
        }
    }
    for (int f = 0; f < 2; ++f) {
        for (int g = 0; g < 2; ++g) {
            b.set_compose(one[g], one[f], one[(f + g) % 2]);
            for (int x = 0; x < 3; ++x) {
                for (int y = 0; y < 3; ++y) b.set_hcomp(two[f][x], two[g][y], two[(f + g) % 2][(x + y) % 3]);
            }
        }
        for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 3; ++y) b.set_vcomp(two[f][x], two[f][y], two[f][(x + y) % 3]);
        }
        b.set_identity(one[f], two[f][0]);
    }
    b.set_identity(a, one[0]);
    return std::move(b).build();
}

TwoCategory monoid_2category() {
    TwoCategory::Builder b;
    auto a = b.add_object("*");
    auto id = b.add_one_cell("id", a, a);
    // one, x, zero with x·x = zero
    std::vector<TwoCellId> m = {b.add_two_cell("one", id, id), b.add_two_cell("x", id, id),
                                b.add_two_cell("zero", id, id)};
    auto mul = [](int p, int q) {
        if (p == 0) return q;
        if (q == 0) return p;
        return 2;
    };
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            b.set_vcomp(m[p], m[q], m[mul(p, q)]);
            b.set_hcomp(m[p], m[q], m[mul(p, q)]);
        }
    }
    b.set_compose(id, id, id);
    b.set_identity(a, id);
    b.set_identity(id, m[0]);
    return std::move(b).build();
}

Category category_fixture(const std::string& name) {
    if (name == "TERMINAL_CAT") return terminal_category();
    if (name == "WALKING_ARROW") return walking_arrow();
    if (name == "WALKING_ISO") return walking_iso();
    unknown(name);
}

TwoCategory two_fixture(const std::string& name) {
    if (name == "TERMINAL_2CAT") return terminal_2category();
    if (name == "POS2") return pos2();
    if (name == "CYCLIC") return cyclic();
    if (name == "MONOID") return monoid_2category();
    unknown(name);
}

DoubleCategory double_fixture(const std::string& name) {
    if (name == "TERMINAL") return quin(terminal_2category());
    if (name == "WALKING_ARROW_SQ") return square_category(walking_arrow());
    if (name == "POS2_QUIN") return quin(pos2());
    if (name == "CYCLIC_QUIN") return quin(cyclic());
    if (name == "MONOID_QUIN") return quin(monoid_2category());
    if (name == "MUTANT_INTERCHANGE") {
        // vcomp becomes the semilattice on {one, x, zero}; hcomp is untouched.
        return corrupt(quin(monoid_2category()), [](auto& b, const DoubleCategory& d) {
            auto x = d.sq("(id,id,id,id,x)");
            b.set_vcomp(x, x, x);
        });
    }
    if (name == "MUTANT_BOUNDARY") {
        return corrupt(square_category(walking_arrow()), [](auto& b, const DoubleCategory& d) {
            auto ida = d.id_of_v(d.v("id_a"));
            b.set_hcomp(ida, ida, d.id_of_v(d.v("u")));
        });
    }
    if (name == "MUTANT_UNIT") {
        return corrupt(quin(cyclic()), [](auto& b, const DoubleCategory& d) {
            b.set_vcomp(d.id_of_h(d.h("e")), d.sq("(e,e,e,e,e:1)"), d.sq("(e,e,e,e,e:2)"));
        });
    }
    if (name == "MUTANT_IDENTITY_CELL") {
        return corrupt(quin(cyclic()), [](auto& b, const DoubleCategory& d) {
            b.set_id_of_v(d.v("e"), d.sq("(e,e,e,e,e:1)"));
        });
    }
    if (name == "MUTANT_CATEGORY") {
        return corrupt(quin(pos2()), [](auto& b, const DoubleCategory& d) {
            b.set_compose_v(d.v("const0P"), d.v("const1P"), d.v("const1P"));
        });
    }
    unknown(name);
}

}  // namespace dblcat
