#include <algorithm>

#include "dblcat/constructions.hpp"
#include "dblcat/error.hpp"
#include "dblcat/fixtures.hpp"
#include "dblcat/psfunctor.hpp"

namespace dblcat {

namespace {

// Strict data on POS2 sending objects and 1-cells by name; 2-cells follow
// from posetality.
Pseudofunctor2 pos2_strict(const std::vector<std::string>& objects, const std::vector<std::string>& ones) {
    auto k = std::make_shared<const TwoCategory>(pos2());
    Pseudofunctor2 F;
    F.dom = k;
    F.cod = k;
    for (const auto& n : objects) F.obj.push_back(k->objects().at(n, "object"));
    for (const auto& n : ones) F.one.push_back(k->one_cells().at(n, "1-cell"));
    auto cell = [&](OneCellId s, OneCellId t) {
        const auto& h = k->hom(s, t);
        if (h.empty()) throw Error(ErrorKind::Structure, "order not preserved");
        return h.front();
    };
    for (auto t : k->two_cells().ids()) {
        const auto& c = k->two_cell(t);
        F.two.push_back(cell(F.one[c.src.index()], F.one[c.tgt.index()]));
    }
    for (auto a : k->objects().ids()) F.unit.push_back(k->identity(k->identity(F.obj[a.index()])));
    for (auto e : k->compose_table().entries()) {
        F.comp.set(e.first, e.second, k->identity(F.one[e.result.index()]));
    }
    return F;
}

// Identity on 1-cells of CYCLIC, x ↦ sign·x on 2-cells, with composition
// constraint c(f, g) and zero unit.
Pseudofunctor2 cyclic_twisted(int sign, int (*cocycle)(int, int)) {
    auto k = std::make_shared<const TwoCategory>(cyclic());
    Pseudofunctor2 F;
    F.dom = k;
    F.cod = k;
    F.obj = k->objects().ids();
    F.one = k->one_cells().ids();
    auto cell = [&](OneCellId f, int x) {
        return k->two_cells().at(k->one_cells().name(f) + ":" + std::to_string(((x % 3) + 3) % 3), "2-cell");
    };
    for (auto t : k->two_cells().ids()) {
        const auto& name = k->two_cells().name(t);
        int x = name.back() - '0';
        F.two.push_back(cell(k->two_cell(t).src, sign * x));
    }
    F.unit.push_back(k->identity(k->identity(F.obj[0])));
    for (auto e : k->compose_table().entries()) {
        F.comp.set(e.first, e.second, cell(e.result, cocycle(int(e.first.index()), int(e.second.index()))));
    }
    return F;
}

int no_cocycle(int, int) { return 0; }
int twist(int f, int g) { return f == 1 && g == 1 ? 2 : 0; }
int broken(int f, int g) { return f == 0 && g == 1 ? 1 : 0; }

// Replace one constraint square of a quin-lifted functor by another square
// with the same boundary.
SquareId other_square(const DoubleCategory& d, SquareId s) {
    for (auto t : d.squares_with(d.boundary(s))) {
        if (t != s) return t;
    }
    throw Error(ErrorKind::Structure, "no alternative square");
}

}  // namespace

std::vector<std::string> pseudofunctor2_fixture_names() {
    return {"ID_POS2", "CONST_Q_POS2", "COLLAPSE_POS2", "ID_CYCLIC", "TWISTED_CYCLIC", "NEGATE_CYCLIC", "MUTANT_COCYCLE"};
}

Pseudofunctor2 pseudofunctor2_fixture(const std::string& name) {
    if (name == "ID_POS2") return identity_pseudofunctor2(std::make_shared<const TwoCategory>(pos2()));
    if (name == "CONST_Q_POS2") {
        return pos2_strict({"Q", "Q"}, {"id_Q", "id_Q", "id_Q", "id_Q", "id_Q", "id_Q", "id_Q"});
    }
    if (name == "COLLAPSE_POS2") {
        return pos2_strict({"P", "P"}, {"id_P", "id_P", "id_P", "id_P", "id_P", "id_P", "id_P"});
    }
    if (name == "ID_CYCLIC") return identity_pseudofunctor2(std::make_shared<const TwoCategory>(cyclic()));
    if (name == "TWISTED_CYCLIC") return cyclic_twisted(1, twist);
    if (name == "NEGATE_CYCLIC") return cyclic_twisted(-1, no_cocycle);
    if (name == "MUTANT_COCYCLE") return cyclic_twisted(1, broken);
    throw Error(ErrorKind::UnknownFixture, "unknown pseudofunctor fixture " + name);
}

std::vector<PsfunctorFixture> psfunctor_fixtures() {
    return {
        {"ID_TERMINAL", "TERMINAL", true},
        {"ID_WALKING_ARROW_SQ", "WALKING_ARROW_SQ", true},
        {"ID_POS2", "POS2_QUIN", true},
        {"CONST_Q_POS2", "POS2_QUIN", true},
        {"COLLAPSE_POS2", "POS2_QUIN", true},
        {"ID_CYCLIC", "CYCLIC_QUIN", true},
        {"TWISTED_CYCLIC", "CYCLIC_QUIN", true},
        {"NEGATE_CYCLIC", "CYCLIC_QUIN", true},
        {"MUTANT_COCYCLE", "CYCLIC_QUIN", false},
        {"MUTANT_COMP_H", "CYCLIC_QUIN", false},
        {"MUTANT_COMP_V", "CYCLIC_QUIN", false},
        {"MUTANT_POS2_SQUARE", "POS2_QUIN", false},
    };
}

DoublePseudofunctor psfunctor_fixture(const std::string& name) {
    if (name == "ID_TERMINAL") return identity_psfunctor(std::make_shared<const DoubleCategory>(double_fixture("TERMINAL")));
    if (name == "ID_WALKING_ARROW_SQ") {
        return identity_psfunctor(std::make_shared<const DoubleCategory>(double_fixture("WALKING_ARROW_SQ")));
    }
    auto names = pseudofunctor2_fixture_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
        return quin_of_pseudofunctor(pseudofunctor2_fixture(name));
    }
    if (name == "MUTANT_COMP_H" || name == "MUTANT_COMP_V") {
        auto F = quin_of_pseudofunctor(pseudofunctor2_fixture("ID_CYCLIC"));
        const auto& E = *F.cod;
        if (name == "MUTANT_COMP_H") {
            auto e = E.h("e");
            auto s = E.h("s");
            F.comp_h.set(e, s, other_square(E, *F.comp_h.get(e, s)));
        } else {
            auto e = E.v("e");
            auto s = E.v("s");
            F.comp_v.set(e, s, other_square(E, *F.comp_v.get(e, s)));
        }
        return F;
    }
    if (name == "MUTANT_POS2_SQUARE") {
        auto F = quin_of_pseudofunctor(pseudofunctor2_fixture("ID_POS2"));
        const auto& E = *F.cod;
        // Send the identity square on const0P to the one on const1P.
        auto s = E.id_of_v(E.v("const0P"));
        F.sq_map[s.index()] = E.id_of_v(E.v("const1P"));
        return F;
    }
    throw Error(ErrorKind::UnknownFixture, "unknown pseudofunctor fixture " + name);
}

}  // namespace dblcat
