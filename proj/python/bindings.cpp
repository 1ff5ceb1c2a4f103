#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dblcat/cli.hpp"
#include "dblcat/companions.hpp"
#include "dblcat/conjunctions.hpp"
#include "dblcat/constructions.hpp"
#include "dblcat/dslio.hpp"
#include "dblcat/error.hpp"
#include "dblcat/fixtures.hpp"
#include "dblcat/pasting.hpp"
#include "dblcat/psfunctor.hpp"

namespace py = pybind11;
using namespace dblcat;

namespace {

// Documents cross the boundary as canonical JSON text; the Python package
// decodes them.
std::string text(const Document& doc) { return serialize(doc); }

py::list violations(const ValidationReport& r) {
    py::list out;
    for (const auto& v : r.violations()) {
        py::dict d;
        d["family"] = v.family;
        d["witness"] = v.witness;
        d["detail"] = v.detail;
        out.append(d);
    }
    return out;
}

py::dict boundary(const DoubleCategory& d, SquareId s) {
    const auto& b = d.boundary(s);
    py::dict out;
    out["top"] = d.name(b.top);
    out["left"] = d.name(b.left);
    out["right"] = d.name(b.right);
    out["bottom"] = d.name(b.bottom);
    return out;
}

std::vector<std::string> names(const auto& table) {
    std::vector<std::string> out;
    for (auto id : table.ids()) out.push_back(table.name(id));
    return out;
}

DoubleCategory load_double(const std::string& source) {
    if (!source.empty() && source.front() == '{') return to_double_category(parse(source));
    return double_fixture(source);
}

TwoCategory load_two(const std::string& source) {
    if (!source.empty() && source.front() == '{') return to_two_category(parse(source));
    return two_fixture(source);
}

}  // namespace

PYBIND11_MODULE(_dblcat, m) {
    m.doc() = "Finite strict double categories";

    // The message starts with the error kind, e.g. "NotComposable: ...".
    py::register_exception<Error>(m, "DblcatError", PyExc_ValueError);

    m.def("fixture_names", &fixture_names);
    m.def("fixture", [](const std::string& name) {
        switch (fixture_kind(name)) {
            case FixtureKind::DoubleCategory: return text(to_document(double_fixture(name)));
            case FixtureKind::TwoCategory: return text(to_document(two_fixture(name)));
            case FixtureKind::Category: return text(to_document(category_fixture(name)));
        }
        return std::string();
    });
    m.def("canonical", [](const std::string& s) { return serialize(parse(s)); }, "parse and re-serialize a document");

    py::class_<DoubleCategory>(m, "DoubleCategory")
        .def(py::init(&load_double), py::arg("source"), "a fixture name or a double category document")
        .def_property_readonly("objects", [](const DoubleCategory& d) { return names(d.objects()); })
        .def_property_readonly("v_arrows", [](const DoubleCategory& d) { return names(d.v_arrows()); })
        .def_property_readonly("h_arrows", [](const DoubleCategory& d) { return names(d.h_arrows()); })
        .def_property_readonly("squares", [](const DoubleCategory& d) { return names(d.squares()); })
        .def("boundary", [](const DoubleCategory& d, const std::string& s) { return boundary(d, d.sq(s)); })
        .def("compose_v",
             [](const DoubleCategory& d, const std::string& g, const std::string& f) {
                 return d.name(d.compose_v(d.v(g), d.v(f)));
             })
        .def("compose_h",
             [](const DoubleCategory& d, const std::string& g, const std::string& f) {
                 return d.name(d.compose_h(d.h(g), d.h(f)));
             })
        .def("hcomp",
             [](const DoubleCategory& d, const std::string& a, const std::string& b) {
                 return d.name(d.hcomp(d.sq(a), d.sq(b)));
             })
        .def("vcomp",
             [](const DoubleCategory& d, const std::string& a, const std::string& b) {
                 return d.name(d.vcomp(d.sq(a), d.sq(b)));
             })
        .def("validate", [](const DoubleCategory& d) { return violations(validate(d)); })
        .def("paste",
             [](const DoubleCategory& d, const std::vector<std::vector<std::string>>& rows) {
                 std::vector<std::vector<SquareId>> ids;
                 for (const auto& row : rows) {
                     auto& r = ids.emplace_back();
                     for (const auto& s : row) r.push_back(d.sq(s));
                 }
                 return d.name(paste(d, ids));
             })
        .def("companions",
             [](const DoubleCategory& d, const std::string& f) {
                 std::vector<std::string> out;
                 for (const auto& p : find_companions(d, d.v(f))) out.push_back(encode(d, p).dump());
                 return out;
             })
        .def("conjoints",
             [](const DoubleCategory& d, const std::string& f) {
                 std::vector<std::string> out;
                 for (const auto& c : find_conjoints(d, d.v(f))) out.push_back(encode(d, c).dump());
                 return out;
             })
        .def("transpose", [](const DoubleCategory& d) { return transpose(d); })
        .def("str_2category", [](const DoubleCategory& d) { return text(to_document(str_2category(d).cat)); })
        .def("conj_2category", [](const DoubleCategory& d) { return text(to_document(conj_2category(d).cat)); })
        .def("to_json", [](const DoubleCategory& d) { return text(to_document(d)); });

    m.def("quin", [](const std::string& source) { return quin(load_two(source)); },
          "quintet double category of a 2-category fixture name or document");
    m.def("check_psfunctor", [](const std::string& source) {
        auto f = !source.empty() && source.front() == '{' ? to_psfunctor(parse(source)) : psfunctor_fixture(source);
        return violations(check_double_pseudofunctor(f));
    });
    m.def("psfunctor_fixtures", [] {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& fx : psfunctor_fixtures()) out.emplace_back(fx.name, fx.coherent);
        return out;
    });
    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), py::arg("input") = "");
}
