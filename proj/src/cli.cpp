#include "dblcat/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dblcat/companions.hpp"
#include "dblcat/conjunctions.hpp"
#include "dblcat/constructions.hpp"
#include "dblcat/dslio.hpp"
#include "dblcat/error.hpp"
#include "dblcat/fixtures.hpp"
#include "dblcat/pasting.hpp"
#include "dblcat/psfunctor.hpp"

namespace dblcat {

using json = nlohmann::json;

namespace {

struct Options {
    std::string input;
    std::string fixture;
    std::string arrow;
    bool json_only = false;
};

// Outcome of a command: the document for stdout, a one-line summary for
// stderr and the exit code.
struct Outcome {
    Document doc;
    std::string summary;
    int code = 0;
};

bool is_usage_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownKind:
        case ErrorKind::DanglingId:
        case ErrorKind::UnknownFixture:
        case ErrorKind::UnknownId: return true;
        default: return false;
    }
}

class Runner {
public:
    Runner(const Options& o, std::istream& in) : opt_(o), in_(in) {}

    Document input_document() const {
        if (!opt_.fixture.empty()) return fixture_document(opt_.fixture);
        if (opt_.input.empty()) throw Error(ErrorKind::ParseError, "no input file and no --fixture given");
        std::stringstream text;
        if (opt_.input == "-") {
            text << in_.rdbuf();
        } else {
            std::ifstream f(opt_.input);
            if (!f) throw Error(ErrorKind::ParseError, "cannot read " + opt_.input);
            text << f.rdbuf();
        }
        return parse(text.str());
    }

    DoubleCategory input_double() const {
        auto doc = input_document();
        if (doc.kind != DocKind::DoubleCategory) throw Error(ErrorKind::ParseError, "expected a double category");
        return to_double_category(doc);
    }

    static Document fixture_document(const std::string& name) {
        for (const auto& fx : psfunctor_fixtures()) {
            if (fx.name == name) return to_document(psfunctor_fixture(name), fx.domain, fx.domain);
        }
        switch (fixture_kind(name)) {
            case FixtureKind::DoubleCategory: return to_document(double_fixture(name));
            case FixtureKind::TwoCategory: return to_document(two_fixture(name));
            case FixtureKind::Category: return to_document(category_fixture(name));
        }
        throw Error(ErrorKind::UnknownFixture, name);
    }

    const Options& opt() const { return opt_; }

private:
    const Options& opt_;
    std::istream& in_;
};

Outcome report_outcome(const std::string& command, const ValidationReport& r, const json& result,
                       const std::string& summary) {
    return {report_document(command, r, result), summary, r.ok() ? 0 : 1};
}

std::string violation_summary(const ValidationReport& r) {
    if (r.ok()) return "no violations";
    std::string s = std::to_string(r.size()) + " violation(s) in";
    for (const auto& f : r.families()) s += " " + f;
    return s;
}

Outcome cmd_validate(const Runner& run) {
    auto doc = run.input_document();
    ValidationReport r;
    switch (doc.kind) {
        case DocKind::DoubleCategory: r = validate(to_double_category(doc)); break;
        case DocKind::TwoCategory: r = to_two_category(doc).validate(); break;
        case DocKind::Category: r = to_category(doc).validate(); break;
        default: throw Error(ErrorKind::ParseError, "validate expects a category document");
    }
    json result = {{"validated", std::string(to_string(doc.kind))}};
    return report_outcome("validate", r, result, "validate: " + violation_summary(r));
}

Outcome cmd_companions(const Runner& run) {
    auto d = run.input_double();
    auto f = d.v(run.opt().arrow);
    json pairs = json::array();
    auto found = find_companions(d, f);
    for (const auto& p : found) pairs.push_back(encode(d, p));
    return report_outcome("companions", {}, {{"arrow", d.name(f)}, {"pairs", pairs}},
                          "companions: " + std::to_string(found.size()) + " pair(s) for " + d.name(f));
}

Outcome cmd_conjoints(const Runner& run) {
    auto d = run.input_double();
    auto f = d.v(run.opt().arrow);
    json cs = json::array();
    auto found = find_conjoints(d, f);
    for (const auto& c : found) cs.push_back(encode(d, c));
    return report_outcome("conjoints", {}, {{"arrow", d.name(f)}, {"conjunctions", cs}},
                          "conjoints: " + std::to_string(found.size()) + " conjunction(s) for " + d.name(f));
}

Outcome cmd_mate(const Runner& run) {
    auto doc = run.input_document();
    auto req = to_mate_request(doc);
    const auto& d = *req.over;
    SquareId m;
    if (req.mode == MateRequest::Mode::Companion) {
        m = companion_mate(d, req.pf, req.pg, req.cell, req.direction, req.boundary);
    } else if (req.mode == MateRequest::Mode::Conjunction) {
        m = conj_mate(d, req.c1, req.c2, req.cell, req.direction, req.conj_boundary);
    } else {
        throw Error(ErrorKind::ParseError, "mate expects mode companion or conjunction");
    }
    const auto& b = d.boundary(m);
    json result = {{"mate", d.name(m)},
                   {"boundary",
                    {{"top", d.name(b.top)}, {"left", d.name(b.left)}, {"right", d.name(b.right)},
                     {"bottom", d.name(b.bottom)}}}};
    return report_outcome("mate", {}, result, "mate: " + d.name(req.cell) + " -> " + d.name(m));
}

Outcome cmd_mate_table(const Runner& run) {
    auto req = to_mate_request(run.input_document());
    if (req.mode != MateRequest::Mode::BaseChange) {
        throw Error(ErrorKind::ParseError, "mate-table expects mode base_change");
    }
    auto t = base_change_table(*req.over, req.setup, req.seed1, req.seed2);
    ValidationReport r;
    for (int c = 0; c < 2; ++c) {
        if (!t.linkage[c]) r.add("linkage", {"column " + std::to_string(c + 1)});
    }
    r.finish();
    return report_outcome("mate-table", r, encode(*req.over, t), "mate-table: " + violation_summary(r));
}

Outcome cmd_paste(const Runner& run) {
    auto g = to_grid(run.input_document());
    const auto& d = *g.over;
    ValidationReport r;
    PastingGrid grid;
    try {
        grid = PastingGrid::from_rows(g.rows);
    } catch (const Error& e) {
        r.add("shape", {}, e.what());
        return report_outcome("paste", r, json::object(), "paste: ragged grid");
    }
    r = check_grid(d, grid);
    if (!r.ok()) return report_outcome("paste", r, json::object(), "paste: " + violation_summary(r));
    auto s = paste(d, grid);
    const auto& b = d.boundary(s);
    json result = {{"square", d.name(s)},
                   {"boundary",
                    {{"top", d.name(b.top)}, {"left", d.name(b.left)}, {"right", d.name(b.right)},
                     {"bottom", d.name(b.bottom)}}}};
    return report_outcome("paste", r, result, "paste: " + d.name(s));
}

Outcome cmd_quin(const Runner& run) {
    auto doc = run.input_document();
    if (doc.kind != DocKind::TwoCategory) throw Error(ErrorKind::ParseError, "quin expects a 2-category");
    auto q = quin(to_two_category(doc));
    return {to_document(q), "quin: " + std::to_string(q.squares().size()) + " squares", 0};
}

Outcome cmd_sq(const Runner& run) {
    auto doc = run.input_document();
    if (doc.kind != DocKind::Category) throw Error(ErrorKind::ParseError, "sq expects a category");
    auto s = square_category(to_category(doc));
    return {to_document(s), "sq: " + std::to_string(s.squares().size()) + " squares", 0};
}

Outcome cmd_transpose(const Runner& run) {
    auto t = transpose(run.input_double());
    return {to_document(t), "transpose: " + std::to_string(t.squares().size()) + " squares", 0};
}

Outcome cmd_str(const Runner& run) {
    auto s = str_2category(run.input_double());
    auto r = s.cat.validate();
    r.merge(s.projection);
    r.finish();
    return {to_document(s.cat),
            "str: " + std::to_string(s.pairs.size()) + " companion pairs, " + violation_summary(r), r.ok() ? 0 : 1};
}

Outcome cmd_conj(const Runner& run) {
    auto c = conj_2category(run.input_double());
    auto r = c.cat.validate();
    r.merge(c.mates);
    r.finish();
    return {to_document(c.cat),
            "conj: " + std::to_string(c.conjunctions.size()) + " conjunctions, " + violation_summary(r),
            r.ok() ? 0 : 1};
}

Outcome cmd_check_psfunctor(const Runner& run) {
    auto doc = run.input_document();
    if (doc.kind != DocKind::Psfunctor) throw Error(ErrorKind::ParseError, "check-psfunctor expects a psfunctor");
    auto r = check_double_pseudofunctor(to_psfunctor(doc));
    return report_outcome("check-psfunctor", r, json::object(), "check-psfunctor: " + violation_summary(r));
}

Outcome cmd_fixture(const Runner& run) {
    const auto& name = run.opt().arrow;
    return {Runner::fixture_document(name), "fixture: " + name, 0};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite strict double categories: validation, companions, conjunctions, mates and pseudofunctors",
                 "dblcat"};
    app.require_subcommand(1);
    Options opt;
    std::function<Outcome(const Runner&)> action;

    auto add = [&](const std::string& name, const std::string& help, auto fn, const std::string& positional = {},
                   bool takes_input = true) {
        auto* sub = app.add_subcommand(name, help);
        if (!positional.empty()) sub->add_option(positional, opt.arrow, positional)->required();
        if (takes_input) {
            sub->add_option("input", opt.input, "input document, '-' for standard input");
            sub->add_option("--fixture", opt.fixture, "use a named fixture instead of an input file");
        }
        sub->add_flag("--json", opt.json_only, "machine output only");
        sub->callback([&action, fn] { action = fn; });
    };

    add("validate", "check every axiom family of a category, 2-category or double category", cmd_validate);
    add("companions", "list companion pairs of a vertical arrow", cmd_companions, "arrow");
    add("conjoints", "list conjunctions with a given left conjoint", cmd_conjoints, "arrow");
    add("mate", "compute a companion or conjunction mate from a mate request", cmd_mate);
    add("mate-table", "compute the base change mate table from a mate request", cmd_mate_table);
    add("paste", "evaluate a pasting grid", cmd_paste);
    add("quin", "quintet double category of a 2-category", cmd_quin);
    add("sq", "square double category of a category", cmd_sq);
    add("transpose", "transpose a double category", cmd_transpose);
    add("str", "2-category of companion pairs", cmd_str);
    add("conj", "2-category of conjunctions", cmd_conj);
    add("check-psfunctor", "check the coherence of a double pseudofunctor", cmd_check_psfunctor);
    add("fixture", "print a named fixture as a document", cmd_fixture, "name", false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "dblcat: " << e.what() << "\n";
        return 2;
    }

    Runner run(opt, in);
    try {
        auto outcome = action(run);
        out << serialize(outcome.doc);
        if (!opt.json_only) err << outcome.summary << "\n";
        return outcome.code;
    } catch (const Error& e) {
        if (is_usage_error(e.kind())) {
            err << "dblcat: " << e.what() << "\n";
            return 2;
        }
        ValidationReport r;
        r.add(std::string(to_string(e.kind())), {}, e.what());
        out << serialize(report_document(app.get_subcommands().front()->get_name(), r));
        if (!opt.json_only) err << "dblcat: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace dblcat
