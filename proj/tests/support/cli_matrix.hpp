#pragma once

// Scripted CLI invocations with their contractual exit codes, run in-process.

#include <sstream>
#include <string>
#include <vector>

#include "dblcat/cli.hpp"

#ifndef DBLCAT_DATA_DIR
#error "DBLCAT_DATA_DIR must point at the data directory"
#endif

namespace cli_matrix {

struct Invocation {
    std::vector<std::string> args;
    std::string stdin_text;
    int expected;
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

inline std::string data(const std::string& file) { return std::string(DBLCAT_DATA_DIR) + "/" + file; }

inline Run run(const Invocation& inv) {
    std::istringstream in(inv.stdin_text);
    std::ostringstream out, err;
    int code = dblcat::run_cli(inv.args, in, out, err);
    return {code, out.str(), err.str()};
}

inline const std::string ragged_grid =
    R"j({"kind": "grid", "schema_version": 1, "over": "TERMINAL", "rows": [["(id,id,id,id,id)", "(id,id,id,id,id)"], ["(id,id,id,id,id)"]]})j";
inline const std::string seam_grid =
    R"j({"kind": "grid", "schema_version": 1, "over": "POS2_QUIN",
        "rows": [["(id_P,id_P,id_P,id_P,id_P<=id_P)", "(id_Q,id_Q,id_Q,id_Q,id_Q<=id_Q)"]]})j";
inline const std::string dangling_grid =
    R"j({"kind": "grid", "schema_version": 1, "over": "POS2_QUIN", "rows": [["no_such_square"]]})j";

inline std::vector<Invocation> invocations() {
    return {
        {{"validate", "--fixture", "TERMINAL"}, "", 0},
        {{"validate", "--fixture", "POS2_QUIN", "--json"}, "", 0},
        {{"validate", "--fixture", "MUTANT_INTERCHANGE"}, "", 1},
        {{"validate", "--fixture", "MUTANT_CATEGORY"}, "", 1},
        {{"validate", "--fixture", "NO_SUCH_FIXTURE"}, "", 2},
        {{"validate", data("missing.json")}, "", 2},
        {{}, "", 2},
        {{"frobnicate"}, "", 2},
        {{"validate", "-"}, "{\"kind\": ", 2},
        {{"validate", "-"}, R"j({"kind": "triple_category", "schema_version": 1})j", 2},
        {{"paste", "-"}, dangling_grid, 2},
        {{"paste", "-"}, ragged_grid, 1},
        {{"paste", "-"}, seam_grid, 1},
        {{"paste", data("grid_pos2.json")}, "", 0},
        {{"companions", "const0P", "--fixture", "POS2_QUIN"}, "", 0},
        {{"companions", "no_such_arrow", "--fixture", "POS2_QUIN"}, "", 2},
        {{"conjoints", "const0", "--fixture", "POS2_QUIN"}, "", 0},
        {{"conjoints", "u", "--fixture", "WALKING_ARROW_SQ"}, "", 0},
        {{"mate", data("companion_mate.json")}, "", 0},
        {{"mate", data("conj_mate.json")}, "", 0},
        {{"mate-table", data("base_change.json")}, "", 0},
        {{"mate-table", data("conj_mate.json")}, "", 2},
        {{"quin", "--fixture", "POS2"}, "", 0},
        {{"sq", "--fixture", "WALKING_ARROW"}, "", 0},
        {{"transpose", "--fixture", "CYCLIC_QUIN"}, "", 0},
        {{"str", "--fixture", "POS2_QUIN"}, "", 0},
        {{"conj", "--fixture", "CYCLIC_QUIN"}, "", 0},
        {{"check-psfunctor", data("twisted_cyclic.json")}, "", 0},
        {{"check-psfunctor", "--fixture", "MUTANT_COMP_H"}, "", 1},
        {{"fixture", "MONOID"}, "", 0},
        {{"fixture"}, "", 2},
    };
}

}  // namespace cli_matrix
