#include "dblcat/pasting.hpp"

#include "dblcat/error.hpp"

namespace dblcat {

PastingGrid PastingGrid::row(std::vector<SquareId> cells) {
    auto n = cells.size();
    return {1, n, std::move(cells)};
}

PastingGrid PastingGrid::column(std::vector<SquareId> cells) {
    auto n = cells.size();
    return {n, 1, std::move(cells)};
}

PastingGrid PastingGrid::from_rows(const std::vector<std::vector<SquareId>>& rows) {
    PastingGrid g;
    g.rows = rows.size();
    g.cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != g.cols) throw Error(ErrorKind::MalformedGrid, "ragged grid rows");
        g.cells.insert(g.cells.end(), r.begin(), r.end());
    }
    return g;
}

ValidationReport check_grid(const DoubleCategory& d, const PastingGrid& g) {
    ValidationReport report;
    if (g.rows == 0 || g.cols == 0) {
        report.add("shape", {}, "empty grid");
        return report;
    }
    if (g.cells.size() != g.rows * g.cols) {
        report.add("shape", {}, "cell count does not match rows x cols");
        return report;
    }
    for (auto s : g.cells) {
        if (!d.squares().contains(s)) {
            report.add("shape", {std::to_string(s.value)}, "unknown square");
            return report;
        }
    }
    for (std::size_t r = 0; r < g.rows; ++r) {
        for (std::size_t c = 0; c < g.cols; ++c) {
            auto here = g.at(r, c);
            auto pos = std::to_string(r) + "," + std::to_string(c);
            if (c + 1 < g.cols && d.boundary(here).right != d.boundary(g.at(r, c + 1)).left) {
                report.add("horizontal", {pos, d.name(here), d.name(g.at(r, c + 1))});
            }
            if (r + 1 < g.rows && d.boundary(here).bottom != d.boundary(g.at(r + 1, c)).top) {
                report.add("vertical", {pos, d.name(here), d.name(g.at(r + 1, c))});
            }
        }
    }
    report.finish();
    return report;
}

SquareId paste(const DoubleCategory& d, const PastingGrid& g) {
    auto report = check_grid(d, g);
    if (!report.ok()) {
        const auto& v = report.violations().front();
        std::string where;
        for (const auto& w : v.witness) where += (where.empty() ? "" : " ") + w;
        throw Error(ErrorKind::MalformedGrid, v.family + " " + v.detail + (where.empty() ? "" : " at " + where));
    }
    std::optional<SquareId> total;
    for (std::size_t r = 0; r < g.rows; ++r) {
        SquareId acc = g.at(r, 0);
        for (std::size_t c = 1; c < g.cols; ++c) acc = d.hcomp(acc, g.at(r, c));
        total = total ? d.vcomp(*total, acc) : acc;
    }
    return *total;
}

SquareId paste(const DoubleCategory& d, const std::vector<std::vector<SquareId>>& rows) {
    return paste(d, PastingGrid::from_rows(rows));
}

}  // namespace dblcat
