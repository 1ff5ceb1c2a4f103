#pragma once

#include <cstddef>
#include <vector>

#include "dblcat/double_category.hpp"
#include "dblcat/report.hpp"

namespace dblcat {

/// Rectangular pasting diagram, cells stored row-major.
struct PastingGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SquareId> cells;

    SquareId at(std::size_t r, std::size_t c) const { return cells.at(r * cols + c); }

    static PastingGrid row(std::vector<SquareId> cells);
    static PastingGrid column(std::vector<SquareId> cells);
    static PastingGrid from_rows(const std::vector<std::vector<SquareId>>& rows);
};

/// Seam violations ("horizontal" / "vertical" families) and shape problems.
ValidationReport check_grid(const DoubleCategory& d, const PastingGrid& g);

/// Each row folded with hcomp, then the column of results folded with vcomp.
/// Throws MalformedGrid naming the first bad seam.
SquareId paste(const DoubleCategory& d, const PastingGrid& g);

/// Shorthand for paste(d, PastingGrid::from_rows(rows)).
SquareId paste(const DoubleCategory& d, const std::vector<std::vector<SquareId>>& rows);

}  // namespace dblcat
