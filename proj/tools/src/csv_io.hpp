#pragma once

#include <iosfwd>
#include <vector>

#include "spinwit/fitting.hpp"

namespace spinwit::cli {

// Input rows for the fit command: columns s,f with an optional third
// half_width column. The s column accepts either spin tokens ("3/2") or
// decimals ("1.5"). A leading header line is skipped.
struct FitTable {
    std::vector<FitPoint> points;
    std::vector<double> half_widths;  // empty if the column is absent

    bool has_half_widths() const { return !half_widths.empty(); }
};

FitTable read_fit_table(std::istream& is);

}  // namespace spinwit::cli
