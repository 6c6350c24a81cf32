#pragma once

#include <gmpxx.h>

#include <vector>

#include "spinwit/spin.hpp"

namespace spinwit {

struct PathLimits {
    long long node_budget = 100'000'000;  // DFS nodes visited before giving up
};

// One admissible walk: heights y_0 = 0, y_1, ..., y_n recorded as
// twice-values. Every step must couple, i.e. tp_coeff(y_i, s, y_{i+1}) = 1,
// and heights never go negative.
struct LatticePath {
    TwiceSpin s;
    std::vector<int> twice_heights;

    bool valid() const;
};

// Number of admissible walks of length n ending at height j, counted by
// exhaustive depth-first search with no memoization. Deliberately naive:
// the point is independence from the row recursion, not speed.
mpz_class count_paths(TwiceSpin s, long n, TwiceSpin j, PathLimits limits = {});

// The walks themselves, in the order the search visits them (largest step
// first at every branch, so lexicographically decreasing height sequences).
// Throws CapExceededError if more than max_paths walks exist.
std::vector<LatticePath> list_paths(TwiceSpin s, long n, TwiceSpin j,
                                    long long max_paths, PathLimits limits = {});

}  // namespace spinwit
