#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinwit/multiplicity.hpp"
#include "spinwit/spin.hpp"

namespace spinwit {

// Every product of N local spin-s states has <J^2> >= N s, so a total-spin
// level with j (j + 1) < N s holds witnessed-entangled states only. Such
// levels are decidable: membership alone settles the entanglement question.
double separable_bound(TwiceSpin s, long n);  // N * s, the threshold on j(j+1)

bool is_decidable(TwiceSpin s, long n, TwiceSpin j);

// All decidable j reachable at (s, n), ascending.
std::vector<TwiceSpin> decidable_j_set(TwiceSpin s, long n);

// Fraction of Hilbert-space dimension lying in decidable levels:
// f_s(N) = sum over decidable j of d_s(N, j) / (2s+1)^N.
double fraction(TwiceSpin s, long n, Backend backend = Backend::Normalized,
                EngineLimits limits = {});

struct FractionSample {
    long n = 0;
    double f = 0.0;
};

struct FractionSeries {
    TwiceSpin s;
    long n_min = 0;
    long n_max = 0;
    std::vector<FractionSample> samples;
};

FractionSeries fraction_series(TwiceSpin s, long n_min, long n_max,
                               Backend backend = Backend::Normalized,
                               EngineLimits limits = {});

// Bracket for the large-N limit of f. The fraction jumps upward each time
// the threshold admits a new level; at the last such jump below n_max the
// pre- and post-jump values bracket the limit. Scanning respects parity:
// even N only for half-integer s (odd N interleaves a second curve),
// all consecutive N for integer s.
struct AsymptoteEstimate {
    TwiceSpin s;
    long n_lo = 0, n_hi = 0;   // the bracketing pair
    double f_lo = 0.0, f_hi = 0.0;
    double center = 0.0;       // (f_lo + f_hi) / 2
    double half_width = 0.0;   // (f_hi - f_lo) / 2
};

AsymptoteEstimate estimate_f_infinity(TwiceSpin s, long n_max);

// CSV with header "N,f", one sample per row, 12 significant digits.
void write_series_csv(const FractionSeries& series, std::ostream& os);

// Writes path directly for integer s; for half-integer s splits the series
// into even and odd subsequences, written to path with "_even"/"_odd"
// inserted before the extension. Returns the file names written.
std::vector<std::string> write_series_csv_files(const FractionSeries& series,
                                                const std::string& path);

}  // namespace spinwit
