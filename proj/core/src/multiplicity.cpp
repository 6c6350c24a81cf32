#include "spinwit/multiplicity.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

void check_n(long n) {
    if (n < 0) throw std::invalid_argument("multiplicity: N must be non-negative");
}

// Window of previous-row slots feeding target twice_j = t in row n:
// sources u with |t - sigma| <= u <= min(t + sigma, (n-1)*sigma), same
// parity as the previous row. Returns [lo, hi] slot indices, empty if hi < lo.
struct Window {
    long lo, hi;
};

Window source_window(int t, int sigma, long prev_n, int prev_t0) {
    long u_lo = std::abs(t - sigma);
    long u_hi = std::min<long>(t + sigma, prev_n * sigma);
    return Window{(u_lo - prev_t0) / 2, (u_hi - prev_t0) / 2};
}

}  // namespace

ExactRowStream::ExactRowStream(TwiceSpin s, EngineLimits limits) : limits_(limits) {
    row_.s = s;
    row_.n = 0;
    row_.twice_j_min = 0;
    row_.values = {mpz_class(1)};
}

void ExactRowStream::advance() {
    long n = row_.n + 1;
    if (n > limits_.exact_cap)
        throw CapExceededError("exact backend capped at N = " +
                               std::to_string(limits_.exact_cap));
    int sigma = row_.s.twice();
    int prev_t0 = row_.twice_j_min;
    int t0 = static_cast<int>((n * sigma) % 2);
    long width = (n * sigma - t0) / 2 + 1;

    prefix_.resize(row_.values.size());
    if (!row_.values.empty()) {
        prefix_[0] = row_.values[0];
        for (std::size_t i = 1; i < row_.values.size(); ++i)
            prefix_[i] = prefix_[i - 1] + row_.values[i];
    }

    next_.resize(width);
    long prev_size = static_cast<long>(row_.values.size());
    for (long i = 0; i < width; ++i) {
        int t = t0 + 2 * static_cast<int>(i);
        Window w = source_window(t, sigma, row_.n, prev_t0);
        w.hi = std::min(w.hi, prev_size - 1);
        if (w.hi < w.lo) {
            next_[i] = 0;
        } else if (w.lo == 0) {
            next_[i] = prefix_[w.hi];
        } else {
            next_[i] = prefix_[w.hi] - prefix_[w.lo - 1];
        }
    }

    row_.n = n;
    row_.twice_j_min = t0;
    row_.values.swap(next_);
}

NormalizedRowStream::NormalizedRowStream(TwiceSpin s) {
    row_.s = s;
    row_.n = 0;
    row_.twice_j_min = 0;
    row_.values = {1.0};
}

void NormalizedRowStream::advance() {
    long n = row_.n + 1;
    int sigma = row_.s.twice();
    int prev_t0 = row_.twice_j_min;
    int t0 = static_cast<int>((n * sigma) % 2);
    long width = (n * sigma - t0) / 2 + 1;
    double dim = sigma + 1;

    next_.assign(width, 0.0);
    long prev_size = static_cast<long>(row_.values.size());
    for (long i = 0; i < width; ++i) {
        int t = t0 + 2 * static_cast<int>(i);
        Window w = source_window(t, sigma, row_.n, prev_t0);
        w.hi = std::min(w.hi, prev_size - 1);
        double acc = 0.0;
        for (long k = w.lo; k <= w.hi; ++k) acc += row_.values[k];
        next_[i] = acc / dim;
    }

    row_.n = n;
    row_.twice_j_min = t0;
    row_.values.swap(next_);
}

ExactRow mult_row_exact(TwiceSpin s, long n, EngineLimits limits) {
    check_n(n);
    ExactRowStream stream(s, limits);
    for (long i = 0; i < n; ++i) stream.advance();
    return stream.row();
}

NormalizedRow mult_row_normalized(TwiceSpin s, long n) {
    check_n(n);
    NormalizedRowStream stream(s);
    for (long i = 0; i < n; ++i) stream.advance();
    return stream.row();
}

mpz_class multiplicity(TwiceSpin s, long n, TwiceSpin j, EngineLimits limits) {
    return mult_row_exact(s, n, limits).at_twice(j.twice());
}

mpz_class degeneracy(TwiceSpin s, long n, TwiceSpin j, EngineLimits limits) {
    return (j.twice() + 1) * multiplicity(s, n, j, limits);
}

double degeneracy_normalized(TwiceSpin s, long n, TwiceSpin j) {
    return (j.twice() + 1) * mult_row_normalized(s, n).at_twice(j.twice());
}

DegeneracyTable degeneracy_table(TwiceSpin s, long n_max, EngineLimits limits) {
    check_n(n_max);
    DegeneracyTable table;
    table.s = s;
    table.provenance = Provenance::DP;
    ExactRowStream stream(s, limits);
    for (long n = 0; n <= n_max; ++n) {
        const ExactRow& row = stream.row();
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            if (row.values[i] == 0) continue;
            int t = row.twice_j_min + 2 * static_cast<int>(i);
            table.entries[{n, t}] = (t + 1) * row.values[i];
        }
        if (n < n_max) stream.advance();
    }
    return table;
}

}  // namespace spinwit
