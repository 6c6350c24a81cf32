#include "spinwit/decidability.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "spinwit/bignum.hpp"
#include "spinwit/errors.hpp"

namespace spinwit {

namespace {

void check_n(long n) {
    if (n < 0) throw std::invalid_argument("decidability: N must be non-negative");
}

// j(j+1) < N s in integers: with t = 2j and sigma = 2s this is
// t (t + 2) < 2 N sigma.
bool decidable_t(int t, long n, int sigma) {
    long long lhs = static_cast<long long>(t) * (t + 2);
    return lhs < 2LL * n * sigma;
}

// Largest slot index of `row` whose level is decidable, or -1.
template <class Row>
long decidable_prefix_end(const Row& row, long n, int sigma) {
    long last = -1;
    for (std::size_t i = 0; i < row.values.size(); ++i) {
        int t = row.twice_j_min + 2 * static_cast<int>(i);
        if (!decidable_t(t, n, sigma)) break;
        last = static_cast<long>(i);
    }
    return last;
}

double fraction_of_exact_row(const ExactRow& row) {
    int sigma = row.s.twice();
    long end = decidable_prefix_end(row, row.n, sigma);
    mpz_class num = 0;
    for (long i = 0; i <= end; ++i) {
        int t = row.twice_j_min + 2 * static_cast<int>(i);
        num += (t + 1) * row.values[i];
    }
    return rational_to_double(num, pow_ui(sigma + 1, static_cast<unsigned long>(row.n)));
}

double fraction_of_normalized_row(const NormalizedRow& row) {
    int sigma = row.s.twice();
    long end = decidable_prefix_end(row, row.n, sigma);
    double acc = 0.0;
    for (long i = 0; i <= end; ++i) {
        int t = row.twice_j_min + 2 * static_cast<int>(i);
        acc += (t + 1) * row.values[i];
    }
    return acc;
}

}  // namespace

double separable_bound(TwiceSpin s, long n) {
    check_n(n);
    return n * s.value();
}

bool is_decidable(TwiceSpin s, long n, TwiceSpin j) {
    check_n(n);
    return decidable_t(j.twice(), n, s.twice());
}

std::vector<TwiceSpin> decidable_j_set(TwiceSpin s, long n) {
    check_n(n);
    int sigma = s.twice();
    std::vector<TwiceSpin> out;
    if (n == 0) {
        // the empty product couples to j = 0 only, which is never decidable
        return out;
    }
    if (n == 1) {
        if (decidable_t(sigma, 1, sigma)) out.push_back(s);
        return out;
    }
    int t0 = static_cast<int>((n * sigma) % 2);
    for (long t = t0; t <= n * static_cast<long>(sigma); t += 2) {
        if (!decidable_t(static_cast<int>(t), n, sigma)) break;
        out.push_back(TwiceSpin(static_cast<int>(t)));
    }
    return out;
}

double fraction(TwiceSpin s, long n, Backend backend, EngineLimits limits) {
    check_n(n);
    if (backend == Backend::Exact)
        return fraction_of_exact_row(mult_row_exact(s, n, limits));
    return fraction_of_normalized_row(mult_row_normalized(s, n));
}

FractionSeries fraction_series(TwiceSpin s, long n_min, long n_max,
                               Backend backend, EngineLimits limits) {
    if (n_min < 0 || n_max < n_min)
        throw std::invalid_argument("fraction_series: need 0 <= N_min <= N_max");
    FractionSeries series;
    series.s = s;
    series.n_min = n_min;
    series.n_max = n_max;
    series.samples.reserve(n_max - n_min + 1);
    if (backend == Backend::Exact) {
        ExactRowStream stream(s, limits);
        for (long n = 0; n <= n_max; ++n) {
            if (n >= n_min)
                series.samples.push_back({n, fraction_of_exact_row(stream.row())});
            if (n < n_max) stream.advance();
        }
    } else {
        NormalizedRowStream stream(s);
        for (long n = 0; n <= n_max; ++n) {
            if (n >= n_min)
                series.samples.push_back({n, fraction_of_normalized_row(stream.row())});
            if (n < n_max) stream.advance();
        }
    }
    return series;
}

AsymptoteEstimate estimate_f_infinity(TwiceSpin s, long n_max) {
    if (n_max < 1) throw std::invalid_argument("estimate_f_infinity: N_max must be >= 1");
    const double jump_eps = 1e-12;
    // Half-integer s carries two interleaved curves; follow the even one.
    bool even_only = !s.is_integer();

    NormalizedRowStream stream(s);
    bool have_prev = false;
    long prev_n = 0;
    double prev_f = 0.0;
    AsymptoteEstimate best;
    bool found = false;

    for (long n = 1; n <= n_max; ++n) {
        stream.advance();
        if (even_only && n % 2 != 0) continue;
        double f = fraction_of_normalized_row(stream.row());
        if (have_prev && f > prev_f + jump_eps) {
            best.s = s;
            best.n_lo = prev_n;
            best.n_hi = n;
            best.f_lo = prev_f;
            best.f_hi = f;
            found = true;
        }
        prev_n = n;
        prev_f = f;
        have_prev = true;
    }
    if (!found)
        throw NoJumpError("no upward jump of f below N_max = " + std::to_string(n_max) +
                          " for s = " + to_string(s));
    best.center = 0.5 * (best.f_lo + best.f_hi);
    best.half_width = 0.5 * (best.f_hi - best.f_lo);
    return best;
}

void write_series_csv(const FractionSeries& series, std::ostream& os) {
    os << "N,f\n";
    char buf[64];
    for (const FractionSample& p : series.samples) {
        std::snprintf(buf, sizeof buf, "%ld,%.12g\n", p.n, p.f);
        os << buf;
    }
}

std::vector<std::string> write_series_csv_files(const FractionSeries& series,
                                                const std::string& path) {
    auto write_one = [](const FractionSeries& s, const std::string& file) {
        std::ofstream os(file);
        if (!os) throw std::runtime_error("cannot open " + file + " for writing");
        write_series_csv(s, os);
    };
    if (series.s.is_integer()) {
        write_one(series, path);
        return {path};
    }
    std::size_t dot = path.rfind('.');
    std::size_t slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        dot = path.size();
    std::string stem = path.substr(0, dot), ext = path.substr(dot);
    FractionSeries even = series, odd = series;
    even.samples.clear();
    odd.samples.clear();
    for (const FractionSample& p : series.samples)
        (p.n % 2 == 0 ? even : odd).samples.push_back(p);
    std::vector<std::string> names{stem + "_even" + ext, stem + "_odd" + ext};
    write_one(even, names[0]);
    write_one(odd, names[1]);
    return names;
}

}  // namespace spinwit
