// Release gate: one pass/fail line per criterion, nonzero exit if any fail.
// Every check compares against frozen reference values or an independent
// in-repo oracle; budgets are wall-clock and count toward the verdict.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "spinwit/bignum.hpp"
#include "spinwit/closed_forms.hpp"
#include "spinwit/decidability.hpp"
#include "spinwit/errors.hpp"
#include "spinwit/fitting.hpp"
#include "spinwit/lattice_paths.hpp"
#include "spinwit/multiplicity.hpp"
#include "spinwit/sim.hpp"
#include "spinwit/spin.hpp"

using namespace spinwit;

namespace {

std::string seq_string(TwiceSpin s, TwiceSpin j, long n_max) {
    std::ostringstream ss;
    for (long n = 1; n <= n_max; ++n) {
        if (n > 1) ss << ", ";
        ss << degeneracy(s, n, j).get_str();
    }
    return ss.str();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

// ---- criterion bodies: return "" on pass, a reason string on failure ----

std::string c1_reference_sequences() {
    struct Row {
        TwiceSpin s;
        long n_max;
        const char* expected;
    };
    const Row rows[] = {
        {TwiceSpin(3), 18,
         "0, 1, 0, 4, 0, 34, 0, 364, 0, 4269, 0, 52844, 0, 679172, 0, 8976188, "
         "0, 121223668"},
        {TwiceSpin(4), 13,
         "0, 1, 1, 5, 16, 65, 260, 1085, 4600, 19845, 86725, 383251, 1709566"},
        {TwiceSpin(6), 13,
         "0, 1, 1, 7, 31, 175, 981, 5719, 33922, 204687, 1251460, 7737807, "
         "48297536"},
    };
    for (const Row& row : rows) {
        std::string got = seq_string(row.s, TwiceSpin(0), row.n_max);
        if (got != row.expected)
            return "s=" + to_string(row.s) + " sequence mismatch: got " + got;
    }
    return "";
}

std::string c2_six_site_values() {
    if (multiplicity(TwiceSpin(1), 6, TwiceSpin(0)) != 5) return "m(6,0) != 5 at s=1/2";
    if (multiplicity(TwiceSpin(1), 6, TwiceSpin(2)) != 9) return "m(6,1) != 9 at s=1/2";
    if (multiplicity(TwiceSpin(2), 6, TwiceSpin(0)) != 15) return "m(6,0) != 15 at s=1";
    auto half = list_paths(TwiceSpin(1), 6, TwiceSpin(0), 100);
    if (half.size() != 5)
        return "s=1/2 walk list has " + std::to_string(half.size()) + " entries, want 5";
    auto one = list_paths(TwiceSpin(2), 6, TwiceSpin(0), 100);
    if (one.size() != 15)
        return "s=1 walk list has " + std::to_string(one.size()) + " entries, want 15";
    for (const auto& p : half)
        if (!p.valid()) return "invalid s=1/2 walk in the list";
    for (const auto& p : one)
        if (!p.valid()) return "invalid s=1 walk in the list";
    return "";
}

std::string c3_closed_forms() {
    const TwiceSpin half(1);
    ExactRowStream stream(half);
    for (long n = 1; n <= 60; ++n) {
        stream.advance();
        if (n % 2 != 0) continue;
        const ExactRow& row = stream.row();
        for (int t = row.twice_j_min; t <= row.twice_j_max(); t += 2) {
            const TwiceSpin j(t);
            const mpz_class& m = row.at_twice(t);
            mpz_class d = mpz_class(t + 1) * m;
            if (d != d_half_closed(n, j))
                return "closed-form degeneracy differs at N=" + std::to_string(n) +
                       ", j=" + to_string(j);
            if (m != catalan_triangle(n / 2 + t / 2, n / 2 - t / 2))
                return "ballot-number oracle differs at N=" + std::to_string(n) +
                       ", j=" + to_string(j);
            if (m != mult_via_magnetization(half, n, j))
                return "magnetization oracle differs at N=" + std::to_string(n) +
                       ", j=" + to_string(j);
        }
    }
    return "";
}

std::string c4_dimension_conservation() {
    for (int sigma = 1; sigma <= 6; ++sigma) {
        const TwiceSpin s(sigma);
        ExactRowStream stream(s);
        for (long n = 1; n <= 40; ++n) {
            stream.advance();
            const ExactRow& row = stream.row();
            mpz_class total = 0;
            for (int t = row.twice_j_min; t <= row.twice_j_max(); t += 2)
                total += mpz_class(t + 1) * row.at_twice(t);
            if (total != pow_ui(sigma + 1, static_cast<unsigned long>(n)))
                return "dimension sum off at s=" + to_string(s) +
                       ", N=" + std::to_string(n);
        }
    }
    return "";
}

std::string c5_fraction_spot_values() {
    FractionSeries series =
        fraction_series(TwiceSpin(1), 9940, 9942, Backend::Normalized);
    double f0 = series.samples.front().f;
    double f1 = series.samples.back().f;
    if (std::abs(f0 - 0.42169) > 5e-6)
        return "f(9940) = " + fmt(f0) + ", want 0.42169 within 5e-6";
    if (std::abs(f1 - 0.43338) > 5e-6)
        return "f(9942) = " + fmt(f1) + ", want 0.43338 within 5e-6";
    return "";
}

struct BracketRef {
    int sigma;
    double center;
    double half_width;  // two significant figures
};

const BracketRef kBrackets[] = {
    {1, 0.4275, 0.0058},   {2, 0.3177, 0.0035},   {3, 0.2470, 0.0023},
    {4, 0.1987, 0.0017},   {5, 0.1642, 0.0013},   {6, 0.1386, 0.0010},
    {7, 0.11897, 0.00082}, {8, 0.10356, 0.00068}, {9, 0.09119, 0.00056},
    {10, 0.08110, 0.00049},
};

std::string c6_limit_brackets() {
    std::vector<std::future<AsymptoteEstimate>> jobs;
    for (const BracketRef& ref : kBrackets)
        jobs.push_back(std::async(std::launch::async, [&ref] {
            return estimate_f_infinity(TwiceSpin(ref.sigma), 10000);
        }));
    std::string problems;
    for (size_t i = 0; i < jobs.size(); ++i) {
        const BracketRef& ref = kBrackets[i];
        AsymptoteEstimate est = jobs[i].get();
        if (std::abs(est.center - ref.center) > ref.half_width)
            problems += " [s=" + to_string(TwiceSpin(ref.sigma)) + " center " +
                        fmt(est.center) + " vs " + fmt(ref.center) + "]";
        // match to the two quoted significant figures: within one unit in the last
        double unit = std::pow(10.0, std::floor(std::log10(ref.half_width)) - 1);
        if (std::abs(est.half_width - ref.half_width) > unit)
            problems += " [s=" + to_string(TwiceSpin(ref.sigma)) + " half-width " +
                        fmt(est.half_width) + " vs " + fmt(ref.half_width) + "]";
    }
    return problems;
}

std::string c7_fit_parameters() {
    std::vector<FitPoint> points;
    for (const BracketRef& ref : kBrackets)
        points.push_back({ref.sigma / 2.0, ref.center, 1.0});
    FitParams result = fit(points, FitOptions{});
    const double want_a = 1.36273, want_b = 1.26448, want_c = 1.7738;
    std::string problems;
    if (std::abs(result.a() - want_a) > 0.01 * want_a)
        problems += " [a = " + fmt(result.a()) + " vs " + fmt(want_a) + "]";
    if (std::abs(result.b() - want_b) > 0.01 * want_b)
        problems += " [b = " + fmt(result.b()) + " vs " + fmt(want_b) + "]";
    if (std::abs(result.c() - want_c) > 0.01 * want_c)
        problems += " [c = " + fmt(result.c()) + " vs " + fmt(want_c) + "]";
    if (result.ssr() > 1e-5) problems += " [ssr = " + fmt(result.ssr()) + " > 1e-5]";
    return problems;
}

std::string c8_spectrum_vs_recursion() {
    struct Config {
        int sigma;
        int n_max;
    };
    const Config configs[] = {{1, 8}, {2, 5}, {3, 4}, {4, 4}};
    for (const Config& cfg : configs) {
        const TwiceSpin s(cfg.sigma);
        for (int n = 1; n <= cfg.n_max; ++n) {
            std::map<int, long long> counts;
            try {
                counts = spectrum_degeneracies(s, n);
            } catch (const ClusteringError& e) {
                return "clustering failed at s=" + to_string(s) +
                       ", N=" + std::to_string(n) + ": " + e.what();
            }
            ExactRow row = mult_row_exact(s, n);
            for (int t = row.twice_j_min; t <= row.twice_j_max(); t += 2) {
                mpz_class d = mpz_class(t + 1) * row.at_twice(t);
                long long seen = counts.count(t) ? counts.at(t) : 0;
                if (d != static_cast<long>(seen))
                    return "degeneracy mismatch at s=" + to_string(s) +
                           ", N=" + std::to_string(n) + ", j=" + to_string(TwiceSpin(t));
            }
            for (const auto& [t, seen] : counts) {
                (void)seen;
                if (!row.in_range(t) || row.at_twice(t) == 0)
                    return "spectrum has a level the recursion lacks at s=" +
                           to_string(s) + ", N=" + std::to_string(n);
            }
        }
    }
    return "";
}

std::string c9_product_state_floor() {
    struct Job {
        int sigma;
        int n;
    };
    std::vector<Job> grid;
    for (int sigma : {1, 2, 3})
        for (int n : {2, 4, 6}) grid.push_back({sigma, n});

    std::vector<std::future<std::string>> jobs;
    for (const Job& job : grid)
        jobs.push_back(std::async(std::launch::async, [job]() -> std::string {
            const TwiceSpin s(job.sigma);
            McBoundResult mc = separable_bound_mc(s, job.n, 100000, 20240501);
            if (mc.min_value < mc.bound - 1e-9)
                return " [s=" + to_string(s) + " N=" + std::to_string(job.n) +
                       " min " + fmt(mc.min_value) + " < bound " + fmt(mc.bound) + "]";
            for (int k = 0; k < 10; ++k) {
                ProductState state = random_product_state(s, job.n, 777 + k);
                double closed = product_state_witness_value(state);
                double dense = witness_expectation(s, job.n, full_vector(state));
                if (std::abs(closed - dense) > 1e-10)
                    return " [s=" + to_string(s) + " N=" + std::to_string(job.n) +
                           " closed " + fmt(closed) + " vs dense " + fmt(dense) + "]";
            }
            return "";
        }));
    std::string problems;
    for (auto& jf : jobs) problems += jf.get();
    return problems;
}

std::string c10_commutator_identity() {
    std::string problems;
    for (int n : {3, 4, 5}) {
        CommutatorReport report = commutator_check(TwiceSpin(1), n, 1);
        if (report.identity_dev > 1e-10)
            problems += " [N=" + std::to_string(n) + " site-resolved identity dev " +
                        fmt(report.identity_dev) + "]";
        if (!(report.norm_ground < report.norm_random))
            problems += " [N=" + std::to_string(n) + " ground norm " +
                        fmt(report.norm_ground) + " not strictly below random norm " +
                        fmt(report.norm_random) + "]";
    }
    return problems;
}

std::string c11_parity_structure() {
    for (long n = 1; n <= 17; n += 2)
        if (degeneracy(TwiceSpin(3), n, TwiceSpin(0)) != 0)
            return "odd-N entry nonzero in the s=3/2 singlet sequence at N=" +
                   std::to_string(n);

    // midpoint deviation of f(N) from its neighbors: large for the two-curve
    // half-integer case, small for integer spins
    auto midpoint_devs = [](int sigma) {
        FractionSeries series =
            fraction_series(TwiceSpin(sigma), 2, 100, Backend::Normalized);
        std::vector<double> devs;
        for (size_t i = 1; i + 1 < series.samples.size(); ++i) {
            double mid =
                (series.samples[i - 1].f + series.samples[i + 1].f) / 2;
            devs.push_back(std::abs(series.samples[i].f - mid));
        }
        return devs;
    };
    for (int sigma : {1, 3}) {
        auto devs = midpoint_devs(sigma);
        double peak = *std::max_element(devs.begin(), devs.end());
        if (peak <= 1e-3)
            return "even/odd curves not separated for s=" + to_string(TwiceSpin(sigma)) +
                   " (max gap " + fmt(peak) + ")";
    }
    for (int sigma : {2, 4}) {
        auto devs = midpoint_devs(sigma);
        std::sort(devs.begin(), devs.end());
        double median = devs[devs.size() / 2];
        if (median >= 1e-3)
            return "consecutive-N samples not smooth for s=" +
                   to_string(TwiceSpin(sigma)) + " (median gap " + fmt(median) + ")";
    }
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double budget_s;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "reference degeneracy sequences reproduced verbatim", 1.0,
         c1_reference_sequences},
        {2, "six-site multiplicities and walk lists", 1.0, c2_six_site_values},
        {3, "closed forms agree with the recursion to N=60", 10.0, c3_closed_forms},
        {4, "level dimensions sum to (2s+1)^N up to N=40", 10.0,
         c4_dimension_conservation},
        {5, "decidable-fraction spot values at N=9940, 9942", 120.0,
         c5_fraction_spot_values},
        {6, "large-N brackets for the ten spins up to s=5", 3600.0, c6_limit_brackets},
        {7, "inverse-power-law fit parameters and residual", 10.0, c7_fit_parameters},
        {8, "dense spectra match the recursion", 300.0, c8_spectrum_vs_recursion},
        {9, "product-state floor and expectation identity", 60.0,
         c9_product_state_floor},
        {10, "chain commutator: site-resolved identity, ground vs random norm", 60.0,
         c10_commutator_identity},
        {11, "parity structure of sequences and fraction curves", 60.0,
         c11_parity_structure},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string problems;
        try {
            problems = c.run();
        } catch (const std::exception& e) {
            problems = std::string(" [exception: ") + e.what() + "]";
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed > c.budget_s)
            problems += " [took " + fmt(elapsed) + " s, budget " + fmt(c.budget_s) + " s]";
        bool pass = problems.empty();
        failures += pass ? 0 : 1;
        std::printf("[%2d] %s  %s (%.2f s)%s\n", c.id, pass ? "PASS" : "FAIL", c.label,
                    elapsed, problems.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
