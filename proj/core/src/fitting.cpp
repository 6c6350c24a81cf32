#include "spinwit/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace spinwit {

double model_eval(const FitParams& params, double s) {
    if (!(s > 0.0)) throw std::domain_error("model_eval: s must be positive");
    return 1.0 / (params.a() * std::pow(s, params.b()) + params.c());
}

namespace {

using Vec3 = std::array<double, 3>;  // (a, b, c)

double objective(const Vec3& p, const std::vector<FitPoint>& points) {
    if (!(p[0] > 0.0) || !(p[2] > 0.0)) return std::numeric_limits<double>::infinity();
    double ssr = 0.0;
    for (const FitPoint& pt : points) {
        double r = pt.f - 1.0 / (p[0] * std::pow(pt.s, p[1]) + p[2]);
        ssr += pt.weight * r * r;
    }
    return ssr;
}

struct Candidate {
    Vec3 p;
    double value;
};

bool better(const Candidate& x, const Candidate& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.p < y.p;  // deterministic tie-break
}

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2); stops when the simplex fits in a param_tol box.
Candidate nelder_mead(const Vec3& start, const std::vector<FitPoint>& points,
                      double param_tol, int max_iterations) {
    std::array<Candidate, 4> simplex;
    simplex[0] = {start, objective(start, points)};
    for (int i = 0; i < 3; ++i) {
        Vec3 v = start;
        double h = 0.05 * std::abs(v[i]);
        if (h < 1e-4) h = 1e-4;
        v[i] += h;
        simplex[i + 1] = {v, objective(v, points)};
    }

    for (int iter = 0; iter < max_iterations; ++iter) {
        std::sort(simplex.begin(), simplex.end(), better);

        double spread = 0.0;
        for (int i = 1; i < 4; ++i)
            for (int d = 0; d < 3; ++d)
                spread = std::max(spread, std::abs(simplex[i].p[d] - simplex[0].p[d]));
        if (spread < param_tol) break;

        Vec3 centroid{};
        for (int i = 0; i < 3; ++i)
            for (int d = 0; d < 3; ++d) centroid[d] += simplex[i].p[d] / 3.0;

        auto blend = [&](double t) {
            Vec3 v;
            for (int d = 0; d < 3; ++d)
                v[d] = centroid[d] + t * (centroid[d] - simplex[3].p[d]);
            return v;
        };

        Candidate reflected{blend(1.0), 0.0};
        reflected.value = objective(reflected.p, points);
        if (reflected.value < simplex[0].value) {
            Candidate expanded{blend(2.0), 0.0};
            expanded.value = objective(expanded.p, points);
            simplex[3] = better(expanded, reflected) ? expanded : reflected;
            continue;
        }
        if (reflected.value < simplex[2].value) {
            simplex[3] = reflected;
            continue;
        }
        Candidate contracted{blend(reflected.value < simplex[3].value ? 0.5 : -0.5), 0.0};
        contracted.value = objective(contracted.p, points);
        if (contracted.value < std::min(reflected.value, simplex[3].value)) {
            simplex[3] = contracted;
            continue;
        }
        for (int i = 1; i < 4; ++i) {  // shrink toward the best vertex
            for (int d = 0; d < 3; ++d)
                simplex[i].p[d] = 0.5 * (simplex[i].p[d] + simplex[0].p[d]);
            simplex[i].value = objective(simplex[i].p, points);
        }
    }
    std::sort(simplex.begin(), simplex.end(), better);
    return simplex[0];
}

}  // namespace

FitParams fit(const std::vector<FitPoint>& points, const FitOptions& options) {
    if (points.size() < 3)
        throw std::invalid_argument("fit: need at least 3 points for 3 parameters");
    for (const FitPoint& pt : points)
        if (!(pt.s > 0.0)) throw std::invalid_argument("fit: points need s > 0");

    // Sum residuals in a fixed s-order so the objective, and with it the
    // whole descent, is unchanged by permutations of the input.
    std::vector<FitPoint> ordered = points;
    std::sort(ordered.begin(), ordered.end(), [](const FitPoint& x, const FitPoint& y) {
        if (x.s != y.s) return x.s < y.s;
        return x.f < y.f;
    });

    std::vector<Candidate> starts;
    const std::array<double, 5> grid_a{0.1, 0.5, 1.0, 3.0, 10.0};
    const std::array<double, 5> grid_b{0.1, 0.8, 1.5, 2.5, 4.0};
    const std::array<double, 5> grid_c{0.1, 0.5, 1.0, 3.0, 10.0};
    for (double a : grid_a)
        for (double b : grid_b)
            for (double c : grid_c) {
                Vec3 p{a, b, c};
                starts.push_back({p, objective(p, ordered)});
            }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> ua(0.1, 10.0), ub(0.1, 4.0), uc(0.1, 10.0);
    for (int i = 0; i < options.random_starts; ++i) {
        Vec3 p{ua(rng), ub(rng), uc(rng)};
        starts.push_back({p, objective(p, ordered)});
    }

    std::sort(starts.begin(), starts.end(), better);
    int refine = std::min<int>(options.refine_top, static_cast<int>(starts.size()));
    Candidate best = starts[0];
    for (int i = 0; i < refine; ++i) {
        Candidate polished =
            nelder_mead(starts[i].p, ordered, options.param_tol, options.max_iterations);
        if (better(polished, best)) best = polished;
    }

    return FitParams(best.p[0], best.p[1], best.p[2], objective(best.p, ordered));
}

}  // namespace spinwit
