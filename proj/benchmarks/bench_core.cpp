#include <benchmark/benchmark.h>

#include "spinwit/decidability.hpp"
#include "spinwit/fitting.hpp"
#include "spinwit/lattice_paths.hpp"
#include "spinwit/multiplicity.hpp"
#include "spinwit/sim.hpp"
#include "spinwit/spin.hpp"

using namespace spinwit;

namespace {

// Cost of one full exact row at depth N, prefix-sum recurrence included.
void BM_ExactRowsTo(benchmark::State& state) {
    const TwiceSpin s(static_cast<int>(state.range(0)));
    const long n_max = state.range(1);
    for (auto _ : state) {
        ExactRowStream stream(s);
        for (long n = 0; n < n_max; ++n) stream.advance();
        benchmark::DoNotOptimize(stream.row().values.data());
    }
    state.SetItemsProcessed(state.iterations() * n_max);
}
BENCHMARK(BM_ExactRowsTo)->Args({1, 500})->Args({4, 300})->Args({10, 200});

void BM_NormalizedRowsTo(benchmark::State& state) {
    const TwiceSpin s(static_cast<int>(state.range(0)));
    const long n_max = state.range(1);
    for (auto _ : state) {
        NormalizedRowStream stream(s);
        for (long n = 0; n < n_max; ++n) stream.advance();
        benchmark::DoNotOptimize(stream.row().values.data());
    }
    state.SetItemsProcessed(state.iterations() * n_max);
}
BENCHMARK(BM_NormalizedRowsTo)->Args({1, 2000})->Args({4, 2000})->Args({10, 1000});

void BM_FractionSeries(benchmark::State& state) {
    const TwiceSpin s(static_cast<int>(state.range(0)));
    const long n_max = state.range(1);
    for (auto _ : state) {
        FractionSeries series = fraction_series(s, 1, n_max, Backend::Normalized);
        benchmark::DoNotOptimize(series.samples.data());
    }
    state.SetItemsProcessed(state.iterations() * n_max);
}
BENCHMARK(BM_FractionSeries)->Args({1, 1000})->Args({6, 500});

void BM_CountPaths(benchmark::State& state) {
    const TwiceSpin s(static_cast<int>(state.range(0)));
    const long n = state.range(1);
    for (auto _ : state) {
        mpz_class count = count_paths(s, n, TwiceSpin(0));
        benchmark::DoNotOptimize(count.get_mpz_t());
    }
}
BENCHMARK(BM_CountPaths)->Args({1, 20})->Args({2, 12})->Args({3, 10});

void BM_SpectrumDegeneracies(benchmark::State& state) {
    const TwiceSpin s(static_cast<int>(state.range(0)));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto counts = spectrum_degeneracies(s, n);
        benchmark::DoNotOptimize(&counts);
    }
}
BENCHMARK(BM_SpectrumDegeneracies)->Args({1, 6})->Args({2, 4})->Args({4, 3});

void BM_SeparableBoundMc(benchmark::State& state) {
    const TwiceSpin s(1);
    const long trials = state.range(0);
    for (auto _ : state) {
        McBoundResult mc = separable_bound_mc(s, 4, trials, 42);
        benchmark::DoNotOptimize(&mc);
    }
    state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_SeparableBoundMc)->Arg(1000)->Arg(10000);

void BM_DecayLawFit(benchmark::State& state) {
    const std::vector<FitPoint> points = {
        {0.5, 0.4275, 1}, {1.0, 0.3177, 1},  {1.5, 0.2470, 1},  {2.0, 0.1987, 1},
        {2.5, 0.1642, 1}, {3.0, 0.1386, 1},  {3.5, 0.11897, 1}, {4.0, 0.10356, 1},
        {4.5, 0.09119, 1}, {5.0, 0.08110, 1},
    };
    for (auto _ : state) {
        FitParams params = fit(points);
        benchmark::DoNotOptimize(&params);
    }
}
BENCHMARK(BM_DecayLawFit);

}  // namespace

BENCHMARK_MAIN();
