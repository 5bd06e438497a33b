#include <benchmark/benchmark.h>

#include "talbotsum/gauss_arith.hpp"
#include "talbotsum/numeric.hpp"
#include "talbotsum/periodic_schrodinger.hpp"
#include "talbotsum/talbot.hpp"

using namespace talbotsum;

static void BM_GaussDirect(benchmark::State& state) {
    const std::int64_t q = state.range(0);
    gauss::GaussSumSpec spec{1, q / 3, q};
    for (auto _ : state) benchmark::DoNotOptimize(gauss::gauss_sum_direct(spec));
    state.SetItemsProcessed(state.iterations() * q);
}
BENCHMARK(BM_GaussDirect)->Arg(997)->Arg(99991);

static void BM_GaussViaTalbot(benchmark::State& state) {
    const auto phi = talbot::TestFunction::builtin(talbot::TestFunction::Kind::bspline3);
    gauss::GaussSumSpec spec{1, 2, 5};
    const std::int64_t K = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(talbot::gauss_via_talbot(spec, phi, K));
    state.SetItemsProcessed(state.iterations() * (2 * K + 1));
}
BENCHMARK(BM_GaussViaTalbot)->Arg(10000)->Arg(100000);

static void BM_CombField(benchmark::State& state) {
    const auto phi = talbot::TestFunction::builtin(talbot::TestFunction::Kind::cos4);
    const talbot::CombParams params{kTwoPi, static_cast<int>(state.range(0))};
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-3;
        benchmark::DoNotOptimize(talbot::comb_field(params, 0.04, x, phi));
    }
}
BENCHMARK(BM_CombField)->Arg(50)->Arg(200);

static void BM_CarpetRow(benchmark::State& state) {
    const auto phi = talbot::TestFunction::builtin(talbot::TestFunction::Kind::cos4);
    const talbot::CombParams params{kTwoPi, 200};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            talbot::carpet_raster(params, 0.0, 0.1, 0.0, 1.0, 2, state.range(0), phi));
    }
    state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_CarpetRow)->Arg(256)->Arg(512);

static void BM_BandedApply(benchmark::State& state) {
    const auto V = PeriodicPotential::two_cos();
    const int K = static_cast<int>(state.range(0));
    const auto A = schrodinger::coupling_matrix(0.3, 1.0, 0.7, V, K);
    std::vector<std::complex<double>> x(2 * K + 1, {0.3, -0.4}), y;
    for (auto _ : state) {
        A.apply(x, y);
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK(BM_BandedApply)->Arg(16)->Arg(64);

static void BM_CorrectedStep(benchmark::State& state) {
    const auto V = PeriodicPotential::two_cos();
    const int K = 16;
    const auto psi0 = schrodinger::ModeVector::delta0(K);
    const int substeps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            schrodinger::dyson_corrected(1.0, 1.0, 0.7, V, K, substeps, 12, psi0));
    }
}
BENCHMARK(BM_CorrectedStep)->Arg(16)->Arg(64);

static void BM_SuperoscRecovery(benchmark::State& state) {
    const auto phi = talbot::TestFunction::builtin(talbot::TestFunction::Kind::cos4);
    gauss::GaussSumSpec spec{1, 1, 2};
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(talbot::gauss_via_superosc(spec, phi, 2, N, N));
    }
}
BENCHMARK(BM_SuperoscRecovery)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
