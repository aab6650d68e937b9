#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "fgbm/cholesky_gen.hpp"
#include "fgbm/g_heat.hpp"
#include "fgbm/ito_check.hpp"
#include "fgbm/mh_operator.hpp"
#include "fgbm/moving_average.hpp"
#include "fgbm/pricing.hpp"
#include "fgbm/wavelet_gen.hpp"

namespace {

using namespace fgbm;

const TimeGrid kGrid(0.0, 1.0, 16);
const SeedSpec kSeed{42, seed_stream::kPaths};

void bm_cholesky_paths(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto ens = gen_cholesky_oracle(HurstIndex(0.7), kGrid,
                                       VolatilityScenario::constant(0.3), n, kSeed, 1);
        benchmark::DoNotOptimize(ens.data.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(bm_cholesky_paths)->Arg(256)->Arg(1024);

void bm_moving_average_paths(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    MovingAverageModel model(HurstIndex(0.7), kGrid, VolatilityScenario::constant(0.3), {});
    for (auto _ : state) {
        auto ens = model.generate(n, kSeed);
        benchmark::DoNotOptimize(ens.data.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(bm_moving_average_paths)->Arg(256)->Arg(1024);

void bm_wavelet_setup(benchmark::State& state) {
    WaveletConfig cfg;
    cfg.levels = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        WaveletModel model(HurstIndex(0.7), kGrid, VolatilityScenario::constant(0.3), cfg);
        benchmark::DoNotOptimize(model.basis_count());
    }
}
BENCHMARK(bm_wavelet_setup)->Arg(8)->Arg(10);

void bm_operator_apply(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double x = -12.0 + 24.0 * static_cast<double>(i) / static_cast<double>(n);
        v[i] = std::exp(-0.5 * x * x);
    }
    SampledFunction f(-12.0, 12.0, std::move(v));
    for (auto _ : state) {
        auto g = apply_mh(f, HurstIndex(0.3), {});
        benchmark::DoNotOptimize(g.values.data());
    }
}
BENCHMARK(bm_operator_apply)->Arg(1024)->Arg(8192);

void bm_wick_lemma(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const NoiseContext ctx = make_noise_context(HurstIndex(0.7), k);
    for (auto _ : state) {
        auto res = wick_lemma_check(ctx, 1.0, 32);
        benchmark::DoNotOptimize(res.max_residual);
    }
}
BENCHMARK(bm_wick_lemma)->Arg(16)->Arg(32);

void bm_g_heat(benchmark::State& state) {
    const auto nx = static_cast<std::size_t>(state.range(0));
    std::vector<double> v(nx + 1);
    for (std::size_t i = 0; i <= nx; ++i) {
        const double x = -10.0 + 20.0 * static_cast<double>(i) / static_cast<double>(nx);
        v[i] = x * x;
    }
    SampledFunction phi(-10.0, 10.0, std::move(v));
    const VolatilityBand band(0.5, 1.0);
    const double dx = phi.dx();
    const auto nt = static_cast<std::size_t>(std::ceil(1.0 / (0.9 * dx * dx)));
    for (auto _ : state) {
        auto sol = solve_g_heat(phi, band, TimeGrid(0.0, 1.0, nt));
        benchmark::DoNotOptimize(sol.data.data());
    }
}
BENCHMARK(bm_g_heat)->Arg(200)->Arg(400);

void bm_price_mc(benchmark::State& state) {
    MarketModel m{100.0, 0.0, HurstIndex(0.7), VolatilityBand(0.1, 0.3), 1.0};
    const ScenarioFamily family = make_scenario_family(m.band, 2, m.maturity);
    PricingConfig cfg;
    cfg.engine = PricingEngine::ScenarioMC;
    cfg.num_paths = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto q = price_bid_ask(m, Payoff{PayoffKind::Call, 100.0}, family, cfg);
        benchmark::DoNotOptimize(q.bid);
    }
}
BENCHMARK(bm_price_mc)->Arg(1 << 14)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
