#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "fgbm/cholesky_gen.hpp"
#include "fgbm/g_heat.hpp"
#include "fgbm/girsanov.hpp"
#include "fgbm/scenario_mc.hpp"
#include "fgbm/stats.hpp"

using namespace fgbm;

namespace {

SampledFunction sample_on(double a, double b, std::size_t n, double (*fn)(double)) {
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
        v[i] = fn(x);
    }
    return SampledFunction(a, b, std::move(v));
}

double sq(double x) { return x * x; }
double neg_sq(double x) { return -x * x; }
double gauss(double x) { return std::exp(-0.5 * x * x); }

// Heat flow of exp(-x^2/2): variance 1 grows to 1 + s^2 t.
double gauss_heat(double s2, double t, double x) {
    double v = 1.0 + s2 * t;
    return std::exp(-0.5 * x * x / v) / std::sqrt(v);
}

}  // namespace

TEST_CASE("generator of the band") {
    VolatilityBand band(0.5, 1.0);
    CHECK(g_function(2.0, band) == doctest::Approx(1.0));    // hi^2 * a / 2
    CHECK(g_function(-2.0, band) == doctest::Approx(-0.25)); // lo^2 * a / 2
    CHECK(g_function(0.0, band) == 0.0);
    // Positive homogeneity and monotonicity.
    CHECK(g_function(6.0, band) == doctest::Approx(3.0 * g_function(2.0, band)));
    CHECK(g_function(-1.0, band) <= g_function(1.0, band));
    // Degenerate band: linear generator.
    VolatilityBand deg(0.8, 0.8);
    CHECK(g_function(3.0, deg) == doctest::Approx(0.5 * 0.64 * 3.0));
    CHECK(g_function(-3.0, deg) == doctest::Approx(-0.5 * 0.64 * 3.0));
}

TEST_CASE("marching scheme rejects unstable grids with the admissible step") {
    auto phi = sample_on(-5.0, 5.0, 200, sq);  // dx = 0.05
    VolatilityBand band(0.5, 1.0);
    // dt = 0.01 > dx^2 / hi^2 = 0.0025.
    try {
        solve_g_heat(phi, band, TimeGrid(0.0, 1.0, 100));
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("admissible") != std::string::npos);
    }
    CHECK_NOTHROW(solve_g_heat(phi, band, TimeGrid(0.0, 0.25, 100)));
}

TEST_CASE("quadratic initial data evolves exactly") {
    VolatilityBand band(0.5, 1.0);
    TimeGrid tg(0.0, 1.0, 400);

    auto up = solve_g_heat(sample_on(-10.0, 10.0, 400, sq), band, tg);
    CHECK(up.cfl_ratio <= 1.0 + 1e-9);
    // d2(x^2) = 2 > 0 picks hi^2 = 1: u = x^2 + t.
    CHECK(up.value_at(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(up.value_at(0.5, 1.0) == doctest::Approx(1.5).epsilon(1e-10));

    auto dn = solve_g_heat(sample_on(-10.0, 10.0, 400, neg_sq), band, tg);
    // d2(-x^2) = -2 < 0 picks lo^2 = 0.25: u = -x^2 - 0.25 t.
    CHECK(dn.value_at(1.0, 0.0) == doctest::Approx(-0.25).epsilon(1e-10));
    CHECK(dn.value_at(0.5, 2.0) == doctest::Approx(-4.125).epsilon(1e-10));
}

TEST_CASE("degenerate band converges to the classical heat flow at first order in dt") {
    VolatilityBand deg(1.0, 1.0);
    double errs[2];
    std::size_t nx[2] = {100, 200};
    for (int k = 0; k < 2; ++k) {
        // dt tied to dx^2 keeps the ratio fixed at 0.64 across refinement.
        std::size_t nt = (nx[k] * nx[k]) / 25;
        auto sol = solve_g_heat(sample_on(-8.0, 8.0, nx[k], gauss), deg, TimeGrid(0.0, 1.0, nt));
        double worst = 0.0;
        for (double x = -2.0; x <= 2.0; x += 0.25)
            worst = std::max(worst, std::abs(sol.value_at(1.0, x) - gauss_heat(1.0, 1.0, x)));
        errs[k] = worst;
    }
    double order = std::log2(errs[0] / errs[1]) / 2.0;  // two space halvings = 4x in dt
    CHECK(errs[1] < errs[0]);
    CHECK(order > 0.45);  // first order in dt means ~2 decades over dt/4
}

TEST_CASE("comparison principle and translation of constants") {
    VolatilityBand band(0.5, 1.0);
    TimeGrid tg(0.0, 0.5, 200);
    auto lo = solve_g_heat(sample_on(-6.0, 6.0, 150, gauss), band, tg);
    std::vector<double> shifted(151);
    for (std::size_t i = 0; i <= 150; ++i) {
        double x = -6.0 + 12.0 * static_cast<double>(i) / 150.0;
        shifted[i] = gauss(x) + 0.5;
    }
    auto hi = solve_g_heat(SampledFunction(-6.0, 6.0, std::move(shifted)), band, tg);
    for (std::size_t j = 0; j <= tg.n; j += 40)
        for (std::size_t i = 0; i <= 150; i += 10) CHECK(lo.at(j, i) <= hi.at(j, i) + 1e-12);
    // Constants are invariant under the flow, so the gap stays 0.5 exactly.
    CHECK(hi.value_at(0.5, 0.0) - lo.value_at(0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("solution table accessors") {
    VolatilityBand band(0.5, 1.0);
    auto sol = solve_g_heat(sample_on(-4.0, 4.0, 80, sq), band, TimeGrid(0.0, 0.1, 50));
    CHECK(sol.nx == 80);
    CHECK(sol.nt == 50);
    auto last = sol.final_profile();
    CHECK(last.values.size() == 81);
    CHECK(last.values[40] == sol.at(50, 40));
    CHECK_THROWS(sol.value_at(0.2, 0.0));
    CHECK_THROWS(sol.value_at(0.05, 9.0));
}

TEST_CASE("family monte carlo satisfies the sublinear axioms on exact arithmetic") {
    HurstIndex h(0.7);
    TimeGrid grid(0.0, 1.0, 8);
    ScenarioFamily fam = make_scenario_family(VolatilityBand(0.1, 0.3), 2, 1.0);
    SeedSpec seed{4242, seed_stream::kPaths};
    const std::size_t paths = 1 << 12;

    PathFunctional F = [](const double* p, const TimeGrid& g) { return p[g.n]; };
    PathFunctional G = [](const double* p, const TimeGrid& g) {
        return p[g.n] + std::abs(p[g.n / 2]);
    };
    PathFunctional F2 = [](const double* p, const TimeGrid& g) { return 2.0 * p[g.n]; };
    PathFunctional C = [](const double*, const TimeGrid&) { return 7.25; };
    PathFunctional FpC = [](const double* p, const TimeGrid& g) { return p[g.n] + 7.25; };

    auto rF = upper_lower_expectation_mc(F, h, grid, fam, paths, seed);
    auto rG = upper_lower_expectation_mc(G, h, grid, fam, paths, seed);
    auto rF2 = upper_lower_expectation_mc(F2, h, grid, fam, paths, seed);
    auto rC = upper_lower_expectation_mc(C, h, grid, fam, paths, seed);
    auto rFpC = upper_lower_expectation_mc(FpC, h, grid, fam, paths, seed);

    CHECK(rF.upper >= rF.lower);

    // Monotonicity: F <= G pathwise.
    CHECK(rF.upper <= rG.upper);
    CHECK(rF.lower <= rG.lower);

    // Constant preservation, exact in floating point.
    CHECK(rC.upper == 7.25);
    CHECK(rC.lower == 7.25);
    CHECK(rC.upper_se == 0.0);

    // Positive homogeneity with lambda = 2, exact in floating point.
    CHECK(rF2.upper == 2.0 * rF.upper);
    CHECK(rF2.lower == 2.0 * rF.lower);

    // Constant translation: E(F + c) = E(F) + c within summation roundoff.
    CHECK(rFpC.upper == doctest::Approx(rF.upper + 7.25).epsilon(1e-12));

    // Sub-additivity within combined noise (CRN makes this nearly exact).
    PathFunctional FplusG = [](const double* p, const TimeGrid& g) {
        return p[g.n] + (p[g.n] + std::abs(p[g.n / 2]));
    };
    auto rSum = upper_lower_expectation_mc(FplusG, h, grid, fam, paths, seed);
    double slack = 3.0 * std::sqrt(rF.upper_se * rF.upper_se + rG.upper_se * rG.upper_se +
                                   rSum.upper_se * rSum.upper_se);
    CHECK(rSum.upper <= rF.upper + rG.upper + slack);

    CHECK(rF.means.size() == 2);
    CHECK(rF.upper_arg < 2);
    // The terminal value estimate under the wider scenario has wider error.
    CHECK(rF.ses[1] > rF.ses[0]);
}

TEST_CASE("family monte carlo options: generators, clipping, validation") {
    HurstIndex h(0.5);
    TimeGrid grid(0.0, 1.0, 8);
    ScenarioFamily fam = make_scenario_family(VolatilityBand(0.2, 0.4), 3, 1.0);
    SeedSpec seed{7, seed_stream::kPaths};

    PathFunctional F = [](const double* p, const TimeGrid& g) { return p[g.n] * p[g.n]; };

    ScenarioMcConfig ma_cfg;
    ma_cfg.generator = GeneratorKind::MovingAverage;
    ma_cfg.ma.fine_steps = 64;
    auto r = upper_lower_expectation_mc(F, h, grid, fam, 2000, seed, ma_cfg);
    // E[B_T^2] = sigma^2 under each constant scenario; the piecewise member
    // stays inside the band, so the envelope is attained at the extremes.
    CHECK(r.upper_arg == 1);
    CHECK(r.lower_arg == 0);
    CHECK(std::abs(r.means[1] - 0.16) < 4.0 * r.ses[1] + 0.01);

    ScenarioFamily extremes = make_scenario_family(VolatilityBand(0.2, 0.4), 2, 1.0);
    ScenarioMcConfig clip_cfg;
    clip_cfg.clip_bound = 0.05;
    auto rc = upper_lower_expectation_mc(F, h, grid, extremes, 500, seed, clip_cfg);
    CHECK(rc.clip_mass > 0.0);
    CHECK(rc.upper <= 0.05 + 1e-15);

    ScenarioFamily empty{VolatilityBand(0.2, 0.4), {}};
    CHECK_THROWS_AS(upper_lower_expectation_mc(F, h, grid, empty, 100, seed),
                    std::invalid_argument);
    CHECK_THROWS_AS(upper_lower_expectation_mc(F, h, grid, fam, 0, seed), std::invalid_argument);
}

TEST_CASE("generate_ensemble dispatch matches the underlying generators") {
    HurstIndex h(0.7);
    TimeGrid grid(0.0, 1.0, 8);
    auto sc = VolatilityScenario::constant(0.3);
    SeedSpec seed{11, seed_stream::kPaths};

    ScenarioMcConfig cfg;  // CovFactor
    auto a = generate_ensemble(h, grid, sc, 64, seed, cfg);
    auto b = gen_cholesky_oracle(h, grid, sc, 64, seed, 0);
    for (std::size_t i = 0; i < a.data.size(); ++i) CHECK(a.data[i] == b.data[i]);

    cfg.generator = GeneratorKind::Wavelet;
    cfg.wavelet.levels = 8;
    auto w = generate_ensemble(h, grid, sc, 16, seed, cfg);
    CHECK(w.num_paths == 16);
    CHECK(w.at(3, 0) == 0.0);
}

TEST_CASE("drift removal: identity at H = 1/2 and shape for rough indices") {
    std::vector<double> ones(65, 1.0);
    SampledFunction gprime(0.0, 1.0, std::move(ones));

    GirsanovConfig cfg;
    cfg.samples = 4096;

    DriftRemoval flat = girsanov_phi(gprime, HurstIndex(0.5), 1.0, cfg);
    CHECK_FALSE(flat.flagged);
    for (double v : flat.phi.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(flat.roundtrip_rel_err < 1e-10);

    for (double h : {0.3, 0.7}) {
        DriftRemoval res = girsanov_phi(gprime, HurstIndex(h), 1.0, cfg);
        CHECK_FALSE(res.flagged);
        CHECK(res.roundtrip_rel_err < 0.02);
        CHECK(res.shape_corr > 0.999);
    }

    // Shape function: symmetric, constant at H = 1/2, singular toward the
    // endpoints for H > 1/2.
    HurstIndex h7(0.7);
    CHECK(girsanov_shape(h7, 1.0, 0.3) == doctest::Approx(girsanov_shape(h7, 1.0, 0.7)));
    CHECK(girsanov_shape(h7, 1.0, 0.01) > girsanov_shape(h7, 1.0, 0.5));
    CHECK(girsanov_shape(HurstIndex(0.5), 1.0, 0.123) == doctest::Approx(2.0));
}
