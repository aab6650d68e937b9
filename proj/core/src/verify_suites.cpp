#include "fgbm/verify_suites.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "fgbm/cholesky_gen.hpp"
#include "fgbm/clark_ocone.hpp"
#include "fgbm/girsanov.hpp"
#include "fgbm/ito_check.hpp"
#include "fgbm/mh_operator.hpp"
#include "fgbm/moving_average.hpp"
#include "fgbm/stats.hpp"
#include "fgbm/wavelet_gen.hpp"

namespace fgbm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_upper(SuiteReport& r, const std::string& name, double measured, double bound,
                 std::string note = {}) {
    r.checks.push_back({name, measured <= bound, measured, bound, std::move(note)});
}

void check_lower(SuiteReport& r, const std::string& name, double measured, double bound,
                 std::string note = {}) {
    if (note.empty()) note = "lower bound";
    r.checks.push_back({name, measured >= bound, measured, bound, std::move(note)});
}

double frobenius_rel(const std::vector<double>& got, const std::vector<double>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        const double d = got[i] - want[i];
        num += d * d;
        den += want[i] * want[i];
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

std::vector<double> closed_covariance(const TimeGrid& grid, double h, double sigma) {
    const std::size_t np = grid.size();
    std::vector<double> c(np * np);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < np; ++j)
            c[i * np + j] = fbm_covariance(h, sigma, grid.point(i), grid.point(j));
    return c;
}

void suite_operators(SuiteReport& r) {
    check_upper(r, "normalization-at-half", std::abs(mh_normalization(0.5) - 1.0), 1e-15);

    double worst = 0.0;
    for (double H : {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}) {
        const double target = 1.0 / (std::sin(kPi * H) * std::tgamma(2.0 * H + 1.0));
        const double got = parseval_indicator_unnormalized(HurstIndex(H), 0.0, 1.0);
        worst = std::max(worst, std::abs(got - target) / target);
    }
    check_upper(r, "parseval-closed-form", worst, 1e-3, "unit indicator, seven indices");

    // Spectral application against the direct singular-kernel quadrature on
    // a Gaussian bump, both sides of the classical index.
    for (double H : {0.3, 0.7}) {
        const std::size_t n = 2048;
        const double L = 24.0;
        std::vector<double> v(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            const double x = -0.5 * L + L * static_cast<double>(i) / static_cast<double>(n);
            v[i] = std::exp(-0.5 * x * x);
        }
        SampledFunction f(-0.5 * L, 0.5 * L, std::move(v));
        OperatorParams params;
        params.dc_epsilon = kPi / (static_cast<double>(params.pad_factor) * L);
        const SampledFunction g = apply_mh(f, HurstIndex(H), params);
        auto bump = [](double x) { return std::exp(-0.5 * x * x); };
        double err = 0.0, scale = 0.0;
        for (double x : {0.0, 0.5, 1.25}) {
            const double direct = mh_timedomain_point(bump, HurstIndex(H), x, 12.0);
            const double spectral = value_at(g, x);
            err = std::max(err, std::abs(spectral - direct));
            scale = std::max(scale, std::abs(direct));
        }
        check_upper(r, "timedomain-crosscheck-h" + std::to_string(H).substr(0, 3), err / scale,
                    2e-2, "gaussian bump");
    }
}

void suite_noise(SuiteReport& r) {
    const TimeGrid grid(0.0, 1.0, 8);
    {
        const double H = 0.7;
        MovingAverageConfig cfg;
        cfg.fine_steps = 256;
        MovingAverageModel model(HurstIndex(H), grid, VolatilityScenario::constant(1.0), cfg);
        const auto var = model.model_variance();
        double worst = 0.0;
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const double want = std::pow(grid.point(i), 2.0 * H);
            worst = std::max(worst, std::abs(var[i] - want) / want);
        }
        check_upper(r, "movavg-variance", worst, 3e-2);
        check_upper(r, "movavg-covariance",
                    frobenius_rel(model.model_covariance(), closed_covariance(grid, H, 1.0)),
                    5e-2, "deterministic second moments");
    }
    {
        const double H = 0.3;
        WaveletConfig cfg;
        cfg.levels = 10;
        WaveletModel model(HurstIndex(H), grid, VolatilityScenario::constant(1.0), cfg);
        check_upper(r, "wavelet-covariance",
                    frobenius_rel(model.model_covariance(), closed_covariance(grid, H, 1.0)),
                    5e-2);
    }
    {
        WaveletConfig cfg;
        cfg.levels = 10;
        WaveletModel model(HurstIndex(0.5), grid, VolatilityScenario::constant(1.0), cfg);
        check_upper(r, "wavelet-classical-truncation",
                    frobenius_rel(model.model_covariance(), closed_covariance(grid, 0.5, 1.0)),
                    1e-3, "one-sided projection deficit, about 2^-levels even at H = 1/2");
    }
}

void suite_wick(SuiteReport& r) {
    const NoiseContext ctx = make_noise_context(HurstIndex(0.7), 16);
    const WickLemmaResult res = wick_lemma_check(ctx, 1.0, 64);
    check_upper(r, "wick-square-coefficients", res.max_residual, 1e-10);
    check_upper(r, "ito-constant", std::abs(res.ito_constant - res.expected_constant), 0.0,
                "order-0 term of the ordinary-square rewrite");
    check_upper(r, "variance-truncation-gap", res.var_gap, 1e-1,
                "Hermite tail of the integrated indicator decays like K^{-1/2}");
}

void suite_ito(SuiteReport& r) {
    const NoiseContext ctx = make_noise_context(HurstIndex(0.7), 12);
    check_upper(r, "square", ito_check_square(ctx, 1.0, 48, 4).coeff_residual, 1e-8);
    check_upper(r, "cube", ito_check_cube(ctx, 1.0, 48, 5).coeff_residual, 1e-8);
    const NoiseContext small = make_noise_context(HurstIndex(0.7), 8);
    check_upper(r, "exponential", ito_check_exp(small, 0.4, 1.0, 48, 5).coeff_residual, 1e-6);
}

void suite_clark_ocone(SuiteReport& r) {
    const NoiseContext ctx = make_noise_context(HurstIndex(0.7), 10);
    const struct {
        const char* name;
        WickPolynomial p;
    } cases[] = {
        {"linear", {{{{1}, 1.0}}}},
        {"wick-cube", {{{{3}, 1.0}, {{1}, -0.5}}}},
        {"mixed-degree-3", {{{{2, 1}, 1.0}, {{0, 1}, 2.0}}}},
    };
    for (const auto& c : cases) {
        const ClarkOconeResult res = clark_ocone_reconstruct(ctx, c.p, 1.0, 32, 3);
        check_upper(r, std::string("reconstruction-") + c.name, res.max_coeff_residual, 1e-10);
    }
}

void suite_girsanov(SuiteReport& r) {
    const SampledFunction gprime(0.0, 1.0, std::vector<double>(65, 1.0));
    GirsanovConfig cfg;
    for (double H : {0.3, 0.7}) {
        const DriftRemoval res = girsanov_phi(gprime, HurstIndex(H), 1.0, cfg);
        const std::string tag = std::to_string(H).substr(0, 3);
        check_upper(r, "roundtrip-h" + tag, res.roundtrip_rel_err, cfg.tolerance);
        check_lower(r, "shape-correlation-h" + tag, res.shape_corr, 0.999);
    }
    const DriftRemoval classical = girsanov_phi(gprime, HurstIndex(0.5), 1.0, cfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < classical.phi.size(); ++i)
        worst = std::max(worst, std::abs(classical.phi.values[i] - 1.0));
    check_upper(r, "identity-at-half", worst, 1e-12);
}

void suite_lrd(SuiteReport& r, std::uint64_t seed, std::size_t threads) {
    const TimeGrid grid(0.0, 1.0, 64);
    const double H = 0.7;
    const PathEnsemble ens =
        gen_cholesky_oracle(HurstIndex(H), grid, VolatilityScenario::constant(1.0), 4000,
                            SeedSpec{seed, seed_stream::kVerify}, threads);
    for (std::size_t lag : {std::size_t{1}, std::size_t{5}}) {
        const MomentEstimate est = increment_autocov(ens, lag);
        const double want = fgn_autocov(H, lag, grid.dt());
        const double dev = est.se > 0.0 ? std::abs(est.mean - want) / est.se : 0.0;
        check_upper(r, "autocovariance-lag" + std::to_string(lag), dev, 3.0,
                    "deviation in standard errors");
    }
    check_upper(r, "classical-decorrelation", std::abs(fgn_autocov(0.5, 1)), 0.0);

    double sum_direct = 0.0;
    for (std::size_t n = 1; n <= 1000; ++n) sum_direct += fgn_autocov(0.3, n);
    check_upper(r, "partial-sum-telescoping",
                std::abs(fgn_autocov_partial_sum(0.3, 1000) - sum_direct), 1e-12);

    check_upper(r, "antipersistent-limit",
                std::abs(fgn_autocov_partial_sum(0.3, 1000000) + 0.5), 1e-2,
                "partial sums approach -1/2");
    const double n4 = std::pow(1e6, 0.4);
    check_upper(r, "persistent-growth",
                std::abs(fgn_autocov_partial_sum(0.7, 1000000) / (0.7 * n4) - 1.0), 2e-2,
                "partial sums grow like H N^{2H-1}");
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "operators", "noise", "wick", "ito", "clark-ocone", "girsanov", "lrd"};
    return names;
}

SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed, std::size_t threads) {
    SuiteReport r;
    r.suite = name;
    const auto start = std::chrono::steady_clock::now();
    if (name == "operators") suite_operators(r);
    else if (name == "noise") suite_noise(r);
    else if (name == "wick") suite_wick(r);
    else if (name == "ito") suite_ito(r);
    else if (name == "clark-ocone") suite_clark_ocone(r);
    else if (name == "girsanov") suite_girsanov(r);
    else if (name == "lrd") suite_lrd(r, seed, threads);
    else throw std::invalid_argument("run_verify_suite: unknown suite '" + name + "'");
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace fgbm
