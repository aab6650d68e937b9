// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero when any criterion fails. Parameters and
// tolerances are fixed here on purpose: reruns are bit identical.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fgbm/black_scholes.hpp"
#include "fgbm/cholesky_gen.hpp"
#include "fgbm/chaos_noise.hpp"
#include "fgbm/clark_ocone.hpp"
#include "fgbm/g_heat.hpp"
#include "fgbm/girsanov.hpp"
#include "fgbm/ito_check.hpp"
#include "fgbm/mh_operator.hpp"
#include "fgbm/moving_average.hpp"
#include "fgbm/pricing.hpp"
#include "fgbm/rng.hpp"
#include "fgbm/scenario_mc.hpp"
#include "fgbm/stats.hpp"
#include "fgbm/wavelet_gen.hpp"

using namespace fgbm;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& s) {
        if (detail.tellp() > 0) detail << "; ";
        detail << s;
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

double frobenius_rel(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        num += d * d;
        den += b[i] * b[i];
    }
    return std::sqrt(num / den);
}

constexpr std::uint64_t kSeed = 20250822;

// 1. Covariance envelope of the process family under the band extremes.
Outcome covariance_law() {
    Outcome out;
    const VolatilityBand band(0.1, 0.3);
    const TimeGrid grid(0.0, 1.0, 15);  // 16 grid points
    const std::size_t paths = 10000;
    for (double h : {0.3, 0.5, 0.7}) {
        HurstIndex hh(h);
        std::size_t bad = 0;
        double worst = 0.0;
        for (double sigma : {band.hi, band.lo}) {
            auto ens = gen_cholesky_oracle(hh, grid, VolatilityScenario::constant(sigma), paths,
                                           SeedSpec{kSeed, seed_stream::kPaths}, 0);
            auto est = sample_covariance(ens);
            for (std::size_t i = 0; i < grid.size(); ++i)
                for (std::size_t j = 0; j < grid.size(); ++j) {
                    const std::size_t idx = i * grid.size() + j;
                    const double exact =
                        fbm_covariance(h, sigma, grid.point(i), grid.point(j));
                    const double diff = std::abs(est.mean[idx] - exact);
                    if (est.se[idx] == 0.0) {
                        if (diff != 0.0) ++bad;
                    } else {
                        worst = std::max(worst, diff / est.se[idx]);
                        if (diff > 3.0 * est.se[idx]) ++bad;
                    }
                }
        }
        out.require(bad == 0, "H=" + fmt(h) + ": " + std::to_string(bad) +
                                  " entries outside 3 se (worst " + fmt(worst) + ")");
        if (bad == 0) out.note("H=" + fmt(h) + " worst " + fmt(worst) + " se");
    }
    return out;
}

// 2. Moving-average and wavelet syntheses against the factorization oracle.
Outcome cross_method() {
    Outcome out;
    const TimeGrid grid(0.0, 1.0, 16);
    const std::size_t paths = 20000;
    const auto sc = VolatilityScenario::constant(1.0);
    for (double h : {0.3, 0.7}) {
        HurstIndex hh(h);
        std::vector<double> target(grid.size() * grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = 0; j < grid.size(); ++j)
                target[i * grid.size() + j] =
                    fbm_covariance(h, 1.0, grid.point(i), grid.point(j));

        MovingAverageConfig ma;  // window 20 x horizon
        auto ens_ma = gen_moving_average(hh, grid, sc, paths,
                                         SeedSpec{kSeed + 1, seed_stream::kPaths}, ma);
        double rms_ma = frobenius_rel(sample_covariance(ens_ma).mean, target);

        WaveletConfig wv;
        wv.levels = 10;
        wv.window_mult = 20.0;  // rounded up internally to the dyadic 31
        auto ens_wv = gen_wavelet(hh, grid, sc, paths,
                                  SeedSpec{kSeed + 2, seed_stream::kPaths}, wv);
        double rms_wv = frobenius_rel(sample_covariance(ens_wv).mean, target);

        auto oracle = gen_cholesky_oracle(hh, grid, sc, paths,
                                          SeedSpec{kSeed + 3, seed_stream::kPaths}, 0);
        double rms_or = frobenius_rel(sample_covariance(oracle).mean, target);

        out.require(rms_ma < 0.05, "H=" + fmt(h) + " moving-average rms " + fmt(rms_ma));
        out.require(rms_wv < 0.05, "H=" + fmt(h) + " wavelet rms " + fmt(rms_wv));
        out.note("H=" + fmt(h) + " rms ma/wav/oracle " + fmt(rms_ma) + "/" + fmt(rms_wv) + "/" +
                 fmt(rms_or));
    }
    return out;
}

// 3. Spectral energy identity for the unit indicator.
Outcome parseval() {
    Outcome out;
    for (double h : {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}) {
        const double target = 1.0 / (std::sin(M_PI * h) * std::tgamma(2.0 * h + 1.0));
        const double got = parseval_indicator_unnormalized(HurstIndex(h), 0.0, 1.0);
        const double rel = std::abs(got / target - 1.0);
        out.require(rel < 1e-3, "H=" + fmt(h) + " rel err " + fmt(rel));
    }
    // The H = 1/2 target is exactly 1 and the normalization constant is 1.
    out.require(1.0 / (std::sin(M_PI * 0.5) * std::tgamma(2.0)) == 1.0, "H=0.5 target not 1");
    out.require(mh_normalization(0.5) == 1.0, "kappa(1/2) not exactly 1");
    return out;
}

// 4. Long-range dependence of the increment sequence.
Outcome long_range_dependence() {
    Outcome out;
    const TimeGrid grid(0.0, 1.0, 128);
    const std::size_t paths = 10000;
    for (double h : {0.3, 0.5, 0.7}) {
        HurstIndex hh(h);
        auto ens = gen_cholesky_oracle(hh, grid, VolatilityScenario::constant(1.0), paths,
                                       SeedSpec{kSeed + 4, seed_stream::kPaths}, 0);
        double worst = 0.0;
        std::size_t bad = 0;
        for (std::size_t lag = 1; lag <= 10; ++lag) {
            auto est = increment_autocov(ens, lag);
            const double exact = fgn_autocov(h, lag, grid.dt(), 1.0);
            const double dev = std::abs(est.mean - exact) / est.se;
            worst = std::max(worst, dev);
            if (dev > 3.0) ++bad;
            if (h == 0.5) out.require(exact == 0.0, "closed form not 0 at H=1/2");
        }
        out.require(bad == 0,
                    "H=" + fmt(h) + ": " + std::to_string(bad) + " lags outside 3 se");
        out.note("H=" + fmt(h) + " worst " + fmt(worst) + " se");
    }
    // Regimes: partial sums settle toward -1/2 for H < 1/2 and grow without
    // bound for H > 1/2.
    out.require(std::abs(fgn_autocov_partial_sum(0.3, 10000000) + 0.5) < 1e-3,
                "H=0.3 partial sums do not settle at -1/2");
    out.require(fgn_autocov_partial_sum(0.3, 100) > fgn_autocov_partial_sum(0.3, 10000),
                "H=0.3 partial sums not decreasing");
    out.require(fgn_autocov_partial_sum(0.7, 1000000) > fgn_autocov_partial_sum(0.7, 10000),
                "H=0.7 partial sums not increasing");
    out.require(fgn_autocov_partial_sum(0.7, 1000000) > 10.0, "H=0.7 partial sums stay small");
    return out;
}

// 5. The stochastic-integral lemma at the chaos-coefficient level.
Outcome wick_lemma() {
    Outcome out;
    for (double h : {0.3, 0.5, 0.7}) {
        NoiseContext ctx = make_noise_context(HurstIndex(h), 64);
        WickLemmaResult res = wick_lemma_check(ctx, 1.0, 192);
        out.require(res.max_residual < 1e-10,
                    "H=" + fmt(h) + " residual " + fmt(res.max_residual));
        out.require(res.ito_constant == res.expected_constant,
                    "H=" + fmt(h) + " order-0 constant " + fmt(res.ito_constant) + " != " +
                        fmt(res.expected_constant));
        out.note("H=" + fmt(h) + " residual " + fmt(res.max_residual));
    }
    return out;
}

// 6. Change-of-variable catalog: x^2 and exp(a x).
Outcome ito_formula() {
    Outcome out;
    NoiseContext ctx = make_noise_context(HurstIndex(0.7), 12);

    ItoCatalogResult sq = ito_check_square(ctx, 1.0, 96, 4);
    out.require(sq.coeff_residual < 1e-6, "square residual " + fmt(sq.coeff_residual));

    ItoCatalogResult ex = ito_check_exp(ctx, 0.4, 1.0, 96, 5);
    out.require(ex.coeff_residual < 1e-6, "exp residual " + fmt(ex.coeff_residual));
    out.note("residual sq/exp " + fmt(sq.coeff_residual) + "/" + fmt(ex.coeff_residual));

    // Monte Carlo over the noise coordinates against the order-0 coefficient.
    auto mc_check = [&](const ChaosExpansion& lhs, const char* tag) {
        const std::size_t n = 20000;
        std::vector<double> vals(n);
        for (std::size_t p = 0; p < n; ++p) {
            PathRng r(SeedSpec{kSeed + 5, seed_stream::kVerify}, p);
            std::vector<double> xi(ctx.num_coords);
            for (auto& x : xi) x = r.next_gaussian();
            vals[p] = lhs.evaluate(xi);
        }
        double mean = pairwise_sum(vals) / static_cast<double>(n);
        double var = 0.0;
        for (double v : vals) var += (v - mean) * (v - mean);
        double se = std::sqrt(var / static_cast<double>(n - 1) / static_cast<double>(n));
        double dev = std::abs(mean - lhs.expectation()) / se;
        out.require(dev < 3.0, std::string(tag) + " MC " + fmt(dev) + " se");
    };
    mc_check(ordinary_power(ctx.fgbm_form(1.0), 2, 4), "square");
    LinearForm scaled = ctx.fgbm_form(1.0);
    for (double& c : scaled.coeffs) c *= 0.4;
    mc_check(ordinary_exp(scaled, 5), "exp");
    return out;
}

// 7. Martingale-representation reconstruction for low-degree claims.
Outcome clark_ocone() {
    Outcome out;
    NoiseContext ctx = make_noise_context(HurstIndex(0.7), 16);
    for (unsigned deg = 1; deg <= 3; ++deg) {
        WickPolynomial p;
        p.terms.push_back({{deg}, 1.0});
        ClarkOconeResult res = clark_ocone_reconstruct(ctx, p, 1.0, 128, 3);
        out.require(res.max_coeff_residual < 1e-10,
                    "degree " + std::to_string(deg) + " residual " +
                        fmt(res.max_coeff_residual));
    }
    WickPolynomial combo;
    combo.terms.push_back({{3}, 0.5});
    combo.terms.push_back({{2}, -1.0});
    combo.terms.push_back({{1}, 2.0});
    combo.terms.push_back({{0}, 0.3});
    ClarkOconeResult res = clark_ocone_reconstruct(ctx, combo, 1.0, 128, 3);
    out.require(res.max_coeff_residual < 1e-10, "combo residual " + fmt(res.max_coeff_residual));
    out.require(res.expectation == 0.3, "combo expectation " + fmt(res.expectation));
    out.note("combo residual " + fmt(res.max_coeff_residual));
    return out;
}

// 8. Nonlinear heat solver against its quadratic closed forms.
Outcome g_heat() {
    Outcome out;
    auto quad_profile = [](double sign) {
        std::vector<double> v(401);
        for (std::size_t i = 0; i <= 400; ++i) {
            double x = -10.0 + 20.0 * static_cast<double>(i) / 400.0;
            v[i] = sign * x * x;
        }
        return SampledFunction(-10.0, 10.0, std::move(v));
    };
    const TimeGrid tg(0.0, 1.0, 400);

    auto deg = solve_g_heat(quad_profile(1.0), VolatilityBand(0.7, 0.7), tg);
    double got = deg.value_at(1.0, 0.0);
    out.require(std::abs(got / 0.49 - 1.0) < 5e-3,
                "degenerate u(1,0) = " + fmt(got) + " vs 0.49");

    const VolatilityBand band(0.5, 1.0);
    auto up = solve_g_heat(quad_profile(1.0), band, tg);
    out.require(up.cfl_ratio <= 1.0 + 1e-9, "step-size ratio " + fmt(up.cfl_ratio));
    double u_up = up.value_at(1.0, 0.0);
    out.require(std::abs(u_up / 1.0 - 1.0) < 5e-3, "+x^2 u(1,0) = " + fmt(u_up) + " vs 1");

    auto dn = solve_g_heat(quad_profile(-1.0), band, tg);
    double u_dn = dn.value_at(1.0, 0.0);
    out.require(std::abs(u_dn / -0.25 - 1.0) < 5e-3, "-x^2 u(1,0) = " + fmt(u_dn) + " vs -0.25");
    out.note("u(1,0) deg/up/dn " + fmt(got) + "/" + fmt(u_up) + "/" + fmt(u_dn));
    return out;
}

// 9. Bid-ask pricing across the three engines.
Outcome pricing() {
    Outcome out;
    const Payoff call{PayoffKind::Call, 100.0};

    MarketModel m{100.0, 0.0, HurstIndex(0.5), VolatilityBand(0.1, 0.3), 1.0};
    auto fam = make_scenario_family(m.band, 2, m.maturity);
    const double oracle_hi = bs_closed_form(100.0, 100.0, 0.0, 0.09, 1.0, true);
    const double oracle_lo = bs_closed_form(100.0, 100.0, 0.0, 0.01, 1.0, true);

    PricingConfig pde;
    pde.engine = PricingEngine::Pde;
    PriceQuote qp = price_bid_ask(m, call, fam, pde);
    out.require(std::abs(qp.bid / oracle_hi - 1.0) < 5e-3,
                "pde bid " + fmt(qp.bid) + " vs " + fmt(oracle_hi));
    out.require(std::abs(qp.ask / oracle_lo - 1.0) < 5e-3,
                "pde ask " + fmt(qp.ask) + " vs " + fmt(oracle_lo));
    out.require(qp.bid >= qp.ask, "pde bid < ask");

    PricingConfig mc;
    mc.engine = PricingEngine::ScenarioMC;
    mc.num_paths = std::size_t{1} << 17;
    mc.seed = SeedSpec{kSeed + 6, seed_stream::kPricing};
    PriceQuote qm = price_bid_ask(m, call, fam, mc);
    out.require(std::abs(qm.bid - oracle_hi) < 3.0 * qm.bid_se,
                "mc bid off by " + fmt(std::abs(qm.bid - oracle_hi) / qm.bid_se) + " se");
    out.require(std::abs(qm.ask - oracle_lo) < 3.0 * qm.ask_se,
                "mc ask off by " + fmt(std::abs(qm.ask - oracle_lo) / qm.ask_se) + " se");
    out.require(qm.bid >= qm.ask, "mc bid < ask");

    MarketModel m7{100.0, 0.0, HurstIndex(0.7), VolatilityBand(0.1, 0.3), 1.0};
    auto fam7 = make_scenario_family(m7.band, 2, m7.maturity);
    PriceQuote qc = price_bid_ask(m7, call, fam7, PricingConfig{});
    const double v_hi = 0.3 * 0.3 * std::pow(1.0, 1.4);
    const double v_lo = 0.1 * 0.1 * std::pow(1.0, 1.4);
    out.require(qc.bid == bs_closed_form(100.0, 100.0, 0.0, v_hi, 1.0, true),
                "closed-form bid not exactly the oracle value");
    out.require(qc.ask == bs_closed_form(100.0, 100.0, 0.0, v_lo, 1.0, true),
                "closed-form ask not exactly the oracle value");
    out.require(qc.bid >= qc.ask, "closed-form bid < ask");
    out.note("pde " + fmt(qp.bid) + "/" + fmt(qp.ask) + ", mc " + fmt(qm.bid) + "/" +
             fmt(qm.ask) + ", analytic " + fmt(qc.bid) + "/" + fmt(qc.ask));
    return out;
}

// 10. Drift-removal kernel: round trip and interior shape.
Outcome girsanov() {
    Outcome out;
    std::vector<double> ones(65, 1.0);
    SampledFunction gprime(0.0, 1.0, std::move(ones));
    for (double h : {0.3, 0.7}) {
        DriftRemoval res = girsanov_phi(gprime, HurstIndex(h), 1.0, {});
        out.require(res.roundtrip_rel_err < 0.02,
                    "H=" + fmt(h) + " round trip " + fmt(res.roundtrip_rel_err));
        out.require(res.shape_corr > 0.999, "H=" + fmt(h) + " shape corr " + fmt(res.shape_corr));
        out.note("H=" + fmt(h) + " err " + fmt(res.roundtrip_rel_err) + " corr " +
                 fmt(res.shape_corr));
    }
    DriftRemoval flat = girsanov_phi(gprime, HurstIndex(0.5), 1.0, {});
    double worst = 0.0;
    for (double v : flat.phi.values) worst = std::max(worst, std::abs(v - 1.0));
    out.require(worst < 1e-12, "H=0.5 identity off by " + fmt(worst));
    return out;
}

// 11. Sublinear-expectation axioms on a randomized payoff suite.
Outcome axioms() {
    Outcome out;
    const HurstIndex h(0.7);
    const TimeGrid grid(0.0, 1.0, 8);
    const ScenarioFamily fam = make_scenario_family(VolatilityBand(0.1, 0.3), 2, 1.0);
    const SeedSpec seed{kSeed + 7, seed_stream::kPaths};
    const std::size_t paths = 1 << 12;

    auto eval = [&](const PathFunctional& f) {
        return upper_lower_expectation_mc(f, h, grid, fam, paths, seed);
    };

    for (int trial = 0; trial < 5; ++trial) {
        PathRng r(SeedSpec{kSeed + 8, seed_stream::kVerify}, static_cast<std::uint64_t>(trial));
        std::vector<double> c(grid.size());
        for (auto& ci : c) ci = 0.5 * r.next_gaussian();
        const double d = 0.3 * std::abs(r.next_gaussian());
        const std::size_t kq = 1 + (r.next_u64() % grid.n);
        const std::size_t km = 1 + (r.next_u64() % grid.n);

        PathFunctional F = [c, d, kq](const double* p, const TimeGrid& g) {
            double s = 0.0;
            for (std::size_t i = 1; i <= g.n; ++i) s += c[i] * p[i];
            return s + d * p[kq] * p[kq];
        };
        PathFunctional G = [F, km](const double* p, const TimeGrid& g) {
            return F(p, g) + 0.2 * std::abs(p[km]);
        };
        PathFunctional twoF = [F](const double* p, const TimeGrid& g) { return 2.0 * F(p, g); };
        PathFunctional halfF = [F](const double* p, const TimeGrid& g) { return 0.5 * F(p, g); };
        PathFunctional FplusG = [F, G](const double* p, const TimeGrid& g) {
            return F(p, g) + G(p, g);
        };

        auto rF = eval(F), rG = eval(G), r2 = eval(twoF), rh = eval(halfF), rs = eval(FplusG);

        out.require(rF.upper >= rF.lower, "upper < lower");
        out.require(rF.upper <= rG.upper && rF.lower <= rG.lower,
                    "monotonicity violated on trial " + std::to_string(trial));
        out.require(r2.upper == 2.0 * rF.upper && r2.lower == 2.0 * rF.lower,
                    "homogeneity (lambda=2) not exact on trial " + std::to_string(trial));
        out.require(rh.upper == 0.5 * rF.upper && rh.lower == 0.5 * rF.lower,
                    "homogeneity (lambda=1/2) not exact on trial " + std::to_string(trial));
        const double slack = 3.0 * std::sqrt(rF.upper_se * rF.upper_se +
                                             rG.upper_se * rG.upper_se +
                                             rs.upper_se * rs.upper_se);
        out.require(rs.upper <= rF.upper + rG.upper + slack,
                    "sub-additivity violated on trial " + std::to_string(trial));
    }

    PathFunctional constant = [](const double*, const TimeGrid&) { return 3.14159; };
    auto rc = upper_lower_expectation_mc(constant, h, grid, fam, paths, seed);
    out.require(rc.upper == 3.14159 && rc.lower == 3.14159, "constants not preserved exactly");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double budget_seconds;
    };
    const std::vector<Criterion> criteria = {
        {1, "covariance-law", covariance_law, 120.0},
        {2, "cross-method-synthesis", cross_method, 300.0},
        {3, "spectral-energy-identity", parseval, 60.0},
        {4, "long-range-dependence", long_range_dependence, 120.0},
        {5, "stochastic-integral-lemma", wick_lemma, 60.0},
        {6, "change-of-variable-catalog", ito_formula, 60.0},
        {7, "representation-reconstruction", clark_ocone, 60.0},
        {8, "nonlinear-heat-solver", g_heat, 60.0},
        {9, "bid-ask-pricing", pricing, 120.0},
        {10, "drift-removal", girsanov, 60.0},
        {11, "sublinear-axioms", axioms, 60.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome res;
        try {
            res = c.run();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            res.pass = false;
            res.detail << "; over time budget " << c.budget_seconds << "s";
        }
        if (!res.pass) ++failures;
        std::printf("%s %2d %-28s (%6.1fs) %s\n", res.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    res.detail.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
