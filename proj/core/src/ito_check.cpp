#include "fgbm/ito_check.hpp"

#include <cmath>

#include "fgbm/chaos_calculus.hpp"

namespace fgbm {

WickLemmaResult wick_lemma_check(const NoiseContext& ctx, double horizon, std::size_t panels) {
    const std::size_t deg = 2;
    auto b_at = [&](double s) { return ctx.fgbm(s, deg); };
    const ChaosExpansion lhs = wick_ito_integral(ctx, b_at, 0.0, horizon, panels, deg);
    const ChaosExpansion half_square = ctx.fgbm(horizon, deg).wick_pow(2) * 0.5;

    WickLemmaResult out;
    out.max_residual = ChaosExpansion::max_coeff_diff(lhs, half_square);
    const double t2h = std::pow(horizon, 2.0 * ctx.h.value);
    // Ordinary square with the analytic variance: B^2 = B^{wick 2} + T^{2H}.
    const ChaosExpansion ordinary_half =
        half_square + ChaosExpansion::constant(0.5 * t2h, ctx.num_coords, deg);
    out.ito_constant = (lhs - ordinary_half).expectation();
    out.expected_constant = -0.5 * t2h;
    out.var_gap = std::abs(ctx.truncated_variance(horizon) - t2h);
    return out;
}

namespace {

ItoCatalogResult catalog_result(const NoiseContext& ctx, double horizon,
                                const ChaosExpansion& lhs, const ChaosExpansion& rhs) {
    ItoCatalogResult out;
    out.coeff_residual = ChaosExpansion::max_coeff_diff(lhs, rhs);
    out.dropped_mass = lhs.dropped_mass() + rhs.dropped_mass();
    out.var_gap =
        std::abs(ctx.truncated_variance(horizon) - std::pow(horizon, 2.0 * ctx.h.value));
    out.lhs_expectation = lhs.expectation();
    return out;
}

}  // namespace

ItoCatalogResult ito_check_square(const NoiseContext& ctx, double horizon, std::size_t panels,
                                  std::size_t max_degree) {
    const ChaosExpansion lhs = ordinary_power(ctx.fgbm_form(horizon), 2, max_degree);
    auto fx = [&](double s) { return ctx.fgbm(s, max_degree) * 2.0; };
    auto corr = [&](double s) {
        return ChaosExpansion::constant(ctx.truncated_variance_deriv(s), ctx.num_coords,
                                        max_degree);
    };
    const ChaosExpansion rhs = wick_ito_integral(ctx, fx, 0.0, horizon, panels, max_degree) +
                               time_integral(corr, 0.0, horizon, panels, ctx.num_coords,
                                             max_degree);
    return catalog_result(ctx, horizon, lhs, rhs);
}

ItoCatalogResult ito_check_cube(const NoiseContext& ctx, double horizon, std::size_t panels,
                                std::size_t max_degree) {
    const ChaosExpansion lhs = ordinary_power(ctx.fgbm_form(horizon), 3, max_degree);
    auto fx = [&](double s) { return ordinary_power(ctx.fgbm_form(s), 2, max_degree) * 3.0; };
    auto corr = [&](double s) {
        return ctx.fgbm(s, max_degree) * (3.0 * ctx.truncated_variance_deriv(s));
    };
    const ChaosExpansion rhs = wick_ito_integral(ctx, fx, 0.0, horizon, panels, max_degree) +
                               time_integral(corr, 0.0, horizon, panels, ctx.num_coords,
                                             max_degree);
    return catalog_result(ctx, horizon, lhs, rhs);
}

ItoCatalogResult ito_check_exp(const NoiseContext& ctx, double alpha, double horizon,
                               std::size_t panels, std::size_t max_degree) {
    auto scaled_form = [&](double s) {
        LinearForm f = ctx.fgbm_form(s);
        for (double& c : f.coeffs) c *= alpha;
        return f;
    };
    const ChaosExpansion lhs = ordinary_exp(scaled_form(horizon), max_degree);
    auto fx = [&](double s) { return ordinary_exp(scaled_form(s), max_degree) * alpha; };
    auto corr = [&](double s) {
        return ordinary_exp(scaled_form(s), max_degree) *
               (0.5 * alpha * alpha * ctx.truncated_variance_deriv(s));
    };
    const ChaosExpansion rhs =
        ChaosExpansion::constant(1.0, ctx.num_coords, max_degree) +
        wick_ito_integral(ctx, fx, 0.0, horizon, panels, max_degree) +
        time_integral(corr, 0.0, horizon, panels, ctx.num_coords, max_degree);
    return catalog_result(ctx, horizon, lhs, rhs);
}

}  // namespace fgbm
