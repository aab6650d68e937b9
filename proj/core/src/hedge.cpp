#include "fgbm/hedge.hpp"

#include <cmath>
#include <stdexcept>

namespace fgbm {

HedgeRatio hedge_ratio(const NoiseContext& ctx, const MarketModel& m,
                       const WickPolynomial& claim, double t, double sigma,
                       const std::vector<double>& xi, std::size_t max_degree) {
    m.validate();
    const std::size_t n = claim.arity();
    if (n == 0) throw std::invalid_argument("hedge_ratio: claim has no variables");
    if (!(t >= 0.0 && t <= m.maturity))
        throw std::invalid_argument("hedge_ratio: time outside [0, maturity]");
    if (xi.size() < ctx.num_coords)
        throw std::invalid_argument("hedge_ratio: noise coordinate vector too short");
    if (!(sigma > 0.0)) throw std::invalid_argument("hedge_ratio: need sigma > 0");

    // Variables stopped at t, volatility folded into the coefficients.
    LinearForm stopped;
    stopped.coeffs = ctx.basis->fgbm_coeff(t);
    for (double& c : stopped.coeffs) c *= sigma;
    const std::vector<LinearForm> vars(n, stopped);

    // Representation integrand against the scaled process itself:
    // psi(t) = sum_i (d_i P)-wick(vars). The sigma in the integrator and the
    // sigma in the variables' kernels cancel, so no extra factor appears.
    ChaosExpansion psi(ctx.num_coords, max_degree);
    for (std::size_t i = 0; i < n; ++i) {
        const WickPolynomial d = claim.partial(i);
        if (d.terms.empty()) continue;
        psi += apply_wick_polynomial(d, vars, ctx.num_coords, max_degree);
    }

    HedgeRatio out{std::move(psi), 0.0, 0.0};

    const double H = m.hurst.value;
    double b_unit = 0.0;
    const std::vector<double> a = ctx.basis->fgbm_coeff(t);
    for (std::size_t k = 0; k < ctx.num_coords; ++k) b_unit += a[k] * xi[k];
    out.stock = m.spot * std::exp(m.rate * t + sigma * b_unit -
                                  0.5 * sigma * sigma * std::pow(t, 2.0 * H));
    out.value = std::exp(-m.rate * (m.maturity - t)) * out.integrand.evaluate(xi) / out.stock;
    return out;
}

}  // namespace fgbm
