#include "fgbm/clark_ocone.hpp"

#include <stdexcept>

#include "quad.hpp"

namespace fgbm {

std::size_t WickPolynomial::arity() const {
    std::size_t n = 0;
    for (const auto& t : terms) n = std::max(n, t.exps.size());
    return n;
}

WickPolynomial WickPolynomial::partial(std::size_t i) const {
    WickPolynomial d;
    for (const auto& t : terms) {
        if (i >= t.exps.size() || t.exps[i] == 0) continue;
        Term dt = t;
        dt.coeff *= static_cast<double>(t.exps[i]);
        dt.exps[i] -= 1;
        d.terms.push_back(dt);
    }
    return d;
}

ChaosExpansion apply_wick_polynomial(const WickPolynomial& p, const std::vector<LinearForm>& vars,
                                     std::size_t num_coords, std::size_t max_degree) {
    ChaosExpansion acc(num_coords, max_degree);
    for (const auto& term : p.terms) {
        ChaosExpansion prod = ChaosExpansion::constant(term.coeff, num_coords, max_degree);
        for (std::size_t i = 0; i < term.exps.size(); ++i) {
            if (term.exps[i] == 0) continue;
            const ChaosExpansion base = ChaosExpansion::linear(vars[i], max_degree);
            for (unsigned e = 0; e < term.exps[i]; ++e) prod = prod.wick(base);
        }
        acc += prod;
    }
    return acc;
}

namespace {

ClarkOconeResult reconstruct_impl(
    const NoiseContext& ctx, const WickPolynomial& p,
    const std::function<std::vector<LinearForm>(double)>& vars_at,
    const std::function<std::vector<double>(double)>& kernel_values, double horizon,
    std::size_t panels, std::size_t max_degree) {
    const std::size_t n = p.arity();
    std::vector<WickPolynomial> partials;
    partials.reserve(n);
    for (std::size_t i = 0; i < n; ++i) partials.push_back(p.partial(i));

    ClarkOconeResult out{ChaosExpansion(ctx.num_coords, max_degree),
                         ChaosExpansion(ctx.num_coords, max_degree), 0.0, 0.0};
    out.original = apply_wick_polynomial(p, vars_at(horizon), ctx.num_coords, max_degree);
    out.expectation = out.original.expectation();

    auto psi = [&](double t) {
        const std::vector<LinearForm> vars = vars_at(t);
        const std::vector<double> fv = kernel_values(t);
        ChaosExpansion acc(ctx.num_coords, max_degree);
        for (std::size_t i = 0; i < n; ++i) {
            if (fv[i] == 0.0 || partials[i].terms.empty()) continue;
            acc += apply_wick_polynomial(partials[i], vars, ctx.num_coords, max_degree) * fv[i];
        }
        return acc;
    };

    out.reconstructed =
        ChaosExpansion::constant(out.expectation, ctx.num_coords, max_degree) +
        wick_ito_integral(ctx, psi, 0.0, horizon, panels, max_degree);
    out.max_coeff_residual = ChaosExpansion::max_coeff_diff(out.original, out.reconstructed);
    return out;
}

}  // namespace

ClarkOconeResult clark_ocone_reconstruct(const NoiseContext& ctx, const WickPolynomial& p,
                                         const std::vector<std::function<double(double)>>& kernels,
                                         double horizon, std::size_t panels,
                                         std::size_t max_degree) {
    const std::size_t n = p.arity();
    if (kernels.size() < n) throw std::invalid_argument("kernel list shorter than polynomial arity");

    auto vars_at = [&, n](double t) {
        std::vector<LinearForm> vars(n);
        for (std::size_t i = 0; i < n; ++i) {
            LinearForm f;
            f.coeffs.assign(ctx.num_coords, 0.0);
            vars[i] = f;
        }
        if (t > 0.0) {
            const std::size_t sub = std::max<std::size_t>(
                1, static_cast<std::size_t>(static_cast<double>(panels) * t / horizon + 0.5));
            const double h = t / static_cast<double>(sub);
            std::vector<double> w(ctx.num_coords);
            for (std::size_t pn = 0; pn < sub; ++pn) {
                const double c = h * (static_cast<double>(pn) + 0.5);
                const double r = 0.5 * h;
                for (int sgn = -1; sgn <= 1; sgn += 2)
                    for (int q = 0; q < 5; ++q) {
                        const double s = c + sgn * r * quad::kGL10Node[q];
                        const double wt = r * quad::kGL10Weight[q];
                        ctx.basis->gnoise(s, w.data());
                        for (std::size_t i = 0; i < n; ++i) {
                            const double fs = kernels[i](s) * wt;
                            if (fs == 0.0) continue;
                            for (std::size_t k = 0; k < ctx.num_coords; ++k)
                                vars[i].coeffs[k] += fs * w[k];
                        }
                    }
            }
        }
        return vars;
    };
    auto kernel_values = [&, n](double t) {
        std::vector<double> fv(n);
        for (std::size_t i = 0; i < n; ++i) fv[i] = kernels[i](t);
        return fv;
    };
    return reconstruct_impl(ctx, p, vars_at, kernel_values, horizon, panels, max_degree);
}

ClarkOconeResult clark_ocone_reconstruct(const NoiseContext& ctx, const WickPolynomial& p,
                                         double horizon, std::size_t panels,
                                         std::size_t max_degree) {
    const std::size_t n = p.arity();
    auto vars_at = [&, n](double t) {
        LinearForm f;
        f.coeffs = ctx.basis->fgbm_coeff(t);
        return std::vector<LinearForm>(n, f);
    };
    auto kernel_values = [n](double) { return std::vector<double>(n, 1.0); };
    return reconstruct_impl(ctx, p, vars_at, kernel_values, horizon, panels, max_degree);
}

}  // namespace fgbm
