#include "fgbm/chaos_calculus.hpp"

#include <stdexcept>

#include "quad.hpp"

namespace fgbm {

namespace {

// Composite GL-10 accumulation of an expansion-valued integrand.
ChaosExpansion integrate_expansions(const std::function<ChaosExpansion(double)>& y, double t0,
                                    double t1, std::size_t panels, std::size_t num_coords,
                                    std::size_t max_degree) {
    ChaosExpansion acc(num_coords, max_degree);
    const double h = (t1 - t0) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double c = t0 + h * (static_cast<double>(p) + 0.5);
        const double r = 0.5 * h;
        for (int i = 0; i < 5; ++i) {
            const double d = r * quad::kGL10Node[i];
            const double w = r * quad::kGL10Weight[i];
            acc += y(c - d) * w;
            acc += y(c + d) * w;
        }
    }
    return acc;
}

}  // namespace

ChaosExpansion time_integral(const std::function<ChaosExpansion(double)>& y, double t0, double t1,
                             std::size_t panels, std::size_t num_coords, std::size_t max_degree) {
    return integrate_expansions(y, t0, t1, panels, num_coords, max_degree);
}

ChaosExpansion wick_ito_integral(const NoiseContext& ctx,
                                 const std::function<ChaosExpansion(double)>& y, double t0,
                                 double t1, std::size_t panels, std::size_t max_degree) {
    auto integrand = [&](double s) {
        return y(s).wick(ctx.gnoise(s, max_degree));
    };
    return integrate_expansions(integrand, t0, t1, panels, ctx.num_coords, max_degree);
}

ChaosExpansion MalliavinGradient::at(double t) const {
    const std::vector<double> e = ctx.basis->inverse_basis(t);
    ChaosExpansion out(ctx.num_coords, comps.empty() ? 0 : comps.front().max_degree());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (e[i] == 0.0) continue;
        out += comps[i] * e[i];
    }
    return out;
}

MalliavinGradient malliavin_derivative(const NoiseContext& ctx, const ChaosExpansion& f) {
    MalliavinGradient g;
    g.ctx = ctx;
    g.comps.assign(ctx.num_coords, ChaosExpansion(ctx.num_coords, f.max_degree()));
    for (const auto& [alpha, c] : f.terms()) {
        for (const auto& [coord, e] : alpha.terms()) {
            if (coord >= ctx.num_coords)
                throw std::invalid_argument("expansion uses more coordinates than the context");
            g.comps[coord].add_term(alpha.minus_one(coord), c * static_cast<double>(e));
        }
    }
    return g;
}

std::vector<double> window_matrix(const NoiseContext& ctx, double t, std::size_t panels) {
    const std::size_t k = ctx.num_coords;
    std::vector<double> p(k * k, 0.0);
    const double h = t / static_cast<double>(panels);
    std::vector<double> e(k), w(k);
    for (std::size_t pn = 0; pn < panels; ++pn) {
        const double c = h * (static_cast<double>(pn) + 0.5);
        const double r = 0.5 * h;
        for (int i = -5; i < 5; ++i) {
            const int m = i < 0 ? -i - 1 : i;
            const double s = i < 0 ? c - r * quad::kGL10Node[m] : c + r * quad::kGL10Node[m];
            const double wt = r * quad::kGL10Weight[m];
            ctx.basis->inverse_basis(s, e.data());
            ctx.basis->gnoise(s, w.data());
            for (std::size_t a = 0; a < k; ++a) {
                const double wa = wt * w[a];
                if (wa == 0.0) continue;
                double* row = p.data() + a * k;
                for (std::size_t b = 0; b < k; ++b) row[b] += wa * e[b];
            }
        }
    }
    return p;
}

ChaosExpansion quasi_conditional(const NoiseContext& ctx, const ChaosExpansion& f, double t,
                                 std::size_t panels) {
    const std::size_t k = ctx.num_coords;
    for (const auto& [alpha, c] : f.terms())
        if (alpha.degree() > 2)
            throw std::invalid_argument("quasi-conditional expectation implemented for degree <= 2");

    const std::vector<double> p = window_matrix(ctx, t, panels);
    ChaosExpansion out(k, f.max_degree());
    out.add_term(MultiIndex{}, f.expectation());

    // Order 1: coefficient vector maps through P.
    std::vector<double> c1(k, 0.0);
    // Order 2 as a symmetric matrix S: H_{2e_j} -> S_jj, H_{e_i+e_j} -> 2 S_ij.
    std::vector<double> s2(k * k, 0.0);
    bool has1 = false, has2 = false;
    for (const auto& [alpha, c] : f.terms()) {
        const auto& terms = alpha.terms();
        if (alpha.degree() == 1) {
            c1[terms[0].first] = c;
            has1 = true;
        } else if (alpha.degree() == 2) {
            has2 = true;
            if (terms.size() == 1) {
                s2[terms[0].first * k + terms[0].first] = c;
            } else {
                s2[terms[0].first * k + terms[1].first] = 0.5 * c;
                s2[terms[1].first * k + terms[0].first] = 0.5 * c;
            }
        }
    }
    if (has1) {
        for (std::size_t a = 0; a < k; ++a) {
            double acc = 0.0;
            const double* row = p.data() + a * k;
            for (std::size_t b = 0; b < k; ++b) acc += row[b] * c1[b];
            if (acc != 0.0) out.add_term(MultiIndex::unit(a), acc);
        }
    }
    if (has2) {
        // S~ = P S P^T, then back to Hermite coefficients.
        std::vector<double> tmp(k * k, 0.0), s2w(k * k, 0.0);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                double acc = 0.0;
                for (std::size_t q = 0; q < k; ++q) acc += p[a * k + q] * s2[q * k + b];
                tmp[a * k + b] = acc;
            }
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                double acc = 0.0;
                for (std::size_t q = 0; q < k; ++q) acc += tmp[a * k + q] * p[b * k + q];
                s2w[a * k + b] = acc;
            }
        for (std::size_t a = 0; a < k; ++a) {
            const double diag = s2w[a * k + a];
            if (diag != 0.0) {
                MultiIndex m = MultiIndex::unit(a);
                out.add_term(m.plus(m), diag);
            }
            for (std::size_t b = a + 1; b < k; ++b) {
                const double off = s2w[a * k + b] + s2w[b * k + a];
                if (off != 0.0) out.add_term(MultiIndex::unit(a).plus(MultiIndex::unit(b)), off);
            }
        }
    }
    return out;
}

}  // namespace fgbm
