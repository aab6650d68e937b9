#include "fgbm/girsanov.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fgbm/mh_operator.hpp"

namespace fgbm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Pearson correlation with a guard for (near-)constant inputs: two constant
// vectors correlate perfectly, a constant against a varying one not at all.
double shape_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    if (n < 2) return 1.0;
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - ma, db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    const double eps_a = 1e-18 * static_cast<double>(n) * (ma * ma + 1e-300);
    const double eps_b = 1e-18 * static_cast<double>(n) * (mb * mb + 1e-300);
    const bool flat_a = saa <= eps_a, flat_b = sbb <= eps_b;
    if (flat_a && flat_b) return 1.0;
    if (flat_a || flat_b) return 0.0;
    return sab / std::sqrt(saa * sbb);
}

}  // namespace

double girsanov_shape(const HurstIndex& h, double horizon, double t) {
    const double e = 0.5 - h.value;
    if (e == 0.0) return 2.0;
    return std::pow(horizon - t, e) + std::pow(t, e);
}

DriftRemoval girsanov_phi(const SampledFunction& gprime, const HurstIndex& h, double horizon,
                          const GirsanovConfig& cfg) {
    if (!(horizon > 0.0)) throw std::invalid_argument("girsanov_phi: need horizon > 0");
    if (cfg.samples < 16) throw std::invalid_argument("girsanov_phi: window grid too coarse");

    const double a = -cfg.window_mult * horizon;
    const double b = (cfg.window_mult + 1.0) * horizon;
    const std::size_t n = cfg.samples;

    // Both operator applications see the same window extent, so the DC
    // regularization frequency matches even though the grids differ.
    OperatorParams params;
    params.pad_factor = cfg.pad_factor;
    params.dc_epsilon = kPi / (static_cast<double>(cfg.pad_factor) * (b - a));

    std::vector<double> gw(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
        gw[i] = (t >= 0.0 && t <= horizon) ? value_at(gprime, t) : 0.0;
    }
    const SampledFunction g_window(a, b, std::move(gw));

    DriftRemoval out;
    out.phi_window = apply_mh_inverse(g_window, h, params);

    // Restriction to [0, horizon] at the window resolution.
    {
        const double dx = out.phi_window.dx();
        const auto i0 = static_cast<std::size_t>(std::ceil((0.0 - a) / dx - 1e-9));
        const auto i1 = static_cast<std::size_t>(std::floor((horizon - a) / dx + 1e-9));
        std::vector<double> v(out.phi_window.values.begin() + static_cast<std::ptrdiff_t>(i0),
                              out.phi_window.values.begin() + static_cast<std::ptrdiff_t>(i1) + 1);
        out.phi = SampledFunction(out.phi_window.point(i0), out.phi_window.point(i1),
                                  std::move(v));
    }

    // Round trip on a grid the inversion never saw: 3n/2 samples, same extent.
    const std::size_t nb = 3 * n / 2;
    const SampledFunction phi_b = resample(out.phi_window, a, b, nb + 1);
    const SampledFunction fwd = apply_mh(phi_b, h, params);

    const double lo = cfg.interior_frac * horizon;
    const double hi = (1.0 - cfg.interior_frac) * horizon;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i <= nb; ++i) {
        const double t = fwd.point(i);
        if (t < lo || t > hi) continue;
        const double target = value_at(gprime, t);
        const double d = fwd.values[i] - target;
        num += d * d;
        den += target * target;
    }
    out.roundtrip_rel_err = den > 0.0 ? std::sqrt(num / den)
                                      : (num > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);

    // Shape diagnostic against the constant-drift interior profile.
    std::vector<double> pv, sv;
    for (std::size_t i = 0; i < out.phi.size(); ++i) {
        const double t = out.phi.point(i);
        if (t < lo || t > hi) continue;
        pv.push_back(out.phi.values[i]);
        sv.push_back(girsanov_shape(h, horizon, t));
    }
    out.shape_corr = shape_correlation(pv, sv);

    out.flagged = !(out.roundtrip_rel_err <= cfg.tolerance);
    return out;
}

}  // namespace fgbm
