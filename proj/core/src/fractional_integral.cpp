#include "fgbm/fractional_integral.hpp"

#include <cmath>
#include <stdexcept>

namespace fgbm {

namespace {

// Int_{x <= tau} (tau - x)^{alpha - 1} f(x) dx with f linear on each cell.
// For a cell [a, b] below tau with end values (fl, fr), substituting
// u = tau - x in [B, A] gives
//   (fl + s A) (A^a - B^a) / a - s (A^{a+1} - B^{a+1}) / (a + 1),
// with s the cell slope and A = tau - a, B = tau - b.
double powerlaw_weighted(const SampledFunction& f, double alpha, double tau) {
    if (tau <= f.x0) return 0.0;
    const double dx = f.dx();
    const double a1 = alpha + 1.0;
    double acc = 0.0;
    const std::size_t ncell = f.size() - 1;
    double Apow = std::pow(tau - f.x0, alpha);
    double Apow1 = Apow * (tau - f.x0);
    for (std::size_t c = 0; c < ncell; ++c) {
        const double xa = f.x0 + dx * static_cast<double>(c);
        if (xa >= tau) break;
        const double xb = xa + dx;
        const double A = tau - xa;
        const double fl = f.values[c];
        const double s = (f.values[c + 1] - fl) / dx;
        double Bpow, Bpow1;
        if (xb >= tau) {
            Bpow = 0.0;
            Bpow1 = 0.0;
        } else {
            const double B = tau - xb;
            Bpow = std::pow(B, alpha);
            Bpow1 = Bpow * B;
        }
        acc += (fl + s * A) * (Apow - Bpow) / alpha - s * (Apow1 - Bpow1) / a1;
        Apow = Bpow;
        Apow1 = Bpow1;
    }
    return acc;
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("fractional integral: order must be positive, got " +
                                    std::to_string(alpha));
}

}  // namespace

double liouville_integral_point(const SampledFunction& f, double alpha, double t) {
    check_alpha(alpha);
    return powerlaw_weighted(f, alpha, t) / std::tgamma(alpha);
}

SampledFunction liouville_integral(const SampledFunction& f, double alpha) {
    check_alpha(alpha);
    const double inv_gamma = 1.0 / std::tgamma(alpha);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = powerlaw_weighted(f, alpha, f.point(i)) * inv_gamma;
    return SampledFunction(f.x0, f.x1, std::move(out));
}

double marchaud_integral_point(const SampledFunction& f, double alpha, double t) {
    check_alpha(alpha);
    return (powerlaw_weighted(f, alpha, t) - powerlaw_weighted(f, alpha, 0.0)) /
           std::tgamma(alpha);
}

std::vector<double> marchaud_integral(const SampledFunction& f, double alpha,
                                      const std::vector<double>& ts) {
    check_alpha(alpha);
    const double base = powerlaw_weighted(f, alpha, 0.0);
    const double inv_gamma = 1.0 / std::tgamma(alpha);
    std::vector<double> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        out[i] = (powerlaw_weighted(f, alpha, ts[i]) - base) * inv_gamma;
    return out;
}

}  // namespace fgbm
