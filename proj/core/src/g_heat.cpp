#include "fgbm/g_heat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fgbm {

double g_function(double alpha, const VolatilityBand& band) {
    return 0.5 * (alpha >= 0.0 ? band.hi * band.hi * alpha : band.lo * band.lo * alpha);
}

SampledFunction PdeSolution::row(std::size_t j) const {
    if (j > nt) throw std::out_of_range("PdeSolution::row: index past final time");
    const auto* base = data.data() + j * (nx + 1);
    return SampledFunction(x0, x1, std::vector<double>(base, base + nx + 1));
}

double PdeSolution::value_at(double t, double x) const {
    if (t < t0 || t > t1 || x < x0 || x > x1)
        throw std::out_of_range("PdeSolution::value_at: point outside solution rectangle");
    const double tp = (t - t0) / (t1 - t0) * static_cast<double>(nt);
    const double xp = (x - x0) / (x1 - x0) * static_cast<double>(nx);
    std::size_t j = static_cast<std::size_t>(std::floor(tp));
    std::size_t i = static_cast<std::size_t>(std::floor(xp));
    if (j >= nt) j = nt - 1;
    if (i >= nx) i = nx - 1;
    const double ft = tp - static_cast<double>(j);
    const double fx = xp - static_cast<double>(i);
    const double lo = at(j, i) * (1.0 - fx) + at(j, i + 1) * fx;
    const double hi = at(j + 1, i) * (1.0 - fx) + at(j + 1, i + 1) * fx;
    return lo * (1.0 - ft) + hi * ft;
}

PdeSolution solve_g_heat(const SampledFunction& phi, const VolatilityBand& band,
                         const TimeGrid& tgrid) {
    if (phi.size() < 3)
        throw std::invalid_argument("solve_g_heat: need at least 3 spatial samples");

    const std::size_t nx = phi.size() - 1;
    const std::size_t nt = tgrid.n;
    const double dx = phi.dx();
    const double dt = tgrid.dt();
    const double ratio = band.hi * band.hi * dt / (dx * dx);

    // Non-strict monotonicity bound: the updated node keeps a nonnegative
    // weight on its own old value exactly when ratio <= 1. A small slack
    // absorbs roundoff in dx * dx for grids tuned to sit on the bound.
    if (ratio > 1.0 + 1e-9) {
        const double dt_max = dx * dx / (band.hi * band.hi);
        throw std::invalid_argument(
            "solve_g_heat: explicit scheme unstable, hi^2*dt/dx^2 = " + std::to_string(ratio) +
            " > 1; largest admissible dt is " + std::to_string(dt_max));
    }

    PdeSolution sol;
    sol.x0 = phi.x0;
    sol.x1 = phi.x1;
    sol.t0 = tgrid.t0;
    sol.t1 = tgrid.t1;
    sol.nx = nx;
    sol.nt = nt;
    sol.cfl_ratio = ratio;
    sol.data.resize((nt + 1) * (nx + 1));

    for (std::size_t i = 0; i <= nx; ++i) sol.data[i] = phi.values[i];

    const double inv_dx2 = 1.0 / (dx * dx);
    for (std::size_t j = 0; j < nt; ++j) {
        const double* cur = sol.data.data() + j * (nx + 1);
        double* nxt = sol.data.data() + (j + 1) * (nx + 1);
        nxt[0] = cur[0];
        nxt[nx] = cur[nx];
        for (std::size_t i = 1; i < nx; ++i) {
            const double d2 = (cur[i + 1] - 2.0 * cur[i] + cur[i - 1]) * inv_dx2;
            nxt[i] = cur[i] + dt * g_function(d2, band);
            if (!std::isfinite(nxt[i]))
                throw std::runtime_error("solve_g_heat: non-finite value at time step " +
                                         std::to_string(j + 1) + ", node " + std::to_string(i));
        }
    }
    return sol;
}

}  // namespace fgbm
