#pragma once

#include <cstddef>
#include <vector>

#include "fgbm/sampled_function.hpp"
#include "fgbm/types.hpp"

namespace fgbm {

// Sublinear generator of the band: G(a) = (hi^2 a^+ - lo^2 a^-) / 2.
// Positively homogeneous, convex, and monotone in a.
double g_function(double alpha, const VolatilityBand& band);

// Space-time solution table of the nonlinear heat equation
//   du/dt = G(d2u/dx2),  u(0, .) = phi,
// on [x0, x1] x [t0, t1]. Row j holds the spatial profile at time point j.
struct PdeSolution {
    double x0 = 0.0;
    double x1 = 1.0;
    double t0 = 0.0;
    double t1 = 1.0;
    std::size_t nx = 0;  // space steps; nx + 1 samples per row
    std::size_t nt = 0;  // time steps; nt + 1 rows
    double cfl_ratio = 0.0;
    std::vector<double> data;  // (nt + 1) * (nx + 1), row-major in time

    double at(std::size_t j, std::size_t i) const { return data[j * (nx + 1) + i]; }
    double dx() const { return (x1 - x0) / static_cast<double>(nx); }
    double dt() const { return (t1 - t0) / static_cast<double>(nt); }

    SampledFunction row(std::size_t j) const;
    SampledFunction final_profile() const { return row(nt); }

    // Bilinear interpolation; throws outside the solution rectangle.
    double value_at(double t, double x) const;
};

// Explicit monotone marching scheme. The diffusion coefficient at each node
// follows the sign of the centered second difference (hi^2 where it is
// nonnegative, lo^2 otherwise), which is what evaluating G pointwise does.
// Endpoint values are held fixed at phi's endpoints; this is exact whenever
// phi continues linearly outside the domain, so the domain must be wide
// enough that the initial data has reached its asymptotes.
//
// Stability requires hi^2 * dt / dx^2 <= 1 (up to roundoff); a grid that
// violates the bound is rejected with the largest admissible dt in the
// message. A non-finite node aborts the march with its (step, node) location.
PdeSolution solve_g_heat(const SampledFunction& phi, const VolatilityBand& band,
                         const TimeGrid& tgrid);

}  // namespace fgbm
