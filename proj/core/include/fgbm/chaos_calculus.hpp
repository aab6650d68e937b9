#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fgbm/chaos_noise.hpp"
#include "fgbm/expansion.hpp"

namespace fgbm {

// Int_{t0}^{t1} Y(s) ds with expansion-valued integrand, composite
// Gauss-Legendre in time.
ChaosExpansion time_integral(const std::function<ChaosExpansion(double)>& y, double t0, double t1,
                             std::size_t panels, std::size_t num_coords, std::size_t max_degree);

// Stochastic integral Int_{t0}^{t1} Y(s) dB_H(s) = Int Y(s) wick w(s) ds.
ChaosExpansion wick_ito_integral(const NoiseContext& ctx,
                                 const std::function<ChaosExpansion(double)>& y, double t0,
                                 double t1, std::size_t panels, std::size_t max_degree);

// Gradient of F in the noise direction at time t: for F = sum c_alpha H_alpha,
// D_t F = sum_i [sum_alpha c_alpha alpha_i H_{alpha - e_i}] e_i(t).
// Components are stored per coordinate; at(t) contracts with e_i(t).
struct MalliavinGradient {
    NoiseContext ctx;
    std::vector<ChaosExpansion> comps;  // one expansion per coordinate

    ChaosExpansion at(double t) const;
};

MalliavinGradient malliavin_derivative(const NoiseContext& ctx, const ChaosExpansion& f);

// Kernel-windowing matrix of the quasi-conditional expectation:
// P(t)_{kj} = Int_0^t e_j(s) w_k(s) ds, applied once per tensor slot.
std::vector<double> window_matrix(const NoiseContext& ctx, double t, std::size_t panels);

// Quasi-conditional expectation for expansions of degree at most 2. Kernels
// of each order are multiplied by the indicator of [0, t] in every argument;
// in coordinates this applies the window matrix per slot. Throws for degree
// 3 or higher terms.
ChaosExpansion quasi_conditional(const NoiseContext& ctx, const ChaosExpansion& f, double t,
                                 std::size_t panels);

}  // namespace fgbm
