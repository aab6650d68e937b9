#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fgbm/chaos_calculus.hpp"

namespace fgbm {

// Polynomial P(x_1..x_n) applied with Wick powers and products. Each term is
// coeff * prod_i x_i^{exps[i]} (exps may be shorter than the arity).
struct WickPolynomial {
    struct Term {
        std::vector<unsigned> exps;
        double coeff = 0.0;
    };
    std::vector<Term> terms;

    std::size_t arity() const;
    WickPolynomial partial(std::size_t i) const;
};

// P applied with Wick powers and products to the given linear variables.
ChaosExpansion apply_wick_polynomial(const WickPolynomial& p, const std::vector<LinearForm>& vars,
                                     std::size_t num_coords, std::size_t max_degree);

struct ClarkOconeResult {
    ChaosExpansion original;       // F = P-wick of the terminal variables
    ChaosExpansion reconstructed;  // E[F] + Int psi(t) dB_H(t)
    double expectation = 0.0;
    double max_coeff_residual = 0.0;
};

// Martingale-representation reconstruction of F = P-wick(X_1..X_n) with
// X_i = Int_0^T f_i dB_H. The integrand at time t is
//   psi(t) = sum_i (d_i P)-wick(X^{(t)}) f_i(t)
// with X^{(t)} the variables stopped at t; the t-integration is the exact
// derivative of the coefficient functions, so the reconstruction closes at
// the coefficient level up to quadrature roundoff.
ClarkOconeResult clark_ocone_reconstruct(const NoiseContext& ctx, const WickPolynomial& p,
                                         const std::vector<std::function<double(double)>>& kernels,
                                         double horizon, std::size_t panels,
                                         std::size_t max_degree);

// Unit kernels f_i = 1: the variables are copies of B_H stopped at t, whose
// coefficient functions have analytic antiderivatives.
ClarkOconeResult clark_ocone_reconstruct(const NoiseContext& ctx, const WickPolynomial& p,
                                         double horizon, std::size_t panels,
                                         std::size_t max_degree);

}  // namespace fgbm
