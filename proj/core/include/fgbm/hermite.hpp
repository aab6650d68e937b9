#pragma once

#include <cstddef>
#include <vector>

namespace fgbm {

// Orthonormal Hermite functions indexed from 1:
//   h~_n(x) = pi^{-1/4} ((n-1)!)^{-1/2} h_{n-1}(sqrt(2) x) e^{-x^2 / 2},
// with h_j the monic probabilists' Hermite polynomials. Evaluated through
// the normalized three-term recurrence, which is stable for large n.
double hermite_function(std::size_t n, double x);

// Fills out[0..K-1] with h~_1(x) .. h~_K(x) in one recurrence sweep.
void hermite_function_column(std::size_t K, double x, double* out);

// Gauss-Hermite rule with weight e^{-x^2} (physicists' convention),
// exact for polynomial integrands of degree <= 2n - 1.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussHermiteRule gauss_hermite(std::size_t n);

}  // namespace fgbm
