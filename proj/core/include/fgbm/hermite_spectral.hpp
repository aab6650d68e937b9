#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "fgbm/types.hpp"

namespace fgbm {

// Precomputed spectral quadrature for the action of the fractional operator
// on the Hermite function basis. Hermite functions are eigenfunctions of the
// Fourier transform, so for each basis index k the three families
//     w_k(t) = (M_H h~_k)(t)            (white-noise coefficient functions)
//     a_k(t) = Int_0^t w_k(s) ds        (process coefficient functions)
//     e_k(t) = (M_H^{-1} h~_k)(t)       (inverse-image basis)
// reduce to one shared one-dimensional frequency quadrature. a_k is the
// exact t-antiderivative of w_k at the discrete level: the identity
// d/dt a_k = w_k holds to roundoff, which the Wick integral tests rely on.
class FractionalHermiteBasis {
  public:
    FractionalHermiteBasis(const HurstIndex& h, std::size_t K);

    std::size_t size() const { return K_; }
    double hurst() const { return h_; }

    void gnoise(double t, double* out) const;
    void fgbm_coeff(double t, double* out) const;
    void inverse_basis(double t, double* out) const;

    std::vector<double> gnoise(double t) const;
    std::vector<double> fgbm_coeff(double t) const;
    std::vector<double> inverse_basis(double t) const;

    // Sum of squares of a_k(t): the truncated variance of the process at t.
    double truncated_variance(double t) const;

  private:
    double h_;
    std::size_t K_;
    std::vector<double> y_;        // frequency nodes, > 0
    std::vector<double> fw_;       // weight * |y|^{1/2-H} * kappa, forward symbol
    std::vector<double> iw_;       // weight * |y|^{H-1/2} / kappa, inverse symbol
    std::vector<double> herm_;     // K x Q values of h~_k(y_q), row major in k
};

// Shared per-(H, K) instance; builds on first use, thread safe.
const FractionalHermiteBasis& hermite_basis(const HurstIndex& h, std::size_t K);

}  // namespace fgbm
