#pragma once

#include <cstddef>

#include "fgbm/chaos_noise.hpp"

namespace fgbm {

// Verification of Int_0^T B dB = (1/2) B(T)^{wick 2}, plus the constant that
// appears when the right side is rewritten with the ordinary square:
// Int B dB - (1/2) B(T)^2 has order-0 coefficient -T^{2H}/2.
struct WickLemmaResult {
    double max_residual = 0.0;      // coefficient residual of the Wick-square form
    double ito_constant = 0.0;      // order-0 of the ordinary-square rewrite
    double expected_constant = 0.0; // -T^{2H}/2
    double var_gap = 0.0;           // |truncated variance at T - T^{2H}|
};

WickLemmaResult wick_lemma_check(const NoiseContext& ctx, double horizon, std::size_t panels);

// Change-of-variable checks for the catalog f(x) = x^2, x^3, exp(a x):
// f(B(T)) against f(0) + Int f'(B) dB + (1/2) Int f''(B) dVar. Ordinary
// functions are rewritten through Wick powers with the truncated variance, so
// the two sides agree coefficientwise up to time-quadrature roundoff; the
// distance of the truncated variance from T^{2H} is reported separately.
struct ItoCatalogResult {
    double coeff_residual = 0.0;
    double dropped_mass = 0.0;
    double var_gap = 0.0;
    double lhs_expectation = 0.0;
};

ItoCatalogResult ito_check_square(const NoiseContext& ctx, double horizon, std::size_t panels,
                                  std::size_t max_degree);
ItoCatalogResult ito_check_cube(const NoiseContext& ctx, double horizon, std::size_t panels,
                                std::size_t max_degree);
ItoCatalogResult ito_check_exp(const NoiseContext& ctx, double alpha, double horizon,
                               std::size_t panels, std::size_t max_degree);

}  // namespace fgbm
