#pragma once

#include <cstdint>
#include <vector>

#include "fgbm/ensemble.hpp"

namespace fgbm {

// Closed-form covariance of the process under a constant volatility sigma:
//   sigma^2 / 2 (|s|^{2H} + |t|^{2H} - |t - s|^{2H}).
double fbm_covariance(double h, double sigma, double s, double t);

// Dense covariance matrix on the grid points t_1 .. t_n (the initial point
// t_0 = grid.t0 is excluded when it makes the matrix singular at 0; here the
// matrix is built over all grid points with t0 = 0 giving a zero first
// row/column, so the factorization runs on points after the first).
std::vector<double> fbm_covariance_matrix(const TimeGrid& grid, double h, double sigma);

// In-place lower Cholesky factor of a symmetric positive definite matrix in
// row-major order; throws if a pivot fails after symmetrization.
void cholesky_factor(std::vector<double>& a, std::size_t n);

// Exact-in-distribution sampler: paths are L z with L the Cholesky factor of
// the target covariance. Serves as the distributional oracle for the kernel
// based generators. Constant scenarios only; grids up to 2048 steps.
PathEnsemble gen_cholesky_oracle(const HurstIndex& h, const TimeGrid& grid,
                                 const VolatilityScenario& scenario, std::size_t num_paths,
                                 const SeedSpec& seed, std::size_t threads = 0);

}  // namespace fgbm
