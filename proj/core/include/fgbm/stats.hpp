#pragma once

#include <cstddef>
#include <vector>

#include "fgbm/ensemble.hpp"

namespace fgbm {

struct MomentEstimate {
    double mean = 0.0;
    double se = 0.0;
};

MomentEstimate mean_with_se(const std::vector<double>& samples);

// Balanced-tree summation. The result depends only on the values and their
// order, never on threading, and rounding errors stay O(log n). Summing a
// constant over a power-of-two count is exact, as is the scaling sum(2x) =
// 2 sum(x); the sublinear-expectation axioms that hold exactly in floating
// point rely on both properties.
double pairwise_sum(const double* x, std::size_t n);
inline double pairwise_sum(const std::vector<double>& x) { return pairwise_sum(x.data(), x.size()); }

// Pointwise second-moment matrix E[B_s B_t] over the ensemble grid, with the
// per-entry standard error of the Monte Carlo mean. Row major, grid.size()^2.
struct CovarianceEstimate {
    std::size_t np = 0;
    std::vector<double> mean;
    std::vector<double> se;
};

CovarianceEstimate sample_covariance(const PathEnsemble& ens);

// Stationary-increment autocovariance estimate at the given cell lag. Each
// path contributes its time average as one independent sample.
MomentEstimate increment_autocov(const PathEnsemble& ens, std::size_t lag);

// Closed-form lag autocovariance of the increment sequence B(t_{k+1})-B(t_k)
// on a uniform grid with spacing dt, constant volatility sigma:
//   sigma^2 dt^{2H} * (1/2)[(n+1)^{2H} - 2 n^{2H} + |n-1|^{2H}].
double fgn_autocov(double h, std::size_t lag, double dt = 1.0, double sigma = 1.0);

// Envelope values over a volatility band: the band member maximizing or
// minimizing sigma^2 * rho flips with the sign of rho (negative for H < 1/2).
double fgn_autocov_upper(double h, const VolatilityBand& band, std::size_t lag, double dt = 1.0);
double fgn_autocov_lower(double h, const VolatilityBand& band, std::size_t lag, double dt = 1.0);

// sum_{n=1}^{N} rho(n) for sigma = dt = 1 telescopes to
// [(N+1)^{2H} - N^{2H} - 1] / 2: bounded for H < 1/2, divergent for H > 1/2.
double fgn_autocov_partial_sum(double h, std::size_t n_max);

// Two-sample Kolmogorov-Smirnov statistic and the asymptotic rejection
// threshold at significance alpha.
double ks_statistic(std::vector<double> a, std::vector<double> b);
double ks_threshold(std::size_t n, std::size_t m, double alpha);

// Marginal self-similarity check: compares scale^{-H} B(scale * t_base)
// against B(t_base) across disjoint halves of the ensemble. Returns the KS
// statistic; both time indices must lie on the grid.
double self_similarity_ks(const PathEnsemble& ens, std::size_t base_index, std::size_t scale);

// Range over all grid pairs s < t of E|B_t - B_s|^p / |t-s|^{pH}. For exact
// fractional Brownian paths with constant volatility this is flat.
struct RatioRange {
    double lo = 0.0;
    double hi = 0.0;
};

RatioRange holder_moment_ratio(const PathEnsemble& ens, double p);

}  // namespace fgbm
