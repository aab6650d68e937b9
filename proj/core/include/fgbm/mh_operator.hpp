#pragma once

#include <functional>

#include "fgbm/sampled_function.hpp"
#include "fgbm/types.hpp"

namespace fgbm {

// The operator is defined through its Fourier symbol,
//     (M_H f)^(y) = kappa(H) |y|^{1/2 - H} f^(y),
// normalized so that the L2 norm of M_H applied to an indicator of [0, t]
// equals t^{2H}. At H = 1/2 the symbol is identically 1 and the operator is
// the identity. The time-domain kernel forms (difference kernel for
// H < 1/2, smoothing kernel for H > 1/2) are provided as an independent
// cross check of the spectral implementation, not as the primary route.

// kappa(H) = sqrt(sin(pi H) * Gamma(2H + 1)); kappa(1/2) = 1.
double mh_normalization(double h);

// Constant in front of the moving-average kernel
// (t-s)_+^{H-1/2} - (-s)_+^{H-1/2}; equals kappa(H) / Gamma(H + 1/2).
double movavg_kernel_constant(double h);

// Constant in front of the time-domain kernel forms,
// kappa(H) / (2 Gamma(H - 1/2) cos(pi (H - 1/2) / 2)).
// Gamma(H - 1/2) is negative for H < 1/2; the sign cancels against the
// difference kernel so both branches produce a positive-definite operator.
double mh_timedomain_constant(double h);

// Spectral application on a sampled window. The input should be supported
// well inside the window; energy reaching the padded boundary wraps around.
SampledFunction apply_mh(const SampledFunction& f, const HurstIndex& h,
                         const OperatorParams& params = {});

// Inverse operator: symbol |y|^{H - 1/2} / kappa(H).
SampledFunction apply_mh_inverse(const SampledFunction& f, const HurstIndex& h,
                                 const OperatorParams& params = {});

// Squared L2 norm of the unnormalized operator applied to an indicator of
// [a, b], computed by direct spectral quadrature of the closed-form
// transform. Converges to (b - a)^{2H} / (sin(pi H) Gamma(2H + 1)).
double parseval_indicator_unnormalized(const HurstIndex& h, double a, double b);

// Time-domain kernel evaluation at one point for a smooth function with
// (numerical) support inside [-support_radius, support_radius]. Singular
// weights are handled by a graded panel toward the kernel singularity.
double mh_timedomain_point(const std::function<double(double)>& f, const HurstIndex& h,
                           double x, double support_radius);

}  // namespace fgbm
