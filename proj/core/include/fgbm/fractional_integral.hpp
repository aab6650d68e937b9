#pragma once

#include <vector>

#include "fgbm/sampled_function.hpp"

namespace fgbm {

// Fractional integrals of order alpha > 0 of a sampled function, treated as
// zero outside its window. The power-law weight is integrated exactly over
// each cell against a linear interpolant (product integration), so the
// endpoint singularity of the kernel costs no accuracy order.

// (I^a f)(t) = (1 / Gamma(a)) Int_{x0}^{t} (t - x)^{a-1} f(x) dx.
double liouville_integral_point(const SampledFunction& f, double alpha, double t);
SampledFunction liouville_integral(const SampledFunction& f, double alpha);

// (I_M^a f)(t) = (1 / Gamma(a)) Int [ (t-x)_+^{a-1} - (-x)_+^{a-1} ] f(x) dx.
// Coincides with the one-sided integral when f is supported in (0, inf) and
// t > 0; always vanishes at t = 0.
double marchaud_integral_point(const SampledFunction& f, double alpha, double t);
std::vector<double> marchaud_integral(const SampledFunction& f, double alpha,
                                      const std::vector<double>& ts);

}  // namespace fgbm
