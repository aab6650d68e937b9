#pragma once

namespace fgbm {

double normal_cdf(double x);

// Lognormal closed form parameterized by the total variance v of the
// terminal log price (v plays the role of sigma^2 T, so any power-law time
// scaling of the variance is absorbed by the caller). With v <= 0 the
// distribution is a point mass and the discounted intrinsic value is
// returned; `degenerate`, when non-null, reports that this happened.
double bs_closed_form(double spot, double strike, double rate, double total_variance,
                      double maturity, bool is_call = true, bool* degenerate = nullptr);

}  // namespace fgbm
