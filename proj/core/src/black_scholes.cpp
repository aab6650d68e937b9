#include "fgbm/black_scholes.hpp"

#include <cmath>
#include <stdexcept>

namespace fgbm {

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double bs_closed_form(double spot, double strike, double rate, double total_variance,
                      double maturity, bool is_call, bool* degenerate) {
    if (!(spot > 0.0) || !(strike > 0.0) || !(maturity > 0.0))
        throw std::invalid_argument("bs_closed_form: need spot, strike, maturity > 0");
    const double disc = std::exp(-rate * maturity);
    if (degenerate) *degenerate = false;
    if (!(total_variance > 0.0)) {
        if (degenerate) *degenerate = true;
        const double fwd_gap = spot - strike * disc;
        return is_call ? std::fmax(fwd_gap, 0.0) : std::fmax(-fwd_gap, 0.0);
    }
    const double sq = std::sqrt(total_variance);
    const double d1 = (std::log(spot / strike) + rate * maturity + 0.5 * total_variance) / sq;
    const double d2 = d1 - sq;
    if (is_call) return spot * normal_cdf(d1) - strike * disc * normal_cdf(d2);
    return strike * disc * normal_cdf(-d2) - spot * normal_cdf(-d1);
}

}  // namespace fgbm
