#pragma once

#include <cstddef>
#include <vector>

#include "fgbm/clark_ocone.hpp"
#include "fgbm/pricing.hpp"

namespace fgbm {

// Replication rate at one time for a claim written as a Wick polynomial of
// the terminal process under a constant volatility scenario. The integrand
// is the time-t Malliavin integrand of the claim (the same object the
// martingale representation integrates against); the sampled ratio divides
// it by the simulated stock level and discounts back from maturity.
struct HedgeRatio {
    ChaosExpansion integrand;  // claim's representation integrand at time t
    double stock = 0.0;        // S(t) on the sampled noise coordinates
    double value = 0.0;        // exp(-r (T - t)) integrand(xi) / S(t)
};

// xi holds the sampled noise coordinates, one per chaos coordinate of ctx.
// The claim's variables are all the process at maturity scaled by sigma.
// Throws when the claim has no variables or t lies outside [0, maturity].
HedgeRatio hedge_ratio(const NoiseContext& ctx, const MarketModel& m,
                       const WickPolynomial& claim, double t, double sigma,
                       const std::vector<double>& xi, std::size_t max_degree);

}  // namespace fgbm
