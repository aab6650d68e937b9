#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fgbm/rng.hpp"
#include "fgbm/scenario.hpp"
#include "fgbm/types.hpp"

namespace fgbm {

struct MarketModel {
    double spot;
    double rate;
    HurstIndex hurst{0.5};
    VolatilityBand band{1.0, 1.0};
    double maturity = 1.0;

    void validate() const;
};

enum class PayoffKind { Call, Put };

struct Payoff {
    PayoffKind kind = PayoffKind::Call;
    double strike = 1.0;

    double operator()(double terminal) const;
};

enum class PricingEngine { ScenarioMC, Pde, PerScenarioClosedForm };

struct PricingConfig {
    PricingEngine engine = PricingEngine::PerScenarioClosedForm;
    std::size_t num_paths = std::size_t{1} << 16;
    SeedSpec seed{0, seed_stream::kPricing};
    std::size_t pde_space_steps = 400;
    std::size_t pde_time_steps = 0;       // 0 = smallest count passing the stability bound
    double pde_halfwidth_sigmas = 6.0;    // log-price half width in units of hi * sqrt(T)
};

// Two-sided quote: bid is the upper expectation over the scenario family
// (sup), ask the lower (inf), so bid >= ask throughout this library.
struct PriceQuote {
    double bid = 0.0;
    double ask = 0.0;
    double bid_se = 0.0;   // 0 for deterministic engines
    double ask_se = 0.0;
    std::size_t bid_arg = 0;  // attaining member (MC and closed-form engines)
    std::size_t ask_arg = 0;
    std::string engine;
    std::vector<double> member_prices;  // empty for the pde engine
    std::vector<double> member_ses;
    std::vector<std::string> diagnostics;
};

// Terminal stock level under one constant volatility:
//   spot * exp(r T + sigma z T^H - sigma^2 T^{2H} / 2),
// z a standard normal draw. The quadratic compensator makes the discounted
// level a martingale in expectation for every constant scenario.
double terminal_price(const MarketModel& m, double sigma, double z);

// Same lognormal form driven by a precomputed terminal log variance v:
//   spot * exp(r T + sqrt(v) z - v / 2).
double terminal_price_from_variance(const MarketModel& m, double total_variance, double z);

// Terminal log-price variance of one scenario. Constant scenarios take the
// closed form sigma^2 T^{2H} verbatim. Piecewise scenarios integrate the
// squared moving-average kernel segment by segment; the prehistory integral
// (volatility frozen at sigma(0)) follows in closed form from the constant
// case, so no quadrature is involved and the piecewise value collapses to
// the constant one exactly when all levels agree.
double scenario_total_variance(const MarketModel& m, const VolatilityScenario& scenario);

// Engine dispatch. The closed-form engine requires every member constant;
// the pde engine requires hurst = 1/2 and ignores the family beyond its
// band. Ill-matched engine and inputs throw std::invalid_argument.
PriceQuote price_bid_ask(const MarketModel& m, const Payoff& payoff,
                         const ScenarioFamily& family, const PricingConfig& cfg = {});

}  // namespace fgbm
