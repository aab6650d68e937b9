#include "fgbm/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fgbm/black_scholes.hpp"
#include "fgbm/mh_operator.hpp"
#include "fgbm/stats.hpp"

namespace fgbm {

void MarketModel::validate() const {
    if (!(spot > 0.0)) throw std::invalid_argument("MarketModel: need spot > 0");
    if (!(maturity > 0.0)) throw std::invalid_argument("MarketModel: need maturity > 0");
}

double Payoff::operator()(double terminal) const {
    switch (kind) {
        case PayoffKind::Call: return std::fmax(terminal - strike, 0.0);
        case PayoffKind::Put: return std::fmax(strike - terminal, 0.0);
    }
    throw std::invalid_argument("Payoff: unknown kind");
}

double terminal_price(const MarketModel& m, double sigma, double z) {
    const double T = m.maturity;
    const double H = m.hurst.value;
    return m.spot * std::exp(m.rate * T + sigma * z * std::pow(T, H) -
                             0.5 * sigma * sigma * std::pow(T, 2.0 * H));
}

double terminal_price_from_variance(const MarketModel& m, double total_variance, double z) {
    const double T = m.maturity;
    return m.spot * std::exp(m.rate * T + std::sqrt(total_variance) * z - 0.5 * total_variance);
}

double scenario_total_variance(const MarketModel& m, const VolatilityScenario& scenario) {
    const double T = m.maturity;
    const double H = m.hurst.value;
    if (scenario.is_constant()) {
        const double s = scenario(0.0);
        return s * s * std::pow(T, 2.0 * H);
    }
    // Kernel representation: the terminal value is a Wiener integral of
    //   C [ (T-s)_+^{H-1/2} - (-s)_+^{H-1/2} ] sigma(s),
    // sigma frozen at sigma(0) for s < 0. Each segment of [0, T] integrates
    // the plain power exactly; the prehistory integral J satisfies
    // C^2 (J + T^{2H} / 2H) = T^{2H} by the constant-scenario normalization,
    // which pins J without any quadrature.
    const double C = movavg_kernel_constant(H);
    const double C2 = C * C;
    const double twoH = 2.0 * H;
    const double s0 = scenario(0.0);
    double v = s0 * s0 * std::pow(T, twoH) * (1.0 - C2 / twoH);

    const auto& bp = scenario.breakpoints();
    const auto& lv = scenario.levels();
    double seg_sum = 0.0;
    for (std::size_t j = 0; j < lv.size(); ++j) {
        const double a = std::clamp(j == 0 ? 0.0 : bp[j - 1], 0.0, T);
        const double b = std::clamp(j + 1 <= bp.size() ? bp[j] : T, 0.0, T);
        if (!(b > a)) continue;
        seg_sum += lv[j] * lv[j] * (std::pow(T - a, twoH) - std::pow(T - b, twoH));
    }
    v += (C2 / twoH) * seg_sum;
    return v;
}

namespace {

PriceQuote price_closed_form(const MarketModel& m, const Payoff& payoff,
                             const ScenarioFamily& family) {
    PriceQuote q;
    q.engine = "closed-form";
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& sc = family.at(i);
        if (!sc.is_constant())
            throw std::invalid_argument(
                "price_bid_ask: closed-form engine requires constant scenarios");
        const double v = scenario_total_variance(m, sc);
        const double p = bs_closed_form(m.spot, payoff.strike, m.rate, v, m.maturity,
                                        payoff.kind == PayoffKind::Call);
        q.member_prices.push_back(p);
        q.member_ses.push_back(0.0);
        if (i == 0 || p > q.bid) {
            q.bid = p;
            q.bid_arg = i;
        }
        if (i == 0 || p < q.ask) {
            q.ask = p;
            q.ask_arg = i;
        }
    }
    return q;
}

PriceQuote price_mc(const MarketModel& m, const Payoff& payoff, const ScenarioFamily& family,
                    const PricingConfig& cfg) {
    if (cfg.num_paths == 0)
        throw std::invalid_argument("price_bid_ask: need at least one path");
    PriceQuote q;
    q.engine = "mc";
    const std::size_t n = cfg.num_paths;
    // One z draw per path index, shared by every member (common random
    // numbers), so member differences are not drowned in independent noise.
    std::vector<double> z(n);
    for (std::size_t p = 0; p < n; ++p) {
        PathRng rng(cfg.seed, p);
        z[p] = rng.next_gaussian();
    }
    const double disc = std::exp(-m.rate * m.maturity);
    std::vector<double> vals(n), sq(n);
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& sc = family.at(i);
        const bool constant = sc.is_constant();
        const double sigma = constant ? sc(0.0) : 0.0;
        const double var = constant ? 0.0 : scenario_total_variance(m, sc);
        for (std::size_t p = 0; p < n; ++p) {
            const double st = constant ? terminal_price(m, sigma, z[p])
                                       : terminal_price_from_variance(m, var, z[p]);
            const double v = disc * payoff(st);
            vals[p] = v;
            sq[p] = v * v;
        }
        const double nn = static_cast<double>(n);
        const double mean = pairwise_sum(vals) / nn;
        double se = 0.0;
        if (n > 1) {
            double s2 = (pairwise_sum(sq) / nn - mean * mean) * nn / (nn - 1.0);
            se = std::sqrt(std::max(s2, 0.0) / nn);
        }
        q.member_prices.push_back(mean);
        q.member_ses.push_back(se);
        if (i == 0 || mean > q.bid) {
            q.bid = mean;
            q.bid_se = se;
            q.bid_arg = i;
        }
        if (i == 0 || mean < q.ask) {
            q.ask = mean;
            q.ask_se = se;
            q.ask_arg = i;
        }
    }
    return q;
}

// Explicit marching in log price and time to maturity. The optimal diffusion
// at each node follows the sign of (V_yy - V_y); the first-order drift is
// upwinded so every neighbor weight stays nonnegative under the step bound.
double pde_solve_extreme(const MarketModel& m, const Payoff& payoff, const VolatilityBand& band,
                         const PricingConfig& cfg, bool upper, std::string* diag) {
    const double T = m.maturity;
    const double hi2 = band.hi * band.hi;
    const double lo2 = band.lo * band.lo;
    const double r = m.rate;

    const double spread = band.hi * std::sqrt(T);
    const double half =
        std::max(cfg.pde_halfwidth_sigmas * spread,
                 std::abs(std::log(m.spot / payoff.strike)) + 3.0 * spread);
    const std::size_t ny = std::max<std::size_t>(cfg.pde_space_steps, 8);
    const double yc = std::log(payoff.strike);
    const double dy = 2.0 * half / static_cast<double>(ny);

    const double bmax = std::max(std::abs(r - 0.5 * hi2), std::abs(r - 0.5 * lo2));
    const double rate_limit = hi2 / (dy * dy) + bmax / dy + std::max(r, 0.0);
    std::size_t nt = static_cast<std::size_t>(std::ceil(T * rate_limit / 0.9));
    nt = std::max<std::size_t>({nt, cfg.pde_time_steps, 1});
    const double dtau = T / static_cast<double>(nt);

    if (diag)
        *diag = "pde grid " + std::to_string(ny) + "x" + std::to_string(nt) +
                ", half-width " + std::to_string(half);

    std::vector<double> y(ny + 1), cur(ny + 1), nxt(ny + 1);
    for (std::size_t i = 0; i <= ny; ++i) {
        y[i] = yc - half + dy * static_cast<double>(i);
        cur[i] = payoff(std::exp(y[i]));
    }

    const bool call = payoff.kind == PayoffKind::Call;
    const double inv_dy2 = 1.0 / (dy * dy);
    const double inv_2dy = 0.5 / dy;
    for (std::size_t jstep = 1; jstep <= nt; ++jstep) {
        const double tau = dtau * static_cast<double>(jstep);
        const double df = std::exp(-r * tau);
        // Asymptotic linear payoff extension, discounted.
        nxt[0] = call ? 0.0 : payoff.strike * df - std::exp(y[0]);
        nxt[ny] = call ? std::exp(y[ny]) - payoff.strike * df : 0.0;
        for (std::size_t i = 1; i < ny; ++i) {
            const double d2 = (cur[i + 1] - 2.0 * cur[i] + cur[i - 1]) * inv_dy2;
            const double d1c = (cur[i + 1] - cur[i - 1]) * inv_2dy;
            const double alpha = d2 - d1c;
            const double s2 = upper ? (alpha >= 0.0 ? hi2 : lo2) : (alpha >= 0.0 ? lo2 : hi2);
            const double b = r - 0.5 * s2;
            const double up = b >= 0.0 ? (cur[i + 1] - cur[i]) / dy : (cur[i] - cur[i - 1]) / dy;
            nxt[i] = cur[i] + dtau * (0.5 * s2 * d2 + b * up - r * cur[i]);
            if (!std::isfinite(nxt[i]))
                throw std::runtime_error("price_bid_ask: pde produced a non-finite value at step " +
                                         std::to_string(jstep) + ", node " + std::to_string(i));
        }
        std::swap(cur, nxt);
    }

    const double ys = std::log(m.spot);
    const double pos = (ys - y[0]) / dy;
    const auto i0 = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(i0);
    return cur[i0] * (1.0 - frac) + cur[i0 + 1] * frac;
}

PriceQuote price_pde(const MarketModel& m, const Payoff& payoff, const ScenarioFamily& family,
                     const PricingConfig& cfg) {
    if (m.hurst.value != 0.5)
        throw std::invalid_argument("price_bid_ask: pde engine requires hurst = 0.5");
    PriceQuote q;
    q.engine = "pde";
    std::string diag;
    q.bid = pde_solve_extreme(m, payoff, family.band, cfg, true, &diag);
    q.ask = pde_solve_extreme(m, payoff, family.band, cfg, false, nullptr);
    q.diagnostics.push_back(diag);
    return q;
}

}  // namespace

PriceQuote price_bid_ask(const MarketModel& m, const Payoff& payoff,
                         const ScenarioFamily& family, const PricingConfig& cfg) {
    m.validate();
    if (!(payoff.strike > 0.0))
        throw std::invalid_argument("price_bid_ask: need strike > 0");
    if (family.size() == 0 && cfg.engine != PricingEngine::Pde)
        throw std::invalid_argument("price_bid_ask: empty scenario family");
    switch (cfg.engine) {
        case PricingEngine::PerScenarioClosedForm: return price_closed_form(m, payoff, family);
        case PricingEngine::ScenarioMC: return price_mc(m, payoff, family, cfg);
        case PricingEngine::Pde: return price_pde(m, payoff, family, cfg);
    }
    throw std::invalid_argument("price_bid_ask: unknown engine");
}

}  // namespace fgbm
