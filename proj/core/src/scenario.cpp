#include "fgbm/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fgbm {

VolatilityScenario::VolatilityScenario(Kind k, std::vector<double> b, std::vector<double> l)
    : kind_(k), breakpoints_(std::move(b)), levels_(std::move(l)) {
    if (levels_.size() != breakpoints_.size() + 1)
        throw std::invalid_argument("VolatilityScenario: levels must have one more entry than breakpoints");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("VolatilityScenario: breakpoints must be strictly increasing");
    for (double s : levels_)
        if (!(s > 0.0) || !std::isfinite(s))
            throw std::invalid_argument("VolatilityScenario: levels must be positive and finite");
}

VolatilityScenario VolatilityScenario::constant(double sigma) {
    return VolatilityScenario(Kind::Constant, {}, {sigma});
}

VolatilityScenario VolatilityScenario::piecewise(std::vector<double> breakpoints,
                                                 std::vector<double> levels) {
    return VolatilityScenario(Kind::PiecewiseConstant, std::move(breakpoints), std::move(levels));
}

VolatilityScenario VolatilityScenario::bang_bang(const VolatilityBand& band,
                                                 std::vector<double> switch_times,
                                                 bool start_high) {
    std::vector<double> levels(switch_times.size() + 1);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const bool high = start_high ? (i % 2 == 0) : (i % 2 == 1);
        levels[i] = high ? band.hi : band.lo;
    }
    return VolatilityScenario(Kind::BangBang, std::move(switch_times), std::move(levels));
}

double VolatilityScenario::operator()(double t) const {
    // upper_bound gives the first breakpoint > t, so a query exactly at a
    // breakpoint picks the segment starting there (right continuity).
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return levels_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double VolatilityScenario::max_level() const {
    return *std::max_element(levels_.begin(), levels_.end());
}

double VolatilityScenario::min_level() const {
    return *std::min_element(levels_.begin(), levels_.end());
}

bool VolatilityScenario::uniform_level() const {
    return std::all_of(levels_.begin(), levels_.end(),
                       [&](double s) { return s == levels_.front(); });
}

bool VolatilityScenario::same_values(const VolatilityScenario& other) const {
    if (uniform_level() && other.uniform_level())
        return levels_.front() == other.levels_.front();
    return breakpoints_ == other.breakpoints_ && levels_ == other.levels_;
}

ScenarioFamily make_scenario_family(const VolatilityBand& band, std::size_t m, double horizon) {
    if (m < 2) throw std::invalid_argument("make_scenario_family: need m >= 2");
    if (!(horizon > 0.0)) throw std::invalid_argument("make_scenario_family: need horizon > 0");

    ScenarioFamily family{band, {}};
    family.members.reserve(m);

    if (band.degenerate()) {
        for (std::size_t i = 0; i < m; ++i)
            family.members.push_back(VolatilityScenario::constant(band.lo));
        return family;
    }

    family.members.push_back(VolatilityScenario::constant(band.lo));
    family.members.push_back(VolatilityScenario::constant(band.hi));

    const std::size_t extra = m - 2;
    if (extra == 0) return family;

    // Lattice of levels spanning the band; rotating it across the three
    // segments makes the extra members pairwise distinct for lat_n >= 3.
    const std::size_t lat_n = std::max<std::size_t>(3, std::min<std::size_t>(extra + 1, 7));
    std::vector<double> lattice(lat_n);
    for (std::size_t q = 0; q < lat_n; ++q)
        lattice[q] = band.lo + (band.hi - band.lo) * static_cast<double>(q) /
                                   static_cast<double>(lat_n - 1);

    const std::vector<double> brk = {horizon / 3.0, 2.0 * horizon / 3.0};
    for (std::size_t i = 0; i < extra; ++i) {
        std::vector<double> levels(3);
        for (std::size_t s = 0; s < 3; ++s) levels[s] = lattice[(i + s) % lat_n];
        family.members.push_back(VolatilityScenario::piecewise(brk, levels));
    }
    return family;
}

}  // namespace fgbm
