#pragma once

#include <cstddef>
#include <vector>

#include "fgbm/types.hpp"

namespace fgbm {

// One admissible volatility path sigma(t) on [t0, horizon]. Piecewise
// constant scenarios are right-continuous: the level at a breakpoint is the
// level of the segment that starts there.
class VolatilityScenario {
  public:
    enum class Kind { Constant, PiecewiseConstant, BangBang };

    static VolatilityScenario constant(double sigma);
    // breakpoints strictly increasing; levels.size() == breakpoints.size() + 1.
    static VolatilityScenario piecewise(std::vector<double> breakpoints,
                                        std::vector<double> levels);
    // Alternates between band.hi and band.lo at each switch time, starting at
    // band.hi when start_high is true.
    static VolatilityScenario bang_bang(const VolatilityBand& band,
                                        std::vector<double> switch_times,
                                        bool start_high = true);

    Kind kind() const { return kind_; }
    double operator()(double t) const;
    // Scenario evaluated for noise times before the window start: frozen at
    // the initial level.
    bool is_constant() const { return kind_ == Kind::Constant || uniform_level(); }
    double max_level() const;
    double min_level() const;
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& levels() const { return levels_; }

    bool same_values(const VolatilityScenario& other) const;

  private:
    VolatilityScenario(Kind k, std::vector<double> b, std::vector<double> l);
    bool uniform_level() const;

    Kind kind_;
    std::vector<double> breakpoints_;
    std::vector<double> levels_;  // one more entry than breakpoints_
};

// Finite family of scenarios generating the sublinear expectation by
// sup / inf over members. Always contains the two constant extremes.
struct ScenarioFamily {
    VolatilityBand band;
    std::vector<VolatilityScenario> members;

    const VolatilityScenario& at(std::size_t i) const { return members.at(i); }
    std::size_t size() const { return members.size(); }
};

// Deterministic family of m scenarios in `band` on [0, horizon]:
// members 0 and 1 are the constant extremes lo and hi; members beyond that
// are piecewise constant with two interior breakpoints at horizon/3 and
// 2*horizon/3 and segment levels rotating through an evenly spaced lattice
// of band values. For a degenerate band every member collapses to the same
// constant scenario.
ScenarioFamily make_scenario_family(const VolatilityBand& band, std::size_t m,
                                    double horizon);

}  // namespace fgbm
