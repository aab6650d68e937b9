#pragma once

#include <cstddef>
#include <vector>

#include "fgbm/ensemble.hpp"

namespace fgbm {

// Discretization controls for the moving-average representation
//   B_H(t) = c_H Int [ (t-s)_+^{H-1/2} - (-s)_+^{H-1/2} ] sigma(s) dB(s).
// The noise axis is truncated at -window_mult * horizon; the truncated tail
// variance is bounded analytically and attached as a warning when it
// exceeds tail_warn_rel of the horizon variance. Scenario values for noise
// times before 0 are frozen at sigma(0).
struct MovingAverageConfig {
    double window_mult = 20.0;
    std::size_t fine_steps = 512;   // noise cells across [0, horizon]
    double tail_warn_rel = 0.02;
    std::size_t threads = 0;
};

class MovingAverageModel {
  public:
    MovingAverageModel(const HurstIndex& h, const TimeGrid& grid,
                       const VolatilityScenario& scenario,
                       const MovingAverageConfig& cfg = {});

    PathEnsemble generate(std::size_t num_paths, const SeedSpec& seed) const;

    // Covariance the discrete model produces exactly (the Monte Carlo
    // estimate converges to this as paths grow). Row major over grid points.
    std::vector<double> model_covariance() const;
    std::vector<double> model_variance() const;

    double tail_variance_bound() const { return tail_bound_; }
    std::size_t cell_count() const { return centers_.size(); }

  private:
    TimeGrid grid_;
    HurstIndex h_;
    VolatilityScenario scenario_;
    MovingAverageConfig cfg_;
    std::vector<double> centers_;
    std::vector<double> widths_;
    std::vector<double> weight_;   // c_H q_c(t_i) sigma_c / sqrt(w_c), grid x cells
    double tail_bound_ = 0.0;
    std::vector<std::string> warnings_;
};

PathEnsemble gen_moving_average(const HurstIndex& h, const TimeGrid& grid,
                                const VolatilityScenario& scenario, std::size_t num_paths,
                                const SeedSpec& seed, const MovingAverageConfig& cfg = {});

}  // namespace fgbm
