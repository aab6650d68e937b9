#pragma once

#include <cstddef>
#include <vector>

#include "fgbm/ensemble.hpp"

namespace fgbm {

// Wavelet spectral generator. The driving white noise lives on a window
// [-W*horizon, horizon] and is expanded in a periodized Daubechies basis
// resolved down to scale 2^{-levels} of the horizon; the weights are the
// wavelet coefficients of the fractional kernel of order H + 1/2, anchored
// so every response vanishes at t = 0. Paths are Gaussian combinations of
// the responses. W is rounded up so W+1 is a power of two, which aligns the
// dyadic noise cells with the output grid; the basis then holds
// (W+1) * 2^levels functions.
struct WaveletConfig {
    int order = 4;               // Daubechies tap order: 2, 3 or 4
    std::size_t levels = 10;     // dyadic noise scales per horizon span
    std::size_t fine_margin = 5; // dyadic kernel oversampling below the finest scale
    double window_mult = 20.0;
    std::size_t threads = 0;
};

class WaveletModel {
  public:
    WaveletModel(const HurstIndex& h, const TimeGrid& grid, const VolatilityScenario& scenario,
                 const WaveletConfig& cfg = {});

    PathEnsemble generate(std::size_t num_paths, const SeedSpec& seed) const;

    std::vector<double> model_covariance() const;
    std::vector<double> model_variance() const;

    std::size_t basis_count() const { return basis_count_; }
    double effective_window_mult() const { return window_mult_; }

  private:
    TimeGrid grid_;
    HurstIndex h_;
    VolatilityScenario scenario_;
    WaveletConfig cfg_;
    double window_mult_ = 0.0;
    std::size_t basis_count_ = 0;
    std::vector<double> weight_;  // grid.size() x basis_count, sigma folded in
    std::vector<std::string> warnings_;
};

PathEnsemble gen_wavelet(const HurstIndex& h, const TimeGrid& grid,
                         const VolatilityScenario& scenario, std::size_t num_paths,
                         const SeedSpec& seed, const WaveletConfig& cfg = {});

}  // namespace fgbm
