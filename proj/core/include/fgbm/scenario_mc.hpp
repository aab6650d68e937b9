#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fgbm/ensemble.hpp"
#include "fgbm/moving_average.hpp"
#include "fgbm/scenario.hpp"
#include "fgbm/wavelet_gen.hpp"

namespace fgbm {

enum class GeneratorKind { CovFactor, MovingAverage, Wavelet };

struct ScenarioMcConfig {
    GeneratorKind generator = GeneratorKind::CovFactor;
    std::size_t threads = 0;
    // Positive bound clips the functional to [-clip_bound, clip_bound] and the
    // clipped fraction is reported; 0 disables clipping.
    double clip_bound = 0.0;
    MovingAverageConfig ma{};
    WaveletConfig wavelet{};
};

// Uniform front end over the three path generators. The same (seed, path
// index) pair yields the same driving noise regardless of generator mesh
// internals, so reruns and thread-count changes are bit identical.
PathEnsemble generate_ensemble(const HurstIndex& h, const TimeGrid& grid,
                               const VolatilityScenario& scenario, std::size_t num_paths,
                               const SeedSpec& seed, const ScenarioMcConfig& cfg = {});

// Scalar functional of one sample path on its grid.
using PathFunctional = std::function<double(const double* path, const TimeGrid& grid)>;

struct FamilyMcResult {
    double upper = 0.0;
    double lower = 0.0;
    double upper_se = 0.0;
    double lower_se = 0.0;
    std::size_t upper_arg = 0;  // member attaining the sup
    std::size_t lower_arg = 0;  // member attaining the inf
    std::vector<double> means;  // one per family member
    std::vector<double> ses;
    double clip_mass = 0.0;  // clipped fraction over all member draws
};

// Sup / inf over the family of plain Monte Carlo means, every member driven
// by the same seed (common random numbers). Means use balanced summation so
// constants are preserved exactly and doubling the functional doubles the
// estimate exactly; see pairwise_sum. Throws on an empty family.
FamilyMcResult upper_lower_expectation_mc(const PathFunctional& f, const HurstIndex& h,
                                          const TimeGrid& grid, const ScenarioFamily& family,
                                          std::size_t num_paths, const SeedSpec& seed,
                                          const ScenarioMcConfig& cfg = {});

}  // namespace fgbm
