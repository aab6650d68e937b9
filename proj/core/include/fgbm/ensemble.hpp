#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fgbm/rng.hpp"
#include "fgbm/scenario.hpp"
#include "fgbm/types.hpp"

namespace fgbm {

// Monte Carlo ensemble of sample paths on a common grid, one row per path.
// Paths start at 0 at the first grid point.
struct PathEnsemble {
    TimeGrid grid{0.0, 1.0, 1};
    HurstIndex hurst{0.5};
    VolatilityScenario scenario = VolatilityScenario::constant(1.0);
    SeedSpec seed;
    std::size_t num_paths = 0;
    std::vector<double> data;  // num_paths x grid.size(), row major
    std::vector<std::string> warnings;

    double at(std::size_t path, std::size_t i) const { return data[path * grid.size() + i]; }
    double* row(std::size_t path) { return data.data() + path * grid.size(); }
    const double* row(std::size_t path) const { return data.data() + path * grid.size(); }
};

// Entrywise upper/lower estimate over a scenario family, with the standard
// error and the index of the scenario attaining each envelope entry.
struct UpperLowerStat {
    std::vector<double> upper;
    std::vector<double> lower;
    std::vector<double> upper_se;
    std::vector<double> lower_se;
    std::vector<std::size_t> upper_arg;
    std::vector<std::size_t> lower_arg;
};

}  // namespace fgbm
