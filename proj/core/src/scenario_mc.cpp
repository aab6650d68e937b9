#include "fgbm/scenario_mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fgbm/cholesky_gen.hpp"
#include "fgbm/stats.hpp"

namespace fgbm {

PathEnsemble generate_ensemble(const HurstIndex& h, const TimeGrid& grid,
                               const VolatilityScenario& scenario, std::size_t num_paths,
                               const SeedSpec& seed, const ScenarioMcConfig& cfg) {
    switch (cfg.generator) {
        case GeneratorKind::CovFactor:
            return gen_cholesky_oracle(h, grid, scenario, num_paths, seed, cfg.threads);
        case GeneratorKind::MovingAverage: {
            MovingAverageConfig ma = cfg.ma;
            if (cfg.threads != 0) ma.threads = cfg.threads;
            return gen_moving_average(h, grid, scenario, num_paths, seed, ma);
        }
        case GeneratorKind::Wavelet: {
            WaveletConfig wc = cfg.wavelet;
            if (cfg.threads != 0) wc.threads = cfg.threads;
            return gen_wavelet(h, grid, scenario, num_paths, seed, wc);
        }
    }
    throw std::invalid_argument("generate_ensemble: unknown generator kind");
}

FamilyMcResult upper_lower_expectation_mc(const PathFunctional& f, const HurstIndex& h,
                                          const TimeGrid& grid, const ScenarioFamily& family,
                                          std::size_t num_paths, const SeedSpec& seed,
                                          const ScenarioMcConfig& cfg) {
    if (family.size() == 0)
        throw std::invalid_argument("upper_lower_expectation_mc: empty scenario family");
    if (num_paths == 0)
        throw std::invalid_argument("upper_lower_expectation_mc: need at least one path");

    FamilyMcResult out;
    out.means.resize(family.size());
    out.ses.resize(family.size());
    std::size_t clipped = 0;

    std::vector<double> vals(num_paths), sq(num_paths);
    for (std::size_t m = 0; m < family.size(); ++m) {
        const PathEnsemble ens = generate_ensemble(h, grid, family.at(m), num_paths, seed, cfg);
        for (std::size_t p = 0; p < num_paths; ++p) {
            double v = f(ens.row(p), grid);
            if (cfg.clip_bound > 0.0 && std::abs(v) > cfg.clip_bound) {
                v = std::clamp(v, -cfg.clip_bound, cfg.clip_bound);
                ++clipped;
            }
            vals[p] = v;
            sq[p] = v * v;
        }
        const double n = static_cast<double>(num_paths);
        const double mean = pairwise_sum(vals) / n;
        double se = 0.0;
        if (num_paths > 1) {
            double var = (pairwise_sum(sq) / n - mean * mean) * n / (n - 1.0);
            se = std::sqrt(std::max(var, 0.0) / n);
        }
        out.means[m] = mean;
        out.ses[m] = se;
        if (m == 0 || mean > out.upper) {
            out.upper = mean;
            out.upper_se = se;
            out.upper_arg = m;
        }
        if (m == 0 || mean < out.lower) {
            out.lower = mean;
            out.lower_se = se;
            out.lower_arg = m;
        }
    }
    out.clip_mass =
        static_cast<double>(clipped) / (static_cast<double>(num_paths) * family.size());
    return out;
}

}  // namespace fgbm
