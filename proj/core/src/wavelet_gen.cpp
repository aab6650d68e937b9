#include "fgbm/wavelet_gen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fgbm/mh_operator.hpp"
#include "fgbm/parallel.hpp"
#include "fgbm/rng.hpp"
#include "fgbm/wavelet_filters.hpp"

namespace fgbm {

WaveletModel::WaveletModel(const HurstIndex& h, const TimeGrid& grid,
                           const VolatilityScenario& scenario, const WaveletConfig& cfg)
    : grid_(grid), h_(h), scenario_(scenario), cfg_(cfg) {
    if (grid.t0 != 0.0) throw std::invalid_argument("wavelet model requires grid starting at 0");
    if (cfg.levels < 2 || cfg.levels > 16) throw std::invalid_argument("levels out of range");
    if (cfg.window_mult < 1.0) throw std::invalid_argument("window_mult must be at least 1");

    std::size_t wp1 = 2;
    while (wp1 < cfg.window_mult + 1.0) wp1 *= 2;
    window_mult_ = static_cast<double>(wp1 - 1);
    if (window_mult_ < 20.0)
        warnings_.push_back("noise window below 20x horizon; long-memory tail may be visibly truncated");

    if (cfg.fine_margin < 1 || cfg.levels + cfg.fine_margin > 22)
        throw std::invalid_argument("levels + fine_margin out of range");
    const std::size_t cells_per_span = std::size_t{1} << (cfg.levels + cfg.fine_margin);
    const std::size_t n_fine = wp1 * cells_per_span;
    if (cells_per_span < grid.n || cells_per_span % grid.n != 0)
        throw std::invalid_argument(
            "grid size must divide the per-horizon noise resolution (" +
            std::to_string(cells_per_span) + "); use a power-of-two grid or raise levels");
    if ((std::size_t{1} << cfg.levels) < 8 * grid.n)
        warnings_.push_back("output grid close to the finest resolved noise scale");

    const double span = grid.t1 - grid.t0;
    const double dx = span / static_cast<double>(cells_per_span);
    const double hv = h.value;
    const double alpha = hv + 0.5;
    const double kappa = mh_normalization(hv);

    // Exact kernel mass of one noise cell at integer boundary distance m.
    std::vector<double> kern(n_fine);
    {
        const double scale = std::pow(dx, alpha) / std::tgamma(alpha + 1.0);
        double prev = 0.0;
        for (std::size_t m = 0; m < n_fine; ++m) {
            const double next = std::pow(static_cast<double>(m + 1), alpha);
            kern[m] = scale * (next - prev);
            prev = next;
        }
    }

    const WaveletFilter filter = WaveletFilter::daubechies(cfg.order);
    validate_filter(filter);

    // The driving noise is resolved down to scale 2^{-levels} of the horizon
    // across the whole window: one scaling row at the horizon scale plus
    // dyadic detail rows, wp1 * 2^levels coefficients in total. The weights
    // are the analysis coefficients of the (volatility-scaled) kernel, with
    // the fine_margin levels below the noise scale discarded.
    basis_count_ = wp1 << cfg.levels;
    const std::size_t np = grid_.size();
    weight_.assign(np * basis_count_, 0.0);

    const std::size_t p0 = (wp1 - 1) * cells_per_span;  // boundary index of t = 0
    const std::size_t step = cells_per_span / grid.n;
    const double t_left = -static_cast<double>(wp1 - 1) * span;
    const double norm = kappa / std::sqrt(dx);

    parallel_for(np - 1, cfg.threads, [&](std::size_t im1) {
        const std::size_t i = im1 + 1;
        const std::size_t pi = p0 + i * step;
        // Response difference against t = 0 so every row vanishes there.
        std::vector<double> cur(n_fine, 0.0);
        for (std::size_t q = 0; q < pi; ++q) {
            const double t_cell = t_left + (static_cast<double>(q) + 0.5) * dx;
            const double sig = scenario_(std::max(t_cell, 0.0));
            const double base = (q < p0) ? kern[p0 - 1 - q] : 0.0;
            cur[q] = sig * norm * (kern[pi - 1 - q] - base);
        }
        std::vector<double> approx, detail;
        for (std::size_t s = 0; s < cfg.fine_margin; ++s) {
            analysis_step(filter, cur, approx, detail);
            cur.swap(approx);
        }
        double* row = weight_.data() + i * basis_count_;
        for (std::size_t j = cfg.levels; j-- > 0;) {
            analysis_step(filter, cur, approx, detail);
            std::copy(detail.begin(), detail.end(), row + (wp1 << j));
            cur.swap(approx);
        }
        std::copy(cur.begin(), cur.end(), row);
    });
}

PathEnsemble WaveletModel::generate(std::size_t num_paths, const SeedSpec& seed) const {
    PathEnsemble ens;
    ens.grid = grid_;
    ens.hurst = h_;
    ens.scenario = scenario_;
    ens.seed = seed;
    ens.num_paths = num_paths;
    ens.warnings = warnings_;
    const std::size_t np = grid_.size();
    const std::size_t nf = basis_count_;
    ens.data.assign(num_paths * np, 0.0);
    parallel_for(num_paths, cfg_.threads, [&](std::size_t p) {
        PathRng rng(seed, p);
        std::vector<double> z(nf);
        for (std::size_t f = 0; f < nf; ++f) z[f] = rng.next_gaussian();
        double* row = ens.data.data() + p * np;
        for (std::size_t i = 1; i < np; ++i) {
            const double* w = weight_.data() + i * nf;
            double acc = 0.0;
            for (std::size_t f = 0; f < nf; ++f) acc += w[f] * z[f];
            row[i] = acc;
        }
    });
    return ens;
}

std::vector<double> WaveletModel::model_covariance() const {
    const std::size_t np = grid_.size();
    const std::size_t nf = basis_count_;
    std::vector<double> cov(np * np, 0.0);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i; j < np; ++j) {
            const double* wi = weight_.data() + i * nf;
            const double* wj = weight_.data() + j * nf;
            double acc = 0.0;
            for (std::size_t f = 0; f < nf; ++f) acc += wi[f] * wj[f];
            cov[i * np + j] = cov[j * np + i] = acc;
        }
    return cov;
}

std::vector<double> WaveletModel::model_variance() const {
    const std::size_t np = grid_.size();
    const std::size_t nf = basis_count_;
    std::vector<double> var(np, 0.0);
    for (std::size_t i = 0; i < np; ++i) {
        const double* w = weight_.data() + i * nf;
        double acc = 0.0;
        for (std::size_t f = 0; f < nf; ++f) acc += w[f] * w[f];
        var[i] = acc;
    }
    return var;
}

PathEnsemble gen_wavelet(const HurstIndex& h, const TimeGrid& grid,
                         const VolatilityScenario& scenario, std::size_t num_paths,
                         const SeedSpec& seed, const WaveletConfig& cfg) {
    return WaveletModel(h, grid, scenario, cfg).generate(num_paths, seed);
}

}  // namespace fgbm
