#include "fgbm/moving_average.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fgbm/mh_operator.hpp"
#include "fgbm/parallel.hpp"
#include "fgbm/rng.hpp"

namespace fgbm {

namespace {

// Int_a^b (t-s)^{H-1/2} ds for b <= t, via the antiderivative in u = t-s.
double kernel_cell(double h, double t, double a, double b) {
    const double p = h + 0.5;
    return (std::pow(t - a, p) - std::pow(t - b, p)) / p;
}

std::vector<double> build_boundaries(const TimeGrid& grid, const VolatilityScenario& scenario,
                                     const MovingAverageConfig& cfg) {
    const double span = grid.t1 - grid.t0;
    const double s0 = cfg.window_mult * span;
    std::vector<double> b;

    // Geometric grading from the far end to 4 spans out, then uniform.
    const double ratio = 1.12;
    const double medium_edge = std::min(4.0 * span, s0);
    std::vector<double> graded;
    for (double x = s0; x > medium_edge * (1.0 + 1e-12); x /= ratio) graded.push_back(-x);
    std::sort(graded.begin(), graded.end());
    b.insert(b.end(), graded.begin(), graded.end());

    const double dm = span / 128.0;
    const auto m_cells = static_cast<std::size_t>(std::ceil(medium_edge / dm - 1e-9));
    for (std::size_t k = 0; k < m_cells; ++k) b.push_back(-medium_edge + static_cast<double>(k) * medium_edge / static_cast<double>(m_cells));

    std::size_t per_step = (cfg.fine_steps + grid.n - 1) / grid.n;
    per_step = std::max<std::size_t>(per_step, 1);
    const std::size_t n_f = per_step * grid.n;
    for (std::size_t k = 0; k < n_f; ++k) b.push_back(grid.t0 + static_cast<double>(k) * span / static_cast<double>(n_f));
    b.push_back(grid.t1);

    for (double s : scenario.breakpoints())
        if (s > grid.t0 && s < grid.t1) b.push_back(s);

    std::sort(b.begin(), b.end());
    const double tol = 1e-12 * span;
    b.erase(std::unique(b.begin(), b.end(), [&](double x, double y) { return std::abs(x - y) < tol; }),
            b.end());
    return b;
}

}  // namespace

MovingAverageModel::MovingAverageModel(const HurstIndex& h, const TimeGrid& grid,
                                       const VolatilityScenario& scenario,
                                       const MovingAverageConfig& cfg)
    : grid_(grid), h_(h), scenario_(scenario), cfg_(cfg) {
    if (grid.t0 != 0.0) throw std::invalid_argument("moving-average model requires grid starting at 0");
    if (cfg.window_mult < 1.0) throw std::invalid_argument("window_mult must be at least 1");
    if (cfg.window_mult < 20.0)
        warnings_.push_back("noise window below 20x horizon; long-memory tail may be visibly truncated");

    const auto bounds = build_boundaries(grid, scenario, cfg);
    const std::size_t cells = bounds.size() - 1;
    centers_.resize(cells);
    widths_.resize(cells);
    std::vector<double> sig(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        centers_[c] = 0.5 * (bounds[c] + bounds[c + 1]);
        widths_[c] = bounds[c + 1] - bounds[c];
        sig[c] = scenario_(std::max(centers_[c], 0.0));
    }

    const double hv = h.value;
    const double c_h = movavg_kernel_constant(hv);
    const std::size_t np = grid.size();
    weight_.assign(np * cells, 0.0);
    for (std::size_t i = 1; i < np; ++i) {
        const double t = grid.point(i);
        for (std::size_t c = 0; c < cells; ++c) {
            const double a = bounds[c];
            const double b = bounds[c + 1];
            if (a >= t) break;
            double q = kernel_cell(hv, t, a, std::min(b, t));
            if (b <= 0.0) q -= kernel_cell(hv, 0.0, a, b);
            weight_[i * cells + c] = c_h * q * sig[c] / std::sqrt(widths_[c]);
        }
    }

    // Tail variance beyond the window: kernel difference decays like
    // |H-1/2| t s^{H-3/2}, integrated squared from window_mult*span out.
    const double span = grid.t1 - grid.t0;
    const double s0 = cfg.window_mult * span;
    const double sig0 = scenario_(0.0);
    if (hv != 0.5) {
        const double amp = c_h * std::abs(hv - 0.5) * span * sig0;
        tail_bound_ = amp * amp * std::pow(s0, 2.0 * hv - 2.0) / (2.0 - 2.0 * hv);
        const double horizon_var = sig0 * sig0 * std::pow(span, 2.0 * hv);
        if (tail_bound_ > cfg.tail_warn_rel * horizon_var)
            warnings_.push_back("truncated noise tail variance exceeds threshold; widen window_mult");
    }
}

PathEnsemble MovingAverageModel::generate(std::size_t num_paths, const SeedSpec& seed) const {
    PathEnsemble ens;
    ens.grid = grid_;
    ens.hurst = h_;
    ens.scenario = scenario_;
    ens.seed = seed;
    ens.num_paths = num_paths;
    ens.warnings = warnings_;
    const std::size_t np = grid_.size();
    const std::size_t cells = centers_.size();
    ens.data.assign(num_paths * np, 0.0);

    parallel_for(num_paths, cfg_.threads, [&](std::size_t p) {
        PathRng rng(seed, p);
        std::vector<double> z(cells);
        for (std::size_t c = 0; c < cells; ++c) z[c] = rng.next_gaussian();
        double* row = ens.data.data() + p * np;
        for (std::size_t i = 1; i < np; ++i) {
            const double* w = weight_.data() + i * cells;
            double acc = 0.0;
            for (std::size_t c = 0; c < cells; ++c) acc += w[c] * z[c];
            row[i] = acc;
        }
    });
    return ens;
}

std::vector<double> MovingAverageModel::model_covariance() const {
    const std::size_t np = grid_.size();
    const std::size_t cells = centers_.size();
    std::vector<double> cov(np * np, 0.0);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i; j < np; ++j) {
            const double* wi = weight_.data() + i * cells;
            const double* wj = weight_.data() + j * cells;
            double acc = 0.0;
            for (std::size_t c = 0; c < cells; ++c) acc += wi[c] * wj[c];
            cov[i * np + j] = cov[j * np + i] = acc;
        }
    return cov;
}

std::vector<double> MovingAverageModel::model_variance() const {
    const std::size_t np = grid_.size();
    const std::size_t cells = centers_.size();
    std::vector<double> var(np, 0.0);
    for (std::size_t i = 0; i < np; ++i) {
        const double* w = weight_.data() + i * cells;
        double acc = 0.0;
        for (std::size_t c = 0; c < cells; ++c) acc += w[c] * w[c];
        var[i] = acc;
    }
    return var;
}

PathEnsemble gen_moving_average(const HurstIndex& h, const TimeGrid& grid,
                                const VolatilityScenario& scenario, std::size_t num_paths,
                                const SeedSpec& seed, const MovingAverageConfig& cfg) {
    return MovingAverageModel(h, grid, scenario, cfg).generate(num_paths, seed);
}

}  // namespace fgbm
