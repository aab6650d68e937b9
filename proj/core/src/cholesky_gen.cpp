#include "fgbm/cholesky_gen.hpp"

#include <cmath>
#include <stdexcept>

#include "fgbm/parallel.hpp"

namespace fgbm {

double fbm_covariance(double h, double sigma, double s, double t) {
    const double H2 = 2.0 * h;
    return 0.5 * sigma * sigma *
           (std::pow(std::abs(s), H2) + std::pow(std::abs(t), H2) -
            std::pow(std::abs(t - s), H2));
}

std::vector<double> fbm_covariance_matrix(const TimeGrid& grid, double h, double sigma) {
    const std::size_t n = grid.size();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = fbm_covariance(h, sigma, grid.point(i), grid.point(j));
    return a;
}

void cholesky_factor(std::vector<double>& a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("cholesky_factor: bad dimensions");
    // Symmetrize first; the factorization then reports indefiniteness honestly.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = a[j * n + i] = m;
        }
    for (std::size_t j = 0; j < n; ++j) {
        double d = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
        if (!(d > 0.0))
            throw std::runtime_error(
                "cholesky_factor: matrix not positive definite at pivot " + std::to_string(j) +
                " (value " + std::to_string(d) + ")");
        const double l = std::sqrt(d);
        a[j * n + j] = l;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = s / l;
        }
        for (std::size_t i = 0; i < j; ++i) a[i * n + j] = 0.0;
    }
}

PathEnsemble gen_cholesky_oracle(const HurstIndex& h, const TimeGrid& grid,
                                 const VolatilityScenario& scenario, std::size_t num_paths,
                                 const SeedSpec& seed, std::size_t threads) {
    if (!scenario.is_constant())
        throw std::invalid_argument(
            "gen_cholesky_oracle: only constant scenarios are supported");
    if (grid.n > 2048)
        throw std::invalid_argument("gen_cholesky_oracle: grid limited to 2048 steps");
    if (grid.t0 != 0.0)
        throw std::invalid_argument("gen_cholesky_oracle: grid must start at 0");
    const double sigma = scenario.max_level();

    // Factor over the grid points after t = 0; the first point is pinned to 0.
    const std::size_t m = grid.n;
    std::vector<double> cov(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            cov[i * m + j] = fbm_covariance(h.value, sigma, grid.point(i + 1), grid.point(j + 1));
    cholesky_factor(cov, m);

    PathEnsemble ens;
    ens.grid = grid;
    ens.hurst = h;
    ens.scenario = scenario;
    ens.seed = seed;
    ens.num_paths = num_paths;
    ens.data.assign(num_paths * grid.size(), 0.0);

    parallel_for(num_paths, threads, [&](std::size_t p) {
        PathRng rng(seed, p);
        std::vector<double> z(m);
        for (std::size_t i = 0; i < m; ++i) z[i] = rng.next_gaussian();
        double* row = ens.row(p);
        row[0] = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k <= i; ++k) s += cov[i * m + k] * z[k];
            row[i + 1] = s;
        }
    });
    return ens;
}

}  // namespace fgbm
