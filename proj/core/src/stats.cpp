#include "fgbm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fgbm {

double pairwise_sum(const double* x, std::size_t n) {
    // Base case is a single element so that a power-of-two count reduces to a
    // perfect binary tree of doublings; larger sequential base cases would
    // break the exact-constant property.
    if (n == 0) return 0.0;
    if (n == 1) return x[0];
    if (n == 2) return x[0] + x[1];
    const std::size_t half = n / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

MomentEstimate mean_with_se(const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    if (n == 0) throw std::invalid_argument("empty sample");
    double s = 0.0;
    for (double x : samples) s += x;
    const double mean = s / static_cast<double>(n);
    if (n == 1) return {mean, 0.0};
    double q = 0.0;
    for (double x : samples) q += (x - mean) * (x - mean);
    const double var = q / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n))};
}

CovarianceEstimate sample_covariance(const PathEnsemble& ens) {
    const std::size_t np = ens.grid.size();
    const std::size_t paths = ens.num_paths;
    if (paths < 2) throw std::invalid_argument("need at least two paths");
    CovarianceEstimate out;
    out.np = np;
    out.mean.assign(np * np, 0.0);
    out.se.assign(np * np, 0.0);
    std::vector<double> sum(np * np, 0.0), sumsq(np * np, 0.0);
    for (std::size_t p = 0; p < paths; ++p) {
        const double* row = ens.data.data() + p * np;
        for (std::size_t i = 0; i < np; ++i)
            for (std::size_t j = i; j < np; ++j) {
                const double v = row[i] * row[j];
                sum[i * np + j] += v;
                sumsq[i * np + j] += v * v;
            }
    }
    const double n = static_cast<double>(paths);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i; j < np; ++j) {
            const double m = sum[i * np + j] / n;
            double var = (sumsq[i * np + j] / n - m * m) * n / (n - 1.0);
            var = std::max(var, 0.0);
            const std::size_t a = i * np + j, b = j * np + i;
            out.mean[a] = out.mean[b] = m;
            out.se[a] = out.se[b] = std::sqrt(var / n);
        }
    return out;
}

MomentEstimate increment_autocov(const PathEnsemble& ens, std::size_t lag) {
    const std::size_t np = ens.grid.size();
    if (np < lag + 2) throw std::invalid_argument("grid too short for requested lag");
    std::vector<double> per_path(ens.num_paths);
    const std::size_t terms = np - 1 - lag;
    for (std::size_t p = 0; p < ens.num_paths; ++p) {
        const double* row = ens.data.data() + p * np;
        double acc = 0.0;
        for (std::size_t i = 0; i < terms; ++i) {
            const double x0 = row[i + 1] - row[i];
            const double x1 = row[i + lag + 1] - row[i + lag];
            acc += x0 * x1;
        }
        per_path[p] = acc / static_cast<double>(terms);
    }
    return mean_with_se(per_path);
}

double fgn_autocov(double h, std::size_t lag, double dt, double sigma) {
    const double e = 2.0 * h;
    const double n = static_cast<double>(lag);
    double bracket;
    if (lag == 0) {
        bracket = 1.0;
    } else {
        bracket = 0.5 * (std::pow(n + 1.0, e) - 2.0 * std::pow(n, e) + std::pow(std::abs(n - 1.0), e));
    }
    return sigma * sigma * std::pow(dt, e) * bracket;
}

double fgn_autocov_upper(double h, const VolatilityBand& band, std::size_t lag, double dt) {
    const double rho = fgn_autocov(h, lag, dt, 1.0);
    return rho >= 0.0 ? band.hi * band.hi * rho : band.lo * band.lo * rho;
}

double fgn_autocov_lower(double h, const VolatilityBand& band, std::size_t lag, double dt) {
    const double rho = fgn_autocov(h, lag, dt, 1.0);
    return rho >= 0.0 ? band.lo * band.lo * rho : band.hi * band.hi * rho;
}

double fgn_autocov_partial_sum(double h, std::size_t n_max) {
    const double e = 2.0 * h;
    const double n = static_cast<double>(n_max);
    return 0.5 * (std::pow(n + 1.0, e) - std::pow(n, e) - 1.0);
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t ia = 0, ib = 0;
    double d = 0.0;
    // Compare the empirical distributions just after each jump; ties must
    // advance both sides together or identical samples show a false gap.
    while (ia < a.size() && ib < b.size()) {
        const double x = std::min(a[ia], b[ib]);
        while (ia < a.size() && a[ia] == x) ++ia;
        while (ib < b.size() && b[ib] == x) ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
    }
    return d;
}

double ks_threshold(std::size_t n, std::size_t m, double alpha) {
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    const double dn = static_cast<double>(n), dm = static_cast<double>(m);
    return c * std::sqrt((dn + dm) / (dn * dm));
}

double self_similarity_ks(const PathEnsemble& ens, std::size_t base_index, std::size_t scale) {
    const std::size_t np = ens.grid.size();
    const std::size_t far_index = base_index * scale;
    if (base_index == 0 || far_index >= np) throw std::invalid_argument("indices off the grid");
    const std::size_t half = ens.num_paths / 2;
    if (half < 2) throw std::invalid_argument("too few paths");
    const double factor = std::pow(static_cast<double>(scale), -ens.hurst.value);
    std::vector<double> rescaled(half), reference(half);
    for (std::size_t p = 0; p < half; ++p)
        rescaled[p] = factor * ens.at(p, far_index);
    for (std::size_t p = 0; p < half; ++p)
        reference[p] = ens.at(half + p, base_index);
    return ks_statistic(std::move(rescaled), std::move(reference));
}

RatioRange holder_moment_ratio(const PathEnsemble& ens, double p) {
    const std::size_t np = ens.grid.size();
    if (np < 2) throw std::invalid_argument("grid too short");
    RatioRange r{0.0, 0.0};
    bool first = true;
    const double ph = p * ens.hurst.value;
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i + 1; j < np; ++j) {
            double acc = 0.0;
            for (std::size_t q = 0; q < ens.num_paths; ++q)
                acc += std::pow(std::abs(ens.at(q, j) - ens.at(q, i)), p);
            const double m = acc / static_cast<double>(ens.num_paths);
            const double gap = ens.grid.point(j) - ens.grid.point(i);
            const double ratio = m / std::pow(gap, ph);
            if (first) {
                r.lo = r.hi = ratio;
                first = false;
            } else {
                r.lo = std::min(r.lo, ratio);
                r.hi = std::max(r.hi, ratio);
            }
        }
    return r;
}

}  // namespace fgbm
