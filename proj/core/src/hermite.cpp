#include "fgbm/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace fgbm {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
const double kPiQuarterInv = std::pow(kPi, -0.25);
}  // namespace

// Normalized recurrence for Ht_j(x) := h_j(sqrt(2) x) / sqrt(j!):
//   Ht_0 = 1,
//   Ht_j = sqrt(2/j) x Ht_{j-1} - sqrt((j-1)/j) Ht_{j-2}.
double hermite_function(std::size_t n, double x) {
    if (n == 0) throw std::invalid_argument("hermite_function: index starts at 1");
    const double e = std::exp(-0.5 * x * x);
    double prev = 0.0, cur = 1.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double dj = static_cast<double>(j);
        const double next =
            std::sqrt(2.0 / dj) * x * cur - std::sqrt((dj - 1.0) / dj) * prev;
        prev = cur;
        cur = next;
    }
    return kPiQuarterInv * cur * e;
}

void hermite_function_column(std::size_t K, double x, double* out) {
    const double e = kPiQuarterInv * std::exp(-0.5 * x * x);
    double prev = 0.0, cur = 1.0;
    for (std::size_t j = 0; j < K; ++j) {
        out[j] = cur * e;
        const double dj = static_cast<double>(j + 1);
        const double next =
            std::sqrt(2.0 / dj) * x * cur - std::sqrt(static_cast<double>(j) / dj) * prev;
        prev = cur;
        cur = next;
    }
}

GaussHermiteRule gauss_hermite(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_hermite: need n >= 1");
    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Physicists' polynomials, recurrence H_m = 2x H_{m-1} - 2(m-1) H_{m-2};
    // returns H_n and H_{n-1} at x.
    auto eval = [&](double x, double& hn, double& hn1) {
        double hm2 = 0.0, hm1 = 1.0;
        for (std::size_t m = 1; m <= n; ++m) {
            const double hm = 2.0 * x * hm1 - 2.0 * (static_cast<double>(m) - 1.0) * hm2;
            hm2 = hm1;
            hm1 = hm;
        }
        hn = hm1;
        hn1 = hm2;
    };
    const double dn = static_cast<double>(n);
    const std::size_t half = (n + 1) / 2;
    // Newton iteration, largest root first; each initial guess extrapolates
    // from the roots found so far.
    double x = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
        if (i == 0)
            x = std::sqrt(2.0 * dn + 1.0) - 1.85575 * std::pow(2.0 * dn + 1.0, -1.0 / 6.0);
        else if (i == 1)
            x -= 1.14 * std::pow(dn, 0.426) / x;
        else if (i == 2)
            x = 1.86 * x - 0.86 * rule.nodes[n - 1];
        else if (i == 3)
            x = 1.91 * x - 0.91 * rule.nodes[n - 2];
        else
            x = 2.0 * x - rule.nodes[n + 1 - i];
        double hn = 0.0, hn1 = 1.0;
        for (int it = 0; it < 100; ++it) {
            eval(x, hn, hn1);
            const double step = hn / (2.0 * dn * hn1);
            x -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
        }
        eval(x, hn, hn1);
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        // w = 2^{n-1} n! sqrt(pi) / (n H_{n-1}(x))^2, in log space.
        const double logw = (dn - 1.0) * std::log(2.0) + std::lgamma(dn + 1.0) +
                            0.5 * std::log(kPi) - 2.0 * std::log(dn * std::abs(hn1));
        rule.weights[n - 1 - i] = std::exp(logw);
        rule.weights[i] = rule.weights[n - 1 - i];
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace fgbm
