#include "fgbm/wavelet_filters.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fgbm {

WaveletFilter WaveletFilter::daubechies(int order) {
    WaveletFilter f;
    f.order = order;
    switch (order) {
        case 2: {
            const double s3 = std::sqrt(3.0);
            const double s2 = std::sqrt(2.0);
            f.lo = {(1.0 + s3) / (4.0 * s2), (3.0 + s3) / (4.0 * s2), (3.0 - s3) / (4.0 * s2),
                    (1.0 - s3) / (4.0 * s2)};
            break;
        }
        case 3:
            f.lo = {0.33267055295008262,  0.80689150931109258,   0.45987750211849157,
                    -0.13501102001025459, -0.085441273882026662, 0.035226291885709537};
            break;
        case 4:
            f.lo = {0.23037781330889650,   0.71484657055291565,  0.63088076792985891,
                    -0.027983769416859854, -0.18703481171909308, 0.030841381835560764,
                    0.032883011666885200,  -0.010597401785069032};
            break;
        default:
            throw std::invalid_argument("unsupported wavelet order " + std::to_string(order));
    }
    const std::size_t len = f.lo.size();
    f.hi.resize(len);
    for (std::size_t k = 0; k < len; ++k)
        f.hi[k] = (k % 2 == 0 ? 1.0 : -1.0) * f.lo[len - 1 - k];
    return f;
}

void validate_filter(const WaveletFilter& f, double tol) {
    const std::size_t len = f.lo.size();
    if (len == 0 || len % 2 != 0 || f.hi.size() != len)
        throw std::runtime_error("wavelet filter has inconsistent length");
    double s = 0.0;
    for (double c : f.lo) s += c;
    if (std::abs(s - std::sqrt(2.0)) > tol)
        throw std::runtime_error("scaling filter does not sum to sqrt(2)");
    for (std::size_t m = 0; m < len / 2; ++m) {
        double acc = 0.0;
        for (std::size_t k = 0; k + 2 * m < len; ++k) acc += f.lo[k] * f.lo[k + 2 * m];
        const double want = (m == 0) ? 1.0 : 0.0;
        if (std::abs(acc - want) > tol)
            throw std::runtime_error("scaling filter violates double-shift orthogonality");
    }
}

std::vector<double> synthesis_step(const WaveletFilter& f, const std::vector<double>& approx,
                                   const std::vector<double>& detail) {
    const std::size_t n = approx.size();
    if (detail.size() != n) throw std::invalid_argument("approx/detail length mismatch");
    const std::size_t n2 = 2 * n;
    std::vector<double> out(n2, 0.0);
    const std::size_t len = f.lo.size();
    for (std::size_t m = 0; m < n; ++m) {
        const double a = approx[m];
        const double d = detail[m];
        if (a == 0.0 && d == 0.0) continue;
        for (std::size_t k = 0; k < len; ++k) {
            const std::size_t idx = (2 * m + k) % n2;
            out[idx] += f.lo[k] * a + f.hi[k] * d;
        }
    }
    return out;
}

void analysis_step(const WaveletFilter& f, const std::vector<double>& x,
                   std::vector<double>& approx, std::vector<double>& detail) {
    const std::size_t n2 = x.size();
    if (n2 < 2 || n2 % 2 != 0) throw std::invalid_argument("analysis needs even length");
    const std::size_t n = n2 / 2;
    const std::size_t len = f.lo.size();
    approx.assign(n, 0.0);
    detail.assign(n, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
        double a = 0.0, d = 0.0;
        const std::size_t base = 2 * m;
        if (base + len <= n2) {
            const double* xp = x.data() + base;
            for (std::size_t k = 0; k < len; ++k) {
                a += f.lo[k] * xp[k];
                d += f.hi[k] * xp[k];
            }
        } else {
            for (std::size_t k = 0; k < len; ++k) {
                const double v = x[(base + k) % n2];
                a += f.lo[k] * v;
                d += f.hi[k] * v;
            }
        }
        approx[m] = a;
        detail[m] = d;
    }
}

}  // namespace fgbm
