#include "fgbm/sampled_function.hpp"

#include <cmath>

namespace fgbm {

double value_at(const SampledFunction& f, double x) {
    if (x < f.x0 || x > f.x1) return 0.0;
    const double pos = (x - f.x0) / (f.x1 - f.x0) * static_cast<double>(f.size() - 1);
    const auto i = static_cast<std::size_t>(std::floor(pos));
    if (i + 1 >= f.size()) return f.values.back();
    const double frac = pos - static_cast<double>(i);
    return f.values[i] * (1.0 - frac) + f.values[i + 1] * frac;
}

SampledFunction resample(const SampledFunction& f, double a, double b, std::size_t n) {
    if (n < 2) throw std::invalid_argument("resample: need at least 2 samples");
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
        v[i] = value_at(f, x);
    }
    return SampledFunction(a, b, std::move(v));
}

}  // namespace fgbm
