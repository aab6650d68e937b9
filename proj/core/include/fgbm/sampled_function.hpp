#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fgbm {

// Real function sampled on a uniform grid over [x0, x1], endpoints included.
struct SampledFunction {
    double x0 = 0.0;
    double x1 = 1.0;
    std::vector<double> values;

    SampledFunction() = default;
    SampledFunction(double a, double b, std::vector<double> v)
        : x0(a), x1(b), values(std::move(v)) {
        if (!(x1 > x0) || values.size() < 2)
            throw std::invalid_argument("SampledFunction: need x1 > x0 and at least 2 samples");
    }

    std::size_t size() const { return values.size(); }
    double dx() const { return (x1 - x0) / static_cast<double>(values.size() - 1); }
    double point(std::size_t i) const {
        return x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(values.size() - 1);
    }

    // Trapezoid value of the sampled integral.
    double integral() const {
        double s = 0.5 * (values.front() + values.back());
        for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
        return s * dx();
    }
    double l2_norm_sq() const {
        double s = 0.5 * (values.front() * values.front() + values.back() * values.back());
        for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i] * values[i];
        return s * dx();
    }
};

// Piecewise-linear evaluation; x outside [x0, x1] evaluates to 0.
double value_at(const SampledFunction& f, double x);

// Resamples f onto a uniform grid of `n` samples spanning [a, b] by linear
// interpolation (zero outside f's support).
SampledFunction resample(const SampledFunction& f, double a, double b, std::size_t n);

// Controls for the spectral operator application.
//   pad_factor: power of two >= 2; transforms run on pad_factor * n samples.
//   dc_epsilon: when > 0, a symbol that is singular at frequency zero is
//     evaluated at max(|y|, dc_epsilon) instead; when 0 the zero-frequency
//     bin is zeroed, which imposes a zero-mean convention on the input.
struct OperatorParams {
    std::size_t pad_factor = 4;
    double dc_epsilon = 0.0;

    void validate() const {
        if (pad_factor < 2 || (pad_factor & (pad_factor - 1)) != 0)
            throw std::invalid_argument("OperatorParams: pad_factor must be a power of two >= 2");
        if (dc_epsilon < 0.0)
            throw std::invalid_argument("OperatorParams: dc_epsilon must be >= 0");
    }
};

}  // namespace fgbm
