#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fgbm {

inline constexpr const char* kVersion = "0.1.0";

// Roughness parameter of the process family. Valid range is the open
// interval (0, 1); 0.5 recovers the classical Brownian case.
struct HurstIndex {
    double value;

    explicit HurstIndex(double h) : value(h) {
        if (!(h > 0.0 && h < 1.0))
            throw std::invalid_argument("HurstIndex: value must lie in (0, 1), got " +
                                        std::to_string(h));
    }
};

// Volatility uncertainty interval [lo, hi], 0 < lo <= hi.
struct VolatilityBand {
    double lo;
    double hi;

    VolatilityBand(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo > 0.0) || !(hi >= lo))
            throw std::invalid_argument("VolatilityBand: need 0 < lo <= hi, got [" +
                                        std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    }

    bool degenerate() const { return lo == hi; }
};

// Uniform time grid t0 <= t1 with n steps (n + 1 sample points).
struct TimeGrid {
    double t0;
    double t1;
    std::size_t n;

    TimeGrid(double t0_, double t1_, std::size_t n_) : t0(t0_), t1(t1_), n(n_) {
        if (!(t1 > t0) || n == 0)
            throw std::invalid_argument("TimeGrid: need t1 > t0 and n >= 1");
    }

    std::size_t size() const { return n + 1; }
    double dt() const { return (t1 - t0) / static_cast<double>(n); }
    double point(std::size_t i) const {
        return t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n);
    }
    std::vector<double> points() const {
        std::vector<double> p(size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = point(i);
        return p;
    }
};

}  // namespace fgbm
