#pragma once

// Internal quadrature helpers: composite Gauss-Legendre panels and graded
// meshes for endpoint power singularities.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace fgbm::quad {

inline constexpr double kGL10Node[5] = {
    0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
    0.8650633666889845, 0.9739065285171717};
inline constexpr double kGL10Weight[5] = {
    0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
    0.1494513491505806, 0.0666713443086881};

// 10-point Gauss-Legendre on [a, b].
template <class F>
double gl10(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double d = r * kGL10Node[i];
        s += kGL10Weight[i] * (f(c - d) + f(c + d));
    }
    return s * r;
}

template <class F>
double composite_gl10(const F& f, double a, double b, std::size_t panels) {
    double s = 0.0;
    const double h = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) s += gl10(f, a + h * p, a + h * (p + 1));
    return s;
}

// Integral over (0, b] of an integrand with an integrable power singularity
// at 0: dyadically graded panels [b 2^{-m-1}, b 2^{-m}] down to b 2^{-levels}.
template <class F>
double graded_gl10(const F& f, double b, int levels = 48) {
    double s = 0.0;
    double hi = b;
    for (int m = 0; m < levels; ++m) {
        const double lo = 0.5 * hi;
        s += gl10(f, lo, hi);
        hi = lo;
    }
    return s;
}

struct Nodes {
    std::vector<double> y;
    std::vector<double> w;
};

// Quadrature nodes for integrals over (0, ymax] of functions with a power
// singularity at 0 and oscillation of angular frequency up to omega:
// graded panels below y_switch, uniform panels of width ~ 6 / omega above.
inline Nodes singular_oscillatory_nodes(double ymax, double omega, double y_switch = 1.0,
                                        int graded_levels = 48) {
    Nodes out;
    if (y_switch > ymax) y_switch = ymax;
    auto add_panel = [&](double a, double b) {
        const double c = 0.5 * (a + b), r = 0.5 * (b - a);
        for (int i = 4; i >= 0; --i) {
            out.y.push_back(c - r * kGL10Node[i]);
            out.w.push_back(r * kGL10Weight[i]);
        }
        for (int i = 0; i < 5; ++i) {
            out.y.push_back(c + r * kGL10Node[i]);
            out.w.push_back(r * kGL10Weight[i]);
        }
    };
    double hi = y_switch;
    std::vector<std::pair<double, double>> graded;
    for (int m = 0; m < graded_levels; ++m) {
        const double lo = 0.5 * hi;
        graded.emplace_back(lo, hi);
        hi = lo;
    }
    for (auto it = graded.rbegin(); it != graded.rend(); ++it) add_panel(it->first, it->second);
    if (ymax > y_switch) {
        const double width = std::min(0.5, 6.0 / std::max(omega, 1.0));
        const std::size_t panels =
            static_cast<std::size_t>(std::ceil((ymax - y_switch) / width));
        const double h = (ymax - y_switch) / static_cast<double>(panels);
        for (std::size_t p = 0; p < panels; ++p)
            add_panel(y_switch + h * p, y_switch + h * (p + 1));
    }
    return out;
}

}  // namespace fgbm::quad
