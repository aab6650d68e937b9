#include "fgbm/mh_operator.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <functional>
#include <mutex>
#include <vector>

#include "quad.hpp"

namespace fgbm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// FFTW planning is not thread safe; execution on distinct buffers is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

void dft_inplace(std::vector<std::complex<double>>& data, int sign) {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_plan plan = fftw_plan_dft_1d(
        static_cast<int>(data.size()), reinterpret_cast<fftw_complex*>(data.data()),
        reinterpret_cast<fftw_complex*>(data.data()), sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

SampledFunction apply_symbol(const SampledFunction& f, const OperatorParams& params,
                             const std::function<double(double)>& symbol,
                             double dc_epsilon_value) {
    params.validate();
    const std::size_t n = f.size() - 1;
    const std::size_t P = params.pad_factor * n;
    const double dx = f.dx();

    std::vector<std::complex<double>> data(P, 0.0);
    for (std::size_t j = 0; j <= n; ++j) data[j] = f.values[j];

    dft_inplace(data, FFTW_FORWARD);

    const double dy = 2.0 * kPi / (static_cast<double>(P) * dx);
    for (std::size_t m = 0; m < P; ++m) {
        const long long mm = (m <= P / 2) ? static_cast<long long>(m)
                                          : static_cast<long long>(m) - static_cast<long long>(P);
        double y = std::abs(static_cast<double>(mm)) * dy;
        double s;
        if (mm == 0) {
            // Power symbols are singular or degenerate at zero frequency but
            // always integrable, so the zero cell takes the symbol's average
            // over [-dy/2, dy/2] rather than a point value.
            s = (dc_epsilon_value > 0.0)
                    ? symbol(dc_epsilon_value)
                    : quad::graded_gl10(symbol, 0.5 * dy, 48) / (0.5 * dy);
        } else {
            if (dc_epsilon_value > 0.0 && y < dc_epsilon_value) y = dc_epsilon_value;
            s = symbol(y);
        }
        data[m] *= s;
    }

    dft_inplace(data, FFTW_BACKWARD);

    std::vector<double> out(n + 1);
    const double scale = 1.0 / static_cast<double>(P);
    for (std::size_t j = 0; j <= n; ++j) out[j] = data[j].real() * scale;
    return SampledFunction(f.x0, f.x1, std::move(out));
}

}  // namespace

double mh_normalization(double h) {
    return std::sqrt(std::sin(kPi * h) * std::tgamma(2.0 * h + 1.0));
}

double movavg_kernel_constant(double h) {
    return mh_normalization(h) / std::tgamma(h + 0.5);
}

double mh_timedomain_constant(double h) {
    if (h == 0.5) return 1.0;
    return mh_normalization(h) /
           (2.0 * std::tgamma(h - 0.5) * std::cos(0.5 * kPi * (h - 0.5)));
}

SampledFunction apply_mh(const SampledFunction& f, const HurstIndex& h,
                         const OperatorParams& params) {
    const double H = h.value;
    if (H == 0.5) return f;
    const double kappa = mh_normalization(H);
    const double expo = 0.5 - H;
    return apply_symbol(
        f, params, [=](double y) { return kappa * std::pow(y, expo); }, params.dc_epsilon);
}

SampledFunction apply_mh_inverse(const SampledFunction& f, const HurstIndex& h,
                                 const OperatorParams& params) {
    const double H = h.value;
    if (H == 0.5) return f;
    const double inv_kappa = 1.0 / mh_normalization(H);
    const double expo = H - 0.5;
    return apply_symbol(
        f, params, [=](double y) { return inv_kappa * std::pow(y, expo); }, params.dc_epsilon);
}

double parseval_indicator_unnormalized(const HurstIndex& h, double a, double b) {
    if (!(b > a)) throw std::invalid_argument("parseval: need b > a");
    const double H = h.value;
    const double L = b - a;
    // (1 / 2pi) Int |y|^{1-2H} |F[1_{[a,b]}]|^2 dy
    //   = (2/pi) L^{2H} Int_0^inf u^{-1-2H} (1 - cos u) du.
    const double U = 400.0;
    auto integrand = [&](double u) {
        // Stable 1 - cos for small u.
        const double s = std::sin(0.5 * u);
        return std::pow(u, -1.0 - 2.0 * H) * 2.0 * s * s;
    };
    double I = quad::graded_gl10(integrand, 1.0, 52);
    I += quad::composite_gl10(integrand, 1.0, U, 800);
    // Tail: Int_U^inf u^{-1-2H} du minus the oscillatory part by parts twice.
    const double p = -1.0 - 2.0 * H;
    const double tail_smooth = std::pow(U, -2.0 * H) / (2.0 * H);
    const double t_cos = -std::pow(U, p) * std::sin(U) -
                         p * (std::pow(U, p - 1.0) * std::cos(U));
    I += tail_smooth - t_cos;
    return (2.0 / kPi) * std::pow(L, 2.0 * H) * I;
}

double mh_timedomain_point(const std::function<double(double)>& f, const HurstIndex& h,
                           double x, double support_radius) {
    const double H = h.value;
    if (H == 0.5) return f(x);
    const double C = mh_timedomain_constant(H);
    if (H < 0.5) {
        // C Int (f(x - t) - f(x)) |t|^{H - 3/2} dt, folded to t > 0. The
        // second difference kills the non-integrable part of the weight.
        const double fx = f(x);
        auto g = [&](double t) {
            return (f(x - t) + f(x + t) - 2.0 * fx) * std::pow(t, H - 1.5);
        };
        double I = quad::graded_gl10(g, 1.0, 52);
        I += quad::composite_gl10(g, 1.0, support_radius + std::abs(x) + 1.0, 600);
        // Beyond the support the difference tends to -2 f(x).
        const double R = support_radius + std::abs(x) + 1.0;
        I += -2.0 * fx * std::pow(R, H - 0.5) / (0.5 - H);
        return C * I;
    }
    // H > 1/2: C Int f(t) |t - x|^{H - 3/2} dt, folded around x.
    auto g = [&](double s) { return (f(x + s) + f(x - s)) * std::pow(s, H - 1.5); };
    double I = quad::graded_gl10(g, 1.0, 52);
    I += quad::composite_gl10(g, 1.0, support_radius + std::abs(x) + 1.0, 600);
    return C * I;
}

}  // namespace fgbm
