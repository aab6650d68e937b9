#include "fgbm/hermite_spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fgbm/hermite.hpp"
#include "fgbm/mh_operator.hpp"
#include "quad.hpp"

namespace fgbm {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

FractionalHermiteBasis::FractionalHermiteBasis(const HurstIndex& h, std::size_t K)
    : h_(h.value), K_(K) {
    if (K == 0) throw std::invalid_argument("FractionalHermiteBasis: need K >= 1");

    // h~_k oscillates below its turning point sqrt(2k - 1) and decays like a
    // Gaussian beyond it; the mesh resolves the fastest oscillation plus a
    // margin for the e^{iyt} factor at moderate t.
    const double omega = std::sqrt(2.0 * static_cast<double>(K)) + 8.0;
    const double ymax = std::sqrt(2.0 * static_cast<double>(K)) + 12.0;
    auto nodes = quad::singular_oscillatory_nodes(ymax, omega, 1.0, 48);
    y_ = std::move(nodes.y);
    const std::vector<double>& w = nodes.w;

    const std::size_t Q = y_.size();
    const double kappa = mh_normalization(h_);
    const double front = std::sqrt(2.0 / kPi);
    fw_.resize(Q);
    iw_.resize(Q);
    herm_.assign(K_ * Q, 0.0);
    std::vector<double> col(K_);
    for (std::size_t q = 0; q < Q; ++q) {
        const double y = y_[q];
        fw_[q] = front * w[q] * kappa * std::pow(y, 0.5 - h_);
        iw_[q] = front * w[q] * std::pow(y, h_ - 0.5) / kappa;
        hermite_function_column(K_, y, col.data());
        for (std::size_t k = 0; k < K_; ++k) herm_[k * Q + q] = col[k];
    }
}

// Folding the full-line transform to y > 0 and using the Fourier eigenvalue
// (-i)^{k-1} of h~_k leaves cos(yt) for odd k and sin(yt) for even k, with
// an alternating sign of period 4 in k.
void FractionalHermiteBasis::gnoise(double t, double* out) const {
    const std::size_t Q = y_.size();
    std::vector<double> c(Q), s(Q);
    for (std::size_t q = 0; q < Q; ++q) {
        c[q] = std::cos(y_[q] * t);
        s[q] = std::sin(y_[q] * t);
    }
    for (std::size_t k = 1; k <= K_; ++k) {
        const double* hk = &herm_[(k - 1) * Q];
        const double* trig = (k % 2 == 1) ? c.data() : s.data();
        double acc = 0.0;
        for (std::size_t q = 0; q < Q; ++q) acc += fw_[q] * hk[q] * trig[q];
        const double sign = (((k - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
        out[k - 1] = sign * acc;
    }
}

void FractionalHermiteBasis::fgbm_coeff(double t, double* out) const {
    const std::size_t Q = y_.size();
    std::vector<double> ic(Q), is(Q);
    for (std::size_t q = 0; q < Q; ++q) {
        const double y = y_[q];
        ic[q] = std::sin(y * t) / y;                    // Int_0^t cos(ys) ds
        const double sh = std::sin(0.5 * y * t);
        is[q] = 2.0 * sh * sh / y;                      // Int_0^t sin(ys) ds
    }
    for (std::size_t k = 1; k <= K_; ++k) {
        const double* hk = &herm_[(k - 1) * Q];
        const double* trig = (k % 2 == 1) ? ic.data() : is.data();
        double acc = 0.0;
        for (std::size_t q = 0; q < Q; ++q) acc += fw_[q] * hk[q] * trig[q];
        const double sign = (((k - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
        out[k - 1] = sign * acc;
    }
}

void FractionalHermiteBasis::inverse_basis(double t, double* out) const {
    const std::size_t Q = y_.size();
    std::vector<double> c(Q), s(Q);
    for (std::size_t q = 0; q < Q; ++q) {
        c[q] = std::cos(y_[q] * t);
        s[q] = std::sin(y_[q] * t);
    }
    for (std::size_t k = 1; k <= K_; ++k) {
        const double* hk = &herm_[(k - 1) * Q];
        const double* trig = (k % 2 == 1) ? c.data() : s.data();
        double acc = 0.0;
        for (std::size_t q = 0; q < Q; ++q) acc += iw_[q] * hk[q] * trig[q];
        const double sign = (((k - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
        out[k - 1] = sign * acc;
    }
}

std::vector<double> FractionalHermiteBasis::gnoise(double t) const {
    std::vector<double> out(K_);
    gnoise(t, out.data());
    return out;
}

std::vector<double> FractionalHermiteBasis::fgbm_coeff(double t) const {
    std::vector<double> out(K_);
    fgbm_coeff(t, out.data());
    return out;
}

std::vector<double> FractionalHermiteBasis::inverse_basis(double t) const {
    std::vector<double> out(K_);
    inverse_basis(t, out.data());
    return out;
}

double FractionalHermiteBasis::truncated_variance(double t) const {
    const auto a = fgbm_coeff(t);
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
}

const FractionalHermiteBasis& hermite_basis(const HurstIndex& h, std::size_t K) {
    static std::mutex mu;
    static std::map<std::pair<long long, std::size_t>, std::unique_ptr<FractionalHermiteBasis>>
        cache;
    const auto key = std::make_pair(std::llround(h.value * 1e12), K);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<FractionalHermiteBasis>(h, K)).first;
    return *it->second;
}

}  // namespace fgbm
