#include "fgbm/chaos_noise.hpp"

namespace fgbm {

LinearForm NoiseContext::fgbm_form(double t) const {
    LinearForm f;
    f.coeffs = basis->fgbm_coeff(t);
    return f;
}

LinearForm NoiseContext::gnoise_form(double t) const {
    LinearForm f;
    f.coeffs = basis->gnoise(t);
    return f;
}

LinearForm NoiseContext::inverse_form(double t) const {
    LinearForm f;
    f.coeffs = basis->inverse_basis(t);
    return f;
}

double NoiseContext::truncated_variance(double t) const { return basis->truncated_variance(t); }

double NoiseContext::truncated_variance_deriv(double t) const {
    const std::vector<double> a = basis->fgbm_coeff(t);
    const std::vector<double> w = basis->gnoise(t);
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * w[k];
    return 2.0 * s;
}

ChaosExpansion NoiseContext::fgbm(double t, std::size_t max_degree) const {
    return ChaosExpansion::linear(fgbm_form(t), max_degree);
}

ChaosExpansion NoiseContext::gnoise(double t, std::size_t max_degree) const {
    return ChaosExpansion::linear(gnoise_form(t), max_degree);
}

NoiseContext make_noise_context(const HurstIndex& h, std::size_t num_coords) {
    return NoiseContext{h, num_coords, &hermite_basis(h, num_coords)};
}

}  // namespace fgbm
