#pragma once

#include <cstddef>

#include "fgbm/expansion.hpp"
#include "fgbm/hermite_spectral.hpp"
#include "fgbm/types.hpp"

namespace fgbm {

// Chaos coordinates of the process and its noise for one Hurst index and
// truncation size. The process at time t is the linear form with
// coefficients a_k(t); the noise is the (distribution-valued) family w_k(t).
// All expansions produced here describe the unit-volatility process; scenario
// volatility enters later by scaling at the application layer.
struct NoiseContext {
    HurstIndex h{0.5};
    std::size_t num_coords = 0;
    const FractionalHermiteBasis* basis = nullptr;

    LinearForm fgbm_form(double t) const;
    LinearForm gnoise_form(double t) const;
    LinearForm inverse_form(double t) const;

    double truncated_variance(double t) const;
    // d/dt of the truncated variance, 2 sum a_k w_k: the rate that replaces
    // 2H t^{2H-1} when identities are closed inside the truncated algebra.
    double truncated_variance_deriv(double t) const;

    ChaosExpansion fgbm(double t, std::size_t max_degree) const;
    ChaosExpansion gnoise(double t, std::size_t max_degree) const;
};

NoiseContext make_noise_context(const HurstIndex& h, std::size_t num_coords);

}  // namespace fgbm
