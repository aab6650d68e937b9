#pragma once

#include <cstddef>

#include "fgbm/sampled_function.hpp"
#include "fgbm/types.hpp"

namespace fgbm {

// Drift-removal construction: given the drift derivative g'(t) on
// [0, horizon], the kernel phi with  M phi = g' 1_[0, horizon]  is obtained
// by applying the inverse operator on a wide window, so that shifting the
// driving noise by phi absorbs the drift. The construction is validated by a
// round trip through the forward operator on a deliberately different grid
// (a same-grid round trip would be exact bin by bin and test nothing).
struct GirsanovConfig {
    double window_mult = 16.0;   // window is [-W * horizon, (W + 1) * horizon]
    std::size_t samples = 8192;  // window grid steps
    double interior_frac = 0.05; // round trip scored on [f*T, (1-f)*T]
    double tolerance = 0.02;     // relative L2 bound before the result is flagged
    std::size_t pad_factor = 4;
};

struct DriftRemoval {
    SampledFunction phi_window{0.0, 1.0, {0.0, 0.0}};  // full computation window
    SampledFunction phi{0.0, 1.0, {0.0, 0.0}};         // restricted to [0, horizon]
    double roundtrip_rel_err = 0.0;
    double shape_corr = 1.0;
    bool flagged = false;
};

// Interior profile of phi for a constant drift derivative, up to an overall
// constant: (horizon - t)^{1/2 - H} + t^{1/2 - H}. Constant at H = 1/2.
double girsanov_shape(const HurstIndex& h, double horizon, double t);

// g' is interpreted as zero outside its own support; only [0, horizon]
// matters. At H = 1/2 the operator is the identity and phi reproduces g'.
DriftRemoval girsanov_phi(const SampledFunction& gprime, const HurstIndex& h, double horizon,
                          const GirsanovConfig& cfg = {});

}  // namespace fgbm
