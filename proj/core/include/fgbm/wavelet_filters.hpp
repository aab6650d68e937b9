#pragma once

#include <cstddef>
#include <vector>

namespace fgbm {

// Orthonormal Daubechies synthesis filter pair, sqrt(2) normalization.
// hi is derived from lo by the alternating-flip rule, so one level of
// periodic synthesis is an orthogonal map from (approx, detail) pairs to
// the next finer coefficient vector.
struct WaveletFilter {
    int order = 4;
    std::vector<double> lo;
    std::vector<double> hi;

    static WaveletFilter daubechies(int order);  // order in {2, 3, 4}
};

// Sum rules every orthonormal scaling filter satisfies:
//   sum lo = sqrt(2),  sum lo[k] lo[k+2m] = delta_{m,0}.
// Throws std::runtime_error when violated beyond tol.
void validate_filter(const WaveletFilter& f, double tol = 1e-12);

// One periodic synthesis level: approx and detail of equal length n map to
// a vector of length 2n. Indices wrap modulo 2n.
std::vector<double> synthesis_step(const WaveletFilter& f, const std::vector<double>& approx,
                                   const std::vector<double>& detail);

// Adjoint of synthesis_step: splits a vector of even length 2n into approx
// and detail halves. Orthogonality makes this the exact inverse, so one
// analysis level computes all inner products with that level's basis.
void analysis_step(const WaveletFilter& f, const std::vector<double>& x,
                   std::vector<double>& approx, std::vector<double>& detail);

}  // namespace fgbm
