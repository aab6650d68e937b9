#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "fgbm/multi_index.hpp"

namespace fgbm {

// First-order chaos data: c0 + sum_k coeffs[k] xi_k over independent standard
// Gaussian coordinates xi_k. variance() is the truncated variance sum l_k^2.
struct LinearForm {
    std::vector<double> coeffs;
    double c0 = 0.0;

    double variance() const;
};

// Sparse Wick-Hermite expansion F = sum_alpha c_alpha H_alpha with
// E[H_alpha H_beta] = delta alpha!. Operations truncate at max_degree and
// account the discarded L2 mass in dropped_mass().
class ChaosExpansion {
  public:
    ChaosExpansion(std::size_t num_coords, std::size_t max_degree);

    static ChaosExpansion constant(double c, std::size_t num_coords, std::size_t max_degree);
    static ChaosExpansion linear(const LinearForm& form, std::size_t max_degree);

    std::size_t num_coords() const { return num_coords_; }
    std::size_t max_degree() const { return max_degree_; }

    void add_term(const MultiIndex& alpha, double c);
    double coefficient(const MultiIndex& alpha) const;
    const std::unordered_map<MultiIndex, double, MultiIndexHash>& terms() const { return coeff_; }

    ChaosExpansion& operator+=(const ChaosExpansion& other);
    ChaosExpansion& operator-=(const ChaosExpansion& other);
    ChaosExpansion& operator*=(double s);

    ChaosExpansion wick(const ChaosExpansion& other) const;
    ChaosExpansion wick_pow(std::size_t n) const;

    double expectation() const;  // coefficient of the empty index
    double l2_norm_sq() const;   // sum c^2 alpha!
    double dropped_mass() const { return dropped_mass_; }

    // Pointwise value at a realization of the Gaussian coordinates.
    double evaluate(const std::vector<double>& xi) const;

    // Largest absolute coefficient difference over the union of supports.
    static double max_coeff_diff(const ChaosExpansion& a, const ChaosExpansion& b);

  private:
    std::size_t num_coords_;
    std::size_t max_degree_;
    std::unordered_map<MultiIndex, double, MultiIndexHash> coeff_;
    double dropped_mass_ = 0.0;
};

ChaosExpansion operator+(ChaosExpansion a, const ChaosExpansion& b);
ChaosExpansion operator-(ChaosExpansion a, const ChaosExpansion& b);
ChaosExpansion operator*(ChaosExpansion a, double s);

// exp-wick of a linear form: e^{c0} sum_alpha prod_k l_k^{alpha_k}/alpha_k!,
// truncated at max_degree.
ChaosExpansion wick_exp(const LinearForm& form, std::size_t max_degree);

// Ordinary pointwise functions of a linear form, rewritten through Wick
// powers with the truncated variance, so identities stated with ordinary
// products close exactly inside the truncated algebra:
//   exp(c0 + X) = e^{c0 + V/2} exp-wick(X),
//   X^m = sum_j m!/(j! (m-2j)! 2^j) V^j X^{wick(m-2j)}.
ChaosExpansion ordinary_exp(const LinearForm& form, std::size_t max_degree);
ChaosExpansion ordinary_power(const LinearForm& form, std::size_t n, std::size_t max_degree);

}  // namespace fgbm
