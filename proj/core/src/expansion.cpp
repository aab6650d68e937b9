#include "fgbm/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fgbm {

double LinearForm::variance() const {
    double v = 0.0;
    for (double l : coeffs) v += l * l;
    return v;
}

ChaosExpansion::ChaosExpansion(std::size_t num_coords, std::size_t max_degree)
    : num_coords_(num_coords), max_degree_(max_degree) {}

ChaosExpansion ChaosExpansion::constant(double c, std::size_t num_coords, std::size_t max_degree) {
    ChaosExpansion e(num_coords, max_degree);
    if (c != 0.0) e.coeff_.emplace(MultiIndex{}, c);
    return e;
}

ChaosExpansion ChaosExpansion::linear(const LinearForm& form, std::size_t max_degree) {
    ChaosExpansion e(form.coeffs.size(), max_degree);
    if (form.c0 != 0.0) e.coeff_.emplace(MultiIndex{}, form.c0);
    for (std::size_t k = 0; k < form.coeffs.size(); ++k)
        if (form.coeffs[k] != 0.0) e.coeff_.emplace(MultiIndex::unit(k), form.coeffs[k]);
    return e;
}

void ChaosExpansion::add_term(const MultiIndex& alpha, double c) {
    if (c == 0.0) return;
    if (alpha.degree() > max_degree_) {
        dropped_mass_ += c * c * alpha.factorial();
        return;
    }
    coeff_[alpha] += c;
}

double ChaosExpansion::coefficient(const MultiIndex& alpha) const {
    auto it = coeff_.find(alpha);
    return it == coeff_.end() ? 0.0 : it->second;
}

ChaosExpansion& ChaosExpansion::operator+=(const ChaosExpansion& other) {
    for (const auto& [a, c] : other.coeff_) add_term(a, c);
    dropped_mass_ += other.dropped_mass_;
    return *this;
}

ChaosExpansion& ChaosExpansion::operator-=(const ChaosExpansion& other) {
    for (const auto& [a, c] : other.coeff_) add_term(a, -c);
    dropped_mass_ += other.dropped_mass_;
    return *this;
}

ChaosExpansion& ChaosExpansion::operator*=(double s) {
    for (auto& [a, c] : coeff_) c *= s;
    dropped_mass_ *= s * s;
    return *this;
}

ChaosExpansion ChaosExpansion::wick(const ChaosExpansion& other) const {
    ChaosExpansion out(std::max(num_coords_, other.num_coords_),
                       std::min(max_degree_, other.max_degree_));
    std::unordered_map<MultiIndex, double, MultiIndexHash> full;
    full.reserve(coeff_.size() * 2);
    for (const auto& [a, ca] : coeff_)
        for (const auto& [b, cb] : other.coeff_) full[a.plus(b)] += ca * cb;
    out.dropped_mass_ = dropped_mass_ + other.dropped_mass_;
    for (const auto& [g, c] : full) {
        if (c == 0.0) continue;
        if (g.degree() > out.max_degree_)
            out.dropped_mass_ += c * c * g.factorial();
        else
            out.coeff_.emplace(g, c);
    }
    return out;
}

ChaosExpansion ChaosExpansion::wick_pow(std::size_t n) const {
    ChaosExpansion acc = constant(1.0, num_coords_, max_degree_);
    for (std::size_t i = 0; i < n; ++i) acc = acc.wick(*this);
    return acc;
}

double ChaosExpansion::expectation() const { return coefficient(MultiIndex{}); }

double ChaosExpansion::l2_norm_sq() const {
    double s = 0.0;
    for (const auto& [a, c] : coeff_) s += c * c * a.factorial();
    return s;
}

double ChaosExpansion::evaluate(const std::vector<double>& xi) const {
    if (xi.size() < num_coords_) throw std::invalid_argument("realization too short");
    std::size_t max_e = 0;
    for (const auto& [a, c] : coeff_)
        for (const auto& [coord, e] : a.terms()) max_e = std::max<std::size_t>(max_e, e);
    // Probabilists' Hermite values per coordinate.
    std::vector<double> he(xi.size() * (max_e + 1), 1.0);
    for (std::size_t k = 0; k < xi.size(); ++k) {
        double* row = he.data() + k * (max_e + 1);
        if (max_e >= 1) row[1] = xi[k];
        for (std::size_t n = 2; n <= max_e; ++n)
            row[n] = xi[k] * row[n - 1] - static_cast<double>(n - 1) * row[n - 2];
    }
    double total = 0.0;
    for (const auto& [a, c] : coeff_) {
        double v = c;
        for (const auto& [coord, e] : a.terms()) v *= he[coord * (max_e + 1) + e];
        total += v;
    }
    return total;
}

double ChaosExpansion::max_coeff_diff(const ChaosExpansion& a, const ChaosExpansion& b) {
    double d = 0.0;
    for (const auto& [idx, c] : a.coeff_) d = std::max(d, std::abs(c - b.coefficient(idx)));
    for (const auto& [idx, c] : b.coeff_)
        if (a.coeff_.find(idx) == a.coeff_.end()) d = std::max(d, std::abs(c));
    return d;
}

ChaosExpansion operator+(ChaosExpansion a, const ChaosExpansion& b) { return a += b; }
ChaosExpansion operator-(ChaosExpansion a, const ChaosExpansion& b) { return a -= b; }
ChaosExpansion operator*(ChaosExpansion a, double s) { return a *= s; }

ChaosExpansion wick_exp(const LinearForm& form, std::size_t max_degree) {
    const std::size_t k = form.coeffs.size();
    ChaosExpansion lin(k, max_degree);
    for (std::size_t i = 0; i < k; ++i)
        if (form.coeffs[i] != 0.0) lin.add_term(MultiIndex::unit(i), form.coeffs[i]);
    ChaosExpansion acc = ChaosExpansion::constant(1.0, k, max_degree);
    ChaosExpansion power = ChaosExpansion::constant(1.0, k, max_degree);
    double fact = 1.0;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        power = power.wick(lin);
        fact *= static_cast<double>(d);
        acc += power * (1.0 / fact);
    }
    acc *= std::exp(form.c0);
    return acc;
}

ChaosExpansion ordinary_exp(const LinearForm& form, std::size_t max_degree) {
    LinearForm shifted = form;
    shifted.c0 = form.c0 + 0.5 * form.variance();
    return wick_exp(shifted, max_degree);
}

ChaosExpansion ordinary_power(const LinearForm& form, std::size_t n, std::size_t max_degree) {
    const std::size_t k = form.coeffs.size();
    const double v = form.variance();
    ChaosExpansion lin(k, max_degree);
    for (std::size_t i = 0; i < k; ++i)
        if (form.coeffs[i] != 0.0) lin.add_term(MultiIndex::unit(i), form.coeffs[i]);
    std::vector<ChaosExpansion> wick_pows;
    wick_pows.push_back(ChaosExpansion::constant(1.0, k, max_degree));
    for (std::size_t m = 1; m <= n; ++m) wick_pows.push_back(wick_pows.back().wick(lin));

    auto centered_power = [&](std::size_t m) {
        ChaosExpansion acc(k, max_degree);
        double coef = 1.0;  // m! / (j! (m-2j)! 2^j), built incrementally
        for (std::size_t j = 0; 2 * j <= m; ++j) {
            if (j > 0)
                coef *= static_cast<double>((m - 2 * j + 2) * (m - 2 * j + 1)) /
                        (2.0 * static_cast<double>(j));
            acc += wick_pows[m - 2 * j] * (coef * std::pow(v, static_cast<double>(j)));
        }
        return acc;
    };

    ChaosExpansion out(k, max_degree);
    double binom = 1.0;
    for (std::size_t m = 0; m <= n; ++m) {
        if (m > 0) binom *= static_cast<double>(n - m + 1) / static_cast<double>(m);
        const double c0pow = std::pow(form.c0, static_cast<double>(n - m));
        if (form.c0 == 0.0 && m != n) continue;
        out += centered_power(m) * (binom * (n == m ? 1.0 : c0pow));
    }
    return out;
}

}  // namespace fgbm
