#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace fgbm {

// Sparse exponent vector over noise coordinates, kept sorted by coordinate
// with strictly positive exponents. Coordinates are 0-based.
class MultiIndex {
  public:
    MultiIndex() = default;

    static MultiIndex unit(std::size_t coord);

    std::size_t degree() const;
    bool empty() const { return terms_.empty(); }
    std::size_t exponent(std::size_t coord) const;

    MultiIndex plus(const MultiIndex& other) const;
    // Lower the exponent at coord by one; exponent must be positive.
    MultiIndex minus_one(std::size_t coord) const;
    void bump(std::size_t coord, std::uint16_t by);

    // prod_k alpha_k!  (the squared norm of the Hermite monomial H_alpha)
    double factorial() const;

    const std::vector<std::pair<std::uint16_t, std::uint16_t>>& terms() const { return terms_; }

    bool operator==(const MultiIndex& other) const { return terms_ == other.terms_; }
    bool operator<(const MultiIndex& other) const { return terms_ < other.terms_; }

  private:
    std::vector<std::pair<std::uint16_t, std::uint16_t>> terms_;
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& m) const;
};

}  // namespace fgbm
