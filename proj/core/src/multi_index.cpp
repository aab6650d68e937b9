#include "fgbm/multi_index.hpp"

#include <stdexcept>

namespace fgbm {

MultiIndex MultiIndex::unit(std::size_t coord) {
    MultiIndex m;
    m.terms_.emplace_back(static_cast<std::uint16_t>(coord), std::uint16_t{1});
    return m;
}

std::size_t MultiIndex::degree() const {
    std::size_t d = 0;
    for (const auto& [c, e] : terms_) d += e;
    return d;
}

std::size_t MultiIndex::exponent(std::size_t coord) const {
    for (const auto& [c, e] : terms_)
        if (c == coord) return e;
    return 0;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
    MultiIndex out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (j == other.terms_.size() || (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            out.terms_.emplace_back(terms_[i].first,
                                    static_cast<std::uint16_t>(terms_[i].second + other.terms_[j].second));
            ++i;
            ++j;
        }
    }
    return out;
}

MultiIndex MultiIndex::minus_one(std::size_t coord) const {
    MultiIndex out;
    bool found = false;
    for (const auto& [c, e] : terms_) {
        if (c == coord) {
            found = true;
            if (e > 1) out.terms_.emplace_back(c, static_cast<std::uint16_t>(e - 1));
        } else {
            out.terms_.emplace_back(c, e);
        }
    }
    if (!found) throw std::invalid_argument("cannot lower a zero exponent");
    return out;
}

void MultiIndex::bump(std::size_t coord, std::uint16_t by) {
    if (by == 0) return;
    MultiIndex u;
    u.terms_.emplace_back(static_cast<std::uint16_t>(coord), by);
    *this = plus(u);
}

double MultiIndex::factorial() const {
    double f = 1.0;
    for (const auto& [c, e] : terms_)
        for (std::uint16_t k = 2; k <= e; ++k) f *= static_cast<double>(k);
    return f;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& m) const {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& [c, e] : m.terms()) {
        h ^= static_cast<std::uint64_t>(c) << 16 | e;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace fgbm
