#include "fgbm/rng.hpp"

#include <cmath>

namespace fgbm {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(const SeedSpec& spec, std::uint64_t index) {
    std::uint64_t s = spec.master;
    std::uint64_t a = splitmix64(s);
    s = spec.master ^ (0x6a09e667f3bcc909ULL + spec.stream * 0x3c6ef372fe94f82bULL);
    std::uint64_t b = splitmix64(s);
    s = a ^ (b + 0xa54ff53a5f1d36f1ULL * (index + 1));
    return splitmix64(s);
}

double PathRng::next_uniform() {
    // 53 significant bits, shifted into (0, 1).
    const std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * (1.0 / 9007199254740992.0);
}

double PathRng::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

}  // namespace fgbm
