#pragma once

#include <cstdint>
#include <string>

namespace fgbm {

// Seed derivation is order independent: the generator for path i depends
// only on (master, stream, i), never on how many paths were drawn before it
// or on which thread draws it. This is what makes ensembles bit identical
// across thread counts and across runs.
struct SeedSpec {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;

    SeedSpec with_stream(std::uint64_t s) const { return {master, s}; }
};

// Stream tags used by the library so that different consumers of the same
// master seed do not share random sequences.
namespace seed_stream {
inline constexpr std::uint64_t kPaths = 1;
inline constexpr std::uint64_t kPricing = 2;
inline constexpr std::uint64_t kVerify = 3;
}  // namespace seed_stream

std::uint64_t splitmix64(std::uint64_t& state);

// Stateless mix of (master, stream, index) into one 64-bit value.
std::uint64_t derive_seed(const SeedSpec& spec, std::uint64_t index);

// Deterministic per-path generator: xoshiro-free, a plain splitmix64 state
// feeding a Box-Muller pair cache. Self contained so that output does not
// depend on the standard library's distribution implementation.
class PathRng {
  public:
    explicit PathRng(std::uint64_t seed) : state_(seed) {}
    PathRng(const SeedSpec& spec, std::uint64_t path_index)
        : PathRng(derive_seed(spec, path_index)) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in (0, 1), never exactly 0 or 1.
    double next_uniform();

    // Standard normal draw, Box-Muller with a one-deep spare cache.
    double next_gaussian();

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace fgbm
