#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <random>
#include <string_view>

namespace ccmsp {

// Anything the search steps draw from. Rng below is the production source;
// tests substitute scripted sources to pin down exact mutation choices.
template <class R>
concept RandomSource = requires(R r, std::uint64_t b) {
  { r.below(b) } -> std::convertible_to<std::uint64_t>;
  { r.coin() } -> std::convertible_to<bool>;
  { r.uniform01() } -> std::convertible_to<double>;
};

// Deterministic 64-bit-seeded source. Distributions are implemented here
// rather than with <random> adaptors so the draw sequence is identical on
// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [0, bound). Unbiased via masked rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound < 2) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
      std::uint64_t v = eng_() & mask;
      if (v < bound) return v;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool coin() { return eng_() & 1; }

 private:
  std::mt19937_64 eng_;
};

/// Stable sub-seed for one unit of work, mixed from a base seed, a textual
/// scope tag and an index. Same inputs give the same seed on every platform.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t index);

}  // namespace ccmsp
