#include "ccmsp/generators.hpp"

#include <numeric>
#include <stdexcept>

#include "ccmsp/rng.hpp"

namespace ccmsp {

Instance gen_ccmsp1(std::int64_t k, std::int64_t m, double c, double a, double d, double gamma) {
  if (k < 1) throw std::invalid_argument("need at least one group");
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("group size must be even and positive");
  return Instance::make(Variant::Ccmsp1, std::vector<std::int64_t>(k, m), a, d, c, gamma);
}

namespace {

std::vector<std::int64_t> draw_sizes(std::int64_t k, std::int64_t n, Rng& rng) {
  std::vector<std::int64_t> sizes(k);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::int64_t assigned = 0;
    for (std::int64_t i = 0; i + 1 < k; ++i) {
      if (n - assigned <= 0) break;  // overdrawn; the remainder check forces a redraw
      const std::int64_t f = (n - assigned + (k - i) - 1) / (k - i);  // ceil of the remaining average
      const std::int64_t half = (f + 1) / 2;
      std::int64_t m;
      do {
        std::int64_t g = static_cast<std::int64_t>(rng.below(2 * half + 1)) - half;
        m = f + g;
      } while (m < 1);
      sizes[i] = m;
      assigned += m;
    }
    sizes[k - 1] = n - assigned;
    if (sizes[k - 1] >= 1) return sizes;
    // The remainder can collapse to zero for tiny n; redraw the whole vector.
  }
  throw std::runtime_error("size generation failed to produce positive groups");
}

}  // namespace

CompanionPair gen_ccmsp2plus(std::int64_t k, std::int64_t n, std::uint64_t seed, double c,
                             double a, double d, double gamma) {
  if (k < 1) throw std::invalid_argument("need at least one group");
  if (n < k) throw std::invalid_argument("need at least one job per group");
  if (n % 2 != 0) throw std::invalid_argument("base job count must be even");

  Rng rng(seed);
  std::vector<std::int64_t> sizes = k == 1 ? std::vector<std::int64_t>{n} : draw_sizes(k, n, rng);

  std::vector<std::int64_t> odd_sizes = sizes;
  ++odd_sizes[rng.below(static_cast<std::uint64_t>(k))];

  CompanionPair pair;
  pair.even = Instance::make(Variant::Ccmsp2Plus, std::move(sizes), a, d, c, gamma);
  pair.odd = Instance::make(Variant::Ccmsp2Plus, std::move(odd_sizes), a, d, c, gamma);
  return pair;
}

}  // namespace ccmsp
