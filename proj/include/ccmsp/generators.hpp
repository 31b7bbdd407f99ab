#pragma once

#include <cstdint>

#include "ccmsp/model.hpp"

namespace ccmsp {

/// Uniform instance: k groups of the common even size m, one covariance.
Instance gen_ccmsp1(std::int64_t k, std::int64_t m, double c, double a = 100.0,
                    double d = 1e-2, double gamma = 0.05);

// A randomly sized instance together with its companion holding one extra job.
struct CompanionPair {
  Instance even;
  Instance odd;
};

/// Random Ccmsp2Plus instance with k groups and n jobs (n even, n >= k), plus
/// the odd companion obtained by growing one uniformly chosen group by one
/// job. Sizes are drawn sequentially: group i receives the rounded-up average
/// of the remaining jobs, perturbed by a uniform offset of up to half that
/// average, and the last group takes the remainder; sizes are then sorted.
/// Throws when either instance would violate the full-machine deviation
/// constraint. Deterministic in `seed`.
CompanionPair gen_ccmsp2plus(std::int64_t k, std::int64_t n, std::uint64_t seed,
                             double c = 1e-7, double a = 100.0, double d = 1e-2,
                             double gamma = 0.05);

}  // namespace ccmsp
