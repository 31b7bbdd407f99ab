#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccmsp/model.hpp"
#include "ccmsp/rng.hpp"

namespace ccmsp {

enum class Algo { Rls, Ea11 };

std::string to_string(Algo a);
Algo algo_from_string(const std::string& s);

// Current solution plus its counters and cached fitness.
struct SearchState {
  Solution sol;
  LoadState load;
  double fit = 0.0;
  int argmax = 0;

  static SearchState make(const Instance& inst, Solution sol);
};

/// Flip the given bits, keep the result iff it is not worse than the current
/// fitness, otherwise flip them back. Returns true when the candidate was
/// accepted. Duplicate positions in `flips` are not allowed.
bool try_flips(const Instance& inst, SearchState& st, std::span<const std::int64_t> flips);

/// One local-search step: with probability 1/2 flip a single uniformly chosen
/// bit, otherwise flip a uniformly chosen pair of distinct bits. Accepts when
/// not worse. Returns true when the offspring replaced the parent.
template <RandomSource R>
bool rls_step(const Instance& inst, SearchState& st, R& rng) {
  const std::uint64_t n = static_cast<std::uint64_t>(inst.jobs);
  std::int64_t flips[2];
  std::size_t cnt = 0;
  if (n < 2) {
    flips[cnt++] = 0;  // a single job admits only one move
  } else if (!rng.coin()) {
    flips[cnt++] = static_cast<std::int64_t>(rng.below(n));
  } else {
    std::uint64_t i = rng.below(n);
    std::uint64_t j = rng.below(n - 1);
    if (j >= i) ++j;
    flips[cnt++] = static_cast<std::int64_t>(i);
    flips[cnt++] = static_cast<std::int64_t>(j);
  }
  return try_flips(inst, st, std::span<const std::int64_t>(flips, cnt));
}

/// Positions of a standard-bit-mutation offspring: each of the n bits is
/// flipped independently with probability 1/n. Sampled with geometric jumps
/// between flipped positions, so the cost is proportional to the number of
/// flips rather than to n. Output is sorted ascending.
template <RandomSource R>
void sample_bit_flips(std::int64_t n, R& rng, std::vector<std::int64_t>& out) {
  out.clear();
  if (n <= 1) {
    if (n == 1) out.push_back(0);  // probability 1/n = 1
    return;
  }
  const double denom = std::log1p(-1.0 / static_cast<double>(n));  // < 0
  double pos = -1.0;
  for (;;) {
    double v = 1.0 - rng.uniform01();  // (0, 1]
    double jump = std::floor(std::log(v) / denom);
    pos += 1.0 + jump;
    if (pos >= static_cast<double>(n)) break;
    out.push_back(static_cast<std::int64_t>(pos));
  }
}

/// One mutation-only evolutionary step: flip each bit independently with
/// probability 1/n, accept when not worse. An offspring with no flipped bit
/// equals the parent and is always accepted. Returns true on acceptance.
template <RandomSource R>
bool ea_step(const Instance& inst, SearchState& st, R& rng, std::vector<std::int64_t>& scratch) {
  sample_bit_flips(inst.jobs, rng, scratch);
  if (scratch.empty()) return true;
  return try_flips(inst, st, scratch);
}

template <RandomSource R>
bool ea_step(const Instance& inst, SearchState& st, R& rng) {
  std::vector<std::int64_t> scratch;
  return ea_step(inst, st, rng, scratch);
}

// Stopping rule for run(). FirstOf evaluates its children in order and stops
// on the first that fires; every policy used by the benchmark harness is a
// FirstOf wrapping an iteration cap.
struct StopCriterion {
  enum class Kind { TargetFitness, StopPredicate, IterationCap, FirstOf };

  Kind kind = Kind::IterationCap;
  double target = 0.0;       // TargetFitness: stop when fitness <= target + slack
  double slack = 0.0;        // absolute tolerance on the target
  std::int64_t limit = 0;    // IterationCap: stop when iterations >= limit
  std::vector<StopCriterion> parts;  // FirstOf

  static StopCriterion target_fitness(double value, double tol);
  /// Fires on equal solutions whose busier machine's covariance has dropped
  /// to the near-uniform-split ceiling; the stopping rule for even-job
  /// Ccmsp2Plus runs.
  static StopCriterion stop_predicate();
  static StopCriterion iteration_cap(std::int64_t limit);
  static StopCriterion first_of(std::vector<StopCriterion> parts);
};

struct RunRecord {
  Algo algorithm = Algo::Rls;
  std::uint64_t seed = 0;
  std::int64_t iterations = 0;
  double final_fitness = 0.0;
  Solution final_solution;
  std::string stop_reason;  // "target", "predicate" or "cap"
  std::vector<std::pair<std::int64_t, double>> trajectory;  // strict improvements
  std::vector<std::string> warnings;
};

/// Run one algorithm from a uniformly random initial solution (or `init` if
/// given) until the criterion fires. One iteration = one offspring generated
/// and evaluated. Identical arguments produce identical records.
RunRecord run(Algo algo, const Instance& inst, const std::optional<Solution>& init,
              const StopCriterion& stop, std::uint64_t seed, bool with_trajectory = true);

}  // namespace ccmsp
