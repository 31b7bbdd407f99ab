#include "ccmsp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ccmsp/oracles.hpp"

namespace ccmsp {

std::string to_string(Algo a) { return a == Algo::Rls ? "RLS" : "EA11"; }

Algo algo_from_string(const std::string& s) {
  if (s == "RLS" || s == "rls") return Algo::Rls;
  if (s == "EA11" || s == "ea11") return Algo::Ea11;
  throw std::invalid_argument("unknown algorithm: " + s);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t index) {
  // FNV-1a over the tag, then two splitmix64 finalization rounds.
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  std::uint64_t x = base ^ h;
  x += 0x9E3779B97F4A7C15ull * (index + 1);
  for (int round = 0; round < 2; ++round) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
  }
  return x;
}

SearchState SearchState::make(const Instance& inst, Solution sol) {
  SearchState st;
  st.load = machine_stats(inst, sol);
  st.sol = std::move(sol);
  FitnessValue f = fitness(inst, st.load);
  st.fit = f.value;
  st.argmax = f.argmax;
  return st;
}

bool try_flips(const Instance& inst, SearchState& st, std::span<const std::int64_t> flips) {
  for (std::int64_t b : flips) apply_flip(st.load, inst, st.sol, b);
  FitnessValue f = fitness(inst, st.load);
  if (f.value <= st.fit) {
    st.fit = f.value;
    st.argmax = f.argmax;
    return true;
  }
  for (std::int64_t b : flips) apply_flip(st.load, inst, st.sol, b);
  return false;
}

StopCriterion StopCriterion::target_fitness(double value, double tol) {
  if (tol < 0.0) throw std::invalid_argument("target tolerance must be non-negative");
  StopCriterion c;
  c.kind = Kind::TargetFitness;
  c.target = value;
  c.slack = tol;
  return c;
}

StopCriterion StopCriterion::stop_predicate() {
  StopCriterion c;
  c.kind = Kind::StopPredicate;
  return c;
}

StopCriterion StopCriterion::iteration_cap(std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("iteration cap must be non-negative");
  StopCriterion c;
  c.kind = Kind::IterationCap;
  c.limit = limit;
  return c;
}

StopCriterion StopCriterion::first_of(std::vector<StopCriterion> parts) {
  if (parts.empty()) throw std::invalid_argument("first_of needs at least one criterion");
  StopCriterion c;
  c.kind = Kind::FirstOf;
  c.parts = std::move(parts);
  return c;
}

namespace {

// Predicate results are only invalidated by accepted bit changes, so the
// evaluation is cached between iterations.
struct StopEval {
  bool state_dirty = true;
  bool predicate_value = false;

  // Returns the reason string when `c` fires, empty otherwise.
  const char* check(const StopCriterion& c, const Instance& inst, const SearchState& st,
                    std::int64_t iterations) {
    switch (c.kind) {
      case StopCriterion::Kind::TargetFitness:
        return st.fit <= c.target + c.slack ? "target" : nullptr;
      case StopCriterion::Kind::StopPredicate: {
        if (state_dirty) {
          predicate_value = even_stop_condition(inst, st.load);
          state_dirty = false;
        }
        return predicate_value ? "predicate" : nullptr;
      }
      case StopCriterion::Kind::IterationCap:
        return iterations >= c.limit ? "cap" : nullptr;
      case StopCriterion::Kind::FirstOf: {
        for (const StopCriterion& part : c.parts)
          if (const char* reason = check(part, inst, st, iterations)) return reason;
        return nullptr;
      }
    }
    return nullptr;
  }
};

void attach_target_warnings(const Instance& inst, const StopCriterion& stop, RunRecord& rec) {
  if (stop.kind == StopCriterion::Kind::FirstOf) {
    for (const StopCriterion& part : stop.parts) attach_target_warnings(inst, part, rec);
    return;
  }
  if (stop.kind != StopCriterion::Kind::TargetFitness) return;
  double optimum = 0.0;
  if (inst.variant == Variant::Ccmsp1) {
    optimum = ccmsp1_optimum(inst).value;
  } else if (inst.variant == Variant::Ccmsp2Plus && inst.jobs % 2 == 1) {
    optimum = odd_optimum(inst).value;
  } else {
    return;
  }
  if (stop.target + stop.slack < optimum - 1e-9 * std::max(1.0, std::abs(optimum)))
    rec.warnings.push_back("target fitness lies below the instance optimum; the run can only stop at the cap");
}

}  // namespace

RunRecord run(Algo algo, const Instance& inst, const std::optional<Solution>& init,
              const StopCriterion& stop, std::uint64_t seed, bool with_trajectory) {
  Rng rng(seed);
  Solution start;
  if (init) {
    start = *init;
    if (start.size() != inst.jobs)
      throw std::invalid_argument("initial solution length does not match job count");
  } else {
    start.bits.resize(inst.jobs);
    for (auto& b : start.bits) b = rng.coin();
  }

  SearchState st = SearchState::make(inst, std::move(start));
  RunRecord rec;
  rec.algorithm = algo;
  rec.seed = seed;
  attach_target_warnings(inst, stop, rec);
  if (with_trajectory) rec.trajectory.emplace_back(0, st.fit);

  StopEval eval;
  std::vector<std::int64_t> scratch;
  std::int64_t iterations = 0;
  const char* reason;
  while (!(reason = eval.check(stop, inst, st, iterations))) {
    double before = st.fit;
    bool accepted = algo == Algo::Rls ? rls_step(inst, st, rng) : ea_step(inst, st, rng, scratch);
    ++iterations;
    if (accepted) {
      eval.state_dirty = true;
      if (with_trajectory && st.fit < before) rec.trajectory.emplace_back(iterations, st.fit);
    }
  }

  rec.iterations = iterations;
  rec.final_fitness = st.fit;
  rec.final_solution = std::move(st.sol);
  rec.stop_reason = reason;
  return rec;
}

}  // namespace ccmsp
