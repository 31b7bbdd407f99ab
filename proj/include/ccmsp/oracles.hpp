#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccmsp/model.hpp"

namespace ccmsp {

struct OracleResult {
  double value;
  Solution witness;
};

/// Exhaustive optimum over all 2^n assignments; refuses when n exceeds
/// kBruteForceLimit. Among optimal assignments the lexicographically smallest
/// bit string is returned. Large enumerations are sharded across threads.
inline constexpr std::int64_t kBruteForceLimit = 24;
OracleResult brute_force_optimum(const Instance& inst, int threads = 0);

/// Closed-form optimum of a Ccmsp1 instance: any solution placing half of
/// every group on each machine. Requires variant Ccmsp1.
OracleResult ccmsp1_optimum(const Instance& inst);

/// Smallest surrogate makespan any solution with unequal machine job counts
/// can reach on a Ccmsp1 instance; always above ccmsp1_optimum's value.
double ccmsp1_unequal_lower_bound(const Instance& inst);

/// Constructive optimum for a Ccmsp2Plus instance with an odd number of jobs.
/// The fuller machine receives (n+1)/2 jobs, spread over groups in
/// nondecreasing size order: each group contributes either all of its jobs or
/// its proportional share of what is still missing, rounded up. Requires
/// variant Ccmsp2Plus, n odd.
OracleResult odd_optimum(const Instance& inst);

/// True iff `sol` is an equal solution whose fuller-machine group counts
/// match the optimal profile for odd n: every group is either fully on the
/// fuller machine or within one of the largest such count. `diag` receives an
/// explanation when the check fails.
bool odd_optimality_check(const Instance& inst, const Solution& sol, std::string* diag = nullptr);

/// Stopping test for even-job Ccmsp2Plus searches: `sol` is an equal solution
/// whose busier machine's covariance is at most c/4 * (n^2/k - 2n + k), the
/// largest value a split with per-group counts pairwise within one of each
/// other can reach. False for non-equal solutions.
bool even_stop_condition(const Instance& inst, const LoadState& st);
bool even_stop_condition(const Instance& inst, const Solution& sol);

struct PartitionDecision {
  bool feasible = false;
  // Indices into the input multiset forming one half, present iff feasible.
  std::optional<std::vector<std::size_t>> witness;
};

/// Decide whether a multiset of non-negative integers splits into two halves
/// of equal cardinality and equal sum. Reachability DP over (elements seen,
/// chosen count, chosen sum); witness recovered by walking the table back.
/// Throws std::domain_error when |S| or sum(S) is odd.
PartitionDecision balanced_partition_dp(const std::vector<std::int64_t>& elems);

// Embedding of a balanced-partition question into a Ccmsp2Plus instance with
// an even number of jobs: group i gets size 2*e_i + 1, fixed gamma = 0.05,
// d = 1e-2, c = 1e-7, and the mean processing time is the smallest power of
// ten strictly above the full-machine deviation. The multiset splits evenly
// exactly when the instance admits an equal solution with per-group balance
// and identical machine covariances, i.e. when the optimum value equals
// balanced_value.
struct Reduction {
  Instance instance;
  std::vector<std::int64_t> elements;   // original multiset, in instance group order
  std::int64_t balanced_pair_total;     // total same-group pairs of any per-group-balanced split
  double balanced_value;                // optimum value iff the multiset splits
};

Reduction reduce_partition(const std::vector<std::int64_t>& elems);

}  // namespace ccmsp
