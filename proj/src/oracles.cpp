#include "ccmsp/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ccmsp {

namespace {

Solution solution_from_index(std::int64_t n, std::uint64_t x) {
  Solution sol = Solution::zeros(n);
  // Bit j of x is the assignment of job n-1-j, so ascending x enumerates
  // assignments in lexicographic order of their bit strings.
  for (std::int64_t p = 0; p < n; ++p)
    sol.bits[p] = (x >> (n - 1 - p)) & 1;
  return sol;
}

struct RangeBest {
  double value;
  std::uint64_t index;
};

RangeBest enumerate_range(const Instance& inst, std::uint64_t begin, std::uint64_t end) {
  const std::int64_t n = inst.jobs;
  Solution sol = solution_from_index(n, begin);
  LoadState st = machine_stats(inst, sol);
  RangeBest best{fitness(inst, st).value, begin};
  for (std::uint64_t x = begin + 1; x < end; ++x) {
    std::uint64_t changed = (x - 1) ^ x;
    while (changed) {
      int j = std::countr_zero(changed);
      changed &= changed - 1;
      apply_flip(st, inst, sol, n - 1 - j);
    }
    double v = fitness(inst, st).value;
    if (v < best.value) best = RangeBest{v, x};
  }
  return best;
}

}  // namespace

OracleResult brute_force_optimum(const Instance& inst, int threads) {
  const std::int64_t n = inst.jobs;
  if (n > kBruteForceLimit)
    throw std::invalid_argument("brute_force_optimum: " + std::to_string(n) +
                                " jobs exceed the enumeration bound of " +
                                std::to_string(kBruteForceLimit));
  const std::uint64_t total = std::uint64_t{1} << n;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, 16);

  RangeBest best;
  if (n < 18 || threads == 1) {
    best = enumerate_range(inst, 0, total);
  } else {
    const int shards = 64;
    const std::uint64_t chunk = total / shards;
    std::vector<RangeBest> results(shards);
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int s = next.fetch_add(1);
        if (s >= shards) return;
        results[s] = enumerate_range(inst, s * chunk, (s + 1) * chunk);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    best = results[0];
    for (int s = 1; s < shards; ++s) {
      if (results[s].value < best.value ||
          (results[s].value == best.value && results[s].index < best.index))
        best = results[s];
    }
  }
  return OracleResult{best.value, solution_from_index(n, best.index)};
}

OracleResult ccmsp1_optimum(const Instance& inst) {
  if (inst.variant != Variant::Ccmsp1)
    throw std::invalid_argument("ccmsp1_optimum requires a CCMSP1 instance");
  const std::int64_t m = inst.sizes[0];
  const std::int64_t k = inst.groups();
  OracleResult res;
  res.value = surrogate_value(inst, static_cast<double>(inst.jobs) / 2.0,
                              static_cast<double>(k * pairs_of(m / 2)));
  res.witness = Solution::zeros(inst.jobs);
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t b = m / 2; b < m; ++b)
      res.witness.bits[inst.group_start[i] + b] = 1;
  return res;
}

double ccmsp1_unequal_lower_bound(const Instance& inst) {
  if (inst.variant != Variant::Ccmsp1)
    throw std::invalid_argument("ccmsp1_unequal_lower_bound requires a CCMSP1 instance");
  const double n = static_cast<double>(inst.jobs);
  const double m = static_cast<double>(inst.sizes[0]);
  const double k = static_cast<double>(inst.groups());
  const double c = inst.covariance[0];
  double jobs = n / 2.0 + 1.0;
  double variance = inst.job_variance * jobs + c * (k * m * m / 4.0 + m - n / 2.0);
  return jobs * inst.expected_time + std::sqrt(inst.deviation_factor() * variance);
}

OracleResult odd_optimum(const Instance& inst) {
  if (inst.variant != Variant::Ccmsp2Plus)
    throw std::invalid_argument("odd_optimum requires a CCMSP2PLUS instance");
  if (inst.jobs % 2 == 0)
    throw std::invalid_argument("odd_optimum requires an odd number of jobs");
  const std::int64_t k = inst.groups();
  std::int64_t rem = (inst.jobs + 1) / 2;  // jobs the fuller machine receives
  OracleResult res;
  res.witness = Solution::zeros(inst.jobs);
  for (auto& b : res.witness.bits) b = 1;
  // Groups are nondecreasing in size: a group smaller than the per-group share
  // of what is still missing goes to the fuller machine whole, otherwise it
  // contributes the rounded-up share.
  for (std::int64_t i = 0; i < k; ++i) {
    const std::int64_t left = k - i;
    std::int64_t alpha;
    if (inst.sizes[i] * left < rem)
      alpha = inst.sizes[i];
    else
      alpha = (rem + left - 1) / left;
    for (std::int64_t b = 0; b < alpha; ++b)
      res.witness.bits[inst.group_start[i] + b] = 0;
    rem -= alpha;
  }
  if (rem != 0) throw std::logic_error("odd optimum construction left jobs unassigned");
  res.value = fitness(inst, res.witness).value;
  return res;
}

bool odd_optimality_check(const Instance& inst, const Solution& sol, std::string* diag) {
  if (inst.jobs % 2 == 0)
    throw std::invalid_argument("odd_optimality_check requires an odd number of jobs");
  LoadState st = machine_stats(inst, sol);
  if (std::llabs(st.jobs[0] - st.jobs[1]) != 1) {
    if (diag) *diag = "machine job counts differ by more than one";
    return false;
  }
  const int fuller = st.jobs[0] > st.jobs[1] ? 0 : 1;
  const auto& alpha = st.per_group[fuller];
  const std::int64_t alpha_max = *std::max_element(alpha.begin(), alpha.end());
  for (std::int64_t i = 0; i < inst.groups(); ++i) {
    if (alpha[i] == inst.sizes[i]) continue;
    if (alpha_max - alpha[i] > 1) {
      if (diag)
        *diag = "group " + std::to_string(i) + " holds " + std::to_string(alpha[i]) +
                " jobs on the fuller machine, more than one below the maximum of " +
                std::to_string(alpha_max);
      return false;
    }
  }
  return true;
}

bool even_stop_condition(const Instance& inst, const LoadState& st) {
  if (inst.variant != Variant::Ccmsp2Plus)
    throw std::invalid_argument("even_stop_condition requires a CCMSP2PLUS instance");
  if (inst.jobs % 2 != 0)
    throw std::invalid_argument("even_stop_condition requires an even number of jobs");
  if (st.jobs[0] != st.jobs[1]) return false;

  const std::int64_t n = inst.jobs;
  const std::int64_t k = inst.groups();
  const double c = inst.covariance[0];
  if (c == 0.0) return true;  // both covariances are identically zero

  // Splits whose per-group counts pairwise differ by at most one peak at
  // (n-k)^2/(8k) same-machine pairs; stop once the busier machine is at or
  // below that ceiling. With cov = 2c*pairs and the ceiling covariance
  // c/4*(n^2/k-2n+k) this is the exact integer test 8*k*pairs <= (n-k)^2.
  // Unevenly sized groups keep every split above the ceiling, so runs on
  // such instances exhaust their iteration budget instead.
  const std::int64_t busier = std::max(st.pairs[0], st.pairs[1]);
  return 8 * busier * k <= (n - k) * (n - k);
}

bool even_stop_condition(const Instance& inst, const Solution& sol) {
  return even_stop_condition(inst, machine_stats(inst, sol));
}

PartitionDecision balanced_partition_dp(const std::vector<std::int64_t>& elems) {
  const std::size_t k = elems.size();
  for (std::int64_t e : elems)
    if (e < 0) throw std::invalid_argument("multiset elements must be non-negative");
  std::int64_t sum = std::accumulate(elems.begin(), elems.end(), std::int64_t{0});
  if (k % 2 != 0) throw std::domain_error("balanced partition needs an even number of elements");
  if (sum % 2 != 0) throw std::domain_error("balanced partition needs an even total");

  PartitionDecision out;
  if (k == 0) {
    out.feasible = true;
    out.witness = std::vector<std::size_t>{};
    return out;
  }
  const std::size_t half_cnt = k / 2;
  const std::size_t half_sum = static_cast<std::size_t>(sum / 2);
  const std::size_t cols = half_sum + 1;
  const std::size_t plane = (half_cnt + 1) * cols;
  // reachable[e*plane + c*cols + s]: some c-subset of the first e elements sums to s
  std::vector<bool> reachable((k + 1) * plane, false);
  reachable[0] = true;
  for (std::size_t e = 0; e < k; ++e) {
    const std::size_t val = static_cast<std::size_t>(elems[e]);
    const std::size_t base = e * plane;
    const std::size_t next = base + plane;
    for (std::size_t c = 0; c <= std::min(e + 1, half_cnt); ++c) {
      for (std::size_t s = 0; s <= half_sum; ++s) {
        bool r = reachable[base + c * cols + s];
        if (!r && c > 0 && s >= val) r = reachable[base + (c - 1) * cols + (s - val)];
        reachable[next + c * cols + s] = r;
      }
    }
  }
  out.feasible = reachable[k * plane + half_cnt * cols + half_sum];
  if (out.feasible) {
    std::vector<std::size_t> chosen;
    std::size_t c = half_cnt, s = half_sum;
    for (std::size_t e = k; e > 0; --e) {
      if (reachable[(e - 1) * plane + c * cols + s]) continue;
      chosen.push_back(e - 1);
      c -= 1;
      s -= static_cast<std::size_t>(elems[e - 1]);
    }
    std::reverse(chosen.begin(), chosen.end());
    out.witness = std::move(chosen);
  }
  return out;
}

Reduction reduce_partition(const std::vector<std::int64_t>& elems) {
  if (elems.empty()) throw std::invalid_argument("reduce_partition needs a non-empty multiset");
  if (elems.size() % 2 != 0)
    throw std::domain_error("reduce_partition needs an even number of elements");
  for (std::int64_t e : elems)
    if (e < 0) throw std::invalid_argument("multiset elements must be non-negative");

  const double d = 1e-2;
  const double c = 1e-7;
  const double gamma = 0.05;
  std::vector<std::int64_t> sizes;
  sizes.reserve(elems.size());
  std::int64_t jobs = 0;
  std::int64_t pair_total = 0;  // sum over groups of C(e+1,2)+C(e,2) = e^2
  double weighted_pairs = 0.0;
  for (std::int64_t e : elems) {
    std::int64_t m = 2 * e + 1;  // doubled element plus one; m-1 is the doubled element
    sizes.push_back(m);
    jobs += m;
    pair_total += e * e;
    weighted_pairs += static_cast<double>(pairs_of(m));
  }
  double deviation =
      std::sqrt((1.0 - gamma) / gamma *
                (static_cast<double>(jobs) * d + 2.0 * c * weighted_pairs));
  double a = std::pow(10.0, std::floor(std::log10(deviation)) + 1.0);
  while (a <= deviation) a *= 10.0;

  Reduction red;
  red.instance = Instance::make(Variant::Ccmsp2Plus, std::move(sizes), a, d, c, gamma);
  red.elements.reserve(elems.size());
  for (std::int32_t src : red.instance.original_group) red.elements.push_back(elems[src]);
  red.balanced_pair_total = pair_total;
  red.balanced_value = surrogate_value(red.instance, static_cast<double>(jobs) / 2.0,
                                       static_cast<double>(pair_total) / 2.0);
  return red;
}

}  // namespace ccmsp
