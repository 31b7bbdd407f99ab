#include "ccmsp/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ccmsp {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::General: return "GENERAL";
    case Variant::Ccmsp1: return "CCMSP1";
    case Variant::Ccmsp2: return "CCMSP2";
    case Variant::Ccmsp2Plus: return "CCMSP2PLUS";
  }
  throw std::logic_error("unknown variant");
}

Variant variant_from_string(const std::string& s) {
  if (s == "GENERAL") return Variant::General;
  if (s == "CCMSP1") return Variant::Ccmsp1;
  if (s == "CCMSP2") return Variant::Ccmsp2;
  if (s == "CCMSP2PLUS") return Variant::Ccmsp2Plus;
  throw std::invalid_argument("unknown variant tag: " + s);
}

static double full_machine_deviation(const Instance& inst) {
  double wcov = 0.0;
  for (std::int64_t i = 0; i < inst.groups(); ++i)
    wcov += 2.0 * inst.covariance[i] * static_cast<double>(pairs_of(inst.sizes[i]));
  double var = static_cast<double>(inst.jobs) * inst.job_variance + wcov;
  return std::sqrt(inst.deviation_factor() * var);
}

bool validate_extra_constraint(const Instance& inst) {
  return full_machine_deviation(inst) < inst.expected_time;
}

Instance Instance::make(Variant v, std::vector<std::int64_t> sizes, double a, double d,
                        std::vector<double> cov, double gamma) {
  if (sizes.empty()) throw std::invalid_argument("instance needs at least one group");
  if (cov.size() != sizes.size())
    throw std::invalid_argument("covariance list must match group count");
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("expected time must be positive");
  if (!(d >= 0.0) || !std::isfinite(d)) throw std::invalid_argument("job variance must be non-negative");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("gamma must lie strictly between 0 and 1");
  for (std::int64_t m : sizes)
    if (m < 1) throw std::invalid_argument("group sizes must be positive");
  for (double c : cov)
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("covariances must be non-negative");

  Instance inst;
  inst.variant = v;
  inst.expected_time = a;
  inst.job_variance = d;
  inst.gamma = gamma;

  // Sort groups by size, dragging covariances along and remembering where
  // each group came from.
  const std::size_t k = sizes.size();
  std::vector<std::int32_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::int32_t x, std::int32_t y) { return sizes[x] < sizes[y]; });
  inst.sizes.reserve(k);
  inst.covariance.reserve(k);
  inst.original_group.reserve(k);
  for (std::int32_t idx : order) {
    inst.sizes.push_back(sizes[idx]);
    inst.covariance.push_back(cov[idx]);
    inst.original_group.push_back(idx);
  }

  inst.uniform_cov = std::all_of(inst.covariance.begin(), inst.covariance.end(),
                                 [&](double c) { return c == inst.covariance[0]; });

  inst.jobs = 0;
  inst.group_start.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    inst.group_start.push_back(inst.jobs);
    inst.jobs += inst.sizes[i];
  }
  inst.group_of.resize(inst.jobs);
  for (std::size_t i = 0; i < k; ++i)
    std::fill_n(inst.group_of.begin() + inst.group_start[i], inst.sizes[i],
                static_cast<std::int32_t>(i));

  switch (v) {
    case Variant::Ccmsp1: {
      if (!inst.uniform_cov)
        throw std::invalid_argument("CCMSP1 requires one shared covariance");
      for (std::int64_t m : inst.sizes)
        if (m != inst.sizes[0] || m % 2 != 0)
          throw std::invalid_argument("CCMSP1 requires all groups to share one even size");
      break;
    }
    case Variant::Ccmsp2:
    case Variant::Ccmsp2Plus: {
      if (!inst.uniform_cov)
        throw std::invalid_argument("CCMSP2 variants require one shared covariance");
      break;
    }
    case Variant::General:
      break;
  }
  if (v == Variant::Ccmsp2Plus && !validate_extra_constraint(inst))
    throw std::invalid_argument(
        "CCMSP2PLUS requires the full-machine deviation to stay below the mean processing time");
  return inst;
}

Instance Instance::make(Variant v, std::vector<std::int64_t> sizes, double a, double d,
                        double cov, double gamma) {
  std::vector<double> cs(sizes.size(), cov);
  return make(v, std::move(sizes), a, d, std::move(cs), gamma);
}

Solution Solution::from_string(const std::string& s) {
  Solution sol;
  sol.bits.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("solution string must be 0/1");
    sol.bits.push_back(ch == '1');
  }
  return sol;
}

std::string Solution::to_string() const {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

Solution Solution::complement() const {
  Solution out = *this;
  for (auto& b : out.bits) b ^= 1;
  return out;
}

LoadState machine_stats(const Instance& inst, const Solution& sol) {
  if (sol.size() != inst.jobs)
    throw std::invalid_argument("solution length does not match job count");
  LoadState st;
  st.per_group[0].assign(inst.groups(), 0);
  st.per_group[1].assign(inst.groups(), 0);
  for (std::int64_t b = 0; b < inst.jobs; ++b)
    ++st.per_group[sol.bits[b] ? 1 : 0][inst.group_of[b]];
  for (int t = 0; t < 2; ++t) {
    for (std::int64_t i = 0; i < inst.groups(); ++i) {
      st.jobs[t] += st.per_group[t][i];
      st.pairs[t] += pairs_of(st.per_group[t][i]);
    }
  }
  return st;
}

MachineStats machine_derived(const Instance& inst, const LoadState& st, int machine) {
  if (machine != 0 && machine != 1) throw std::invalid_argument("machine index must be 0 or 1");
  MachineStats ms;
  ms.expected = static_cast<double>(st.jobs[machine]) * inst.expected_time;
  ms.var_sum = static_cast<double>(st.jobs[machine]) * inst.job_variance;
  if (inst.uniform_cov) {
    ms.cov = 2.0 * inst.covariance[0] * static_cast<double>(st.pairs[machine]);
  } else {
    ms.cov = 0.0;
    for (std::int64_t i = 0; i < inst.groups(); ++i)
      ms.cov += 2.0 * inst.covariance[i] *
                static_cast<double>(pairs_of(st.per_group[machine][i]));
  }
  ms.variance = ms.var_sum + ms.cov;
  ms.surrogate = ms.expected + std::sqrt(inst.deviation_factor() * ms.variance);
  return ms;
}

double surrogate_value(const Instance& inst, double jobs_on_machine, double pair_count) {
  if (!inst.uniform_cov)
    throw std::invalid_argument("surrogate_value requires a uniform covariance");
  double variance = jobs_on_machine * inst.job_variance + 2.0 * inst.covariance[0] * pair_count;
  return jobs_on_machine * inst.expected_time + std::sqrt(inst.deviation_factor() * variance);
}

FitnessValue fitness(const Instance& inst, const LoadState& st) {
  double s0 = machine_derived(inst, st, 0).surrogate;
  double s1 = machine_derived(inst, st, 1).surrogate;
  return s1 > s0 ? FitnessValue{s1, 1} : FitnessValue{s0, 0};
}

FitnessValue fitness(const Instance& inst, const Solution& sol) {
  return fitness(inst, machine_stats(inst, sol));
}

void apply_flip(LoadState& st, const Instance& inst, Solution& sol, std::int64_t bit) {
  if (bit < 0 || bit >= inst.jobs) throw std::out_of_range("flip position out of range");
  const std::int32_t g = inst.group_of[bit];
  const int from = sol.bits[bit] ? 1 : 0;
  const int to = 1 - from;
  // C(x,2)-C(x-1,2) = x-1 jobs leave that many pairs behind; symmetrically on arrival.
  st.pairs[from] -= st.per_group[from][g] - 1;
  --st.per_group[from][g];
  --st.jobs[from];
  st.pairs[to] += st.per_group[to][g];
  ++st.per_group[to][g];
  ++st.jobs[to];
  sol.bits[bit] ^= 1;
}

double chance_bound(const Instance& inst, const Solution& sol, double makespan) {
  LoadState st = machine_stats(inst, sol);
  double worst = 0.0;
  for (int t = 0; t < 2; ++t) {
    MachineStats ms = machine_derived(inst, st, t);
    double slack = makespan - ms.expected;
    if (!(slack > 0.0))
      throw std::domain_error("chance_bound requires makespan above each machine's expected load");
    if (ms.variance > 0.0)
      worst = std::max(worst, ms.variance / (ms.variance + slack * slack));
  }
  return worst;
}

SolutionClass classify(const Instance& inst, const Solution& sol) {
  LoadState st = machine_stats(inst, sol);
  SolutionClass cls;
  cls.is_equal = std::llabs(st.jobs[0] - st.jobs[1]) <= 1;
  cls.is_balanced = cls.is_equal;
  if (cls.is_balanced)
    for (std::int64_t i = 0; i < inst.groups(); ++i)
      if (std::llabs(st.per_group[0][i] - st.per_group[1][i]) > 1) {
        cls.is_balanced = false;
        break;
      }
  cls.argmax = fitness(inst, st).argmax;
  return cls;
}

}  // namespace ccmsp
