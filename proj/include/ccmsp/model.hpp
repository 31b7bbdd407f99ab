#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ccmsp {

// Problem variants. Ccmsp1: all groups share one even size and one covariance.
// Ccmsp2: group sizes vary, covariance still uniform. Ccmsp2Plus additionally
// requires the deviation term of a full machine to stay below the mean
// processing time (see validate_extra_constraint). General places no
// structural restriction and allows per-group covariances.
enum class Variant { General, Ccmsp1, Ccmsp2, Ccmsp2Plus };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// C(x,2), exact in integers. Negative x is treated as 0.
constexpr std::int64_t pairs_of(std::int64_t x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

// A scheduling instance: n jobs partitioned into groups, two machines.
// Every job has mean processing time `expected_time` and variance
// `job_variance`; two jobs of the same group i scheduled on the same machine
// contribute 2*covariance[i] to that machine's load variance.
// Groups are kept sorted by size; original_group maps back to input order.
struct Instance {
  Variant variant = Variant::General;
  std::vector<std::int64_t> sizes;      // group sizes, nondecreasing
  double expected_time = 0.0;           // a > 0
  double job_variance = 0.0;            // d >= 0
  std::vector<double> covariance;       // per group, >= 0
  double gamma = 0.0;                   // chance threshold, in (0,1)

  // derived, filled by make()
  std::int64_t jobs = 0;                         // n
  std::vector<std::int64_t> group_start;         // first bit of each group
  std::vector<std::int32_t> group_of;            // group index per bit
  std::vector<std::int32_t> original_group;      // input position of each group
  bool uniform_cov = true;

  std::int64_t groups() const { return static_cast<std::int64_t>(sizes.size()); }
  /// (1-gamma)/gamma, the factor scaling variance in the surrogate load.
  double deviation_factor() const { return (1.0 - gamma) / gamma; }

  static Instance make(Variant v, std::vector<std::int64_t> sizes, double a, double d,
                       std::vector<double> cov, double gamma);
  static Instance make(Variant v, std::vector<std::int64_t> sizes, double a, double d,
                       double cov, double gamma);
};

/// True iff sqrt(((1-gamma)/gamma) * (n*d + sum_i 2*c_i*C(m_i,2))) < a,
/// i.e. even a machine holding every job has its deviation term below the
/// mean processing time of a single job. Required for Ccmsp2Plus instances.
bool validate_extra_constraint(const Instance& inst);

// Assignment of jobs to the two machines: bit b=0 puts the job on machine 0.
// Bits are laid out group by group, in the instance's (sorted) group order.
struct Solution {
  std::vector<std::uint8_t> bits;

  std::int64_t size() const { return static_cast<std::int64_t>(bits.size()); }
  static Solution zeros(std::int64_t n) { return Solution{std::vector<std::uint8_t>(n, 0)}; }
  static Solution from_string(const std::string& s);
  std::string to_string() const;
  Solution complement() const;
  bool operator==(const Solution&) const = default;
};

// Integer occupancy counters for one solution. All floating-point load
// statistics are derived from these on demand, so incremental updates never
// accumulate rounding error.
struct LoadState {
  std::array<std::vector<std::int64_t>, 2> per_group;  // jobs of group i on machine t
  std::array<std::int64_t, 2> jobs{0, 0};              // |M_t|
  std::array<std::int64_t, 2> pairs{0, 0};             // sum_i C(per_group[t][i], 2)
};

struct MachineStats {
  double expected;   // count * a
  double var_sum;    // count * d
  double cov;        // sum_i 2*c_i*C(count_i,2)
  double variance;   // var_sum + cov
  double surrogate;  // expected + sqrt(((1-gamma)/gamma) * variance)
};

struct FitnessValue {
  double value;  // max of the two surrogate loads
  int argmax;    // machine attaining it; ties resolve to machine 0
};

struct SolutionClass {
  bool is_equal;     // machine job counts differ by at most one
  bool is_balanced;  // equal, and every group splits as evenly as possible
  int argmax;        // machine with the larger surrogate load
};

/// Build occupancy counters from scratch. Throws if solution length != n.
LoadState machine_stats(const Instance& inst, const Solution& sol);

/// Derived load statistics of one machine.
MachineStats machine_derived(const Instance& inst, const LoadState& st, int machine);

/// Surrogate makespan: expected + sqrt(((1-gamma)/gamma) * (jobs*d + 2c*pairs)).
/// Uniform-covariance instances only; shared by solvers and oracles so equal
/// counters always produce bit-identical values.
double surrogate_value(const Instance& inst, double jobs_on_machine, double pair_count);

FitnessValue fitness(const Instance& inst, const LoadState& st);
FitnessValue fitness(const Instance& inst, const Solution& sol);

/// Move one job to the other machine, updating counters in O(1).
/// Applying the same flip twice restores the previous state exactly.
void apply_flip(LoadState& st, const Instance& inst, Solution& sol, std::int64_t bit);

/// Largest one-sided tail bound over both machines for the event that a
/// machine's load exceeds `makespan`: max_t var_t / (var_t + (makespan-E_t)^2).
/// The result is <= gamma exactly when fitness(sol) <= makespan.
/// Requires makespan > E_t for both machines.
double chance_bound(const Instance& inst, const Solution& sol, double makespan);

SolutionClass classify(const Instance& inst, const Solution& sol);

}  // namespace ccmsp
