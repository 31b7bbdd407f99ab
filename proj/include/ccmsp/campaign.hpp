#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccmsp/model.hpp"
#include "ccmsp/solvers.hpp"

namespace ccmsp {

// Experiment grid. For Ccmsp1 every (k, m, c) combination yields one uniform
// instance with k groups of size m. For Ccmsp2Plus every (k, m) yields a
// random even instance with n = k*m jobs plus its odd companion, all sharing
// the single covariance value; sizes are drawn deterministically from `seed`.
struct GridSpec {
  Variant variant = Variant::Ccmsp1;
  std::vector<std::int64_t> k_values{4, 8, 16, 32, 64, 128};
  std::vector<std::int64_t> m_values{10, 50, 100, 200, 300, 400};
  std::vector<double> c_values{1e-2};
  double a = 100.0;
  double d = 1e-2;
  double gamma = 0.05;
  std::uint64_t seed = 1;
};

struct CampaignConfig {
  GridSpec grid;
  std::vector<Algo> algos{Algo::Rls, Algo::Ea11};
  int repetitions = 30;
  std::int64_t cap = 100000;
  std::uint64_t seed = 1;
  std::string outdir = "results";
};

CampaignConfig campaign_from_text(const std::string& text);
CampaignConfig load_campaign(const std::string& path);

// One grid cell: instance, stable identifier and the stopping rule its runs
// use. Ccmsp1 cells stop at the closed-form optimum, odd Ccmsp2Plus cells at
// the constructive optimum, even cells at the covariance-stability predicate;
// every rule is capped.
struct InstanceJob {
  std::string id;
  Instance inst;
  StopCriterion stop;
};

std::vector<InstanceJob> materialize_grid(const GridSpec& grid, std::int64_t cap);

/// Stopping rule the campaign would attach to this instance (without cap).
StopCriterion default_stop(const Instance& inst);

struct ResultRow {
  std::string instance;
  Algo algorithm = Algo::Rls;
  int repetition = 0;
  std::uint64_t seed = 0;
  std::int64_t iterations = 0;
  double final_fitness = 0.0;
  std::string stop_reason;
};

// Wall-clock timings live next to the results rather than inside them so the
// results file stays byte-identical across repeated runs.
struct TimingRow {
  std::string instance;
  Algo algorithm = Algo::Rls;
  int repetition = 0;
  double wall_ms = 0.0;
};

/// Execute every (instance, algorithm, repetition) cell of the campaign on a
/// worker pool. Row order and content are deterministic in the configuration;
/// per-run seeds derive from (seed, instance id, repetition), so the two
/// algorithms see paired seeds.
std::vector<ResultRow> run_campaign(const CampaignConfig& config, int threads = 0,
                                    std::vector<TimingRow>* timings = nullptr);

struct SummaryRow {
  std::string instance;
  Algo algorithm = Algo::Rls;
  int runs = 0;
  int censored = 0;
  double mean_iterations = 0.0;
  double median_iterations = 0.0;
  std::int64_t min_iterations = 0;
  std::int64_t max_iterations = 0;
  double mean_final_fitness = 0.0;
};

// One point of the iteration-growth plot: mean iterations against log2(k)
// for a fixed series (algorithm, group size or job multiplier, parity).
struct PlotRow {
  std::string series;
  std::int64_t k = 0;
  double log2_k = 0.0;
  double mean_iterations = 0.0;
  int censored = 0;
  int runs = 0;
};

struct Summary {
  std::vector<SummaryRow> rows;
  std::vector<PlotRow> plot;
};

/// Aggregate result rows per (instance, algorithm). Duplicate
/// (instance, algorithm, repetition) keys indicate mixed inputs and raise an
/// error. Plot rows are derived from ids of the form produced by
/// materialize_grid; foreign ids are summarized but skipped in the plot.
Summary summarize(const std::vector<ResultRow>& rows);

std::string results_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> results_from_csv(const std::string& text);
std::string timings_to_csv(const std::vector<TimingRow>& rows);
std::string summary_to_csv(const std::vector<SummaryRow>& rows);
std::string plot_to_csv(const std::vector<PlotRow>& rows);

}  // namespace ccmsp
