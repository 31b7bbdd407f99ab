// Command line front end: instance generation, single solver runs, exact
// optima, partition embeddings, benchmark campaigns and result summaries.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccmsp/campaign.hpp"
#include "ccmsp/generators.hpp"
#include "ccmsp/io.hpp"
#include "ccmsp/oracles.hpp"
#include "ccmsp/solvers.hpp"

namespace fs = std::filesystem;
using namespace ccmsp;

namespace {

StopCriterion parse_stop(const std::string& spec, const Instance& inst, std::int64_t cap) {
  // Cap first: exhausting the budget counts as censored even when another
  // rule fires at the same moment.
  std::vector<StopCriterion> parts;
  parts.push_back(StopCriterion::iteration_cap(cap));
  if (spec == "auto") {
    parts.push_back(default_stop(inst));
  } else if (spec == "predicate") {
    parts.push_back(StopCriterion::stop_predicate());
  } else if (spec.rfind("target:", 0) == 0) {
    std::string rest = spec.substr(7);
    double tol = 1e-9;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      tol = parse_real(rest.substr(colon + 1));
      rest.erase(colon);
    }
    parts.push_back(StopCriterion::target_fitness(parse_real(rest), tol));
  } else if (spec != "cap") {
    throw CLI::ValidationError("--stop", "expected auto, cap, predicate or target:VALUE[:TOL]");
  }
  return StopCriterion::first_of(std::move(parts));
}

std::string trajectory_csv(const RunRecord& rec) {
  std::ostringstream out;
  out << "iteration,fitness\n";
  for (const auto& [it, fit] : rec.trajectory) out << it << ',' << format_real(fit) << '\n';
  return out.str();
}

int cmd_gen(const std::string& variant, std::vector<std::int64_t> ks, std::vector<std::int64_t> ms,
            std::vector<double> cs, double a, double d, double gamma, std::uint64_t seed,
            const std::string& outdir) {
  GridSpec grid;
  grid.variant = variant_from_string(variant);
  grid.k_values = std::move(ks);
  grid.m_values = std::move(ms);
  if (!cs.empty()) grid.c_values = std::move(cs);
  grid.a = a;
  grid.d = d;
  grid.gamma = gamma;
  grid.seed = seed;

  fs::create_directories(outdir);
  std::ostringstream manifest;
  manifest << "file,instance,variant,k,n,c,parity\n";
  for (const InstanceJob& job : materialize_grid(grid, 1)) {
    std::string file = job.id + ".inst";
    save_instance(job.inst, (fs::path(outdir) / file).string());
    manifest << file << ',' << job.id << ',' << to_string(job.inst.variant) << ','
             << job.inst.groups() << ',' << job.inst.jobs << ','
             << format_real(job.inst.covariance[0]) << ','
             << (job.inst.jobs % 2 ? "odd" : "even") << '\n';
    std::cout << "wrote " << (fs::path(outdir) / file).string() << "\n";
  }
  write_file((fs::path(outdir) / "manifest.csv").string(), manifest.str());
  std::cout << "wrote " << (fs::path(outdir) / "manifest.csv").string() << "\n";
  return 0;
}

int cmd_solve(const std::string& algo_name, const std::string& instance_path, std::uint64_t seed,
              std::int64_t cap, const std::string& stop_spec, const std::string& out_path,
              const std::string& traj_path, bool print_solution) {
  Instance inst = load_instance(instance_path);
  Algo algo = algo_from_string(algo_name);
  StopCriterion stop = parse_stop(stop_spec, inst, cap);
  RunRecord rec = run(algo, inst, std::nullopt, stop, seed, !traj_path.empty());
  for (const std::string& w : rec.warnings) std::cerr << "warning: " << w << "\n";

  std::ostringstream out;
  out << "algorithm " << to_string(rec.algorithm) << "\n";
  out << "seed " << rec.seed << "\n";
  out << "iterations " << rec.iterations << "\n";
  out << "final_fitness " << format_real(rec.final_fitness) << "\n";
  out << "stop_reason " << rec.stop_reason << "\n";
  if (print_solution) out << "solution " << rec.final_solution.to_string() << "\n";
  std::cout << out.str();
  if (!out_path.empty()) {
    std::ostringstream csv;
    csv << "instance,algorithm,repetition,seed,iterations,final_fitness,stop_reason\n";
    csv << fs::path(instance_path).stem().string() << ',' << to_string(rec.algorithm) << ",0,"
        << rec.seed << ',' << rec.iterations << ',' << format_real(rec.final_fitness) << ','
        << rec.stop_reason << '\n';
    write_file(out_path, csv.str());
  }
  if (!traj_path.empty()) write_file(traj_path, trajectory_csv(rec));
  return 0;
}

int cmd_exact(const std::string& instance_path, const std::string& method, int threads) {
  Instance inst = load_instance(instance_path);
  OracleResult res;
  std::string used = method;
  if (method == "auto") {
    if (inst.variant == Variant::Ccmsp1)
      used = "ccmsp1";
    else if (inst.variant == Variant::Ccmsp2Plus && inst.jobs % 2 == 1)
      used = "odd";
    else
      used = "brute";
  }
  if (used == "ccmsp1")
    res = ccmsp1_optimum(inst);
  else if (used == "odd")
    res = odd_optimum(inst);
  else if (used == "brute")
    res = brute_force_optimum(inst, threads);
  else
    throw CLI::ValidationError("--method", "expected auto, brute, ccmsp1 or odd");
  std::cout << "method " << used << "\n";
  std::cout << "optimum " << format_real(res.value) << "\n";
  std::cout << "witness " << res.witness.to_string() << "\n";
  return 0;
}

int cmd_reduce(std::vector<std::int64_t> elements, const std::string& out_path, bool decide) {
  Reduction red = reduce_partition(elements);
  std::cout << "groups " << red.instance.groups() << "\n";
  std::cout << "jobs " << red.instance.jobs << "\n";
  std::cout << "sizes";
  for (std::int64_t m : red.instance.sizes) std::cout << ' ' << m;
  std::cout << "\n";
  std::cout << "a " << format_real(red.instance.expected_time) << "\n";
  std::cout << "balanced_pair_total " << red.balanced_pair_total << "\n";
  std::cout << "balanced_value " << format_real(red.balanced_value) << "\n";
  if (decide) {
    PartitionDecision dec = balanced_partition_dp(elements);
    std::cout << "splits " << (dec.feasible ? "yes" : "no") << "\n";
    if (dec.witness) {
      std::cout << "half_indices";
      for (std::size_t idx : *dec.witness) std::cout << ' ' << idx;
      std::cout << "\n";
    }
  }
  if (!out_path.empty()) {
    save_instance(red.instance, out_path);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_campaign(const std::string& config_path, int threads) {
  CampaignConfig cfg = load_campaign(config_path);
  std::vector<TimingRow> timings;
  std::vector<ResultRow> rows = run_campaign(cfg, threads, &timings);
  fs::create_directories(cfg.outdir);
  const std::string results_path = (fs::path(cfg.outdir) / "results.csv").string();
  write_file(results_path, results_to_csv(rows));
  write_file((fs::path(cfg.outdir) / "timings.csv").string(), timings_to_csv(timings));
  std::cout << "wrote " << results_path << " (" << rows.size() << " rows)\n";
  return 0;
}

int cmd_summarize(const std::string& results_path, const std::string& summary_path,
                  const std::string& plot_path) {
  Summary summary = summarize(results_from_csv(read_file(results_path)));
  write_file(summary_path, summary_to_csv(summary.rows));
  if (!plot_path.empty()) write_file(plot_path, plot_to_csv(summary.plot));
  std::cout << "wrote " << summary_path << " (" << summary.rows.size() << " groups)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-machine chance-constrained makespan scheduling toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate grid instances and a manifest");
  std::string gen_variant = "CCMSP1";
  std::vector<std::int64_t> gen_k{4, 8, 16, 32, 64, 128};
  std::vector<std::int64_t> gen_m{10, 50, 100, 200, 300, 400};
  std::vector<double> gen_c;
  double gen_a = 100.0, gen_d = 1e-2, gen_gamma = 0.05;
  std::uint64_t gen_seed = 1;
  std::string gen_outdir = "instances";
  gen->add_option("--variant", gen_variant, "CCMSP1 or CCMSP2PLUS");
  gen->add_option("--k", gen_k, "group counts");
  gen->add_option("--m", gen_m, "group sizes (CCMSP1) or per-group job multipliers (CCMSP2PLUS)");
  gen->add_option("--c", gen_c, "covariance values");
  gen->add_option("--a", gen_a, "mean processing time");
  gen->add_option("--d", gen_d, "job variance");
  gen->add_option("--gamma", gen_gamma, "chance threshold");
  gen->add_option("--seed", gen_seed, "size-drawing seed");
  gen->add_option("--outdir", gen_outdir, "output directory");

  // solve
  auto* solve = app.add_subcommand("solve", "Run one algorithm on one instance");
  std::string solve_algo = "rls", solve_instance, solve_stop = "auto", solve_out, solve_traj;
  std::uint64_t solve_seed = 1;
  std::int64_t solve_cap = 100000;
  bool solve_print = false;
  solve->add_option("--algo", solve_algo, "rls or ea11");
  solve->add_option("--instance", solve_instance, "instance file")->required();
  solve->add_option("--seed", solve_seed, "run seed");
  solve->add_option("--cap", solve_cap, "iteration cap");
  solve->add_option("--stop", solve_stop, "auto, cap, predicate or target:VALUE[:TOL]");
  solve->add_option("--out", solve_out, "write the run record as CSV");
  solve->add_option("--traj", solve_traj, "write the improvement trajectory as CSV");
  solve->add_flag("--print-solution", solve_print, "print the final assignment bits");

  // exact
  auto* exact = app.add_subcommand("exact", "Compute an exact optimum");
  std::string exact_instance, exact_method = "auto";
  int exact_threads = 0;
  exact->add_option("--instance", exact_instance, "instance file")->required();
  exact->add_option("--method", exact_method, "auto, brute, ccmsp1 or odd");
  exact->add_option("--threads", exact_threads, "enumeration threads (0 = all)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Embed a balanced-partition multiset");
  std::vector<std::int64_t> reduce_elems;
  std::string reduce_out;
  bool reduce_decide = false;
  reduce->add_option("--elements", reduce_elems, "multiset of non-negative integers")->required();
  reduce->add_option("--out", reduce_out, "write the embedded instance");
  reduce->add_flag("--decide", reduce_decide, "also solve the partition question");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "Run a benchmark campaign from a config file");
  std::string campaign_config;
  int campaign_threads = 0;
  campaign->add_option("--config", campaign_config, "campaign configuration file")->required();
  campaign->add_option("--threads", campaign_threads, "worker threads (0 = all)");

  // summarize
  auto* summ = app.add_subcommand("summarize", "Aggregate a results file");
  std::string summ_results, summ_out = "summary.csv", summ_plot;
  summ->add_option("--results", summ_results, "results.csv from a campaign")->required();
  summ->add_option("--out-summary", summ_out, "summary output file");
  summ->add_option("--out-plot", summ_plot, "plot-data output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(gen_variant, gen_k, gen_m, gen_c, gen_a, gen_d, gen_gamma, gen_seed,
                     gen_outdir);
    if (solve->parsed())
      return cmd_solve(solve_algo, solve_instance, solve_seed, solve_cap, solve_stop, solve_out,
                       solve_traj, solve_print);
    if (exact->parsed()) return cmd_exact(exact_instance, exact_method, exact_threads);
    if (reduce->parsed()) return cmd_reduce(reduce_elems, reduce_out, reduce_decide);
    if (campaign->parsed()) return cmd_campaign(campaign_config, campaign_threads);
    if (summ->parsed()) return cmd_summarize(summ_results, summ_out, summ_plot);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
