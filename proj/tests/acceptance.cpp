// End-to-end acceptance checks. Each criterion prints one [PASS]/[FAIL] line;
// the process exit code is the number of failed criteria.
//
// Usage: acceptance --cli PATH_TO_CCMSP_CLI [--threads N]

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ccmsp/campaign.hpp"
#include "ccmsp/generators.hpp"
#include "ccmsp/io.hpp"
#include "ccmsp/model.hpp"
#include "ccmsp/oracles.hpp"
#include "ccmsp/rng.hpp"
#include "ccmsp/solvers.hpp"
#include "test_helpers.hpp"

namespace fs = std::filesystem;
using namespace ccmsp;
using namespace ccmsp::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int resolve_threads(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(n, 1, 64);
}

template <typename F>
void parallel_for(std::int64_t count, int threads, F&& body) {
  threads = static_cast<int>(std::min<std::int64_t>(threads, count));
  if (threads <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::mutex err_mutex;
  std::optional<std::string> error;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::int64_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (const std::exception& ex) {
          std::lock_guard lock(err_mutex);
          if (!error) error = ex.what();
          next.store(count);
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) throw std::runtime_error(*error);
}

// --- criterion 1: measured makespans at four grid corners -------------------

Outcome check_grid_corners() {
  std::map<std::string, InstanceJob> jobs;
  for (auto k_list : {std::vector<std::int64_t>{4, 8}, std::vector<std::int64_t>{4}}) {
    GridSpec grid;
    grid.variant = Variant::Ccmsp2Plus;
    grid.k_values = k_list;
    grid.m_values = k_list.size() == 2 ? std::vector<std::int64_t>{10} : std::vector<std::int64_t>{400};
    grid.c_values = {1e-7};
    grid.seed = 1;
    for (InstanceJob& job : materialize_grid(grid, 100000)) {
      std::string id = job.id;
      jobs.emplace(std::move(id), std::move(job));
    }
  }

  auto best_even = [&](const std::string& id) {
    const InstanceJob& job = jobs.at(id);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t rep = 0; rep < 3; ++rep) {
      RunRecord rec =
          run(Algo::Rls, job.inst, std::nullopt, job.stop, derive_seed(1, job.id, rep), false);
      best = std::min(best, rec.final_fitness);
    }
    return best;
  };
  auto odd_value = [&](const std::string& id) { return odd_optimum(jobs.at(id).inst).value; };

  const double e40 = best_even("ccmsp2p_k4_n40_even");
  const double e80 = best_even("ccmsp2p_k8_n80_even");
  const double e1600 = best_even("ccmsp2p_k4_n1600_even");
  const double o41 = odd_value("ccmsp2p_k4_n41_odd");
  const double o81 = odd_value("ccmsp2p_k8_n81_odd");
  const double o1601 = odd_value("ccmsp2p_k4_n1601_odd");

  bool pass = true;
  std::ostringstream detail;
  auto expect = [&](const char* label, double got, double want, double tol) {
    bool ok = std::abs(got - want) <= tol;
    pass = pass && ok;
    detail << label << ' ' << format_real(got, 10) << (ok ? "" : " (off)") << ' ';
  };
  expect("n40", e40, 2001.9494, 1e-3);
  expect("n41", o41, 2101.9975, 1e-3);
  expect("n80", e80, 4002.7569, 1e-3);
  expect("n1600", e1600, 80012.3464, 5e-2);
  auto gap = [&](const char* label, double odd, double even) {
    bool ok = odd - even > 99.0 && odd - even < 101.0;
    pass = pass && ok;
    if (!ok) detail << label << " companion gap " << format_real(odd - even, 6) << ' ';
  };
  gap("n40", o41, e40);
  gap("n80", o81, e80);
  gap("n1600", o1601, e1600);
  return {pass, detail.str()};
}

// --- criterion 2: closed-form optima against exhaustive search --------------

Outcome check_oracle_agreement(int threads) {
  Rng rng(460);
  std::vector<Instance> insts;
  while (insts.size() < 300) {
    Instance inst = random_ccmsp1(rng);
    if (inst.jobs <= 12) insts.push_back(std::move(inst));
  }
  while (insts.size() < 600) insts.push_back(random_ccmsp2plus(rng, 13, true));

  std::vector<double> gaps(insts.size(), 0.0);
  parallel_for(static_cast<std::int64_t>(insts.size()), threads, [&](std::int64_t i) {
    const Instance& inst = insts[i];
    OracleResult fast =
        inst.variant == Variant::Ccmsp1 ? ccmsp1_optimum(inst) : odd_optimum(inst);
    OracleResult slow = brute_force_optimum(inst, 1);
    gaps[i] = std::abs(fast.value - slow.value) / std::max(1.0, std::abs(slow.value));
  });

  double worst = 0.0;
  int bad = 0;
  for (double g : gaps) {
    worst = std::max(worst, g);
    if (g > 1e-9) ++bad;
  }
  std::ostringstream detail;
  detail << insts.size() << " instances, " << bad << " disagreements, max relative gap "
         << format_real(worst, 3);
  return {bad == 0, detail.str()};
}

// --- criterion 3: local search solves the small uniform grid ----------------

Outcome check_uniform_grid(int threads) {
  CampaignConfig cfg;
  cfg.grid.variant = Variant::Ccmsp1;
  cfg.grid.k_values = {4, 8};
  cfg.grid.m_values = {10, 50};
  cfg.grid.c_values = {1e-2, 1e-3, 1e-7};
  cfg.algos = {Algo::Rls};
  cfg.repetitions = 30;
  cfg.cap = 100000;
  cfg.seed = 1;

  Summary summary = summarize(run_campaign(cfg, threads));
  std::map<std::string, SummaryRow> rows;
  for (const SummaryRow& row : summary.rows) rows[row.instance] = row;

  bool pass = true;
  std::ostringstream detail;
  int worst_censored = 0;
  for (const auto& [id, row] : rows) {
    worst_censored = std::max(worst_censored, row.censored);
    if (row.censored > 1) {
      pass = false;
      detail << id << " censored " << row.censored << "/30 ";
    }
  }
  for (double c : cfg.grid.c_values) {
    std::string suffix = "_c" + format_real(c, 6);
    double small = rows.at("ccmsp1_k4_m10" + suffix).mean_iterations;
    double large = rows.at("ccmsp1_k8_m50" + suffix).mean_iterations;
    if (!(small < large)) {
      pass = false;
      detail << "no growth at c=" << format_real(c, 6) << ' ';
    }
  }
  detail << rows.size() << " cells, worst censoring " << worst_censored << "/30";
  return {pass, detail.str()};
}

// --- criterion 4: paired seeds, single-bit steps vs global mutation ---------

Outcome check_effort_order(int threads) {
  CampaignConfig cfg;
  cfg.grid.variant = Variant::Ccmsp1;
  cfg.grid.k_values = {4, 8, 16};
  cfg.grid.m_values = {10, 50, 100, 200, 300, 400};
  cfg.grid.c_values = {1e-2, 1e-3, 1e-7};
  cfg.algos = {Algo::Rls, Algo::Ea11};
  cfg.repetitions = 30;
  cfg.cap = 100000;
  cfg.seed = 1;

  Summary summary = summarize(run_campaign(cfg, threads));
  struct Pair {
    double rls = -1.0;
    double ea = -1.0;
  };
  std::map<std::string, Pair> cells;
  for (const SummaryRow& row : summary.rows) {
    Pair& cell = cells[row.instance];
    (row.algorithm == Algo::Rls ? cell.rls : cell.ea) = row.mean_iterations;
  }

  int violations = 0;
  std::ostringstream detail;
  for (const auto& [id, cell] : cells) {
    if (cell.rls < 0.0 || cell.ea < 0.0) throw std::runtime_error("missing algorithm at " + id);
    if (cell.rls > cell.ea) {
      ++violations;
      if (violations <= 3)
        detail << id << " rls " << format_real(cell.rls, 6) << " > ea "
               << format_real(cell.ea, 6) << ' ';
    }
  }
  detail << cells.size() << " cells, " << violations << " ordering violations";
  return {violations == 0, detail.str()};
}

// --- criterion 5: censoring split between even and odd companions -----------

Outcome check_parity_split(int threads) {
  CampaignConfig cfg;
  cfg.grid.variant = Variant::Ccmsp2Plus;
  cfg.grid.k_values = {8, 16, 32, 64, 128};
  cfg.grid.m_values = {10};
  cfg.grid.c_values = {1e-7};
  cfg.algos = {Algo::Rls};
  cfg.repetitions = 30;
  cfg.cap = 100000;
  cfg.seed = 1;

  int even_total = 0, even_censored = 0, odd_total = 0, odd_censored = 0;
  for (const ResultRow& row : run_campaign(cfg, threads)) {
    bool censored = row.stop_reason == "cap";
    if (row.instance.ends_with("_even")) {
      ++even_total;
      even_censored += censored;
    } else {
      ++odd_total;
      odd_censored += censored;
    }
  }
  double even_frac = static_cast<double>(even_censored) / std::max(1, even_total);
  double odd_frac = static_cast<double>(odd_censored) / std::max(1, odd_total);
  std::ostringstream detail;
  detail << "censored even " << even_censored << '/' << even_total << ", odd " << odd_censored
         << '/' << odd_total;
  return {even_frac > odd_frac, detail.str()};
}

// --- criterion 6: partition decision against subset enumeration -------------

bool splits_by_enumeration(const std::vector<std::int64_t>& elems) {
  const std::size_t len = elems.size();
  const std::int64_t total = std::accumulate(elems.begin(), elems.end(), std::int64_t{0});
  if (total % 2 != 0) return false;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    if (std::popcount(mask) * 2 != static_cast<int>(len)) continue;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < len; ++i)
      if (mask >> i & 1) sum += elems[i];
    if (sum * 2 == total) return true;
  }
  return false;
}

Outcome check_partition_dp() {
  Rng rng(777);
  const int trials = 10000;
  int feasible = 0, mismatches = 0, bad_witness = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::int64_t> elems(2 * (1 + rng.below(6)));
    for (auto& e : elems) e = static_cast<std::int64_t>(rng.below(11));
    std::int64_t total = std::accumulate(elems.begin(), elems.end(), std::int64_t{0});
    if (total % 2 != 0) {
      if (elems.back() > 0)
        --elems.back();
      else
        ++elems.back();
      ++total;
    }
    PartitionDecision dec = balanced_partition_dp(elems);
    if (dec.feasible != splits_by_enumeration(elems)) {
      ++mismatches;
      continue;
    }
    if (!dec.feasible) {
      if (dec.witness) ++bad_witness;
      continue;
    }
    ++feasible;
    if (!dec.witness) {
      ++bad_witness;
      continue;
    }
    const auto& w = *dec.witness;
    std::int64_t sum = 0;
    bool ok = w.size() * 2 == elems.size();
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] >= elems.size() || (j > 0 && w[j] <= w[j - 1])) ok = false;
      if (ok) sum += elems[w[j]];
    }
    std::int64_t half = std::accumulate(elems.begin(), elems.end(), std::int64_t{0}) / 2;
    if (!ok || sum != half) ++bad_witness;
  }
  std::ostringstream detail;
  detail << trials << " multisets, " << feasible << " feasible, " << mismatches
         << " mismatches, " << bad_witness << " bad witnesses";
  return {mismatches == 0 && bad_witness == 0, detail.str()};
}

// --- criterion 7: load-model invariants at scale -----------------------------

Outcome check_model_invariants() {
  std::ostringstream detail;
  bool pass = true;

  {  // tail bound crosses the threshold exactly at the fitness value
    Rng rng(81);
    int checks = 0, fails = 0;
    for (int round = 0; round < 1000; ++round) {
      Instance inst = round % 2 ? random_general(rng) : random_ccmsp2plus(rng, 13, round % 4 == 1);
      Solution sol = random_solution(inst.jobs, rng);
      LoadState st = machine_stats(inst, sol);
      double fit = fitness(inst, st).value;
      double emax = std::max(machine_derived(inst, st, 0).expected,
                             machine_derived(inst, st, 1).expected);
      if (!(fit > emax)) continue;
      ++checks;
      if (inst.job_variance > 0.0 && std::abs(chance_bound(inst, sol, fit) - inst.gamma) > 1e-9)
        ++fails;
      if (chance_bound(inst, sol, fit * (1.0 + 1e-9) + 1e-9) > inst.gamma) ++fails;
      double below = emax + (fit - emax) * 0.999;
      if (below > emax && below < fit && chance_bound(inst, sol, below) <= inst.gamma) ++fails;
    }
    pass = pass && fails == 0 && checks >= 900;
    detail << "tail-bound " << checks << " checks " << fails << " fails; ";
  }

  {  // incremental counters against from-scratch statistics
    Rng rng(82);
    int fails = 0;
    for (int chain = 0; chain < 10; ++chain) {
      Instance inst = chain % 3 == 0   ? random_ccmsp1(rng)
                      : chain % 3 == 1 ? random_ccmsp2plus(rng, 13, chain % 2)
                                       : random_general(rng);
      Solution sol = random_solution(inst.jobs, rng);
      LoadState st = machine_stats(inst, sol);
      for (int step = 0; step < 1000; ++step) {
        apply_flip(st, inst, sol, static_cast<std::int64_t>(rng.below(inst.jobs)));
        if (step % 100 != 99) continue;
        LoadState fresh = machine_stats(inst, sol);
        if (fresh.jobs != st.jobs || fresh.pairs != st.pairs || fresh.per_group != st.per_group)
          ++fails;
        for (int t = 0; t < 2; ++t) {
          double inc = machine_derived(inst, st, t).surrogate;
          double ref = machine_derived(inst, fresh, t).surrogate;
          if (std::abs(inc - ref) > 1e-12 * std::max(1.0, std::abs(ref))) ++fails;
        }
      }
    }
    pass = pass && fails == 0;
    detail << "counters 10x1000 flips " << fails << " fails; ";
  }

  {  // uniform instances: machine with more jobs carries the larger surrogate
    Rng rng(83);
    int strict = 0, level = 0, fails = 0;
    for (int round = 0; round < 1000; ++round) {
      Instance inst = random_ccmsp1(rng);
      LoadState st = machine_stats(inst, random_solution(inst.jobs, rng));
      double s0 = machine_derived(inst, st, 0).surrogate;
      double s1 = machine_derived(inst, st, 1).surrogate;
      if (st.jobs[0] > st.jobs[1]) {
        ++strict;
        if (!(s0 > s1)) ++fails;
      } else if (st.jobs[0] == st.jobs[1]) {
        ++level;
        if (std::abs(s0 - s1) > 1e-9 * std::max(1.0, std::abs(s0))) ++fails;
      }
    }
    pass = pass && fails == 0 && strict >= 100 && level >= 50;
    detail << "count-order " << strict << '+' << level << " checks " << fails << " fails; ";
  }

  {  // constrained instances: fitness ordered by fuller-machine job count
    Rng rng(84);
    int compared = 0, fails = 0;
    for (int round = 0; round < 1000; ++round) {
      Instance inst = random_ccmsp2plus(rng, 13, round % 2);
      LoadState st1 = machine_stats(inst, random_solution(inst.jobs, rng));
      LoadState st2 = machine_stats(inst, random_solution(inst.jobs, rng));
      FitnessValue f1 = fitness(inst, st1);
      FitnessValue f2 = fitness(inst, st2);
      if (st1.jobs[f1.argmax] < st2.jobs[f2.argmax]) {
        ++compared;
        if (!(f1.value < f2.value)) ++fails;
      }
    }
    pass = pass && fails == 0 && compared >= 100;
    detail << "fuller-order " << compared << " checks " << fails << " fails; ";
  }

  {  // splitting a pool of jobs never increases the pair total
    Rng rng(85);
    int fails = 0;
    for (int round = 0; round < 100000; ++round) {
      std::int64_t x = static_cast<std::int64_t>(rng.below(1000000));
      std::int64_t y = static_cast<std::int64_t>(rng.below(1000000));
      std::int64_t s = x + y;
      std::int64_t even_split = pairs_of(s / 2) + pairs_of(s - s / 2);
      if (even_split > pairs_of(x) + pairs_of(y)) ++fails;
      if (pairs_of(x) + pairs_of(y) > pairs_of(s)) ++fails;
    }
    pass = pass && fails == 0;
    detail << "pair-split 100000 checks " << fails << " fails; ";
  }

  {  // machine exchange leaves the fitness value untouched
    Rng rng(86);
    int fails = 0;
    for (int round = 0; round < 1000; ++round) {
      Instance inst = round % 2 ? random_general(rng) : random_ccmsp1(rng);
      Solution sol = random_solution(inst.jobs, rng);
      if (fitness(inst, sol).value != fitness(inst, sol.complement()).value) ++fails;
    }
    pass = pass && fails == 0;
    detail << "complement 1000 checks " << fails << " fails";
  }

  return {pass, detail.str()};
}

// --- criterion 8: embedding preserves the partition decision ----------------

void collect_multisets(std::int64_t len, std::int64_t max_elem, std::int64_t max_jobs,
                       std::vector<std::int64_t>& current, std::int64_t jobs_so_far,
                       std::vector<std::vector<std::int64_t>>& out) {
  const std::int64_t left = len - static_cast<std::int64_t>(current.size());
  if (left == 0) {
    out.push_back(current);
    return;
  }
  for (std::int64_t e = current.empty() ? 0 : current.back(); e <= max_elem; ++e) {
    if (jobs_so_far + left * (2 * e + 1) > max_jobs) break;
    current.push_back(e);
    collect_multisets(len, max_elem, max_jobs, current, jobs_so_far + 2 * e + 1, out);
    current.pop_back();
  }
}

Outcome check_reduction(int threads) {
  std::vector<std::vector<std::int64_t>> sets;
  std::vector<std::int64_t> scratch;
  for (std::int64_t len : {2, 4, 6}) collect_multisets(len, 4, 24, scratch, 0, sets);
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), std::int64_t{0}) >
           std::accumulate(b.begin(), b.end(), std::int64_t{0});
  });

  std::vector<std::uint8_t> ok(sets.size(), 0);
  std::atomic<int> feasible{0};
  parallel_for(static_cast<std::int64_t>(sets.size()), threads, [&](std::int64_t i) {
    const std::vector<std::int64_t>& elems = sets[i];
    std::int64_t total = std::accumulate(elems.begin(), elems.end(), std::int64_t{0});
    bool splits = total % 2 == 0 && balanced_partition_dp(elems).feasible;
    if (splits) feasible.fetch_add(1);
    Reduction red = reduce_partition(elems);
    double optimum = brute_force_optimum(red.instance, 1).value;
    double slack = 1e-9 * std::max(1.0, std::abs(red.balanced_value));
    bool attains = std::abs(optimum - red.balanced_value) <= slack;
    bool never_below = optimum >= red.balanced_value - slack;
    ok[i] = (splits == attains && never_below) ? 1 : 0;
  });

  int bad = 0;
  for (std::uint8_t flag : ok) bad += flag == 0;
  std::ostringstream detail;
  detail << sets.size() << " multisets, " << feasible.load() << " split, " << bad
         << " mismatches";
  return {bad == 0, detail.str()};
}

// --- criterion 9: repeated commands produce identical bytes -----------------

Outcome check_cli_determinism(const std::string& cli) {
  fs::path base = fs::temp_directory_path() / "ccmsp-acceptance";
  std::error_code ec;
  fs::remove_all(base, ec);
  fs::create_directories(base);

  auto shell = [&](const std::string& args) {
    std::string cmd = '"' + cli + "\" " + args + " > /dev/null";
    if (std::system(cmd.c_str()) != 0) throw std::runtime_error("command failed: " + cmd);
  };

  int files = 0;
  std::vector<std::string> diffs;
  auto compare = [&](const fs::path& lhs, const fs::path& rhs) {
    ++files;
    if (read_file(lhs.string()) != read_file(rhs.string()))
      diffs.push_back(lhs.filename().string());
  };

  for (int i = 0; i < 2; ++i) {
    fs::path outdir = base / ("camp" + std::to_string(i));
    fs::path config = base / ("camp" + std::to_string(i) + ".cfg");
    write_file(config.string(),
               "variant CCMSP1\nk 2 4\nm 2\nc 0.01\nalgos RLS EA11\nrepetitions 3\n"
               "cap 2000\nseed 5\noutdir " +
                   outdir.string() + "\n");
    shell("campaign --config \"" + config.string() + "\" --threads 4");
  }
  compare(base / "camp0" / "results.csv", base / "camp1" / "results.csv");

  for (int i = 0; i < 2; ++i)
    shell("gen --variant CCMSP2PLUS --k 2 4 --m 5 --c 1e-07 --seed 3 --outdir \"" +
          (base / ("gen" + std::to_string(i))).string() + "\"");
  for (const auto& entry : fs::directory_iterator(base / "gen0"))
    compare(entry.path(), base / "gen1" / entry.path().filename());

  fs::path instance = base / "gen0" / "ccmsp2p_k2_n10_even.inst";
  for (int i = 0; i < 2; ++i)
    shell("solve --instance \"" + instance.string() + "\" --algo rls --seed 7 --cap 3000" +
          " --out \"" + (base / ("run" + std::to_string(i) + ".csv")).string() + "\"" +
          " --traj \"" + (base / ("traj" + std::to_string(i) + ".csv")).string() + "\"");
  compare(base / "run0.csv", base / "run1.csv");
  compare(base / "traj0.csv", base / "traj1.csv");

  std::ostringstream detail;
  detail << files << " file pairs compared";
  for (const std::string& name : diffs) detail << ", differs: " << name;
  if (diffs.empty()) fs::remove_all(base, ec);
  return {diffs.empty(), detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  int threads = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (arg == "--threads" && i + 1 < argc) {
      threads = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance --cli PATH [--threads N]\n";
      return 2;
    }
  }
  if (cli.empty()) {
    std::cerr << "usage: acceptance --cli PATH [--threads N]\n";
    return 2;
  }
  threads = resolve_threads(threads);

  struct Criterion {
    const char* name;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"grid corner makespans", [&] { return check_grid_corners(); }},
      {"closed-form optima match exhaustive search", [&] { return check_oracle_agreement(threads); }},
      {"local search solves the small uniform grid", [&] { return check_uniform_grid(threads); }},
      {"local search needs no more steps than global mutation",
       [&] { return check_effort_order(threads); }},
      {"even instances censor more often than odd companions",
       [&] { return check_parity_split(threads); }},
      {"balanced-partition decision matches enumeration", [] { return check_partition_dp(); }},
      {"load-model invariants", [] { return check_model_invariants(); }},
      {"partition embedding preserves the decision", [&] { return check_reduction(threads); }},
      {"repeated commands produce identical bytes", [&] { return check_cli_determinism(cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].fn();
    } catch (const std::exception& ex) {
      outcome = {false, std::string("exception: ") + ex.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].name
              << " - " << outcome.detail << " (" << format_real(secs, 3) << "s)" << std::endl;
    if (!outcome.pass) ++failures;
  }
  return failures;
}
