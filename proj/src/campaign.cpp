#include "ccmsp/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ccmsp/generators.hpp"
#include "ccmsp/io.hpp"
#include "ccmsp/oracles.hpp"

namespace ccmsp {

CampaignConfig campaign_from_text(const std::string& text) {
  KvDoc doc = parse_kv(text);
  CampaignConfig cfg;
  cfg.grid.variant = variant_from_string(doc.single("variant"));
  if (cfg.grid.variant != Variant::Ccmsp1 && cfg.grid.variant != Variant::Ccmsp2Plus)
    throw std::invalid_argument("campaign variant must be CCMSP1 or CCMSP2PLUS");

  auto read_ints = [&](const char* key, std::vector<std::int64_t>& out) {
    if (!doc.has(key)) return;
    out.clear();
    for (const auto& tok : doc.values(key)) out.push_back(parse_int(tok));
    if (out.empty()) throw std::invalid_argument(std::string(key) + " needs at least one value");
  };
  read_ints("k", cfg.grid.k_values);
  read_ints("m", cfg.grid.m_values);
  if (doc.has("c")) {
    cfg.grid.c_values.clear();
    for (const auto& tok : doc.values("c")) cfg.grid.c_values.push_back(parse_real(tok));
  }
  if (doc.has("a")) cfg.grid.a = parse_real(doc.single("a"));
  if (doc.has("d")) cfg.grid.d = parse_real(doc.single("d"));
  if (doc.has("gamma")) cfg.grid.gamma = parse_real(doc.single("gamma"));
  if (doc.has("algos")) {
    cfg.algos.clear();
    for (const auto& tok : doc.values("algos")) cfg.algos.push_back(algo_from_string(tok));
  }
  if (doc.has("repetitions")) cfg.repetitions = static_cast<int>(parse_int(doc.single("repetitions")));
  if (doc.has("cap")) cfg.cap = parse_int(doc.single("cap"));
  if (doc.has("seed")) cfg.seed = parse_uint(doc.single("seed"));
  if (doc.has("outdir")) cfg.outdir = doc.single("outdir");
  cfg.grid.seed = cfg.seed;

  if (cfg.repetitions < 1) throw std::invalid_argument("repetitions must be positive");
  if (cfg.cap < 0) throw std::invalid_argument("cap must be non-negative");
  if (cfg.algos.empty()) throw std::invalid_argument("need at least one algorithm");
  if (cfg.grid.variant == Variant::Ccmsp2Plus && cfg.grid.c_values.size() != 1)
    throw std::invalid_argument("CCMSP2PLUS campaigns use exactly one covariance value");
  return cfg;
}

CampaignConfig load_campaign(const std::string& path) {
  return campaign_from_text(read_file(path));
}

StopCriterion default_stop(const Instance& inst) {
  if (inst.variant == Variant::Ccmsp1)
    return StopCriterion::target_fitness(ccmsp1_optimum(inst).value, 1e-9);
  if (inst.variant == Variant::Ccmsp2Plus) {
    if (inst.jobs % 2 == 1)
      return StopCriterion::target_fitness(odd_optimum(inst).value, 1e-9);
    return StopCriterion::stop_predicate();
  }
  throw std::invalid_argument("no default stopping rule for variant " + to_string(inst.variant));
}

namespace {

StopCriterion capped(StopCriterion inner, std::int64_t cap) {
  // The cap goes first so a run that exhausts its budget counts as censored
  // even when the inner rule would fire at the same moment.
  std::vector<StopCriterion> parts;
  parts.push_back(StopCriterion::iteration_cap(cap));
  parts.push_back(std::move(inner));
  return StopCriterion::first_of(std::move(parts));
}

}  // namespace

std::vector<InstanceJob> materialize_grid(const GridSpec& grid, std::int64_t cap) {
  std::vector<InstanceJob> jobs;
  if (grid.variant == Variant::Ccmsp1) {
    for (std::int64_t k : grid.k_values)
      for (std::int64_t m : grid.m_values)
        for (double c : grid.c_values) {
          Instance inst = gen_ccmsp1(k, m, c, grid.a, grid.d, grid.gamma);
          std::string id = "ccmsp1_k" + std::to_string(k) + "_m" + std::to_string(m) + "_c" +
                           format_real(c, 6);
          StopCriterion stop = capped(default_stop(inst), cap);
          jobs.push_back(InstanceJob{std::move(id), std::move(inst), std::move(stop)});
        }
    return jobs;
  }
  if (grid.variant != Variant::Ccmsp2Plus)
    throw std::invalid_argument("grids are defined for CCMSP1 and CCMSP2PLUS only");
  if (grid.c_values.size() != 1)
    throw std::invalid_argument("CCMSP2PLUS grids use exactly one covariance value");
  for (std::int64_t k : grid.k_values)
    for (std::int64_t mult : grid.m_values) {
      const std::int64_t n = k * mult;
      std::uint64_t gen_seed =
          derive_seed(grid.seed, "sizes", (static_cast<std::uint64_t>(k) << 32) |
                                              static_cast<std::uint64_t>(mult));
      CompanionPair pair =
          gen_ccmsp2plus(k, n, gen_seed, grid.c_values[0], grid.a, grid.d, grid.gamma);
      std::string base = "ccmsp2p_k" + std::to_string(k) + "_n";
      StopCriterion even_stop = capped(default_stop(pair.even), cap);
      StopCriterion odd_stop = capped(default_stop(pair.odd), cap);
      jobs.push_back(InstanceJob{base + std::to_string(n) + "_even", std::move(pair.even),
                                 std::move(even_stop)});
      jobs.push_back(InstanceJob{base + std::to_string(n + 1) + "_odd", std::move(pair.odd),
                                 std::move(odd_stop)});
    }
  return jobs;
}

std::vector<ResultRow> run_campaign(const CampaignConfig& config, int threads,
                                    std::vector<TimingRow>* timings) {
  std::vector<InstanceJob> jobs = materialize_grid(config.grid, config.cap);

  struct Task {
    const InstanceJob* job;
    Algo algo;
    int rep;
  };
  std::vector<Task> tasks;
  tasks.reserve(jobs.size() * config.algos.size() * config.repetitions);
  for (const InstanceJob& job : jobs)
    for (Algo algo : config.algos)
      for (int rep = 0; rep < config.repetitions; ++rep)
        tasks.push_back(Task{&job, algo, rep});

  std::vector<ResultRow> rows(tasks.size());
  std::vector<TimingRow> times(tasks.size());
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, 64);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size() || failed.load()) return;
      const Task& task = tasks[idx];
      try {
        std::uint64_t run_seed = derive_seed(config.seed, task.job->id, task.rep);
        auto t0 = std::chrono::steady_clock::now();
        RunRecord rec = run(task.algo, task.job->inst, std::nullopt, task.job->stop, run_seed,
                            /*with_trajectory=*/false);
        auto t1 = std::chrono::steady_clock::now();
        rows[idx] = ResultRow{task.job->id, task.algo,          task.rep,      run_seed,
                              rec.iterations, rec.final_fitness, rec.stop_reason};
        times[idx] = TimingRow{task.job->id, task.algo, task.rep,
                               std::chrono::duration<double, std::milli>(t1 - t0).count()};
      } catch (const std::exception& ex) {
        std::scoped_lock lock(error_mutex);
        error_message = ex.what();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) throw std::runtime_error("campaign run failed: " + error_message);

  if (timings) *timings = std::move(times);
  return rows;
}

namespace {

struct IdFields {
  bool parsed = false;
  Variant variant = Variant::Ccmsp1;
  std::int64_t k = 0;
  std::string series_suffix;  // "m=10 c=0.01" or "n=10k even"
};

IdFields parse_id(const std::string& id) {
  IdFields f;
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : id) {
    if (ch == '_') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  try {
    if (parts.size() == 4 && parts[0] == "ccmsp1" && parts[1].starts_with('k') &&
        parts[2].starts_with('m') && parts[3].starts_with('c')) {
      f.variant = Variant::Ccmsp1;
      f.k = parse_int(parts[1].substr(1));
      f.series_suffix = "m=" + parts[2].substr(1) + " c=" + parts[3].substr(1);
      f.parsed = true;
    } else if (parts.size() == 4 && parts[0] == "ccmsp2p" && parts[1].starts_with('k') &&
               parts[2].starts_with('n') && (parts[3] == "even" || parts[3] == "odd")) {
      f.variant = Variant::Ccmsp2Plus;
      f.k = parse_int(parts[1].substr(1));
      std::int64_t n = parse_int(parts[2].substr(1));
      if (parts[3] == "odd") --n;
      f.series_suffix = "n=" + std::to_string(n / f.k) + "k " + parts[3];
      f.parsed = true;
    }
  } catch (const std::exception&) {
    f.parsed = false;
  }
  return f;
}

}  // namespace

Summary summarize(const std::vector<ResultRow>& rows) {
  std::map<std::pair<std::string, Algo>, std::vector<const ResultRow*>> groups;
  std::map<std::tuple<std::string, Algo, int>, int> dup;
  for (const ResultRow& row : rows) {
    if (++dup[{row.instance, row.algorithm, row.repetition}] > 1)
      throw std::invalid_argument("mixed inputs: duplicate row for " + row.instance + "/" +
                                  to_string(row.algorithm) + "/rep " +
                                  std::to_string(row.repetition));
    groups[{row.instance, row.algorithm}].push_back(&row);
  }

  Summary summary;
  std::map<std::pair<std::string, std::int64_t>, PlotRow> plot;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const ResultRow* x, const ResultRow* y) { return x->iterations < y->iterations; });
    SummaryRow s;
    s.instance = key.first;
    s.algorithm = key.second;
    s.runs = static_cast<int>(members.size());
    s.min_iterations = members.front()->iterations;
    s.max_iterations = members.back()->iterations;
    double iter_sum = 0.0, fit_sum = 0.0;
    for (const ResultRow* r : members) {
      iter_sum += static_cast<double>(r->iterations);
      fit_sum += r->final_fitness;
      if (r->stop_reason == "cap") ++s.censored;
    }
    s.mean_iterations = iter_sum / s.runs;
    s.mean_final_fitness = fit_sum / s.runs;
    const std::size_t mid = members.size() / 2;
    s.median_iterations =
        members.size() % 2 ? static_cast<double>(members[mid]->iterations)
                           : (static_cast<double>(members[mid - 1]->iterations) +
                              static_cast<double>(members[mid]->iterations)) /
                                 2.0;
    summary.rows.push_back(s);

    IdFields f = parse_id(key.first);
    if (f.parsed) {
      std::string series = to_string(key.second) + " " + f.series_suffix;
      PlotRow& p = plot[{series, f.k}];
      p.series = series;
      p.k = f.k;
      p.log2_k = std::log2(static_cast<double>(f.k));
      p.mean_iterations = s.mean_iterations;
      p.censored = s.censored;
      p.runs = s.runs;
    }
  }
  for (auto& [key, p] : plot) summary.plot.push_back(p);
  return summary;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string results_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "instance,algorithm,repetition,seed,iterations,final_fitness,stop_reason\n";
  for (const ResultRow& r : rows)
    out << r.instance << ',' << to_string(r.algorithm) << ',' << r.repetition << ',' << r.seed
        << ',' << r.iterations << ',' << format_real(r.final_fitness) << ',' << r.stop_reason
        << '\n';
  return out.str();
}

std::vector<ResultRow> results_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "instance,algorithm,repetition,seed,iterations,final_fitness,stop_reason")
    throw std::invalid_argument("unrecognized results header");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 7) throw std::invalid_argument("malformed results row: " + line);
    rows.push_back(ResultRow{f[0], algo_from_string(f[1]), static_cast<int>(parse_int(f[2])),
                             parse_uint(f[3]), parse_int(f[4]), parse_real(f[5]), f[6]});
  }
  return rows;
}

std::string timings_to_csv(const std::vector<TimingRow>& rows) {
  std::ostringstream out;
  out << "instance,algorithm,repetition,wall_ms\n";
  for (const TimingRow& r : rows)
    out << r.instance << ',' << to_string(r.algorithm) << ',' << r.repetition << ','
        << format_real(r.wall_ms, 6) << '\n';
  return out.str();
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << "instance,algorithm,runs,censored,mean_iterations,median_iterations,min_iterations,"
         "max_iterations,mean_final_fitness\n";
  for (const SummaryRow& r : rows)
    out << r.instance << ',' << to_string(r.algorithm) << ',' << r.runs << ',' << r.censored << ','
        << format_real(r.mean_iterations) << ',' << format_real(r.median_iterations) << ','
        << r.min_iterations << ',' << r.max_iterations << ',' << format_real(r.mean_final_fitness)
        << '\n';
  return out.str();
}

std::string plot_to_csv(const std::vector<PlotRow>& rows) {
  std::ostringstream out;
  out << "series,k,log2_k,mean_iterations,censored,runs\n";
  for (const PlotRow& r : rows)
    out << r.series << ',' << r.k << ',' << format_real(r.log2_k) << ','
        << format_real(r.mean_iterations) << ',' << r.censored << ',' << r.runs << '\n';
  return out.str();
}

}  // namespace ccmsp
