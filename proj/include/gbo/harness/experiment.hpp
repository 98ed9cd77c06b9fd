#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "gbo/baselines/de.hpp"
#include "gbo/baselines/ga.hpp"
#include "gbo/baselines/pso.hpp"
#include "gbo/baselines/sa.hpp"
#include "gbo/benchmarks.hpp"
#include "gbo/optimizer.hpp"

namespace gbo::harness {

inline const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names = {"gbo", "pso", "de", "ga", "sa"};
  return names;
}

inline std::string canonical_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& known : known_algorithms()) {
    if (lower == known) return known;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "'; valid: gbo, pso, de, ga, sa");
}

/// What to run: every (function, algorithm, repeat) triple.
struct ExperimentSpec {
  std::vector<std::string> functions;
  std::vector<std::string> algorithms{"gbo"};
  std::size_t repeats = 10;
  /// Repeat r runs with seed seed_base + r.
  std::uint64_t seed_base = 0;
  /// Per-function dimension overrides, keyed by function id.
  std::map<std::string, std::size_t> dimensions;

  GboConfig gbo;
  baselines::PsoConfig pso;
  baselines::DeConfig de;
  baselines::GaConfig ga;
  baselines::SaConfig sa;

  /// Each finished run is appended here as a CSV line when non-empty.
  std::string journal_path;
  /// Run sequentially so wall times are not disturbed by sibling runs.
  bool timing = false;
  /// Worker count when not timing; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  void validate() const {
    if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    if (functions.empty()) throw std::invalid_argument("experiment needs at least one function");
    if (algorithms.empty()) throw std::invalid_argument("experiment needs at least one algorithm");
    for (const auto& f : functions) function_info(f);
    for (const auto& a : algorithms) canonical_algorithm(a);
    gbo.validate();
    pso.validate();
    de.validate();
    ga.validate();
    sa.validate();
  }

  bool operator==(const ExperimentSpec&) const = default;
};

/// One optimizer run. `status` is "ok", "budget_exhausted" or "failed".
struct ResultRow {
  std::string function;
  std::string algorithm;
  std::size_t repeat = 0;
  std::uint64_t seed = 0;
  double best_value = std::numeric_limits<double>::quiet_NaN();
  double error = std::numeric_limits<double>::quiet_NaN();
  double wall_time_s = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t rounds = 0;
  std::string status = "ok";
  std::string message;
  Point best_point;

  bool failed() const noexcept { return status == "failed"; }

  bool operator==(const ResultRow& o) const {
    auto same = [](double a, double b) {
      return (std::isnan(a) && std::isnan(b)) ||
             std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
    };
    return function == o.function && algorithm == o.algorithm && repeat == o.repeat &&
           seed == o.seed && same(best_value, o.best_value) && same(error, o.error) &&
           same(wall_time_s, o.wall_time_s) && evaluations == o.evaluations &&
           rounds == o.rounds && status == o.status && message == o.message &&
           best_point == o.best_point;
  }
};

struct ResultTable {
  ExperimentSpec spec;
  std::vector<ResultRow> rows;

  bool operator==(const ResultTable&) const = default;
};

/// Mean error and time over the successful runs of one (function,
/// algorithm) cell.
struct Aggregate {
  std::string function;
  std::string algorithm;
  std::size_t runs = 0;
  std::size_t failures = 0;
  double mean_error = std::numeric_limits<double>::quiet_NaN();
  double mean_time_s = std::numeric_limits<double>::quiet_NaN();
};

/// Cells in first-appearance order of functions, then algorithms.
inline std::vector<Aggregate> aggregate(const ResultTable& table) {
  std::vector<std::string> fns, algs;
  for (const auto& r : table.rows) {
    if (std::find(fns.begin(), fns.end(), r.function) == fns.end()) fns.push_back(r.function);
    if (std::find(algs.begin(), algs.end(), r.algorithm) == algs.end()) algs.push_back(r.algorithm);
  }
  std::vector<Aggregate> out;
  for (const auto& fn : fns) {
    for (const auto& alg : algs) {
      Aggregate a{fn, alg};
      double err = 0.0, time = 0.0;
      for (const auto& r : table.rows) {
        if (r.function != fn || r.algorithm != alg) continue;
        if (r.failed()) {
          ++a.failures;
          continue;
        }
        ++a.runs;
        err += r.error;
        time += r.wall_time_s;
      }
      if (a.runs == 0 && a.failures == 0) continue;
      if (a.runs > 0) {
        a.mean_error = err / static_cast<double>(a.runs);
        a.mean_time_s = time / static_cast<double>(a.runs);
      }
      out.push_back(a);
    }
  }
  return out;
}

inline std::string csv_header() {
  return "function,algorithm,repeat,best_value,error,wall_time_s,evaluations,rounds,status";
}

inline std::string csv_line(const ResultRow& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{}", r.function, r.algorithm, r.repeat,
                     r.best_value, r.error, r.wall_time_s, r.evaluations, r.rounds, r.status);
}

/// Runs one optimizer on one objective with the spec's configs and the
/// given seed.
inline RunRecord run_single(const ObjectiveFunction& f, const std::string& algorithm,
                            const ExperimentSpec& spec, std::uint64_t seed) {
  const std::string alg = canonical_algorithm(algorithm);
  if (alg == "gbo") {
    GboConfig c = spec.gbo;
    c.noise_seed = seed;
    return gbo_optimize(f, c);
  }
  if (alg == "pso") {
    auto c = spec.pso;
    c.seed = seed;
    return baselines::pso_optimize(f, c);
  }
  if (alg == "de") {
    auto c = spec.de;
    c.seed = seed;
    return baselines::de_optimize(f, c);
  }
  if (alg == "ga") {
    auto c = spec.ga;
    c.seed = seed;
    return baselines::ga_optimize(f, c);
  }
  auto c = spec.sa;
  c.seed = seed;
  return baselines::sa_optimize(f, c);
}

inline ResultRow execute(const ExperimentSpec& spec, const std::string& function,
                         const std::string& algorithm, std::size_t repeat) {
  ResultRow row;
  row.function = function;
  row.algorithm = algorithm;
  row.repeat = repeat;
  row.seed = spec.seed_base + repeat;
  try {
    std::optional<std::size_t> dim;
    const std::string id = function_info(function).id;
    if (auto it = spec.dimensions.find(id); it != spec.dimensions.end()) dim = it->second;
    const ObjectiveFunction f = make_function(function, dim);
    const RunRecord rec = run_single(f, algorithm, spec, row.seed);
    row.best_value = rec.best_value;
    row.error = std::abs(rec.best_value - f.optimum_value());
    row.wall_time_s = rec.wall_time_s;
    row.evaluations = rec.evaluations;
    row.rounds = rec.rounds;
    row.status = to_string(rec.status);
    row.best_point = rec.best_point;
  } catch (const std::exception& e) {
    row.status = "failed";
    row.message = e.what();
  }
  return row;
}

/// Executes the whole grid. Rows come back in (function, algorithm, repeat)
/// order regardless of how many workers ran them. A failing run becomes a
/// "failed" row instead of aborting the batch.
inline ResultTable run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  struct Task {
    std::string function, algorithm;
    std::size_t repeat;
  };
  std::vector<Task> tasks;
  for (const auto& fn : spec.functions)
    for (const auto& alg : spec.algorithms)
      for (std::size_t r = 0; r < spec.repeats; ++r)
        tasks.push_back({function_info(fn).id, canonical_algorithm(alg), r});

  std::ofstream journal;
  if (!spec.journal_path.empty()) {
    journal.open(spec.journal_path, std::ios::trunc);
    if (!journal) throw std::runtime_error("cannot write journal " + spec.journal_path);
    journal << csv_header() << '\n' << std::flush;
  }

  ResultTable table{spec, std::vector<ResultRow>(tasks.size())};
  std::mutex journal_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      table.rows[i] = execute(spec, tasks[i].function, tasks[i].algorithm, tasks[i].repeat);
      if (journal.is_open()) {
        std::lock_guard lock(journal_mutex);
        journal << csv_line(table.rows[i]) << '\n' << std::flush;
      }
    }
  };

  std::size_t workers = spec.timing ? 1 : spec.threads;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, tasks.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return table;
}

}  // namespace gbo::harness
