#pragma once

// Command-line front end: run, compare, stability, list-functions.
// Exit codes: 0 success, 1 usage or runtime error, 2 GBO budget exhausted,
// 3 some runs of a batch failed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "gbo/gbo.hpp"

#ifndef GBO_VERSION
#define GBO_VERSION "0.0.0-dev"
#endif

namespace gbo::cli {

enum ExitCode : int { kOk = 0, kError = 1, kBudget = 2, kPartialFailure = 3 };

inline std::string version_string() {
  return fmt::format("gbo {} ({}, C++{})", GBO_VERSION, __VERSION__, __cplusplus / 100 % 100);
}

inline std::string list_functions_table() {
  std::string out = fmt::format("{:<5} {:<34} {:>4} {:<20} {:>5}\n", "id", "name", "dim",
                                "domain", "opt");
  for (const auto& info : function_registry()) {
    const std::string dim = info.fixed_dimension ? std::to_string(info.fixed_dimension) : "2*";
    out += fmt::format("{:<5} {:<34} {:>4} {:<20} {:>5}\n", info.id, info.name, dim,
                       fmt::format("[-{}, {}]^d", info.halfwidth, info.halfwidth),
                       info.optimum_value);
  }
  out += "* default dimension; override with --dim\n";
  return out;
}

/// Seed from the flag, else GBO_SEED, else 0.
inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GBO_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("GBO_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct GboFlags {
  std::string mode = "prime";
  std::string split = "winning";
  std::string oob = "clamp";
  std::uint64_t max_evals = GboConfig{}.max_evaluations;
  std::uint32_t max_rounds = GboConfig{}.max_rounds;

  void attach(CLI::App* app) {
    app->add_option("--mode", mode, "Ball evaluation: basic or prime")
        ->check(CLI::IsMember({"basic", "prime"}))
        ->capture_default_str();
    app->add_option("--split", split,
                    "Split around the winning concentric shell or the ball's own radius")
        ->check(CLI::IsMember({"winning", "ball"}))
        ->capture_default_str();
    app->add_option("--oob", oob, "Out-of-box boundary points: clamp or raw")
        ->check(CLI::IsMember({"clamp", "raw"}))
        ->capture_default_str();
    app->add_option("--max-evals", max_evals, "Evaluation budget (runaway guard)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--max-rounds", max_rounds, "Round budget (runaway guard)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  GboConfig config() const {
    GboConfig c;
    c.mode = mode == "basic" ? EvaluationMode::kBasic : EvaluationMode::kPrimeConcentric;
    c.split_anchor = split == "ball" ? SplitAnchor::kBallRadius : SplitAnchor::kWinningShell;
    c.oob_policy = oob == "raw" ? OutOfBoundsPolicy::kEvaluateRaw : OutOfBoundsPolicy::kClamp;
    c.max_evaluations = max_evals;
    c.max_rounds = max_rounds;
    return c;
  }
};

inline int run_command(const std::string& function, std::optional<std::size_t> dim,
                       const GboConfig& base, std::optional<std::uint64_t> seed_flag,
                       const std::string& out_path, std::ostream& out) {
  const ObjectiveFunction f = make_function(function, dim);
  GboConfig config = base;
  config.noise_seed = resolve_seed(seed_flag);
  const RunRecord rec = gbo_optimize(f, config);
  out << fmt::format("function     {} ({}, d={})\n", f.id(), f.name(), f.dimension())
      << fmt::format("best value   {}\n", rec.best_value)
      << fmt::format("best point   [{}]\n", fmt::join(rec.best_point, ", "))
      << fmt::format("error        {}\n", std::abs(rec.best_value - f.optimum_value()))
      << fmt::format("evaluations  {}\n", rec.evaluations)
      << fmt::format("rounds       {}\n", rec.rounds)
      << fmt::format("time         {:.6f} s\n", rec.wall_time_s)
      << fmt::format("status       {}\n", to_string(rec.status));
  if (!out_path.empty()) {
    nlohmann::json j = rec;
    j["function"] = f.id();
    j["dimension"] = f.dimension();
    j["error"] = std::abs(rec.best_value - f.optimum_value());
    j["config"] = config;
    harness::write_document(out_path, j.dump(2) + '\n');
  }
  return rec.status == RunStatus::kBudgetExhausted ? kBudget : kOk;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Granular-ball optimization and baseline comparison", "gbo"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(0, 1);
  bool list_flag = false;
  app.add_flag("--list-functions", list_flag, "Print the benchmark registry and exit");

  // run
  auto* run = app.add_subcommand("run", "Run GBO once on one benchmark function");
  std::string run_function;
  std::optional<std::size_t> run_dim;
  std::optional<std::uint64_t> run_seed;
  std::string run_out;
  GboFlags run_gbo;
  run->add_option("--function", run_function, "Function id (f1..f20) or name")->required();
  run->add_option("--dim", run_dim, "Dimension override for variable-dimension functions");
  run->add_option("--seed", run_seed, "Noise seed (default: $GBO_SEED, else 0)");
  run->add_option("--out", run_out, "Write the run record as JSON");
  run_gbo.attach(run);

  // compare
  auto* compare = app.add_subcommand("compare", "Repeated runs of several algorithms");
  std::string cmp_functions = "f1,f2,f3,f4,f5,f6,f7,f8,f9,f10,f11,f12,f13,f14,f15,f16,f17,f18,f19,f20";
  std::string cmp_algorithms = "gbo";
  std::size_t cmp_repeats = 10;
  std::optional<std::uint64_t> cmp_seed;
  std::string cmp_out, cmp_format = "markdown", cmp_config;
  bool cmp_timing = false;
  std::size_t cmp_threads = 0;
  GboFlags cmp_gbo;
  compare->add_option("--functions", cmp_functions, "Comma-separated function ids")
      ->capture_default_str();
  compare->add_option("--algorithms", cmp_algorithms, "Comma-separated: gbo,pso,de,ga,sa")
      ->capture_default_str();
  compare->add_option("--repeats", cmp_repeats, "Runs per (function, algorithm)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare->add_option("--seed", cmp_seed, "Seed base; repeat r uses seed + r (default: $GBO_SEED, else 0)");
  compare->add_option("--out", cmp_out, "Output file (default: stdout)");
  compare->add_option("--format", cmp_format, "csv, markdown or json")
      ->check(CLI::IsMember({"csv", "markdown", "json"}))
      ->capture_default_str();
  compare->add_option("--config", cmp_config,
                      "JSON experiment spec; command-line flags given explicitly override it")
      ->check(CLI::ExistingFile);
  compare->add_flag("--timing", cmp_timing, "Run sequentially for clean wall times");
  compare->add_option("--threads", cmp_threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  cmp_gbo.attach(compare);

  // stability
  auto* stability = app.add_subcommand("stability", "Ten-run error series on f3, f4, f5, f11");
  std::size_t stab_repeats = 10;
  std::string stab_algorithms = "gbo,pso,de,ga,sa";
  std::optional<std::uint64_t> stab_seed;
  std::string stab_out, stab_format = "csv";
  stability->add_option("--repeats", stab_repeats, "Runs per (function, algorithm), at least 10")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  stability->add_option("--algorithms", stab_algorithms, "Comma-separated algorithms")
      ->capture_default_str();
  stability->add_option("--seed", stab_seed, "Seed base (default: $GBO_SEED, else 0)");
  stability->add_option("--out", stab_out,
                        "Series file; with csv the summary goes to <out>.summary.csv");
  stability->add_option("--format", stab_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* list = app.add_subcommand("list-functions", "Print the benchmark registry");

  std::vector<std::string> argv_storage{"gbo"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (list_flag || list->parsed()) {
      out << list_functions_table();
      return kOk;
    }
    if (run->parsed()) {
      return run_command(run_function, run_dim, run_gbo.config(), run_seed, run_out, out);
    }
    if (compare->parsed()) {
      harness::ExperimentSpec spec;
      if (!cmp_config.empty()) {
        std::ifstream in(cmp_config);
        spec = nlohmann::json::parse(in).get<harness::ExperimentSpec>();
      }
      auto given = [&](const char* name) { return compare->count(name) > 0 || cmp_config.empty(); };
      if (given("--functions")) spec.functions = split_list(cmp_functions);
      if (given("--algorithms")) spec.algorithms = split_list(cmp_algorithms);
      if (given("--repeats")) spec.repeats = cmp_repeats;
      if (cmp_seed || cmp_config.empty()) spec.seed_base = resolve_seed(cmp_seed);
      if (given("--mode") || given("--split") || given("--oob") || given("--max-evals") ||
          given("--max-rounds")) {
        spec.gbo = cmp_gbo.config();
      }
      if (cmp_timing) spec.timing = true;
      if (given("--threads")) spec.threads = cmp_threads;
      const std::string journal = cmp_out.empty() ? "" : cmp_out + ".partial.csv";
      spec.journal_path = journal;

      const harness::ResultTable table = harness::run_experiment(spec);
      const std::string doc = harness::emit(table, harness::parse_format(cmp_format));
      if (cmp_out.empty()) {
        out << doc;
      } else {
        harness::write_document(cmp_out, doc);
        std::filesystem::remove(journal);
      }
      std::size_t failed = 0;
      for (const auto& r : table.rows) failed += r.failed();
      if (failed) {
        err << failed << " of " << table.rows.size() << " runs failed\n";
        for (const auto& r : table.rows)
          if (r.failed()) err << "  " << r.function << '/' << r.algorithm << " #" << r.repeat << ": " << r.message << '\n';
        return kPartialFailure;
      }
      return kOk;
    }
    if (stability->parsed()) {
      harness::ExperimentSpec spec;
      spec.functions = harness::stability_functions();
      spec.algorithms = split_list(stab_algorithms);
      spec.repeats = stab_repeats;
      spec.seed_base = resolve_seed(stab_seed);
      const harness::ResultTable table = harness::run_experiment(spec);
      std::size_t failed = 0;
      for (const auto& r : table.rows) failed += r.failed();
      const auto report = harness::stability_report(table);
      const std::string summary = harness::stability_summary_csv(report);
      out << summary;
      if (!stab_out.empty()) {
        if (stab_format == "json") {
          harness::write_document(stab_out, harness::stability_json(report).dump(2) + '\n');
        } else {
          harness::write_document(stab_out, harness::stability_series_csv(report));
          harness::write_document(stab_out + ".summary.csv", summary);
        }
      }
      return failed ? kPartialFailure : kOk;
    }
    out << app.help();
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace gbo::cli
