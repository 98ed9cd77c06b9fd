#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "gbo/harness/experiment.hpp"
#include "gbo/harness/report.hpp"
#include "gbo/harness/stability.hpp"

namespace gbo::harness {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

ResultRow row(std::string fn, std::string alg, std::size_t repeat, double error, double time) {
  ResultRow r;
  r.function = std::move(fn);
  r.algorithm = std::move(alg);
  r.repeat = repeat;
  r.best_value = error;
  r.error = error;
  r.wall_time_s = time;
  return r;
}

TEST(Experiment, SphereTenRepeatsAllZero) {
  ExperimentSpec spec;
  spec.functions = {"f1"};
  const ResultTable t = run_experiment(spec);
  ASSERT_EQ(t.rows.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(t.rows[i].repeat, i);
    EXPECT_EQ(t.rows[i].seed, i);
    EXPECT_EQ(t.rows[i].error, 0.0);
    EXPECT_EQ(t.rows[i].status, "ok");
  }
  const auto agg = aggregate(t);
  ASSERT_EQ(agg.size(), 1u);
  EXPECT_EQ(agg[0].mean_error, 0.0);
  EXPECT_EQ(agg[0].runs, 10u);
}

TEST(Experiment, DropWaveIsExactlyMinusOne) {
  ExperimentSpec spec;
  spec.functions = {"f5"};
  spec.repeats = 1;
  const ResultTable t = run_experiment(spec);
  EXPECT_EQ(t.rows.at(0).best_value, -1.0);
}

TEST(Experiment, EasomMissesTheOptimum) {
  ExperimentSpec spec;
  spec.functions = {"f12"};
  spec.repeats = 1;
  const double v = run_experiment(spec).rows.at(0).best_value;
  EXPECT_GE(v, -1.0);
  EXPECT_LE(v, -0.1);
  EXPECT_GT(v, -1.0 + 1e-6);
}

TEST(Experiment, SeedsAndOrderAreStableAcrossWorkerCounts) {
  ExperimentSpec spec;
  spec.functions = {"f4", "f9"};
  spec.algorithms = {"gbo", "PSO"};
  spec.repeats = 3;
  spec.seed_base = 100;
  spec.pso.max_iter = 20;
  spec.threads = 1;
  const ResultTable serial = run_experiment(spec);
  spec.threads = 4;
  const ResultTable parallel = run_experiment(spec);
  ASSERT_EQ(serial.rows.size(), 12u);
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    const auto& a = serial.rows[i];
    const auto& b = parallel.rows[i];
    EXPECT_EQ(a.function, b.function);
    EXPECT_EQ(a.algorithm, b.algorithm);
    EXPECT_EQ(a.seed, 100 + a.repeat);
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a.best_value), std::bit_cast<std::uint64_t>(b.best_value));
    EXPECT_EQ(a.best_point, b.best_point);
    EXPECT_EQ(a.evaluations, b.evaluations);
    EXPECT_GE(a.wall_time_s, 0.0);
  }
  EXPECT_EQ(serial.rows[3].algorithm, "pso");
}

TEST(Experiment, FailedRunsBecomeRowsNotAborts) {
  ExperimentSpec spec;
  spec.functions = {"f1", "f3"};
  spec.repeats = 1;
  spec.gbo.max_evaluations = 10;
  spec.dimensions = {{"f1", 3}};
  spec.sa.x0 = {0.0, 0.0};  // wrong length for d = 3
  spec.algorithms = {"sa", "gbo"};
  const ResultTable t = run_experiment(spec);
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_TRUE(t.rows[0].failed());
  EXPECT_FALSE(t.rows[0].message.empty());
  EXPECT_EQ(t.rows[1].status, "budget_exhausted");
  EXPECT_EQ(t.rows[2].status, "ok");
}

TEST(Experiment, InvalidSpecsRejected) {
  ExperimentSpec spec;
  spec.functions = {"f1"};
  spec.repeats = 0;
  EXPECT_THROW(run_experiment(spec), std::invalid_argument);
  spec.repeats = 1;
  spec.algorithms = {"afsa"};
  EXPECT_THROW(run_experiment(spec), std::invalid_argument);
  spec.algorithms = {"gbo"};
  spec.functions = {"f0"};
  EXPECT_THROW(run_experiment(spec), std::invalid_argument);
}

TEST(Experiment, JournalHasOneLinePerRun) {
  const auto path = std::filesystem::temp_directory_path() / "gbo_journal_test.csv";
  ExperimentSpec spec;
  spec.functions = {"f1", "f5"};
  spec.repeats = 2;
  spec.journal_path = path.string();
  run_experiment(spec);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto lines = lines_of(buf.str());
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], csv_header());
  std::filesystem::remove(path);
}

TEST(Emit, CsvHeaderAndOneLine) {
  ResultTable t;
  t.rows.push_back(row("f1", "gbo", 0, 0.0, 0.5));
  t.rows[0].evaluations = 12;
  t.rows[0].rounds = 3;
  const auto lines = lines_of(emit(t, Format::kCsv));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "function,algorithm,repeat,best_value,error,wall_time_s,evaluations,rounds,status");
  EXPECT_EQ(lines[1], "f1,gbo,0,0,0,0.5,12,3,ok");
}

TEST(Emit, CsvNumbersRoundTrip) {
  ResultTable t;
  t.rows.push_back(row("f6", "gbo", 0, 1.3497838043956716e-31, 0.1));
  const auto lines = lines_of(emit(t, Format::kCsv));
  EXPECT_NE(lines[1].find("1.3497838043956716e-31"), std::string::npos);
}

TEST(Emit, MarkdownBoldsRowMinimum) {
  ResultTable t;
  t.rows = {row("f1", "gbo", 0, 0.0, 0.2), row("f1", "de", 0, 3e-5, 0.1),
            row("f2", "gbo", 0, 2.0, 0.3), row("f2", "de", 0, 1.0, 0.4)};
  const auto lines = lines_of(emit(t, Format::kMarkdown));
  // title, blank, header, rule, f1, f2
  EXPECT_EQ(lines[0], "### Mean error");
  EXPECT_EQ(lines[2], "| Func | gbo | de |");
  EXPECT_EQ(lines[4], "| f1 | **0** | 3.00E-05 |");
  EXPECT_EQ(lines[5], "| f2 | 2.00E+00 | **1.00E+00** |");
  EXPECT_EQ(lines[9], "| Func | gbo | de |");
  EXPECT_EQ(lines[11], "| f1 | 2.00E-01 | **1.00E-01** |");
  EXPECT_EQ(lines[12], "| f2 | **3.00E-01** | 4.00E-01 |");
}

TEST(Emit, MarkdownBoldMatchesCsvArgmin) {
  ExperimentSpec spec;
  spec.functions = {"f1", "f9", "f12"};
  spec.algorithms = {"gbo", "pso", "de"};
  spec.repeats = 2;
  spec.pso.max_iter = 10;
  spec.de.max_iter = 10;
  const ResultTable t = run_experiment(spec);
  const auto md = lines_of(emit(t, Format::kMarkdown));
  for (std::size_t i = 0; i < spec.functions.size(); ++i) {
    const auto cells = aggregate(t);
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& c : cells)
      if (c.function == spec.functions[i]) lo = std::min(lo, c.mean_error);
    for (const auto& c : cells) {
      if (c.function != spec.functions[i]) continue;
      const std::string bold = "**" + format_value(c.mean_error) + "**";
      const bool is_bold = md[4 + i].find(bold) != std::string::npos;
      // a non-minimal cell may share its rendering with the bold minimum
      if (c.mean_error != lo && format_value(c.mean_error) == format_value(lo)) continue;
      EXPECT_EQ(is_bold, c.mean_error == lo) << md[4 + i];
    }
  }
}

TEST(Emit, JsonRoundTripsExactly) {
  ExperimentSpec spec;
  spec.functions = {"f4", "f6"};
  spec.algorithms = {"gbo", "sa"};
  spec.repeats = 2;
  spec.sa.L = 20;
  spec.dimensions = {{"f4", 3}};
  ResultTable t = run_experiment(spec);
  ResultRow failed = row("f2", "ga", 0, 0.0, 0.0);
  failed.status = "failed";
  failed.best_value = failed.error = std::numeric_limits<double>::quiet_NaN();
  failed.message = "boom";
  t.rows.push_back(failed);
  EXPECT_EQ(parse_json(emit(t, Format::kJson)), t);
}

TEST(Emit, EmptyTableAndBadPathRejected) {
  EXPECT_THROW(emit(ResultTable{}, Format::kCsv), std::invalid_argument);
  EXPECT_THROW(write_document("/nonexistent-dir/x.csv", "x"), std::runtime_error);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Stability, GboSeriesShape) {
  ExperimentSpec spec;
  spec.functions = stability_functions();
  const ResultTable t = run_experiment(spec);
  const auto report = stability_report(t);
  ASSERT_EQ(report.size(), 4u);
  for (const auto& s : report) {
    ASSERT_EQ(s.errors.size(), 10u);
    if (s.function == "f4") {
      EXPECT_GT(s.variance, 0.0);
    } else {
      EXPECT_EQ(s.variance, 0.0) << s.function;
    }
    if (s.function == "f5") {
      for (double e : s.errors) EXPECT_EQ(e, 0.0);
      EXPECT_EQ(s.log_errors[0], -31.0);
    }
  }
  const auto series = lines_of(stability_series_csv(report));
  EXPECT_EQ(series.size(), 41u);
  EXPECT_EQ(lines_of(stability_summary_csv(report)).size(), 5u);
}

TEST(Stability, TransformAndInsufficientRepeats) {
  EXPECT_EQ(plot_error(0.0), -31.0);
  EXPECT_DOUBLE_EQ(plot_error(1.0), 0.0);
  ExperimentSpec spec;
  spec.functions = {"f5"};
  spec.repeats = 3;
  EXPECT_THROW(stability_report(run_experiment(spec), {"f5"}), std::invalid_argument);
}

TEST(Config, SpecJsonRoundTripAndDefaults) {
  ExperimentSpec spec;
  spec.functions = {"f1"};
  spec.de.F = 0.7;
  spec.gbo.mode = EvaluationMode::kBasic;
  spec.dimensions = {{"f1", 4}};
  const nlohmann::json j = spec;
  EXPECT_EQ(j.get<ExperimentSpec>(), spec);
  const auto partial = nlohmann::json::parse(R"({"functions":["f9"],"gbo":{"oob_policy":"raw"}})")
                           .get<ExperimentSpec>();
  EXPECT_EQ(partial.repeats, 10u);
  EXPECT_EQ(partial.gbo.oob_policy, OutOfBoundsPolicy::kEvaluateRaw);
  EXPECT_EQ(partial.gbo.mode, EvaluationMode::kPrimeConcentric);
}

}  // namespace
}  // namespace gbo::harness
