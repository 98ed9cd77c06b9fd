#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "gbo/harness/experiment.hpp"

namespace gbo {

NLOHMANN_JSON_SERIALIZE_ENUM(EvaluationMode, {{EvaluationMode::kBasic, "basic"},
                                              {EvaluationMode::kPrimeConcentric, "prime"}})
NLOHMANN_JSON_SERIALIZE_ENUM(SplitAnchor, {{SplitAnchor::kBallRadius, "ball_radius"},
                                           {SplitAnchor::kWinningShell, "winning_shell"}})
NLOHMANN_JSON_SERIALIZE_ENUM(OutOfBoundsPolicy, {{OutOfBoundsPolicy::kClamp, "clamp"},
                                                 {OutOfBoundsPolicy::kEvaluateRaw, "raw"}})
NLOHMANN_JSON_SERIALIZE_ENUM(RunStatus, {{RunStatus::kConverged, "ok"},
                                         {RunStatus::kBudgetExhausted, "budget_exhausted"}})

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GboConfig, mode, split_anchor, oob_policy,
                                                max_evaluations, max_rounds, noise_seed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RoundTrace, live_balls, best_so_far)

inline void to_json(nlohmann::json& j, const RunRecord& r) {
  j = {{"best_value", std::isfinite(r.best_value) ? nlohmann::json(r.best_value)
                                                : nlohmann::json(nullptr)},
       {"best_point", r.best_point},
       {"evaluations", r.evaluations}, {"rounds", r.rounds},
       {"wall_time_s", r.wall_time_s}, {"status", r.status},
       {"round_trace", r.round_trace}};
}

inline void from_json(const nlohmann::json& j, RunRecord& r) {
  r.best_value = j.at("best_value").is_null() ? std::numeric_limits<double>::infinity()
                                               : j.at("best_value").get<double>();
  j.at("best_point").get_to(r.best_point);
  j.at("evaluations").get_to(r.evaluations);
  j.at("rounds").get_to(r.rounds);
  j.at("wall_time_s").get_to(r.wall_time_s);
  j.at("status").get_to(r.status);
  j.at("round_trace").get_to(r.round_trace);
}

namespace baselines {
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(Bounds, lb, ub)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(PsoConfig, size_pop, max_iter, w, c1, c2, bounds,
                                                seed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(DeConfig, size_pop, max_iter, prob_mut, F, bounds,
                                                seed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GaConfig, size_pop, max_iter, prob_mut, precision,
                                                bounds, seed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SaConfig, x0, T_max, T_min, L, max_stay_counter,
                                                cooling, bounds, seed)
}  // namespace baselines

namespace harness {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ExperimentSpec, functions, algorithms, repeats,
                                                seed_base, dimensions, gbo, pso, de, ga, sa,
                                                journal_path, timing, threads)

namespace detail {

// JSON has no NaN/inf; non-finite numbers travel as null.
inline nlohmann::json number(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

inline double number(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const ResultRow& r) {
  j = {{"function", r.function},
       {"algorithm", r.algorithm},
       {"repeat", r.repeat},
       {"seed", r.seed},
       {"best_value", detail::number(r.best_value)},
       {"error", detail::number(r.error)},
       {"wall_time_s", r.wall_time_s},
       {"evaluations", r.evaluations},
       {"rounds", r.rounds},
       {"status", r.status},
       {"message", r.message},
       {"best_point", r.best_point}};
}

inline void from_json(const nlohmann::json& j, ResultRow& r) {
  j.at("function").get_to(r.function);
  j.at("algorithm").get_to(r.algorithm);
  j.at("repeat").get_to(r.repeat);
  j.at("seed").get_to(r.seed);
  r.best_value = detail::number(j.at("best_value"));
  r.error = detail::number(j.at("error"));
  j.at("wall_time_s").get_to(r.wall_time_s);
  j.at("evaluations").get_to(r.evaluations);
  j.at("rounds").get_to(r.rounds);
  j.at("status").get_to(r.status);
  j.at("message").get_to(r.message);
  j.at("best_point").get_to(r.best_point);
}

enum class Format { kCsv, kMarkdown, kJson };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::kCsv;
  if (s == "markdown" || s == "md") return Format::kMarkdown;
  if (s == "json") return Format::kJson;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'; valid: csv, markdown, json");
}

inline std::string format_value(double v) {
  if (std::isnan(v)) return "n/a";
  if (v == 0.0) return "0";
  return fmt::format("{:.2E}", v);
}

namespace detail {

// Functions x algorithms matrix of one aggregate column; row minima bold.
inline std::string matrix(const std::vector<Aggregate>& cells, const std::string& title,
                          double Aggregate::*column) {
  std::vector<std::string> fns, algs;
  for (const auto& c : cells) {
    if (std::find(fns.begin(), fns.end(), c.function) == fns.end()) fns.push_back(c.function);
    if (std::find(algs.begin(), algs.end(), c.algorithm) == algs.end()) algs.push_back(c.algorithm);
  }
  std::ostringstream out;
  out << "### " << title << "\n\n| Func |";
  for (const auto& a : algs) out << ' ' << a << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < algs.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& fn : fns) {
    std::vector<double> row(algs.size(), std::numeric_limits<double>::quiet_NaN());
    for (const auto& c : cells) {
      if (c.function != fn) continue;
      const auto k = std::find(algs.begin(), algs.end(), c.algorithm) - algs.begin();
      row[static_cast<std::size_t>(k)] = c.*column;
    }
    double lo = std::numeric_limits<double>::infinity();
    for (double v : row)
      if (!std::isnan(v)) lo = std::min(lo, v);
    out << "| " << fn << " |";
    for (double v : row) {
      const std::string text = format_value(v);
      out << ' ' << (!std::isnan(v) && v == lo ? "**" + text + "**" : text) << " |";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace detail

inline nlohmann::json to_json_document(const ResultTable& table) {
  nlohmann::json aggregates = nlohmann::json::array();
  for (const auto& a : aggregate(table)) {
    aggregates.push_back({{"function", a.function},
                          {"algorithm", a.algorithm},
                          {"runs", a.runs},
                          {"failures", a.failures},
                          {"mean_error", detail::number(a.mean_error)},
                          {"mean_time_s", detail::number(a.mean_time_s)}});
  }
  return {{"spec", table.spec}, {"rows", table.rows}, {"aggregates", aggregates}};
}

/// Renders a result table. CSV has one line per run; Markdown shows
/// mean-error and mean-time matrices; JSON is a lossless dump including the
/// spec (configs and seeds).
inline std::string emit(const ResultTable& table, Format format) {
  if (table.rows.empty()) throw std::invalid_argument("nothing to emit: result table is empty");
  switch (format) {
    case Format::kCsv: {
      std::string out = csv_header() + '\n';
      for (const auto& r : table.rows) out += csv_line(r) + '\n';
      return out;
    }
    case Format::kMarkdown: {
      const auto cells = aggregate(table);
      return detail::matrix(cells, "Mean error", &Aggregate::mean_error) + '\n' +
             detail::matrix(cells, "Mean wall time (s)", &Aggregate::mean_time_s);
    }
    case Format::kJson:
      return to_json_document(table).dump(2) + '\n';
  }
  throw std::logic_error("unhandled format");
}

inline ResultTable parse_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ResultTable table;
  j.at("spec").get_to(table.spec);
  j.at("rows").get_to(table.rows);
  return table;
}

inline void write_document(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out.flush()) throw std::runtime_error("failed writing " + path);
}

}  // namespace harness
}  // namespace gbo
