#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "gbo/harness/experiment.hpp"

namespace gbo::harness {

/// Functions of the stability protocol: two unimodal, two multi-modal.
inline const std::vector<std::string>& stability_functions() {
  static const std::vector<std::string> ids = {"f3", "f4", "f5", "f11"};
  return ids;
}

/// Floor added before taking log10 so that zero errors stay plottable.
inline constexpr double kLogErrorFloor = 1e-31;

inline double plot_error(double error) { return std::log10(error + kLogErrorFloor); }

struct StabilitySeries {
  std::string function;
  std::string algorithm;
  std::vector<double> errors;      // one per repeat, in repeat order
  std::vector<double> log_errors;  // plot_error(errors[i])
  double mean_error = 0.0;
  double variance = 0.0;  // population variance of errors
};

/// Per-repeat error series and averages for each (function, algorithm)
/// cell of `table` restricted to `functions`. Every cell needs at least
/// `min_repeats` successful runs.
inline std::vector<StabilitySeries> stability_report(
    const ResultTable& table, const std::vector<std::string>& functions = stability_functions(),
    std::size_t min_repeats = 10) {
  std::vector<StabilitySeries> out;
  std::vector<std::string> algs;
  for (const auto& r : table.rows)
    if (std::find(algs.begin(), algs.end(), r.algorithm) == algs.end()) algs.push_back(r.algorithm);

  for (const auto& fn : functions) {
    const std::string id = function_info(fn).id;
    for (const auto& alg : algs) {
      std::vector<const ResultRow*> rows;
      for (const auto& r : table.rows)
        if (r.function == id && r.algorithm == alg && !r.failed()) rows.push_back(&r);
      if (rows.size() < min_repeats) {
        throw std::invalid_argument(fmt::format("stability needs {} repeats of {} on {}, found {}",
                                                min_repeats, alg, id, rows.size()));
      }
      std::sort(rows.begin(), rows.end(),
                [](const auto* a, const auto* b) { return a->repeat < b->repeat; });
      StabilitySeries s;
      s.function = id;
      s.algorithm = alg;
      for (const auto* r : rows) {
        s.errors.push_back(r->error);
        s.log_errors.push_back(plot_error(r->error));
      }
      double sum = 0.0;
      for (double e : s.errors) sum += e;
      s.mean_error = sum / static_cast<double>(s.errors.size());
      double sq = 0.0;
      for (double e : s.errors) sq += (e - s.mean_error) * (e - s.mean_error);
      s.variance = sq / static_cast<double>(s.errors.size());
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// Long-format CSV: one line per (function, algorithm, repeat).
inline std::string stability_series_csv(const std::vector<StabilitySeries>& report) {
  std::string out = "function,algorithm,repeat,error,log10_error\n";
  for (const auto& s : report)
    for (std::size_t i = 0; i < s.errors.size(); ++i)
      out += fmt::format("{},{},{},{},{}\n", s.function, s.algorithm, i, s.errors[i], s.log_errors[i]);
  return out;
}

inline std::string stability_summary_csv(const std::vector<StabilitySeries>& report) {
  std::string out = "function,algorithm,mean_error,log10_mean_error,variance\n";
  for (const auto& s : report)
    out += fmt::format("{},{},{},{},{}\n", s.function, s.algorithm, s.mean_error,
                       plot_error(s.mean_error), s.variance);
  return out;
}

inline nlohmann::json stability_json(const std::vector<StabilitySeries>& report) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : report) {
    j.push_back({{"function", s.function},
                 {"algorithm", s.algorithm},
                 {"errors", s.errors},
                 {"log10_errors", s.log_errors},
                 {"mean_error", s.mean_error},
                 {"variance", s.variance}});
  }
  return j;
}

}  // namespace gbo::harness
