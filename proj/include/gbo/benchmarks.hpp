#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbo/objective.hpp"

namespace gbo {

/// Static description of one registry entry.
struct FunctionInfo {
  std::string id;
  std::string name;
  double halfwidth;
  double optimum_value;
  /// 0 when the dimension is free (default 2).
  std::size_t fixed_dimension;
  std::size_t min_dimension;
  bool deterministic;
};

namespace detail {

using std::numbers::pi;
using X = std::span<const double>;

inline double sqr(double v) { return v * v; }

// Table order; formulas follow the per-function definitions, names follow the
// summary table where the two disagree.
inline const std::vector<FunctionInfo>& registry() {
  static const std::vector<FunctionInfo> table = {
      {"f1", "Sphere Model", 100.0, 0.0, 0, 1, true},
      {"f2", "Schwefel's Problem 1.2", 100.0, 0.0, 0, 1, true},
      {"f3", "Generalized Rosenbrock's Function", 30.0, 0.0, 0, 2, true},
      {"f4", "Quartic Function i.e. Noise", 1.28, 0.0, 0, 1, false},
      {"f5", "Drop-Wave Function", 5.12, -1.0, 2, 2, true},
      {"f6", "Levy Function N. 13", 10.0, 0.0, 2, 2, true},
      {"f7", "Matyas Function", 10.0, 0.0, 2, 2, true},
      {"f8", "Three-Hump Camel Function", 10.0, 0.0, 2, 2, true},
      {"f9", "Goldstein-Price Function", 2.0, 3.0, 2, 2, true},
      {"f10", "Schaffer Function N. 2", 100.0, 0.0, 2, 2, true},
      {"f11", "Generalized Rastrigin's Function", 5.12, 0.0, 30, 30, true},
      {"f12", "Easom Function", 100.0, -1.0, 2, 2, true},
      {"f13", "Sum of Different Powers Function", 1.0, 0.0, 0, 1, true},
      {"f14", "Rastrigin Function", 5.12, 0.0, 0, 1, true},
      {"f15", "Sum Squares Function", 10.0, 0.0, 0, 1, true},
      {"f16", "Generalized Griewank's Function", 600.0, 0.0, 30, 30, true},
      {"f17", "Rotated Hyper-Ellipsoid Function", 65.536, 0.0, 0, 1, true},
      {"f18", "Bohachevsky Function1", 100.0, 0.0, 2, 2, true},
      {"f19", "Bohachevsky Function2", 100.0, 0.0, 2, 2, true},
      {"f20", "Bohachevsky Function3", 100.0, 0.0, 2, 2, true},
  };
  return table;
}

inline double sphere(X x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

inline double schwefel_1_2(X x) {
  double s = 0.0, prefix = 0.0;
  for (double v : x) {
    prefix += v;
    s += prefix * prefix;
  }
  return s;
}

inline double rosenbrock(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += 100.0 * sqr(x[i + 1] - x[i] * x[i]) + sqr(x[i] - 1.0);
  }
  return s;
}

inline double quartic(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * sqr(sqr(x[i]));
  return s;
}

inline double drop_wave(X x) {
  const double r2 = x[0] * x[0] + x[1] * x[1];
  return -(1.0 + std::cos(12.0 * std::sqrt(r2))) / (0.5 * r2 + 2.0);
}

inline double levy13(X x) {
  const double a = x[0], b = x[1];
  return sqr(std::sin(3.0 * pi * a)) + sqr(a - 1.0) * (1.0 + sqr(std::sin(3.0 * pi * b))) +
         sqr(b - 1.0) * (1.0 + sqr(std::sin(2.0 * pi * b)));
}

inline double matyas(X x) { return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1]; }

inline double three_hump_camel(X x) {
  const double a = x[0], b = x[1];
  const double a2 = a * a;
  return 2.0 * a2 - 1.05 * a2 * a2 + a2 * a2 * a2 / 6.0 + a * b + b * b;
}

inline double goldstein_price(X x) {
  const double a = x[0], b = x[1];
  const double left =
      1.0 + sqr(a + b + 1.0) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
  const double right = 30.0 + sqr(2.0 * a - 3.0 * b) *
                                  (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b +
                                   27.0 * b * b);
  return left * right;
}

inline double schaffer2(X x) {
  const double a2 = x[0] * x[0], b2 = x[1] * x[1];
  return 0.5 + (sqr(std::sin(a2 - b2)) - 0.5) / sqr(1.0 + 0.001 * (a2 + b2));
}

// sum of x^2 - 10 cos(2 pi x) + 10, one term per coordinate
inline double rastrigin_terms(X x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
  return s;
}

inline double easom(X x) {
  return -std::cos(x[0]) * std::cos(x[1]) * std::exp(-sqr(x[0] - pi) - sqr(x[1] - pi));
}

inline double sum_of_powers(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]), static_cast<double>(i + 2));
  return s;
}

// 10d + sum of x^2 - 10 cos(2 pi x)
inline double rastrigin(X x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v);
  return 10.0 * static_cast<double>(x.size()) + s;
}

inline double sum_squares(X x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * x[i] * x[i];
  return s;
}

inline double griewank(X x) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000.0 - p + 1.0;
}

inline double rotated_hyper_ellipsoid(X x) {
  double s = 0.0, prefix = 0.0;
  for (double v : x) {
    prefix += v * v;
    s += prefix;
  }
  return s;
}

inline double bohachevsky1(X x) {
  return x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * std::cos(3.0 * pi * x[0]) -
         0.4 * std::cos(4.0 * pi * x[1]) + 0.7;
}

inline double bohachevsky2(X x) {
  return x[0] * x[0] + 2.0 * x[1] * x[1] -
         0.3 * std::cos(3.0 * pi * x[0]) * std::cos(4.0 * pi * x[1]) + 0.3;
}

inline double bohachevsky3(X x) {
  return x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * std::cos(3.0 * pi * x[0] + 4.0 * pi * x[1]) + 0.3;
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace detail

inline const std::vector<FunctionInfo>& function_registry() { return detail::registry(); }

inline std::vector<std::string> function_ids() {
  std::vector<std::string> ids;
  for (const auto& info : detail::registry()) ids.push_back(info.id);
  return ids;
}

/// Looks up a registry entry by id ("f7", case-insensitive) or full name.
inline const FunctionInfo& function_info(std::string_view key) {
  const std::string k = detail::lower(key);
  for (const auto& info : detail::registry()) {
    if (detail::lower(info.id) == k || detail::lower(info.name) == k) return info;
  }
  std::string valid;
  for (const auto& info : detail::registry()) valid += (valid.empty() ? "" : ", ") + info.id;
  throw std::invalid_argument("unknown function '" + std::string(key) + "'; valid ids: " + valid);
}

inline std::size_t default_dimension(const FunctionInfo& info) {
  return info.fixed_dimension ? info.fixed_dimension : 2;
}

/// Builds a benchmark objective. Functions with a fixed dimension reject any
/// other override.
inline ObjectiveFunction make_function(std::string_view key,
                                       std::optional<std::size_t> dimension = std::nullopt) {
  using namespace detail;
  const FunctionInfo& info = function_info(key);
  const std::size_t d = dimension.value_or(default_dimension(info));
  if (info.fixed_dimension && d != info.fixed_dimension) {
    throw std::invalid_argument(info.id + " is defined only for d = " +
                                std::to_string(info.fixed_dimension));
  }
  if (d < info.min_dimension) {
    throw std::invalid_argument(info.id + " needs d >= " + std::to_string(info.min_dimension));
  }

  double (*formula)(X) = nullptr;
  Point optimum(d, 0.0);
  const int n = std::stoi(info.id.substr(1));
  switch (n) {
    case 1: formula = sphere; break;
    case 2: formula = schwefel_1_2; break;
    case 3: formula = rosenbrock; optimum.assign(d, 1.0); break;
    case 4: formula = quartic; break;
    case 5: formula = drop_wave; break;
    case 6: formula = levy13; optimum = {1.0, 1.0}; break;
    case 7: formula = matyas; break;
    case 8: formula = three_hump_camel; break;
    case 9: formula = goldstein_price; optimum = {0.0, -1.0}; break;
    case 10: formula = schaffer2; break;
    case 11: formula = rastrigin_terms; break;
    case 12: formula = easom; optimum = {pi, pi}; break;
    case 13: formula = sum_of_powers; break;
    case 14: formula = rastrigin; break;
    case 15: formula = sum_squares; break;
    case 16: formula = griewank; break;
    case 17: formula = rotated_hyper_ellipsoid; break;
    case 18: formula = bohachevsky1; break;
    case 19: formula = bohachevsky2; break;
    case 20: formula = bohachevsky3; break;
    default: throw std::logic_error("registry entry without formula");
  }

  Evaluator evaluator;
  if (info.deterministic) {
    evaluator = [formula](X x, const NoiseSource&) { return formula(x); };
  } else {
    evaluator = [formula](X x, const NoiseSource& noise) { return formula(x) + noise.uniform(x); };
  }
  return ObjectiveFunction(info.id, info.name, SearchDomain::uniform(d, info.halfwidth),
                           info.optimum_value, std::move(optimum), info.deterministic,
                           std::move(evaluator));
}

}  // namespace gbo
