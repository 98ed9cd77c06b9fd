#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gbo/baselines/common.hpp"

namespace gbo::baselines {

struct SaConfig {
  std::vector<double> x0;  // empty: origin
  double T_max = 100.0;
  double T_min = 1e-7;
  std::size_t L = 300;  // chain length per temperature
  std::size_t max_stay_counter = 150;
  double cooling = 0.9;  // geometric factor per temperature level
  Bounds bounds;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(T_max > 0.0) || !(T_min > 0.0) || T_min > T_max) {
      throw std::invalid_argument("SA needs 0 < T_min <= T_max");
    }
    if (L < 1) throw std::invalid_argument("SA chain length L must be >= 1");
    if (max_stay_counter < 1) throw std::invalid_argument("SA max_stay_counter must be >= 1");
    if (!(cooling > 0.0 && cooling < 1.0)) throw std::invalid_argument("SA cooling must be in (0, 1)");
  }
  bool operator==(const SaConfig&) const = default;
};

/// Simulated annealing with geometric cooling from T_max down to T_min.
/// Moves use a temperature-scaled heavy-tailed step per coordinate
/// (Ingber's fast-annealing generator) on the relative temperature
/// T / T_max, so late chains search at a fine scale. Stops early once the
/// best value has not improved for max_stay_counter temperature levels.
inline RunRecord sa_optimize(const ObjectiveFunction& f, const SaConfig& config) {
  config.validate();
  const Bounds b = detail::resolve_bounds(f, config.bounds);
  const std::size_t d = f.dimension();
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  detail::Tracker eval(f, config.seed);

  std::vector<double> x = config.x0.empty() ? std::vector<double>(d, 0.0) : config.x0;
  if (x.size() != d) throw std::invalid_argument("SA x0 dimension does not match objective");
  detail::clip(x, b);
  double y = eval(x);
  double best = y;
  std::size_t stay = 0;

  std::vector<double> cand(d);
  for (double T = config.T_max;; T *= config.cooling) {
    const double rel = T / config.T_max;
    for (std::size_t k = 0; k < config.L; ++k) {
      for (std::size_t i = 0; i < d; ++i) {
        const double u = 2.0 * unit(rng) - 1.0;
        const double step = std::copysign(rel * (std::pow(1.0 + 1.0 / rel, std::abs(u)) - 1.0), u);
        cand[i] = x[i] + step * (b.ub[i] - b.lb[i]);
      }
      detail::clip(cand, b);
      const double yc = eval(cand);
      if (yc < y || unit(rng) < std::exp(-(yc - y) / T)) {
        x = cand;
        y = yc;
      }
    }
    eval.end_iteration(config.L);
    const double now = eval.best();
    if (now < best) {
      best = now;
      stay = 0;
    } else if (++stay >= config.max_stay_counter) {
      break;
    }
    if (T * config.cooling < config.T_min) break;
  }
  return eval.finish();
}

}  // namespace gbo::baselines
