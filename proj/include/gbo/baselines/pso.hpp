#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gbo/baselines/common.hpp"

namespace gbo::baselines {

struct PsoConfig {
  std::size_t size_pop = 40;
  std::size_t max_iter = 150;
  double w = 0.8;
  double c1 = 0.5;
  double c2 = 0.5;
  Bounds bounds;
  std::uint64_t seed = 0;

  void validate() const {
    if (size_pop < 2) throw std::invalid_argument("PSO size_pop must be >= 2");
    if (max_iter < 1) throw std::invalid_argument("PSO max_iter must be >= 1");
  }
  bool operator==(const PsoConfig&) const = default;
};

/// Global-best inertia-weight particle swarm. Iteration 1 is the random
/// initial swarm; each later iteration moves every particle once, so a run
/// costs size_pop * max_iter evaluations.
inline RunRecord pso_optimize(const ObjectiveFunction& f, const PsoConfig& config) {
  config.validate();
  const Bounds b = detail::resolve_bounds(f, config.bounds);
  const std::size_t d = f.dimension(), n = config.size_pop;
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  detail::Tracker eval(f, config.seed);

  std::vector<std::vector<double>> x(n, std::vector<double>(d)), v = x;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < d; ++i) {
      const double span = b.ub[i] - b.lb[i];
      x[p][i] = b.lb[i] + span * unit(rng);
      v[p][i] = span * (2.0 * unit(rng) - 1.0);
    }
  }
  auto pbest = x;
  std::vector<double> pbest_y(n);
  std::size_t g = 0;
  for (std::size_t p = 0; p < n; ++p) {
    pbest_y[p] = eval(x[p]);
    if (pbest_y[p] < pbest_y[g]) g = p;
  }
  eval.end_iteration(n);

  for (std::size_t it = 1; it < config.max_iter; ++it) {
    const std::vector<double> gbest = pbest[g];
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t i = 0; i < d; ++i) {
        v[p][i] = config.w * v[p][i] + config.c1 * unit(rng) * (pbest[p][i] - x[p][i]) +
                  config.c2 * unit(rng) * (gbest[i] - x[p][i]);
        x[p][i] += v[p][i];
      }
      detail::clip(x[p], b);
      const double y = eval(x[p]);
      if (y < pbest_y[p]) {
        pbest_y[p] = y;
        pbest[p] = x[p];
        if (y < pbest_y[g]) g = p;
      }
    }
    eval.end_iteration(n);
  }
  return eval.finish();
}

}  // namespace gbo::baselines
