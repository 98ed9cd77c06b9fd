#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gbo/baselines/common.hpp"

namespace gbo::baselines {

struct DeConfig {
  std::size_t size_pop = 50;
  std::size_t max_iter = 200;
  double prob_mut = 0.3;  // binomial crossover rate
  double F = 0.5;         // differential weight
  Bounds bounds;
  std::uint64_t seed = 0;

  void validate() const {
    if (size_pop < 4) throw std::invalid_argument("DE size_pop must be >= 4");
    if (max_iter < 1) throw std::invalid_argument("DE max_iter must be >= 1");
    if (prob_mut < 0.0 || prob_mut > 1.0) throw std::invalid_argument("DE prob_mut must be in [0, 1]");
  }
  bool operator==(const DeConfig&) const = default;
};

/// DE/rand/1/bin. Generation 1 is the random initial population.
inline RunRecord de_optimize(const ObjectiveFunction& f, const DeConfig& config) {
  config.validate();
  const Bounds b = detail::resolve_bounds(f, config.bounds);
  const std::size_t d = f.dimension(), n = config.size_pop;
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1), pick_axis(0, d - 1);
  detail::Tracker eval(f, config.seed);

  std::vector<std::vector<double>> pop(n, std::vector<double>(d));
  std::vector<double> fit(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < d; ++i) pop[p][i] = b.lb[i] + (b.ub[i] - b.lb[i]) * unit(rng);
    fit[p] = eval(pop[p]);
  }
  eval.end_iteration(n);

  std::vector<double> trial(d);
  for (std::size_t gen = 1; gen < config.max_iter; ++gen) {
    for (std::size_t p = 0; p < n; ++p) {
      std::size_t r1, r2, r3;
      do r1 = pick(rng); while (r1 == p);
      do r2 = pick(rng); while (r2 == p || r2 == r1);
      do r3 = pick(rng); while (r3 == p || r3 == r1 || r3 == r2);
      const std::size_t forced = pick_axis(rng);
      for (std::size_t i = 0; i < d; ++i) {
        if (i == forced || unit(rng) < config.prob_mut) {
          double m = pop[r1][i] + config.F * (pop[r2][i] - pop[r3][i]);
          // out-of-box mutants restart uniformly inside the box
          if (m < b.lb[i] || m > b.ub[i]) m = b.lb[i] + (b.ub[i] - b.lb[i]) * unit(rng);
          trial[i] = m;
        } else {
          trial[i] = pop[p][i];
        }
      }
      const double y = eval(trial);
      if (y <= fit[p]) {
        fit[p] = y;
        pop[p] = trial;
      }
    }
    eval.end_iteration(n);
  }
  return eval.finish();
}

}  // namespace gbo::baselines
