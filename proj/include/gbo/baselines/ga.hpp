#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gbo/baselines/common.hpp"

namespace gbo::baselines {

struct GaConfig {
  std::size_t size_pop = 50;
  std::size_t max_iter = 200;
  double prob_mut = 0.001;  // per-bit flip probability
  double precision = 1e-7;  // target resolution of each decoded variable
  Bounds bounds;
  std::uint64_t seed = 0;

  void validate() const {
    if (size_pop < 2) throw std::invalid_argument("GA size_pop must be >= 2");
    if (max_iter < 1) throw std::invalid_argument("GA max_iter must be >= 1");
    if (!(precision > 0.0)) throw std::invalid_argument("GA precision must be positive");
    if (prob_mut < 0.0 || prob_mut > 1.0) throw std::invalid_argument("GA prob_mut must be in [0, 1]");
  }
  bool operator==(const GaConfig&) const = default;
};

/// Binary-coded genetic algorithm: each variable is an n-bit unsigned
/// integer with n chosen so the decoded step is at most `precision`.
/// Tournament selection (size 3), two-point crossover, per-bit mutation and
/// one elite carried over each generation.
inline RunRecord ga_optimize(const ObjectiveFunction& f, const GaConfig& config) {
  config.validate();
  const Bounds b = detail::resolve_bounds(f, config.bounds);
  const std::size_t d = f.dimension(), n = config.size_pop;
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  detail::Tracker eval(f, config.seed);

  std::vector<unsigned> bits(d);
  std::size_t chrom_len = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const double levels = (b.ub[i] - b.lb[i]) / config.precision + 1.0;
    bits[i] = static_cast<unsigned>(std::clamp(std::ceil(std::log2(levels)), 1.0, 62.0));
    chrom_len += bits[i];
  }
  using Chromosome = std::vector<std::uint8_t>;

  std::vector<double> x(d);
  auto decode = [&](const Chromosome& c) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < d; ++i) {
      std::uint64_t v = 0;
      for (unsigned k = 0; k < bits[i]; ++k) v = (v << 1) | c[pos++];
      const double top = std::ldexp(1.0, static_cast<int>(bits[i])) - 1.0;
      x[i] = b.lb[i] + (b.ub[i] - b.lb[i]) * (static_cast<double>(v) / top);
    }
    return x;
  };

  std::vector<Chromosome> pop(n, Chromosome(chrom_len));
  for (auto& c : pop)
    for (auto& g : c) g = unit(rng) < 0.5;
  std::vector<double> fit(n);
  for (std::size_t p = 0; p < n; ++p) fit[p] = eval(decode(pop[p]));
  eval.end_iteration(n);

  std::uniform_int_distribution<std::size_t> pick(0, n - 1), cut(0, chrom_len);
  auto tournament = [&]() -> const Chromosome& {
    std::size_t best = pick(rng);
    for (int k = 1; k < 3; ++k) {
      const std::size_t c = pick(rng);
      if (fit[c] < fit[best]) best = c;
    }
    return pop[best];
  };

  for (std::size_t gen = 1; gen < config.max_iter; ++gen) {
    const std::size_t elite =
        static_cast<std::size_t>(std::min_element(fit.begin(), fit.end()) - fit.begin());
    std::vector<Chromosome> next;
    next.reserve(n);
    next.push_back(pop[elite]);
    while (next.size() < n) {
      Chromosome a = tournament(), c = tournament();
      std::size_t lo = cut(rng), hi = cut(rng);
      if (lo > hi) std::swap(lo, hi);
      for (std::size_t k = lo; k < hi; ++k) std::swap(a[k], c[k]);
      for (Chromosome* child : {&a, &c}) {
        for (auto& g : *child)
          if (unit(rng) < config.prob_mut) g ^= 1u;
        if (next.size() < n) next.push_back(std::move(*child));
      }
    }
    std::vector<double> next_fit(n);
    next_fit[0] = fit[elite];
    for (std::size_t p = 1; p < n; ++p) next_fit[p] = eval(decode(next[p]));
    pop = std::move(next);
    fit = std::move(next_fit);
    eval.end_iteration(n);
  }
  return eval.finish();
}

}  // namespace gbo::baselines
