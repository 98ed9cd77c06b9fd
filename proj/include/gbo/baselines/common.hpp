#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbo/objective.hpp"
#include "gbo/optimizer.hpp"

namespace gbo::baselines {

/// Search box for a baseline. Empty bounds mean "use the objective's domain".
struct Bounds {
  std::vector<double> lb;
  std::vector<double> ub;
  bool operator==(const Bounds&) const = default;
};

namespace detail {

inline Bounds resolve_bounds(const ObjectiveFunction& f, const Bounds& b) {
  const std::size_t d = f.dimension();
  Bounds out = b;
  if (out.lb.empty()) {
    out.lb.resize(d);
    for (std::size_t i = 0; i < d; ++i) out.lb[i] = -f.domain().halfwidth(i);
  }
  if (out.ub.empty()) {
    out.ub.resize(d);
    for (std::size_t i = 0; i < d; ++i) out.ub[i] = f.domain().halfwidth(i);
  }
  if (out.lb.size() != d || out.ub.size() != d) {
    throw std::invalid_argument("bounds dimension does not match objective " + f.id());
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!(out.lb[i] < out.ub[i])) throw std::invalid_argument("bounds need lb < ub");
    const double a = f.domain().halfwidth(i);
    if (out.lb[i] < -a || out.ub[i] > a) {
      throw std::invalid_argument("bounds exceed the domain of objective " + f.id());
    }
  }
  return out;
}

inline void clip(std::span<double> x, const Bounds& b) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < b.lb[i]) x[i] = b.lb[i];
    else if (x[i] > b.ub[i]) x[i] = b.ub[i];
  }
}

/// Counts evaluations, tracks the best point seen, and applies the noise
/// source. Every baseline evaluates through one of these.
class Tracker {
 public:
  Tracker(const ObjectiveFunction& f, std::uint64_t seed)
      : f_(f), noise_(seed), start_(std::chrono::steady_clock::now()) {}

  double operator()(std::span<const double> x) {
    const double v = f_(x, noise_);
    ++record_.evaluations;
    if (v < record_.best_value) {
      record_.best_value = v;
      record_.best_point.assign(x.begin(), x.end());
    }
    return v;
  }

  void end_iteration(std::size_t population) {
    ++record_.rounds;
    record_.round_trace.push_back({population, record_.best_value});
  }

  double best() const noexcept { return record_.best_value; }

  RunRecord finish() {
    record_.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return record_;
  }

 private:
  const ObjectiveFunction& f_;
  NoiseSource noise_;
  std::chrono::steady_clock::time_point start_;
  RunRecord record_;
};

}  // namespace detail
}  // namespace gbo::baselines
