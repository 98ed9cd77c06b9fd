#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "gbo/ball.hpp"

namespace gbo {

/// Uniform [0, 1) draws keyed by (seed, exact point). The same point under
/// the same seed always gets the same draw, so noisy objectives stay
/// consistent with memoization and reruns.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed = 0) noexcept : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  double uniform(std::span<const double> point) const noexcept {
    std::uint64_t h = mix(seed_ ^ 0x9E3779B97F4A7C15ull);
    for (double x : point) {
      // -0.0 and +0.0 are the same point
      h = mix(h ^ std::bit_cast<std::uint64_t>(x + 0.0));
    }
    return static_cast<double>(h >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) noexcept {  // splitmix64 finaliser
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
};

using Evaluator = std::function<double(std::span<const double>, const NoiseSource&)>;

/// A box-constrained objective with its known global minimum.
class ObjectiveFunction {
 public:
  ObjectiveFunction(std::string id, std::string name, SearchDomain domain, double optimum_value,
                    std::optional<Point> optimum_point, bool deterministic, Evaluator evaluator)
      : id_(std::move(id)),
        name_(std::move(name)),
        domain_(std::move(domain)),
        optimum_value_(optimum_value),
        optimum_point_(std::move(optimum_point)),
        deterministic_(deterministic),
        evaluator_(std::move(evaluator)) {
    if (!evaluator_) throw std::invalid_argument("objective needs an evaluator");
    if (optimum_point_ && optimum_point_->size() != domain_.dimension()) {
      throw std::invalid_argument("optimum point dimension does not match the domain");
    }
  }

  /// Deterministic objective from a plain callable; handy for tests and
  /// user problems.
  template <class Fn>
    requires std::is_invocable_r_v<double, Fn, std::span<const double>>
  static ObjectiveFunction custom(std::string name, SearchDomain domain, Fn fn,
                                  double optimum_value = 0.0,
                                  std::optional<Point> optimum_point = std::nullopt) {
    return ObjectiveFunction(
        name, name, std::move(domain), optimum_value, std::move(optimum_point), true,
        [fn = std::move(fn)](std::span<const double> x, const NoiseSource&) { return fn(x); });
  }

  const std::string& id() const noexcept { return id_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t dimension() const noexcept { return domain_.dimension(); }
  const SearchDomain& domain() const noexcept { return domain_; }
  double optimum_value() const noexcept { return optimum_value_; }
  const std::optional<Point>& optimum_point() const noexcept { return optimum_point_; }
  bool deterministic() const noexcept { return deterministic_; }

  double operator()(std::span<const double> x, const NoiseSource& noise = NoiseSource{}) const {
    if (x.size() != dimension()) {
      throw std::invalid_argument("point has " + std::to_string(x.size()) +
                                  " coordinates, objective " + id_ + " expects " +
                                  std::to_string(dimension()));
    }
    return evaluator_(x, noise);
  }

 private:
  std::string id_;
  std::string name_;
  SearchDomain domain_;
  double optimum_value_;
  std::optional<Point> optimum_point_;
  bool deterministic_;
  Evaluator evaluator_;
};

inline double evaluate(const ObjectiveFunction& f, std::span<const double> point,
                       const NoiseSource& noise = NoiseSource{}) {
  return f(point, noise);
}

}  // namespace gbo
