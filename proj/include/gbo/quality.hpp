#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gbo/ball.hpp"
#include "gbo/objective.hpp"
#include "gbo/primes.hpp"

namespace gbo {

/// What to do with boundary points that fall outside the box.
enum class OutOfBoundsPolicy { kClamp, kEvaluateRaw };

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memo of objective values keyed by the exact bit pattern of each
/// coordinate. Internally synchronized; size() is the number of distinct
/// points ever sent to the objective.
class EvaluationCache {
 public:
  std::optional<double> find(std::span<const double> point) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key_of(point));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  /// Stores `value` unless the point is already present; returns the value
  /// of record.
  double insert(std::span<const double> point, double value) {
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key_of(point), value).first->second;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

  /// Smallest stored value among points inside `domain`.
  std::optional<double> min_value(const SearchDomain& domain) const {
    std::lock_guard lock(mutex_);
    std::optional<double> best;
    Point p;
    for (const auto& [key, value] : table_) {
      p.resize(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) p[i] = std::bit_cast<double>(key[i]);
      if (domain.contains(p) && (!best || value < *best)) best = value;
    }
    return best;
  }

 private:
  using Key = std::vector<std::uint64_t>;

  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ull;
      for (std::uint64_t w : k) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

  static Key key_of(std::span<const double> point) {
    Key k(point.size());
    // signed zeros collapse to +0.0
    for (std::size_t i = 0; i < point.size(); ++i) k[i] = std::bit_cast<std::uint64_t>(point[i] + 0.0);
    return k;
  }

  mutable std::mutex mutex_;
  std::unordered_map<Key, double, KeyHash> table_;
};

/// Everything a ball evaluation needs besides the ball itself.
struct EvaluationContext {
  const ObjectiveFunction& objective;
  EvaluationCache& cache;
  OutOfBoundsPolicy policy = OutOfBoundsPolicy::kClamp;
  NoiseSource noise{};
};

/// Applies the out-of-bounds policy, then returns the memoized objective
/// value, evaluating the objective only on a cache miss. `adjusted` receives
/// the point actually evaluated when non-null.
inline double evaluate_cached(std::span<const double> point, const EvaluationContext& ctx,
                              Point* adjusted = nullptr) {
  const ObjectiveFunction& f = ctx.objective;
  if (point.size() != f.dimension()) {
    throw std::invalid_argument("point dimension does not match objective " + f.id());
  }
  Point p = ctx.policy == OutOfBoundsPolicy::kClamp ? f.domain().clamp(point)
                                                    : Point(point.begin(), point.end());
  for (double& x : p) x += 0.0;
  double value;
  if (auto hit = ctx.cache.find(p)) {
    value = *hit;
  } else {
    value = f(p, ctx.noise);
    if (!std::isfinite(value)) {
      throw EvaluationError("objective " + f.id() + " returned a non-finite value");
    }
    value = ctx.cache.insert(p, value);
  }
  if (adjusted) *adjusted = std::move(p);
  return value;
}

/// Quality of a ball: the smallest objective value over its boundary points.
struct BallValue {
  double value = 0.0;
  /// First boundary point attaining `value`, after the out-of-bounds policy.
  Point witness;
  /// Radius of the concentric shell the witness lies on.
  double shell_radius = 0.0;
  /// Best boundary point inside the domain. Same as value/witness under
  /// kClamp; under kEvaluateRaw, infinity when every point was outside.
  double feasible_value = std::numeric_limits<double>::infinity();
  Point feasible_witness;

  bool operator==(const BallValue&) const = default;
};

namespace detail {

// Folds the 2d boundary points of one shell into `best`; earlier points win
// ties.
inline void scan_shell(std::span<const double> center, double radius,
                       const EvaluationContext& ctx, std::optional<BallValue>& best) {
  for_each_boundary_point(center, radius, [&](const Point& p) {
    Point adjusted;
    const double v = evaluate_cached(p, ctx, &adjusted);
    if (!best) best = BallValue{};
    const bool feasible = ctx.policy == OutOfBoundsPolicy::kClamp ||
                          ctx.objective.domain().contains(adjusted);
    if (feasible && v < best->feasible_value) {
      best->feasible_value = v;
      best->feasible_witness = adjusted;
    }
    if (best->witness.empty() || v < best->value) {
      best->value = v;
      best->witness = std::move(adjusted);
      best->shell_radius = radius;
    }
  });
}

inline void check_dimension(const GranularBall& ball, const EvaluationContext& ctx) {
  validate(ball);
  if (ball.dimension() != ctx.objective.dimension()) {
    throw std::invalid_argument("ball dimension does not match objective " + ctx.objective.id());
  }
}

}  // namespace detail

inline BallValue ball_value(const GranularBall& ball, const EvaluationContext& ctx) {
  detail::check_dimension(ball, ctx);
  std::optional<BallValue> best;
  detail::scan_shell(ball.center, ball.radius, ctx, best);
  return *best;
}

/// Refined quality: the minimum of the ball's own shell and every
/// concentric shell with a prime radius below the ball's radius. Shells
/// are visited smallest first, the ball's own radius last, so ties go to
/// the innermost shell.
inline BallValue improved_ball_value(const GranularBall& ball, const EvaluationContext& ctx,
                                     PrimeTable& primes) {
  detail::check_dimension(ball, ctx);
  std::optional<BallValue> best;
  const std::size_t n = primes.count_below(ball.radius);
  for (std::size_t k = 0; k < n; ++k) {
    detail::scan_shell(ball.center, static_cast<double>(primes.primes()[k]), ctx, best);
  }
  detail::scan_shell(ball.center, ball.radius, ctx, best);
  return *best;
}

inline BallValue improved_ball_value(const GranularBall& ball, const EvaluationContext& ctx) {
  PrimeTable primes;
  return improved_ball_value(ball, ctx, primes);
}

}  // namespace gbo
