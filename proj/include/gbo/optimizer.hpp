#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "gbo/ball.hpp"
#include "gbo/objective.hpp"
#include "gbo/primes.hpp"
#include "gbo/quality.hpp"

namespace gbo {

enum class EvaluationMode {
  kBasic,            // boundary points of the ball only
  kPrimeConcentric,  // plus concentric shells of prime radius
};

/// Which sphere a ball is split around.
enum class SplitAnchor {
  kBallRadius,    // always the ball's own radius
  kWinningShell,  // the concentric shell that produced the ball's value
};

struct GboConfig {
  EvaluationMode mode = EvaluationMode::kPrimeConcentric;
  SplitAnchor split_anchor = SplitAnchor::kWinningShell;
  OutOfBoundsPolicy oob_policy = OutOfBoundsPolicy::kClamp;
  // Runaway guards only; neither binds on the registry functions.
  std::uint64_t max_evaluations = 10'000'000;
  std::uint32_t max_rounds = 64;
  std::uint64_t noise_seed = 0;

  void validate() const {
    if (max_evaluations < 1) throw std::invalid_argument("max_evaluations must be >= 1");
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  }
  bool operator==(const GboConfig&) const = default;
};

enum class RunStatus { kConverged, kBudgetExhausted };

inline const char* to_string(RunStatus s) {
  return s == RunStatus::kConverged ? "ok" : "budget_exhausted";
}

struct RoundTrace {
  std::size_t live_balls;
  double best_so_far;
  bool operator==(const RoundTrace&) const = default;
};

/// Outcome of one optimizer run; shared by GBO and the baselines.
struct RunRecord {
  double best_value = std::numeric_limits<double>::infinity();
  Point best_point;
  std::uint64_t evaluations = 0;
  std::uint64_t rounds = 0;
  double wall_time_s = 0.0;
  std::vector<RoundTrace> round_trace;
  RunStatus status = RunStatus::kConverged;

  /// Equality ignoring wall time.
  bool same_result(const RunRecord& o) const {
    return std::bit_cast<std::uint64_t>(best_value) == std::bit_cast<std::uint64_t>(o.best_value) &&
           best_point == o.best_point && evaluations == o.evaluations && rounds == o.rounds &&
           round_trace == o.round_trace && status == o.status;
  }
};

/// A ball in the live set together with its evaluated quality.
struct LiveBall {
  GranularBall ball;
  BallValue value;
};

/// Granular-ball optimizer. Covers the box with one ball, then repeatedly
/// splits every live ball and keeps only the sub-balls whose value is
/// strictly below their parent's, until no sub-ball improves.
///
/// The step-wise interface (seed / step) exists for tracing and tests;
/// run() drives it to completion.
class GranularBallOptimizer {
 public:
  GranularBallOptimizer(const ObjectiveFunction& f, GboConfig config)
      : objective_(f),
        config_(config),
        ctx_{objective_, cache_, config.oob_policy, NoiseSource(config.noise_seed)} {
    config_.validate();
  }

  GranularBallOptimizer(const GranularBallOptimizer&) = delete;
  GranularBallOptimizer& operator=(const GranularBallOptimizer&) = delete;

  BallValue evaluate(const GranularBall& ball) {
    return config_.mode == EvaluationMode::kBasic ? ball_value(ball, ctx_)
                                                  : improved_ball_value(ball, ctx_, primes_);
  }

  /// Evaluates the initial ball and makes it the incumbent.
  std::vector<LiveBall> seed() {
    LiveBall root{initial_ball(objective_.domain()), {}};
    root.value = evaluate(root.ball);
    offer(root.value);
    return {std::move(root)};
  }

  /// One splitting round over `current`; returns the surviving sub-balls.
  /// Stops early, returning nothing, if the evaluation budget trips.
  std::vector<LiveBall> step(std::span<const LiveBall> current) {
    std::vector<LiveBall> next;
    std::unordered_set<BallKey, BallKeyHash> seen;
    for (const LiveBall& live : current) {
      offer(live.value);
      const double anchor_radius = config_.mode == EvaluationMode::kPrimeConcentric &&
                                           config_.split_anchor == SplitAnchor::kWinningShell
                                       ? live.value.shell_radius
                                       : live.ball.radius;
      for (GranularBall& sub : sub_balls(concentric(live.ball, anchor_radius))) {
        BallKey key = key_of(sub);
        if (seen.contains(key)) continue;
        BallValue v = evaluate(sub);
        offer(v);
        if (v.value < live.value.value) {
          seen.insert(std::move(key));
          next.push_back({std::move(sub), std::move(v)});
        }
      }
      if (cache_.size() >= config_.max_evaluations) {
        exhausted_ = true;
        break;
      }
    }
    ++rounds_;
    trace_.push_back({current.size(), best_value_});
    if (exhausted_) next.clear();
    return next;
  }

  RunRecord run() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<LiveBall> current = seed();
    while (!current.empty()) {
      if (rounds_ >= config_.max_rounds) {
        exhausted_ = true;
        break;
      }
      current = step(current);
    }
    RunRecord record;
    record.best_value = best_value_;
    record.best_point = best_point_;
    record.evaluations = cache_.size();
    record.rounds = rounds_;
    record.round_trace = trace_;
    record.status = exhausted_ ? RunStatus::kBudgetExhausted : RunStatus::kConverged;
    record.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
  }

  double best_value() const noexcept { return best_value_; }
  const Point& best_point() const noexcept { return best_point_; }
  const EvaluationCache& cache() const noexcept { return cache_; }
  const GboConfig& config() const noexcept { return config_; }
  bool budget_exhausted() const noexcept { return exhausted_; }

 private:
  using BallKey = std::vector<std::uint64_t>;

  struct BallKeyHash {
    std::size_t operator()(const BallKey& k) const noexcept {
      std::uint64_t h = 0x84222325cbf29ce4ull;
      for (std::uint64_t w : k) h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  static BallKey key_of(const GranularBall& b) {
    BallKey k;
    k.reserve(b.center.size() + 1);
    for (double c : b.center) k.push_back(std::bit_cast<std::uint64_t>(c + 0.0));
    k.push_back(std::bit_cast<std::uint64_t>(b.radius));
    return k;
  }

  // Incumbent update from the ball's best in-domain point.
  void offer(const BallValue& v) {
    if (v.feasible_value < best_value_) {
      best_value_ = v.feasible_value;
      best_point_ = v.feasible_witness;
    }
  }

  const ObjectiveFunction& objective_;
  GboConfig config_;
  EvaluationCache cache_;
  EvaluationContext ctx_;
  PrimeTable primes_;
  double best_value_ = std::numeric_limits<double>::infinity();
  Point best_point_;
  std::uint64_t rounds_ = 0;
  std::vector<RoundTrace> trace_;
  bool exhausted_ = false;
};

inline RunRecord gbo_optimize(const ObjectiveFunction& f, const GboConfig& config = {}) {
  GranularBallOptimizer optimizer(f, config);
  return optimizer.run();
}

}  // namespace gbo
