#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbo {

using Point = std::vector<double>;

/// Axis-aligned box [-a_i, a_i] per coordinate.
class SearchDomain {
 public:
  SearchDomain() = default;

  explicit SearchDomain(std::vector<double> halfwidths)
      : halfwidths_(std::move(halfwidths)) {
    if (halfwidths_.empty()) {
      throw std::invalid_argument("search domain needs at least one axis");
    }
    for (double a : halfwidths_) {
      if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("search domain halfwidths must be finite and positive");
      }
    }
  }

  static SearchDomain uniform(std::size_t dimension, double halfwidth) {
    return SearchDomain(std::vector<double>(dimension, halfwidth));
  }

  std::size_t dimension() const noexcept { return halfwidths_.size(); }
  std::span<const double> halfwidths() const noexcept { return halfwidths_; }
  double halfwidth(std::size_t axis) const { return halfwidths_.at(axis); }

  bool contains(std::span<const double> p) const noexcept {
    if (p.size() != halfwidths_.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < -halfwidths_[i] || p[i] > halfwidths_[i]) return false;
    }
    return true;
  }

  Point clamp(std::span<const double> p) const {
    Point out(p.begin(), p.end());
    for (std::size_t i = 0; i < out.size() && i < halfwidths_.size(); ++i) {
      if (out[i] < -halfwidths_[i]) out[i] = -halfwidths_[i];
      else if (out[i] > halfwidths_[i]) out[i] = halfwidths_[i];
    }
    return out;
  }

  bool operator==(const SearchDomain&) const = default;

 private:
  std::vector<double> halfwidths_;
};

/// A candidate region of the solution space: a hypersphere at some
/// granularity. `depth` counts how many splits produced it.
struct GranularBall {
  Point center;
  double radius = 0.0;
  unsigned depth = 0;

  std::size_t dimension() const noexcept { return center.size(); }
  bool operator==(const GranularBall&) const = default;
};

inline void validate(const GranularBall& ball) {
  if (ball.center.empty()) throw std::invalid_argument("granular ball has no coordinates");
  if (!(ball.radius > 0.0) || !std::isfinite(ball.radius)) {
    throw std::invalid_argument("granular ball radius must be finite and positive");
  }
  for (double c : ball.center) {
    if (!std::isfinite(c)) throw std::invalid_argument("granular ball center must be finite");
  }
}

/// The ball centred at the origin whose radius is the Euclidean norm of the
/// halfwidths, so it reaches every corner of the box.
inline GranularBall initial_ball(const SearchDomain& domain) {
  if (domain.dimension() == 0) throw std::invalid_argument("empty search domain");
  double sum = 0.0;
  for (double a : domain.halfwidths()) sum += a * a;
  return GranularBall{Point(domain.dimension(), 0.0), std::sqrt(sum), 0};
}

/// Visits the 2d axis points of the sphere of `radius` around `center` in
/// axis-major order, + before -. The callback receives a scratch point that
/// is only valid for the duration of the call.
template <class Visitor>
void for_each_boundary_point(std::span<const double> center, double radius, Visitor&& visit) {
  Point scratch(center.begin(), center.end());
  for (std::size_t axis = 0; axis < scratch.size(); ++axis) {
    const double c = center[axis];
    scratch[axis] = c + radius;
    visit(std::as_const(scratch));
    scratch[axis] = c - radius;
    visit(std::as_const(scratch));
    scratch[axis] = c;
  }
}

inline std::vector<Point> boundary_points(const GranularBall& ball) {
  validate(ball);
  std::vector<Point> points;
  points.reserve(2 * ball.dimension());
  for_each_boundary_point(ball.center, ball.radius,
                          [&](const Point& p) { points.push_back(p); });
  return points;
}

/// Splits a ball into 2d half-radius balls centred halfway between the
/// centre and each boundary point. Same ordering as boundary_points.
inline std::vector<GranularBall> sub_balls(const GranularBall& ball) {
  validate(ball);
  const double half = ball.radius / 2.0;
  std::vector<GranularBall> out;
  out.reserve(2 * ball.dimension());
  for (std::size_t axis = 0; axis < ball.dimension(); ++axis) {
    for (double sign : {1.0, -1.0}) {
      GranularBall sub{ball.center, half, ball.depth + 1};
      // (c + (c + s*r)) / 2 is not always bit-identical to c + s*r/2; the
      // latter keeps centres on the grid reached by exact halving.
      sub.center[axis] = ball.center[axis] + sign * half;
      out.push_back(std::move(sub));
    }
  }
  return out;
}

/// Same centre, different radius.
inline GranularBall concentric(const GranularBall& ball, double radius) {
  return GranularBall{ball.center, radius, ball.depth};
}

}  // namespace gbo
