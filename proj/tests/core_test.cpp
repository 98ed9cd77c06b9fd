#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "gbo/ball.hpp"
#include "gbo/benchmarks.hpp"
#include "gbo/primes.hpp"
#include "gbo/quality.hpp"

namespace gbo {
namespace {

std::vector<std::uint32_t> trial_division_primes(std::uint32_t below) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; n < below; ++n) {
    bool prime = true;
    for (std::uint32_t k = 2; k * k <= n; ++k) {
      if (n % k == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

TEST(InitialBall, TwoDimensionalNorm) {
  const GranularBall b = initial_ball(SearchDomain({10.0, 10.0}));
  EXPECT_EQ(b.center, (Point{0.0, 0.0}));
  EXPECT_EQ(b.radius, std::sqrt(200.0));
  EXPECT_NEAR(b.radius, 14.1421, 1e-4);
  EXPECT_EQ(b.depth, 0u);
}

TEST(InitialBall, OneDimension) {
  const GranularBall b = initial_ball(SearchDomain({3.0}));
  EXPECT_EQ(b.center, Point{0.0});
  EXPECT_EQ(b.radius, 3.0);
}

TEST(InitialBall, ThirtyDimensionsMatchesExtendedPrecisionSum) {
  long double sum = 0.0L;
  for (int i = 0; i < 30; ++i) sum += 100.0L * 100.0L;
  const double expected = static_cast<double>(std::sqrt(sum));
  const GranularBall b = initial_ball(SearchDomain::uniform(30, 100.0));
  EXPECT_NEAR(b.radius, expected, 1e-12);
  EXPECT_NEAR(b.radius, 547.7226, 1e-4);
}

TEST(InitialBall, RejectsBadDomains) {
  EXPECT_THROW(SearchDomain(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(SearchDomain({1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(SearchDomain({-2.0}), std::invalid_argument);
  EXPECT_THROW(SearchDomain({std::numeric_limits<double>::infinity()}), std::invalid_argument);
}

TEST(BoundaryPoints, AxisMajorPlusBeforeMinus) {
  EXPECT_EQ(boundary_points({{0.0, 0.0}, 2.0}),
            (std::vector<Point>{{2, 0}, {-2, 0}, {0, 2}, {0, -2}}));
  EXPECT_EQ(boundary_points({{1.0, 1.0}, 0.5}),
            (std::vector<Point>{{1.5, 1}, {0.5, 1}, {1, 1.5}, {1, 0.5}}));
  EXPECT_EQ(boundary_points({{0.0}, 3.0}), (std::vector<Point>{{3}, {-3}}));
}

TEST(BoundaryPoints, RejectsInvalidBall) {
  EXPECT_THROW(boundary_points({{0.0}, 0.0}), std::invalid_argument);
  EXPECT_THROW(boundary_points({{}, 1.0}), std::invalid_argument);
}

TEST(SubBalls, MidpointCentersHalfRadius) {
  const auto subs = sub_balls({{0.0, 0.0}, 4.0});
  ASSERT_EQ(subs.size(), 4u);
  const std::vector<Point> centers{{2, 0}, {-2, 0}, {0, 2}, {0, -2}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(subs[i].center, centers[i]);
    EXPECT_EQ(subs[i].radius, 2.0);
    EXPECT_EQ(subs[i].depth, 1u);
  }
}

TEST(SubBalls, OffsetParent) {
  const auto subs = sub_balls({{1.0, 0.0}, 2.0, 3});
  const std::vector<Point> centers{{2, 0}, {0, 0}, {1, 1}, {1, -1}};
  ASSERT_EQ(subs.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(subs[i].center, centers[i]);
    EXPECT_EQ(subs[i].radius, 1.0);
    EXPECT_EQ(subs[i].depth, 4u);
  }
}

TEST(SubBalls, OneDimensionSplitsInTwo) {
  const auto subs = sub_balls(initial_ball(SearchDomain({3.0})));
  ASSERT_EQ(subs.size(), 2u);
  EXPECT_EQ(subs[0].center, Point{1.5});
  EXPECT_EQ(subs[1].center, Point{-1.5});
  EXPECT_EQ(subs[0].radius, 1.5);
}

TEST(Primes, Examples) {
  EXPECT_EQ(primes_below(14.1421), (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13}));
  EXPECT_TRUE(primes_below(2.0).empty());
  EXPECT_TRUE(primes_below(0.5).empty());
  EXPECT_EQ(primes_below(3.0), std::vector<std::uint32_t>{2});
  EXPECT_EQ(primes_below(30.0), trial_division_primes(30));
}

TEST(Primes, MatchTrialDivisionOracle) {
  for (std::uint32_t n : {5u, 17u, 100u, 1000u, 7919u, 7920u}) {
    EXPECT_EQ(primes_below(static_cast<double>(n)), trial_division_primes(n)) << n;
  }
  // non-integer bounds include every prime strictly below
  EXPECT_EQ(primes_below(13.0), (std::vector<std::uint32_t>{2, 3, 5, 7, 11}));
  EXPECT_EQ(primes_below(13.0000001), (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13}));
}

TEST(Primes, TableAgreesWithFreeFunction) {
  PrimeTable table;
  for (double r : {547.7, 2.0, 14.1421, 3.5, 1000.0, 30.0}) {
    const auto n = table.count_below(r);
    const std::vector<std::uint32_t> prefix(table.primes().begin(), table.primes().begin() + n);
    EXPECT_EQ(prefix, primes_below(r)) << r;
  }
}

class BallValueTest : public ::testing::Test {
 protected:
  ObjectiveFunction f1 = make_function("f1");
  ObjectiveFunction f6 = make_function("f6");
  EvaluationCache cache;
};

TEST_F(BallValueTest, SphereTiesGoToFirstPoint) {
  const EvaluationContext ctx{f1, cache};
  const BallValue v = ball_value({{0.0, 0.0}, 2.0}, ctx);
  EXPECT_EQ(v.value, 4.0);
  EXPECT_EQ(v.witness, (Point{2.0, 0.0}));
  EXPECT_EQ(v.shell_radius, 2.0);
}

TEST_F(BallValueTest, OriginOnDepthOneSubBall) {
  const EvaluationContext ctx{f1, cache};
  const double r0 = initial_ball(f1.domain()).radius;
  const BallValue v = ball_value({{r0 / 2, 0.0}, r0 / 2}, ctx);
  EXPECT_EQ(v.value, 0.0);
  EXPECT_EQ(v.witness, (Point{0.0, 0.0}));
}

TEST_F(BallValueTest, LevyResidualAtOneOne) {
  const EvaluationContext ctx{f6, cache};
  const BallValue v = ball_value({{1.0, 0.5}, 0.5}, ctx);
  EXPECT_EQ(v.witness, (Point{1.0, 1.0}));
  const double residual = std::pow(std::sin(3 * std::numbers::pi), 2);
  EXPECT_EQ(v.value, residual);
  EXPECT_NEAR(v.value, 1.35e-31, 0.005e-31);
}

TEST_F(BallValueTest, ClampedWitnessIsReported) {
  const EvaluationContext ctx{f1, cache, OutOfBoundsPolicy::kClamp};
  const BallValue v = ball_value({{50.0, 0.0}, 100.0}, ctx);
  // (150,0) clamps to (100,0) and (-50,0) is inside
  EXPECT_EQ(v.value, 2500.0);
  EXPECT_EQ(v.witness, (Point{-50.0, 0.0}));
}

TEST_F(BallValueTest, ImprovedSphereTakesSmallestShell) {
  const EvaluationContext ctx{f1, cache};
  const BallValue v = improved_ball_value({{0.0, 0.0}, std::sqrt(200.0)}, ctx);
  EXPECT_EQ(v.value, 4.0);
  EXPECT_EQ(v.witness, (Point{2.0, 0.0}));
  EXPECT_EQ(v.shell_radius, 2.0);
  EXPECT_EQ(cache.size(), 4u * 7u);
}

TEST_F(BallValueTest, ImprovedEqualsBasicWithoutPrimes) {
  const EvaluationContext ctx{f6, cache};
  for (double r : {2.0, 1.5, 0.25}) {
    const GranularBall ball{{0.3, -0.7}, r};
    EXPECT_EQ(improved_ball_value(ball, ctx), ball_value(ball, ctx)) << r;
  }
}

TEST_F(BallValueTest, ImprovedLevyIsMinimumOfTwentyEightPoints) {
  const EvaluationContext ctx{f6, cache};
  const double r0 = std::sqrt(200.0);
  double expected = std::numeric_limits<double>::infinity();
  int count = 0;
  for (double r : {2.0, 3.0, 5.0, 7.0, 11.0, 13.0, r0}) {
    for (const Point& p : {Point{r, 0}, Point{-r, 0}, Point{0, r}, Point{0, -r}}) {
      expected = std::min(expected, f6(f6.domain().clamp(p)));
      ++count;
    }
  }
  ASSERT_EQ(count, 28);
  const GranularBall ball{{0.0, 0.0}, r0};
  const BallValue improved = improved_ball_value(ball, ctx);
  EXPECT_EQ(improved.value, expected);
  EXPECT_LE(improved.value, ball_value(ball, ctx).value);
}

TEST_F(BallValueTest, DimensionMismatchThrows) {
  const EvaluationContext ctx{f1, cache};
  EXPECT_THROW(ball_value({{0.0}, 1.0}, ctx), std::invalid_argument);
}

TEST(BallValue, NonFiniteObjectiveSurfaces) {
  const auto bad = ObjectiveFunction::custom("log", SearchDomain({2.0}), [](std::span<const double> x) {
    return std::log(x[0]);
  });
  EvaluationCache cache;
  const EvaluationContext ctx{bad, cache};
  EXPECT_THROW(ball_value({{1.0}, 1.0}, ctx), EvaluationError);
}

}  // namespace
}  // namespace gbo
