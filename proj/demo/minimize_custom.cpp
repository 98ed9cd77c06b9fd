// Minimizes a user-supplied function with GBO in both evaluation modes.

#include <cstdio>
#include <span>

#include "gbo/gbo.hpp"

int main() {
  // Shifted paraboloid with its minimum -2 at (-1, 0.5).
  auto bowl = gbo::ObjectiveFunction::custom(
      "shifted_bowl", gbo::SearchDomain::uniform(2, 4.0),
      [](std::span<const double> x) {
        return (x[0] + 1) * (x[0] + 1) + (x[1] - 0.5) * (x[1] - 0.5) - 2.0;
      },
      -2.0, gbo::Point{-1.0, 0.5});

  for (auto mode : {gbo::EvaluationMode::kBasic, gbo::EvaluationMode::kPrimeConcentric}) {
    gbo::GboConfig config;
    config.mode = mode;
    const gbo::RunRecord rec = gbo::gbo_optimize(bowl, config);
    std::printf("%-6s f* = %.12g at (%.9g, %.9g), %llu evaluations, %llu rounds\n",
                mode == gbo::EvaluationMode::kBasic ? "basic" : "prime", rec.best_value,
                rec.best_point[0], rec.best_point[1],
                static_cast<unsigned long long>(rec.evaluations),
                static_cast<unsigned long long>(rec.rounds));
  }

  // Registry functions work the same way.
  const auto rastrigin = gbo::make_function("f14", 10);
  const auto rec = gbo::gbo_optimize(rastrigin);
  std::printf("f14 (d=10): f* = %g after %llu evaluations\n", rec.best_value,
              static_cast<unsigned long long>(rec.evaluations));
}
