#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gbo/objective.hpp"

namespace gbo {

struct OracleResult {
  double value;
  Point point;
};

namespace detail {

// Grid coordinates along one axis: 0, ±step, ±2 step, ... plus both ends.
inline std::vector<double> axis_grid(double halfwidth, double step) {
  std::vector<double> g{0.0};
  for (long k = 1;; ++k) {
    const double v = static_cast<double>(k) * step;
    if (v >= halfwidth) break;
    g.push_back(v);
    g.push_back(-v);
  }
  g.push_back(halfwidth);
  g.push_back(-halfwidth);
  std::sort(g.begin(), g.end());
  return g;
}

struct Candidate {
  double value;
  Point point;
};

}  // namespace detail

/// Brute-force minimum of a deterministic objective with d <= 2: a full grid
/// scan at spacing `step`, then repeated zooming around the best cells.
/// Independent of the optimizers; used to check them.
inline OracleResult oracle_minimum(const ObjectiveFunction& f, double step,
                                   std::size_t refine_cells = 16) {
  if (!f.deterministic()) throw std::invalid_argument("oracle needs a deterministic objective");
  const std::size_t d = f.dimension();
  if (d > 2) throw std::invalid_argument("oracle grid scan is limited to d <= 2");
  if (!(step > 0.0)) throw std::invalid_argument("oracle step must be positive");

  std::vector<std::vector<double>> axes;
  for (std::size_t i = 0; i < d; ++i) axes.push_back(detail::axis_grid(f.domain().halfwidth(i), step));

  std::vector<detail::Candidate> cells;
  auto consider = [&](const Point& q) {
    const double v = f(q);
    if (std::isfinite(v)) cells.push_back({v, q});
  };
  if (d == 1) {
    for (double x : axes[0]) consider({x});
  } else {
    for (double x : axes[0])
      for (double y : axes[1]) consider({x, y});
  }
  const std::size_t keep = std::min(refine_cells, cells.size());
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(keep), cells.end(),
                    [](const auto& a, const auto& b) { return a.value < b.value; });
  cells.resize(keep);

  // Zoom: 21 samples per axis over [best - h, best + h], h shrinking 10x.
  detail::Candidate best = cells.front();
  for (auto cell : cells) {
    for (double h = step; h > 1e-13; h /= 10.0) {
      detail::Candidate local = cell;
      const int n = 10;
      auto sample = [&](const Point& q) {
        if (!f.domain().contains(q)) return;
        const double v = f(q);
        if (std::isfinite(v) && v < local.value) local = {v, q};
      };
      if (d == 1) {
        for (int i = -n; i <= n; ++i) sample({cell.point[0] + h * i / n});
      } else {
        for (int i = -n; i <= n; ++i)
          for (int j = -n; j <= n; ++j)
            sample({cell.point[0] + h * i / n, cell.point[1] + h * j / n});
      }
      cell = local;
    }
    if (cell.value < best.value) best = cell;
  }
  return {best.value, best.point};
}

}  // namespace gbo
