#pragma once

// Independent reference computations used only by tests. Nothing here shares
// code with the library beyond the Grid accessors.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "gridbench/grid.hpp"

namespace oracle {

// Exhaustive Bellman-Ford relaxation: every cell relaxes against its 3x3
// neighbourhood until nothing changes. Movement rules are re-derived here
// rather than taken from neighbors8.
inline std::vector<double> distances_from(const gridbench::Grid& grid, gridbench::GridCoord source,
                                          bool corner_cutting = false) {
  const int w = grid.width(), h = grid.height();
  const double inf = gridbench::kInfinity;
  std::vector<double> d(static_cast<std::size_t>(w) * h, inf);
  auto free = [&](int x, int y) { return x >= 0 && y >= 0 && x < w && y < h && grid.is_traversable({x, y}); };
  auto at = [&](int x, int y) -> double& { return d[static_cast<std::size_t>(y) * w + x]; };
  at(source.x, source.y) = 0.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (!free(x, y)) continue;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if ((dx == 0 && dy == 0) || !free(x + dx, y + dy)) continue;
            const bool diagonal = dx != 0 && dy != 0;
            if (diagonal && !corner_cutting && (!free(x + dx, y) || !free(x, y + dy))) continue;
            const double via = at(x + dx, y + dy) + (diagonal ? std::sqrt(2.0) : 1.0);
            if (via < at(x, y) - 1e-12) {
              at(x, y) = via;
              changed = true;
            }
          }
        }
      }
    }
  }
  return d;
}

inline double shortest_cost(const gridbench::Grid& grid, gridbench::GridCoord from, gridbench::GridCoord to,
                            bool corner_cutting = false) {
  const auto d = distances_from(grid, from, corner_cutting);
  return d[static_cast<std::size_t>(to.y) * grid.width() + to.x];
}

inline double shortest_cost(const gridbench::Grid& grid, bool corner_cutting = false) {
  return shortest_cost(grid, grid.start(), grid.goal(), corner_cutting);
}

struct TwoPass {
  double mean;
  double stddev;
};

inline TwoPass two_pass(std::span<const double> xs) {
  double sum = 0.0;
  for (const double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (const double x : xs) ss += (x - mean) * (x - mean);
  const double sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
  return {mean, sd};
}

// Average ranks (ties share the mean rank), then Pearson on the ranks.
inline double spearman(std::span<const double> a, std::span<const double> b) {
  auto ranks = [](std::span<const double> v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      double less = 0, equal = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] < v[i]) ++less;
        else if (v[j] == v[i]) ++equal;
      }
      r[i] = less + (equal + 1.0) / 2.0;
    }
    return r;
  };
  const auto ra = ranks(a), rb = ranks(b);
  const auto ma = two_pass(ra).mean, mb = two_pass(rb).mean;
  double num = 0, da = 0, db = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    num += (ra[i] - ma) * (rb[i] - mb);
    da += (ra[i] - ma) * (ra[i] - ma);
    db += (rb[i] - mb) * (rb[i] - mb);
  }
  return (da == 0 || db == 0) ? 0.0 : num / std::sqrt(da * db);
}

}  // namespace oracle
