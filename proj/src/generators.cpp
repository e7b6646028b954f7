#include "gridbench/generators.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "gridbench/errors.hpp"

namespace gridbench {

namespace {

// Unbiased integer in [0, bound) from the raw engine output; the standard
// distributions are implementation-defined and would break reproducibility.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % bound;
}

}  // namespace

void RandomGridSpec::validate() const {
  if (n < 3) throw InvalidSpecError("grid side must be >= 3, got " + std::to_string(n));
  if (!(density >= 0.0 && density < 1.0))
    throw InvalidSpecError("density must lie in [0, 1), got " + std::to_string(density));
  const double max_distance = kSqrt2 * (n - 1);
  if (!(sg_distance >= 0.0 && sg_distance <= max_distance + 1e-9))
    throw InvalidSpecError("start-goal distance " + std::to_string(sg_distance) + " outside [0, " +
                           std::to_string(max_distance) + "] for n=" + std::to_string(n));
}

void WallGridSpec::validate() const {
  if (num_walls < 0 || num_walls > kMaxWalls)
    throw InvalidSpecError("number of walls must lie in [0, 7], got " + std::to_string(num_walls));
  if (wall_length < 1 || wall_length >= kWallGridWidth - 1)
    throw InvalidSpecError("wall length must lie in [1, 29], got " + std::to_string(wall_length));
}

std::size_t obstacle_count(int n, double density) {
  const double cells = static_cast<double>(n) * static_cast<double>(n) - 2.0;
  return static_cast<std::size_t>(std::floor(density * cells + 0.5));
}

Grid generate_random_grid(const RandomGridSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const auto cells = static_cast<std::uint32_t>(n * n);
  const std::size_t obstacles = obstacle_count(n, spec.density);
  if (obstacles > cells - 2u)
    throw GenerationError("density " + std::to_string(spec.density) + " leaves no room for start and goal");

  std::mt19937_64 rng(spec.seed);
  const GridOptions options{spec.allow_corner_cutting, spec.sg_distance < kDistanceTolerance};
  auto coord = [n](std::uint32_t i) { return GridCoord{static_cast<int>(i % n), static_cast<int>(i / n)}; };

  std::vector<std::uint32_t> pool(cells);
  std::vector<std::uint32_t> goals;
  std::vector<GridCoord> blocked;
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    const std::uint32_t start = static_cast<std::uint32_t>(uniform_below(rng, cells));
    const GridCoord s = coord(start);

    goals.clear();
    for (std::uint32_t i = 0; i < cells; ++i) {
      if (i == start && spec.sg_distance >= kDistanceTolerance) continue;
      if (std::abs(euclidean_heuristic(s, coord(i)) - spec.sg_distance) <= kDistanceTolerance)
        goals.push_back(i);
    }
    if (goals.empty()) continue;
    const std::uint32_t goal = goals[uniform_below(rng, goals.size())];

    // Partial Fisher-Yates over every cell except start and goal.
    pool.clear();
    for (std::uint32_t i = 0; i < cells; ++i)
      if (i != start && i != goal) pool.push_back(i);
    blocked.clear();
    for (std::size_t k = 0; k < obstacles; ++k) {
      const std::size_t j = k + uniform_below(rng, pool.size() - k);
      std::swap(pool[k], pool[j]);
      blocked.push_back(coord(pool[k]));
    }

    Grid grid(n, n, blocked, s, coord(goal), options);
    if (is_solvable(grid)) return grid;
  }
  throw GenerationError("no solvable grid for n=" + std::to_string(n) + " density=" +
                        std::to_string(spec.density) + " sg_distance=" + std::to_string(spec.sg_distance) +
                        " seed=" + std::to_string(spec.seed) + " after " +
                        std::to_string(kMaxGenerationAttempts) + " attempts");
}

std::vector<Grid> generate_instance_set(const RandomGridSpec& spec, int count) {
  if (count < 1) throw InvalidSpecError("instance count must be >= 1, got " + std::to_string(count));
  std::vector<Grid> grids;
  grids.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    RandomGridSpec instance = spec;
    instance.seed = spec.seed + static_cast<std::uint64_t>(i);
    grids.push_back(generate_random_grid(instance));
  }
  return grids;
}

Grid generate_wall_grid(const WallGridSpec& spec) {
  spec.validate();
  std::vector<GridCoord> blocked;
  blocked.reserve(static_cast<std::size_t>(spec.num_walls * spec.wall_length));
  for (int k = 1; k <= spec.num_walls; ++k) {
    const int row = kWallSpacing * k;
    const int first = (k % 2 == 1) ? 0 : kWallGridWidth - spec.wall_length;
    for (int x = first; x < first + spec.wall_length; ++x) blocked.push_back({x, row});
  }
  Grid grid(kWallGridWidth, kWallGridHeight, blocked, kWallGridStart, kWallGridGoal,
            GridOptions{spec.allow_corner_cutting, false});
  if (!is_solvable(grid))
    throw InvalidSpecError("wall configuration disconnects start and goal");
  return grid;
}

std::vector<int> wall_length_sequence() {
  std::vector<int> lengths;
  for (int i = 0; i < 7; ++i) lengths.push_back(kWallGridWidth / 2 + 2 * i);
  return lengths;
}

bool is_solvable(const Grid& grid) { return reachable(grid, grid.start(), grid.goal()); }

}  // namespace gridbench
