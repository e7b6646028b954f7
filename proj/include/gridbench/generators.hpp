#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gridbench/grid.hpp"

namespace gridbench {

struct RandomGridSpec {
  int n = 0;                   // grid side in cells
  double density = 0.0;        // obstacle fraction in [0, 1)
  double sg_distance = 0.0;    // target Euclidean start-goal distance
  std::uint64_t seed = 0;
  bool allow_corner_cutting = false;

  // Throws InvalidSpecError.
  void validate() const;
};

// Personalised wall grids are 31 columns by 71 rows with the start at (1,1)
// and the goal at (29,69).
inline constexpr int kWallGridWidth = 31;
inline constexpr int kWallGridHeight = 71;
inline constexpr GridCoord kWallGridStart{1, 1};
inline constexpr GridCoord kWallGridGoal{29, 69};
inline constexpr int kWallSpacing = 10;
inline constexpr int kMaxWalls = 7;

struct WallGridSpec {
  int num_walls = 0;     // [0, 7]
  int wall_length = 15;  // [1, 29]
  bool allow_corner_cutting = false;

  void validate() const;
};

// Obstacle count for a random grid: round-half-up of density * (n^2 - 2).
std::size_t obstacle_count(int n, double density);

// Accepted start-goal distance deviation from RandomGridSpec::sg_distance.
inline constexpr double kDistanceTolerance = 0.5;
inline constexpr int kMaxGenerationAttempts = 1000;

// Samples a start uniformly, a goal uniformly among cells within 0.5 of the
// target distance, then obstacle_count() obstacles uniformly without
// replacement from the remaining cells. Unsolvable draws are discarded
// wholesale; after 1000 attempts a GenerationError is thrown. The PRNG is
// std::mt19937_64 seeded with spec.seed with an explicit rejection sampler
// for bounded integers, so output is identical across platforms.
Grid generate_random_grid(const RandomGridSpec& spec);

// Grids for seeds spec.seed, spec.seed + 1, ..., spec.seed + count - 1.
std::vector<Grid> generate_instance_set(const RandomGridSpec& spec, int count);

// Wall k (1-based) fills row 10k; odd walls start at the left edge, even
// walls at the right edge.
Grid generate_wall_grid(const WallGridSpec& spec);

// Half the wall-grid width, growing by two: {15, 17, ..., 27}.
std::vector<int> wall_length_sequence();

bool is_solvable(const Grid& grid);

}  // namespace gridbench
