#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridbench/grid.hpp"
#include "gridbench/metrics.hpp"
#include "gridbench/search.hpp"

namespace gridbench {

inline constexpr std::string_view kCodeVersion = "gridbench 1.0.0";

enum class SweepKind { GridSize, SgDistance, Density, WallCount, WallLength };

std::string_view to_string(SweepKind kind);   // "GRID_SIZE", ...
std::string_view file_stem(SweepKind kind);   // "grid_size", ...
std::string_view axis_label(SweepKind kind);  // "Grid size", ...
std::optional<SweepKind> parse_sweep_kind(std::string_view text);

// Parameters held constant while one is varied.
struct FixedParameters {
  int size = 300;
  double density = 0.25;
  double sg_distance = 140.0;
  int num_walls = 7;     // wall-length sweep: every wall that fits
  int wall_length = 15;  // wall-count sweep: half the grid width
};

struct SweepConfig {
  SweepKind kind = SweepKind::GridSize;
  std::vector<double> values;
  FixedParameters fixed;
  std::vector<AlgorithmId> algorithms;
  int instances_per_point = 10;
  int reps = 100;
  std::uint64_t seed = 1;
  SolverParams params;
  bool allow_corner_cutting = false;
  bool parallel_pairs = false;
  bool values_are_defaults = false;  // recorded in provenance

  // Throws InvalidConfigError.
  void validate() const;
};

// Start-goal distance used when the distance is held fixed: the requested
// value, capped at half the grid diagonal so small grids stay feasible.
double effective_sg_distance(int n, double requested);

// The instance grids behind one sweep point. Wall sweeps are deterministic
// and yield a single grid.
std::vector<Grid> grids_for_point(const SweepConfig& cfg, std::size_t value_index);

struct PointDescriptor {
  std::optional<int> num_walls;
  std::optional<int> wall_length;
  std::optional<double> density;
  std::string grid_size;     // "100" or "31x71"
  double sg_distance = 0.0;  // mean realised start-goal distance
};

struct ReportRow {
  AlgorithmId algorithm = AlgorithmId::AStarOracle;
  double value = 0.0;
  PointDescriptor point;
  MetricStats stats;  // across instances, each instance contributing its mean
};

struct ExperimentReport {
  SweepConfig config;
  std::vector<ReportRow> rows;  // value-major, algorithms in config order
  std::string provenance;
};

// Generates every instance, benchmarks every algorithm on it and aggregates.
// Any generation failure aborts the sweep with an error naming the point.
ExperimentReport run_sweep(const SweepConfig& cfg);

// The five sweeps with their default value lists.
std::vector<SweepConfig> default_sweeps();

}  // namespace gridbench
