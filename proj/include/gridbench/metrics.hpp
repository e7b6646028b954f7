#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "gridbench/grid.hpp"
#include "gridbench/search.hpp"

namespace gridbench {

enum class Metric { PathCost, MemoryKb, SolveTimeMs };

inline constexpr std::array<Metric, 3> kAllMetrics = {Metric::PathCost, Metric::MemoryKb,
                                                      Metric::SolveTimeMs};

std::string_view to_string(Metric m);     // "path_cost", "memory_kb", "solving_time_ms"
std::string_view axis_label(Metric m);    // "Path cost", "Memory allocation (KB)", ...

struct RunMetrics {
  double path_cost = 0.0;
  double memory_kb = 0.0;  // probe high-water mark / 1024
  double solve_time_ms = 0.0;
  std::size_t expanded = 0;

  double value(Metric m) const;
};

struct AggregateStats {
  std::size_t n = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample (n - 1) deviation, 0 when n == 1
  double min = 0.0;
  double max = 0.0;
};

// Throws std::invalid_argument on an empty sample list.
AggregateStats aggregate(std::span<const double> samples);

struct MetricStats {
  AggregateStats path_cost;
  AggregateStats memory_kb;
  AggregateStats solve_time_ms;

  const AggregateStats& operator[](Metric m) const;
  AggregateStats& operator[](Metric m);
};

// One solve with a fresh probe. The monotonic clock brackets only the solve
// call. NoPathError propagates.
RunMetrics measure_run(const Grid& grid, AlgorithmId algo, const SolverParams& params);

// One discarded warm-up run, then `reps` timed runs aggregated per metric.
MetricStats run_repetitions(const Grid& grid, AlgorithmId algo, const SolverParams& params,
                            int reps = 100);

}  // namespace gridbench
