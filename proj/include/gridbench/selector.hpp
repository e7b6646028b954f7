#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gridbench/grid.hpp"
#include "gridbench/metrics.hpp"
#include "gridbench/search.hpp"

namespace gridbench {

enum class Priority { Memory, PathCost, SolvingTime };

std::string_view to_string(Priority p);  // "memory", "pathcost", "solvingtime"

// Case-insensitive; '_', '-' and spaces are ignored, so "Path_Cost" and
// "solving-time" are accepted. Throws InvalidPriorityError.
Priority parse_priority(std::string_view text);

// The metric a priority asks to minimise.
Metric priority_metric(Priority p);

inline constexpr double kDefaultDistanceThreshold = 140.0;

struct SelectionRequest {
  GridCoord start;
  GridCoord goal;
  double distance_threshold = kDefaultDistanceThreshold;
  Priority priority = Priority::Memory;

  // Only start and goal are read from the grid.
  static SelectionRequest for_grid(const Grid& grid, Priority priority,
                                   double distance_threshold = kDefaultDistanceThreshold);
};

double compute_euclidean_distance(GridCoord start, GridCoord goal);

// Memory or path cost -> D* Lite. Solving time -> RTAA* when the start-goal
// distance is at least the threshold, ARA* otherwise.
AlgorithmId select_algorithm(const SelectionRequest& req);

// RTAA*, ARA* and D* Lite.
std::span<const AlgorithmId> selection_candidates();

struct CandidateResult {
  AlgorithmId algorithm = AlgorithmId::AStarOracle;
  MetricStats stats;
  bool best_for_priority = false;
};

struct SelectionEvaluation {
  SelectionRequest request;
  AlgorithmId selected = AlgorithmId::AStarOracle;
  double sg_distance = 0.0;
  std::vector<CandidateResult> candidates;  // raw per-candidate metrics
  bool selected_is_best = false;
};

// Benchmarks every candidate and checks whether the selector's choice has the
// best mean value of the priority metric. Values are compared at the
// three-decimal precision they are reported with, so ties count as best.
SelectionEvaluation evaluate_selection(const Grid& grid, const SelectionRequest& req,
                                       std::span<const AlgorithmId> candidates,
                                       const SolverParams& params = {}, int reps = 100);

}  // namespace gridbench
