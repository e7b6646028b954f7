#include "gridbench/selector.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>

#include "gridbench/errors.hpp"

namespace gridbench {

namespace {

constexpr std::array<AlgorithmId, 3> kCandidates = {AlgorithmId::RtaaStar, AlgorithmId::AraStar,
                                                    AlgorithmId::DStarLite};

double reported(double v) { return std::round(v * 1000.0); }

}  // namespace

std::string_view to_string(Priority p) {
  switch (p) {
    case Priority::Memory: return "memory";
    case Priority::PathCost: return "pathcost";
    case Priority::SolvingTime: return "solvingtime";
  }
  return "?";
}

Priority parse_priority(std::string_view text) {
  std::string key;
  for (const char ch : text) {
    if (ch == '_' || ch == '-' || ch == ' ') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  for (const Priority p : {Priority::Memory, Priority::PathCost, Priority::SolvingTime})
    if (key == to_string(p)) return p;
  throw InvalidPriorityError("unknown priority '" + std::string(text) +
                             "' (expected memory, pathcost or solvingtime)");
}

Metric priority_metric(Priority p) {
  switch (p) {
    case Priority::Memory: return Metric::MemoryKb;
    case Priority::PathCost: return Metric::PathCost;
    case Priority::SolvingTime: return Metric::SolveTimeMs;
  }
  return Metric::SolveTimeMs;
}

SelectionRequest SelectionRequest::for_grid(const Grid& grid, Priority priority, double distance_threshold) {
  return {grid.start(), grid.goal(), distance_threshold, priority};
}

double compute_euclidean_distance(GridCoord start, GridCoord goal) { return euclidean_heuristic(start, goal); }

AlgorithmId select_algorithm(const SelectionRequest& req) {
  if (!(req.distance_threshold > 0.0))
    throw InvalidConfigError("distance threshold must be > 0, got " + std::to_string(req.distance_threshold));
  switch (req.priority) {
    case Priority::Memory:
    case Priority::PathCost:
      return AlgorithmId::DStarLite;
    case Priority::SolvingTime:
      return compute_euclidean_distance(req.start, req.goal) >= req.distance_threshold ? AlgorithmId::RtaaStar
                                                                                         : AlgorithmId::AraStar;
  }
  throw InvalidPriorityError("unhandled priority value");
}

std::span<const AlgorithmId> selection_candidates() { return kCandidates; }

SelectionEvaluation evaluate_selection(const Grid& grid, const SelectionRequest& req,
                                       std::span<const AlgorithmId> candidates, const SolverParams& params,
                                       int reps) {
  if (candidates.empty()) throw InvalidConfigError("candidate list is empty");
  SelectionEvaluation eval;
  eval.request = req;
  eval.selected = select_algorithm(req);
  eval.sg_distance = compute_euclidean_distance(req.start, req.goal);
  if (std::find(candidates.begin(), candidates.end(), eval.selected) == candidates.end())
    throw InvalidConfigError("selected algorithm " + std::string(to_string(eval.selected)) +
                             " is not among the candidates");

  const Metric metric = priority_metric(req.priority);
  for (const AlgorithmId algo : candidates)
    eval.candidates.push_back({algo, run_repetitions(grid, algo, params, reps), false});

  double best = reported(eval.candidates.front().stats[metric].mean);
  for (const auto& c : eval.candidates) best = std::min(best, reported(c.stats[metric].mean));
  for (auto& c : eval.candidates) {
    c.best_for_priority = reported(c.stats[metric].mean) <= best;
    if (c.algorithm == eval.selected) eval.selected_is_best = c.best_for_priority;
  }
  return eval;
}

}  // namespace gridbench
