#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridbench/grid.hpp"
#include "gridbench/probe.hpp"

namespace gridbench {

enum class AlgorithmId {
  LrtaStar,
  RtaaStar,
  AraStar,
  LpaStar,
  DStar,
  DStarLite,
  AStarOracle,
};

// Canonical upper-case names: "LRTA_STAR", "RTAA_STAR", ..., "ASTAR_ORACLE".
std::string_view to_string(AlgorithmId id);

// Accepts the canonical names case-insensitively plus the common spellings
// "LRTA*", "D* Lite", "dstar-lite", etc.
std::optional<AlgorithmId> parse_algorithm(std::string_view text);

// Short display label ("LRTA*", "D* Lite", ...).
std::string_view display_name(AlgorithmId id);

// The six benchmarked algorithms, in reporting order.
std::span<const AlgorithmId> benchmarked_algorithms();
// The six plus the oracle.
std::span<const AlgorithmId> all_algorithms();

// Ordering among open-list entries with equal f.
enum class TieBreak { HighG, LowG };

struct SolverParams {
  int lookahead = 250;              // expansions per planning episode (LRTA*, RTAA*)
  double ara_initial_weight = 2.5;  // ARA* first inflation factor
  double ara_weight_decrement = 0.5;
  TieBreak tie_break = TieBreak::HighG;

  // Throws InvalidConfigError.
  void validate() const;
};

// One published ARA* solution.
struct AnytimeIterate {
  double weight = 1.0;
  double cost = 0.0;
  std::size_t expanded = 0;
};

struct SearchOutcome {
  std::vector<GridCoord> path;  // start ... goal; real-time solvers include revisits
  double path_cost = 0.0;
  std::size_t expanded = 0;
  std::size_t peak_memory_bytes = 0;
  double solve_time_ms = 0.0;
  std::vector<AnytimeIterate> iterations;  // ARA* only
};

// Runs the named solver. Throws NoPathError when the goal is unreachable.
// The probe sees every search-structure allocation and every expansion;
// peak_memory_bytes and expanded are copied from it.
SearchOutcome solve(const Grid& grid, AlgorithmId algo, const SolverParams& params,
                    SearchProbe& probe);
SearchOutcome solve(const Grid& grid, AlgorithmId algo, const SolverParams& params = {});

// A* with the Euclidean heuristic; the optimal reference for every check.
SearchOutcome astar_oracle(const Grid& grid, const SolverParams& params, SearchProbe& probe);

// Single-trial LRTA* with an A* lookahead of params.lookahead expansions and a
// Dijkstra-style dynamic-programming backup of h over the local search space.
// The agent executes one move per episode.
SearchOutcome lrta_star_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe);

// Single-trial RTAA*: same lookahead, then h(s) := f(best frontier) - g(s)
// for every expanded s; the agent walks the lookahead tree to the frontier.
SearchOutcome rtaa_star_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe);

// Anytime Repairing A*: weighted A* with f = g + w*h, w decreasing from
// ara_initial_weight by ara_weight_decrement to 1, reusing the previous search
// through the INCONS list. Each published solution is recorded in iterations.
SearchOutcome ara_star_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe);

SearchOutcome lpa_star_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe);
SearchOutcome dstar_lite_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe);
SearchOutcome dstar_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe);

}  // namespace gridbench
