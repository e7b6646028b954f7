#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gridbench/detail/open_list.hpp"
#include "gridbench/grid.hpp"
#include "gridbench/probe.hpp"
#include "gridbench/search.hpp"

// Stateful solver objects. The one-shot functions in search.hpp drive these
// on static grids; tests use them directly to exercise replanning after a
// change in the world or a move of the agent.
//
// Every planner keeps a pointer to the grid it was given; the caller keeps
// that grid alive and passes a replacement through update_grid().

namespace gridbench {

// Lexicographic priority [k1; k2] shared by LPA* and D* Lite.
struct SearchKey {
  double k1 = kInfinity;
  double k2 = kInfinity;

  friend auto operator<=>(const SearchKey&, const SearchKey&) = default;
};

namespace detail {

struct KeyedEntry {
  SearchKey key;
  std::uint32_t cell = 0;
  std::uint32_t stamp = 0;
};

struct KeyedEntryBefore {
  bool operator()(const KeyedEntry& a, const KeyedEntry& b) const {
    if (a.key != b.key) return a.key < b.key;
    return a.cell < b.cell;
  }
};

struct IncrementalState {
  double g = kInfinity;
  double rhs = kInfinity;
  std::uint32_t stamp = 0;  // stamp of the live open-list entry
  bool open = false;
};

}  // namespace detail

// Lifelong Planning A*, searching start -> goal. Keys are
// [min(g, rhs) + h(s, goal); min(g, rhs)]; compute_shortest_path() expands
// until the goal is locally consistent and no key is smaller than its own.
class LpaStarPlanner {
public:
  LpaStarPlanner(const Grid& grid, SearchProbe& probe);

  void compute_shortest_path();
  // Replace the world; cells whose traversability changed are listed so their
  // neighborhoods can be re-evaluated. Call compute_shortest_path() after.
  void update_grid(const Grid& grid, std::span<const GridCoord> changed_cells);

  bool has_path() const { return goal_g() < kInfinity; }
  double cost() const { return goal_g(); }
  // start ... goal, by greedy descent on g from the goal. Throws NoPathError.
  std::vector<GridCoord> path() const;

  double g(GridCoord c) const;
  double rhs(GridCoord c) const;
  std::size_t expanded() const { return expanded_; }

private:
  const Grid* grid_;
  SearchProbe* probe_;
  ProbedMap<std::uint32_t, detail::IncrementalState> states_;
  detail::OpenList<detail::KeyedEntry, detail::KeyedEntryBefore> open_;
  std::uint32_t next_stamp_ = 0;
  std::size_t expanded_ = 0;

  double goal_g() const { return g(grid_->goal()); }
  SearchKey calculate_key(std::uint32_t cell, const detail::IncrementalState& s) const;
  detail::IncrementalState& state(std::uint32_t cell);
  void update_vertex(std::uint32_t cell);
  void discard_stale();
};

// D* Lite: LPA* run backwards from the goal with the heuristic measured to the
// agent's current position. Agent moves accumulate into the key modifier k_m
// so queued keys stay valid lower bounds.
class DStarLitePlanner {
public:
  DStarLitePlanner(const Grid& grid, SearchProbe& probe);

  void compute_shortest_path();
  // The agent has moved to `to`; keys are offset by h(previous, to).
  void move_agent(GridCoord to);
  void update_grid(const Grid& grid, std::span<const GridCoord> changed_cells);

  GridCoord position() const { return position_; }
  bool has_path() const { return g(position_) < kInfinity; }
  double cost_to_goal() const { return g(position_); }
  // position ... goal. Throws NoPathError.
  std::vector<GridCoord> path() const;

  double g(GridCoord c) const;
  double rhs(GridCoord c) const;
  double key_modifier() const { return k_m_; }
  std::size_t expanded() const { return expanded_; }

private:
  const Grid* grid_;
  SearchProbe* probe_;
  GridCoord position_;
  double k_m_ = 0.0;
  ProbedMap<std::uint32_t, detail::IncrementalState> states_;
  detail::OpenList<detail::KeyedEntry, detail::KeyedEntryBefore> open_;
  std::uint32_t next_stamp_ = 0;
  std::size_t expanded_ = 0;

  SearchKey calculate_key(std::uint32_t cell, const detail::IncrementalState& s) const;
  detail::IncrementalState& state(std::uint32_t cell);
  void update_vertex(std::uint32_t cell);
  void push(std::uint32_t cell, detail::IncrementalState& s, SearchKey key);
  void discard_stale();
};

// Stentz's original D*: a backward search from the goal over NEW / OPEN /
// CLOSED tagged states with back-pointers. Open entries are ordered by
// k = min(h over the time on OPEN); k < h marks a RAISE state, k == h a LOWER
// state. The first search runs until the start is CLOSED; after a change it
// runs until k_min >= h(agent).
class DStarPlanner {
public:
  enum class Tag : std::uint8_t { New, Open, Closed };

  DStarPlanner(const Grid& grid, SearchProbe& probe);

  void compute_initial_path();
  void move_agent(GridCoord to);
  // Re-evaluates arcs around the changed cells (MODIFY-COST) and repairs the
  // back-pointer tree.
  void update_grid(const Grid& grid, std::span<const GridCoord> changed_cells);

  GridCoord position() const { return position_; }
  bool has_path() const { return h(position_) < kInfinity; }
  double cost_to_goal() const { return h(position_); }
  // Follows back-pointers from the agent to the goal. Throws NoPathError.
  std::vector<GridCoord> path() const;

  double h(GridCoord c) const;
  Tag tag(GridCoord c) const;
  std::size_t expanded() const { return expanded_; }

private:
  struct State {
    double h = kInfinity;
    double k = kInfinity;
    std::uint32_t back = 0;
    std::uint32_t stamp = 0;
    Tag tag = Tag::New;
    bool has_back = false;
  };
  struct Entry {
    double k = 0.0;
    std::uint32_t cell = 0;
    std::uint32_t stamp = 0;
  };
  struct EntryBefore {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.k != b.k) return a.k < b.k;
      return a.cell < b.cell;
    }
  };

  const Grid* grid_;
  SearchProbe* probe_;
  GridCoord position_;
  ProbedMap<std::uint32_t, State> states_;
  detail::OpenList<Entry, EntryBefore> open_;
  std::uint32_t next_stamp_ = 0;
  std::size_t expanded_ = 0;

  State& state(std::uint32_t cell);
  void insert(std::uint32_t cell, State& s, double h_new);
  double arc_cost(std::uint32_t from, std::uint32_t to) const;
  void discard_stale();
  double min_k();
  // One PROCESS-STATE step; returns k_min afterwards, or -1 when OPEN is empty.
  double process_state();
};

// LRTA* and RTAA* agents. Each episode runs an A* lookahead of at most
// params.lookahead expansions from the agent, updates the learned heuristic
// over the expanded states and then moves the agent.
class RealTimeAgent {
public:
  enum class Rule {
    // h(s) := min_{s'} c(s, s') + h(s') over the local space, solved
    // Dijkstra-style from the frontier; the agent makes one move.
    Lrta,
    // h(s) := f(best frontier) - g(s); the agent walks to the frontier state.
    Rtaa,
  };

  struct Episode {
    std::vector<GridCoord> expanded;  // lookahead closed list, expansion order
    GridCoord frontier;               // best frontier state
    std::vector<GridCoord> moves;     // cells entered this episode
  };

  RealTimeAgent(const Grid& grid, const SolverParams& params, SearchProbe& probe, Rule rule);

  bool at_goal() const { return position_ == grid_->goal(); }
  GridCoord position() const { return position_; }
  // Throws NoPathError when the lookahead exhausts the reachable component.
  Episode run_episode();

  // Current heuristic: learned value if the state was updated, else Euclidean.
  double h(GridCoord c) const;
  std::size_t learned_states() const { return learned_.size(); }
  const std::vector<GridCoord>& trajectory() const { return trajectory_; }
  std::size_t expanded() const { return expanded_; }

private:
  struct Node {
    double g = kInfinity;
    std::uint32_t parent = 0;
    bool closed = false;
  };
  struct Entry {
    double f = 0.0;
    double g = 0.0;
    std::uint32_t cell = 0;
  };
  struct EntryBefore {
    TieBreak tie_break = TieBreak::HighG;
    bool operator()(const Entry& a, const Entry& b) const;
  };
  struct ValueEntry {
    double h = 0.0;
    std::uint32_t cell = 0;
  };
  struct ValueBefore {
    bool operator()(const ValueEntry& a, const ValueEntry& b) const {
      if (a.h != b.h) return a.h < b.h;
      return a.cell < b.cell;
    }
  };

  const Grid* grid_;
  SolverParams params_;
  SearchProbe* probe_;
  Rule rule_;
  GridCoord position_;
  std::vector<GridCoord> trajectory_;
  std::size_t expanded_ = 0;

  ProbedMap<std::uint32_t, double> learned_;
  ProbedMap<std::uint32_t, Node> nodes_;
  detail::OpenList<Entry, EntryBefore> open_;
  ProbedVector<std::uint32_t> closed_;
  detail::OpenList<ValueEntry, ValueBefore> backup_;

  double h_index(std::uint32_t cell) const;
  std::uint32_t lookahead();
  void update_lrta();
  void update_rtaa(std::uint32_t frontier);
  std::vector<GridCoord> tree_path(std::uint32_t frontier) const;
};

}  // namespace gridbench
