#include <algorithm>

#include "gridbench/errors.hpp"
#include "gridbench/planners.hpp"
#include "search_common.hpp"

namespace gridbench {

LpaStarPlanner::LpaStarPlanner(const Grid& grid, SearchProbe& probe)
    : grid_(&grid),
      probe_(&probe),
      states_(make_probed_map<std::uint32_t, detail::IncrementalState>(probe)),
      open_(probe) {
  const std::uint32_t start = grid.index(grid.start());
  auto& s = state(start);
  s.rhs = 0.0;
  s.open = true;
  s.stamp = ++next_stamp_;
  open_.push({calculate_key(start, s), start, s.stamp});
}

double LpaStarPlanner::g(GridCoord c) const {
  auto it = states_.find(grid_->index(c));
  return it == states_.end() ? kInfinity : it->second.g;
}

double LpaStarPlanner::rhs(GridCoord c) const {
  auto it = states_.find(grid_->index(c));
  return it == states_.end() ? kInfinity : it->second.rhs;
}

detail::IncrementalState& LpaStarPlanner::state(std::uint32_t cell) { return states_[cell]; }

SearchKey LpaStarPlanner::calculate_key(std::uint32_t cell, const detail::IncrementalState& s) const {
  const double m = std::min(s.g, s.rhs);
  return {m + euclidean_heuristic(grid_->coord(cell), grid_->goal()), m};
}

void LpaStarPlanner::update_vertex(std::uint32_t cell) {
  const GridCoord c = grid_->coord(cell);
  auto& s = state(cell);
  if (c != grid_->start()) {
    double best = kInfinity;
    for (const auto& n : traversable_neighbors(*grid_, c)) {
      auto it = states_.find(grid_->index(n.cell));
      if (it != states_.end()) best = std::min(best, it->second.g + n.cost);
    }
    s.rhs = best;
  }
  if (s.g != s.rhs) {
    s.open = true;
    s.stamp = ++next_stamp_;
    open_.push({calculate_key(cell, s), cell, s.stamp});
  } else {
    s.open = false;
  }
}

void LpaStarPlanner::discard_stale() {
  while (!open_.empty()) {
    const auto& top = open_.top();
    const auto it = states_.find(top.cell);
    if (it != states_.end() && it->second.open && it->second.stamp == top.stamp) return;
    open_.pop();
  }
}

void LpaStarPlanner::compute_shortest_path() {
  const std::uint32_t goal = grid_->index(grid_->goal());
  while (true) {
    discard_stale();
    if (open_.empty()) break;
    const auto& goal_state = state(goal);
    const SearchKey goal_key = calculate_key(goal, goal_state);
    if (!(open_.top().key < goal_key) && goal_state.rhs == goal_state.g) break;

    const std::uint32_t cell = open_.top().cell;
    open_.pop();
    auto& s = state(cell);
    s.open = false;
    ++expanded_;
    probe_->on_expand(grid_->coord(cell));

    const GridCoord c = grid_->coord(cell);
    if (s.g > s.rhs) {
      s.g = s.rhs;
    } else {
      s.g = kInfinity;
      update_vertex(cell);
    }
    for (const auto& n : traversable_neighbors(*grid_, c)) update_vertex(grid_->index(n.cell));
  }
}

void LpaStarPlanner::update_grid(const Grid& grid, std::span<const GridCoord> changed_cells) {
  if (grid.width() != grid_->width() || grid.height() != grid_->height() ||
      grid.start() != grid_->start() || grid.goal() != grid_->goal())
    throw InvalidGridError("LPA* update must keep dimensions, start and goal");
  grid_ = &grid;
  for (const auto& c : changed_cells) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const GridCoord n{c.x + dx, c.y + dy};
        if (grid.in_bounds(n)) update_vertex(grid.index(n));
      }
    }
  }
}

std::vector<GridCoord> LpaStarPlanner::path() const {
  if (!has_path()) throw NoPathError("no path from " + to_string(grid_->start()) + " to " + to_string(grid_->goal()));
  std::vector<GridCoord> reversed{grid_->goal()};
  GridCoord current = grid_->goal();
  const std::size_t limit = grid_->cell_count();
  while (current != grid_->start()) {
    if (reversed.size() > limit) throw InternalSearchError("LPA* path extraction did not terminate");
    GridCoord best_cell = current;
    double best = kInfinity;
    for (const auto& n : traversable_neighbors(*grid_, current)) {
      const double v = g(n.cell) + n.cost;
      if (v < best) {
        best = v;
        best_cell = n.cell;
      }
    }
    if (best_cell == current) throw InternalSearchError("LPA* path extraction hit a dead end");
    current = best_cell;
    reversed.push_back(current);
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

SearchOutcome lpa_star_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe) {
  params.validate();
  SearchOutcome out;
  {
    LpaStarPlanner planner(grid, probe);
    planner.compute_shortest_path();
    if (!planner.has_path()) throw detail::no_path(grid);
    out.path = planner.path();
    out.expanded = planner.expanded();
  }
  detail::finish(out, probe);
  return out;
}

}  // namespace gridbench
