#include <algorithm>

#include "gridbench/errors.hpp"
#include "gridbench/planners.hpp"
#include "search_common.hpp"

namespace gridbench {

DStarLitePlanner::DStarLitePlanner(const Grid& grid, SearchProbe& probe)
    : grid_(&grid),
      probe_(&probe),
      position_(grid.start()),
      states_(make_probed_map<std::uint32_t, detail::IncrementalState>(probe)),
      open_(probe) {
  const std::uint32_t goal = grid.index(grid.goal());
  auto& s = state(goal);
  s.rhs = 0.0;
  push(goal, s, calculate_key(goal, s));
}

double DStarLitePlanner::g(GridCoord c) const {
  auto it = states_.find(grid_->index(c));
  return it == states_.end() ? kInfinity : it->second.g;
}

double DStarLitePlanner::rhs(GridCoord c) const {
  auto it = states_.find(grid_->index(c));
  return it == states_.end() ? kInfinity : it->second.rhs;
}

detail::IncrementalState& DStarLitePlanner::state(std::uint32_t cell) { return states_[cell]; }

SearchKey DStarLitePlanner::calculate_key(std::uint32_t cell, const detail::IncrementalState& s) const {
  const double m = std::min(s.g, s.rhs);
  return {m + euclidean_heuristic(position_, grid_->coord(cell)) + k_m_, m};
}

void DStarLitePlanner::push(std::uint32_t cell, detail::IncrementalState& s, SearchKey key) {
  s.open = true;
  s.stamp = ++next_stamp_;
  open_.push({key, cell, s.stamp});
}

void DStarLitePlanner::update_vertex(std::uint32_t cell) {
  const GridCoord c = grid_->coord(cell);
  auto& s = state(cell);
  if (c != grid_->goal()) {
    double best = kInfinity;
    for (const auto& n : traversable_neighbors(*grid_, c)) {
      auto it = states_.find(grid_->index(n.cell));
      if (it != states_.end()) best = std::min(best, n.cost + it->second.g);
    }
    s.rhs = best;
  }
  if (s.g != s.rhs)
    push(cell, s, calculate_key(cell, s));
  else
    s.open = false;
}

void DStarLitePlanner::discard_stale() {
  while (!open_.empty()) {
    const auto& top = open_.top();
    const auto it = states_.find(top.cell);
    if (it != states_.end() && it->second.open && it->second.stamp == top.stamp) return;
    open_.pop();
  }
}

void DStarLitePlanner::compute_shortest_path() {
  const std::uint32_t start = grid_->index(position_);
  while (true) {
    discard_stale();
    if (open_.empty()) break;
    const auto& start_state = state(start);
    if (!(open_.top().key < calculate_key(start, start_state)) && start_state.rhs == start_state.g)
      break;

    const auto top = open_.top();
    open_.pop();
    auto& s = state(top.cell);
    const SearchKey current = calculate_key(top.cell, s);
    if (top.key < current) {
      // Queued before the agent moved; re-queue under the offset key.
      push(top.cell, s, current);
      continue;
    }
    s.open = false;
    ++expanded_;
    const GridCoord c = grid_->coord(top.cell);
    probe_->on_expand(c);
    if (s.g > s.rhs) {
      s.g = s.rhs;
    } else {
      s.g = kInfinity;
      update_vertex(top.cell);
    }
    for (const auto& n : traversable_neighbors(*grid_, c)) update_vertex(grid_->index(n.cell));
  }
}

void DStarLitePlanner::move_agent(GridCoord to) {
  if (!grid_->is_traversable(to)) throw InvalidCellError("agent cannot move to " + to_string(to));
  k_m_ += euclidean_heuristic(position_, to);
  position_ = to;
}

void DStarLitePlanner::update_grid(const Grid& grid, std::span<const GridCoord> changed_cells) {
  if (grid.width() != grid_->width() || grid.height() != grid_->height() || grid.goal() != grid_->goal())
    throw InvalidGridError("D* Lite update must keep dimensions and goal");
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

std::vector<GridCoord> DStarLitePlanner::path() const {
  if (!has_path())
    throw NoPathError("no path from " + to_string(position_) + " to " + to_string(grid_->goal()));
  std::vector<GridCoord> out{position_};
  GridCoord current = position_;
  const std::size_t limit = grid_->cell_count();
  while (current != grid_->goal()) {
    if (out.size() > limit) throw InternalSearchError("D* Lite path extraction did not terminate");
    GridCoord best_cell = current;
    double best = kInfinity;
    for (const auto& n : traversable_neighbors(*grid_, current)) {
      const double v = n.cost + g(n.cell);
      if (v < best) {
        best = v;
        best_cell = n.cell;
      }
    }
    if (best_cell == current) throw InternalSearchError("D* Lite path extraction hit a dead end");
    current = best_cell;
    out.push_back(current);
  }
  return out;
}

SearchOutcome dstar_lite_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe) {
  params.validate();
  SearchOutcome out;
  {
    DStarLitePlanner planner(grid, probe);
    planner.compute_shortest_path();
    if (!planner.has_path()) throw detail::no_path(grid);
    out.path = planner.path();
    out.expanded = planner.expanded();
  }
  detail::finish(out, probe);
  return out;
}

}  // namespace gridbench
