#include <algorithm>

#include "gridbench/errors.hpp"
#include "gridbench/planners.hpp"
#include "search_common.hpp"

namespace gridbench {

DStarPlanner::DStarPlanner(const Grid& grid, SearchProbe& probe)
    : grid_(&grid),
      probe_(&probe),
      position_(grid.start()),
      states_(make_probed_map<std::uint32_t, State>(probe)),
      open_(probe) {
  const std::uint32_t goal = grid.index(grid.goal());
  insert(goal, state(goal), 0.0);
}

DStarPlanner::State& DStarPlanner::state(std::uint32_t cell) { return states_[cell]; }

double DStarPlanner::h(GridCoord c) const {
  auto it = states_.find(grid_->index(c));
  return it == states_.end() ? kInfinity : it->second.h;
}

DStarPlanner::Tag DStarPlanner::tag(GridCoord c) const {
  auto it = states_.find(grid_->index(c));
  return it == states_.end() ? Tag::New : it->second.tag;
}

// Arcs into or out of a blocked cell, and corner-cutting diagonals, cost
// infinity rather than vanishing so MODIFY-COST can raise dependent states.
double DStarPlanner::arc_cost(std::uint32_t from, std::uint32_t to) const {
  const GridCoord a = grid_->coord(from);
  const GridCoord b = grid_->coord(to);
  return move_allowed(*grid_, a, b) ? step_cost(a, b) : kInfinity;
}

void DStarPlanner::insert(std::uint32_t cell, State& s, double h_new) {
  switch (s.tag) {
    case Tag::New:
      s.k = h_new;
      break;
    case Tag::Open:
      s.k = std::min(s.k, h_new);
      break;
    case Tag::Closed:
      s.k = std::min(s.h, h_new);
      break;
  }
  s.h = h_new;
  s.tag = Tag::Open;
  s.stamp = ++next_stamp_;
  open_.push({s.k, cell, s.stamp});
}

void DStarPlanner::discard_stale() {
  while (!open_.empty()) {
    const auto& top = open_.top();
    const auto it = states_.find(top.cell);
    if (it != states_.end() && it->second.tag == Tag::Open && it->second.stamp == top.stamp) return;
    open_.pop();
  }
}

double DStarPlanner::min_k() {
  discard_stale();
  return open_.empty() ? -1.0 : open_.top().k;
}

double DStarPlanner::process_state() {
  discard_stale();
  if (open_.empty()) return -1.0;
  const std::uint32_t x = open_.top().cell;
  open_.pop();
  State& sx = state(x);
  const double k_old = sx.k;
  sx.tag = Tag::Closed;
  ++expanded_;
  const GridCoord xc = grid_->coord(x);
  probe_->on_expand(xc);

  std::array<std::uint32_t, 8> around{};
  std::size_t count = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      const GridCoord n{xc.x + dx, xc.y + dy};
      if ((dx | dy) != 0 && grid_->in_bounds(n)) around[count++] = grid_->index(n);
    }
  }
  const std::span<const std::uint32_t> neighbors(around.data(), count);

  // RAISE: try to lower h(X) through neighbors that are already optimal.
  if (k_old < sx.h) {
    for (const std::uint32_t y : neighbors) {
      const auto it = states_.find(y);
      if (it == states_.end()) continue;
      const double c = arc_cost(y, x);
      if (it->second.h <= k_old && sx.h > it->second.h + c) {
        sx.back = y;
        sx.has_back = true;
        sx.h = it->second.h + c;
      }
    }
  }

  if (k_old == sx.h) {
    // LOWER: propagate the improved cost.
    for (const std::uint32_t y : neighbors) {
      const double c = arc_cost(x, y);
      auto it = states_.find(y);
      if (it == states_.end()) {
        if (c == kInfinity) continue;
        State& sy = state(y);
        sy.back = x;
        sy.has_back = true;
        insert(y, sy, sx.h + c);
        continue;
      }
      State& sy = it->second;
      const bool points_here = sy.has_back && sy.back == x;
      if (sy.tag == Tag::New || (points_here && sy.h != sx.h + c) || (!points_here && sy.h > sx.h + c)) {
        sy.back = x;
        sy.has_back = true;
        insert(y, sy, sx.h + c);
      }
    }
  } else {
    // RAISE: push the increase to dependents, or requeue to find a better route.
    for (const std::uint32_t y : neighbors) {
      const double c = arc_cost(x, y);
      auto it = states_.find(y);
      if (it == states_.end()) {
        if (c == kInfinity) continue;
        State& sy = state(y);
        sy.back = x;
        sy.has_back = true;
        insert(y, sy, sx.h + c);
        continue;
      }
      State& sy = it->second;
      const bool points_here = sy.has_back && sy.back == x;
      if (sy.tag == Tag::New || (points_here && sy.h != sx.h + c)) {
        sy.back = x;
        sy.has_back = true;
        insert(y, sy, sx.h + c);
      } else if (!points_here && sy.h > sx.h + c) {
        insert(x, sx, sx.h);
      } else if (!points_here && sx.h > sy.h + c && sy.tag == Tag::Closed && sy.h > k_old) {
        insert(y, sy, sy.h);
      }
    }
  }
  return min_k();
}

void DStarPlanner::compute_initial_path() {
  const std::uint32_t start = grid_->index(position_);
  while (true) {
    const auto it = states_.find(start);
    if (it != states_.end() && it->second.tag == Tag::Closed) break;
    if (min_k() < 0.0) break;
    process_state();
  }
}

void DStarPlanner::move_agent(GridCoord to) {
  if (!grid_->is_traversable(to)) throw InvalidCellError("agent cannot move to " + to_string(to));
  position_ = to;
}

void DStarPlanner::update_grid(const Grid& grid, std::span<const GridCoord> changed_cells) {
  if (grid.width() != grid_->width() || grid.height() != grid_->height() || grid.goal() != grid_->goal())
    throw InvalidGridError("D* update must keep dimensions and goal");
  grid_ = &grid;
  for (const auto& c : changed_cells) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const GridCoord n{c.x + dx, c.y + dy};
        if (!grid.in_bounds(n)) continue;
        const auto it = states_.find(grid.index(n));
        if (it != states_.end() && it->second.tag == Tag::Closed) insert(it->first, it->second, it->second.h);
      }
    }
  }
  const std::uint32_t agent = grid.index(position_);
  while (true) {
    const double k_min = min_k();
    if (k_min < 0.0) break;
    const auto it = states_.find(agent);
    const double h_agent = it == states_.end() ? kInfinity : it->second.h;
    if (k_min >= h_agent) break;
    process_state();
  }
}

std::vector<GridCoord> DStarPlanner::path() const {
  if (!has_path())
    throw NoPathError("no path from " + to_string(position_) + " to " + to_string(grid_->goal()));
  std::vector<GridCoord> out{position_};
  std::uint32_t current = grid_->index(position_);
  const std::uint32_t goal = grid_->index(grid_->goal());
  const std::size_t limit = grid_->cell_count();
  while (current != goal) {
    const auto it = states_.find(current);
    if (it == states_.end() || !it->second.has_back)
      throw InternalSearchError("D* back-pointer chain broken at " + to_string(grid_->coord(current)));
    if (out.size() > limit) throw InternalSearchError("D* back-pointer chain contains a cycle");
    current = it->second.back;
    out.push_back(grid_->coord(current));
  }
  return out;
}

SearchOutcome dstar_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe) {
  params.validate();
  SearchOutcome out;
  {
    DStarPlanner planner(grid, probe);
    planner.compute_initial_path();
    if (!planner.has_path()) throw detail::no_path(grid);
    out.path = planner.path();
    out.expanded = planner.expanded();
  }
  detail::finish(out, probe);
  return out;
}

}  // namespace gridbench
