#include <algorithm>

#include "gridbench/errors.hpp"
#include "gridbench/planners.hpp"
#include "search_common.hpp"

namespace gridbench {

bool RealTimeAgent::EntryBefore::operator()(const Entry& a, const Entry& b) const {
  if (a.f != b.f) return a.f < b.f;
  if (a.g != b.g) return tie_break == TieBreak::HighG ? a.g > b.g : a.g < b.g;
  return a.cell < b.cell;
}

RealTimeAgent::RealTimeAgent(const Grid& grid, const SolverParams& params, SearchProbe& probe, Rule rule)
    : grid_(&grid),
      params_(params),
      probe_(&probe),
      rule_(rule),
      position_(grid.start()),
      trajectory_{grid.start()},
      learned_(make_probed_map<std::uint32_t, double>(probe)),
      nodes_(make_probed_map<std::uint32_t, Node>(probe)),
      open_(probe, EntryBefore{params.tie_break}),
      closed_(make_probed_vector<std::uint32_t>(probe)),
      backup_(probe) {
  params.validate();
  if (!grid.is_traversable(grid.start())) throw InvalidCellError("start is not traversable");
  learned_.reserve(static_cast<std::size_t>(params.lookahead));
}

double RealTimeAgent::h_index(std::uint32_t cell) const {
  auto it = learned_.find(cell);
  return it != learned_.end() ? it->second : euclidean_heuristic(grid_->coord(cell), grid_->goal());
}

double RealTimeAgent::h(GridCoord c) const { return h_index(grid_->index(c)); }

// Bounded A* from the agent. Returns the best frontier state; the goal is
// returned as soon as it reaches the top of OPEN.
std::uint32_t RealTimeAgent::lookahead() {
  nodes_.clear();
  open_.clear();
  closed_.clear();
  const std::uint32_t root = grid_->index(position_);
  const std::uint32_t goal = grid_->index(grid_->goal());
  nodes_[root].g = 0.0;
  open_.push({h_index(root), 0.0, root});

  int expansions = 0;
  while (true) {
    while (!open_.empty()) {
      const Node& n = nodes_[open_.top().cell];
      if (!n.closed && open_.top().g <= n.g) break;
      open_.pop();
    }
    if (open_.empty()) throw detail::no_path(*grid_);
    const Entry top = open_.top();
    if (top.cell == goal || expansions == params_.lookahead) return top.cell;

    open_.pop();
    Node& node = nodes_[top.cell];
    node.closed = true;
    closed_.push_back(top.cell);
    ++expansions;
    ++expanded_;
    const GridCoord c = grid_->coord(top.cell);
    probe_->on_expand(c);
    for (const auto& n : traversable_neighbors(*grid_, c)) {
      const std::uint32_t ni = grid_->index(n.cell);
      Node& next = nodes_[ni];
      const double g = node.g + n.cost;
      if (next.closed || g >= next.g) continue;
      next.g = g;
      next.parent = top.cell;
      open_.push({g + h_index(ni), g, ni});
    }
  }
}

void RealTimeAgent::update_rtaa(std::uint32_t frontier) {
  const double f_best = nodes_.at(frontier).g + h_index(frontier);
  for (const std::uint32_t cell : closed_) learned_[cell] = f_best - nodes_.at(cell).g;
}

// Dijkstra from the frontier inward over the closed states.
void RealTimeAgent::update_lrta() {
  for (const std::uint32_t cell : closed_) learned_[cell] = kInfinity;
  backup_.clear();
  for (const std::uint32_t cell : closed_) {
    for (const auto& n : traversable_neighbors(*grid_, grid_->coord(cell))) {
      const std::uint32_t ni = grid_->index(n.cell);
      const auto it = nodes_.find(ni);
      if (it == nodes_.end() || !it->second.closed) backup_.push({h_index(ni), ni});
    }
  }
  while (!backup_.empty()) {
    const ValueEntry top = backup_.top();
    backup_.pop();
    if (top.h != h_index(top.cell)) continue;
    for (const auto& n : traversable_neighbors(*grid_, grid_->coord(top.cell))) {
      const std::uint32_t ni = grid_->index(n.cell);
      const auto it = nodes_.find(ni);
      if (it == nodes_.end() || !it->second.closed) continue;
      const double candidate = n.cost + top.h;
      double& value = learned_[ni];
      if (candidate < value) {
        value = candidate;
        backup_.push({candidate, ni});
      }
    }
  }
}

std::vector<GridCoord> RealTimeAgent::tree_path(std::uint32_t frontier) const {
  std::vector<GridCoord> reversed;
  const std::uint32_t root = grid_->index(position_);
  for (std::uint32_t cell = frontier; cell != root; cell = nodes_.at(cell).parent)
    reversed.push_back(grid_->coord(cell));
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

RealTimeAgent::Episode RealTimeAgent::run_episode() {
  Episode episode;
  if (at_goal()) {
    episode.frontier = position_;
    return episode;
  }
  const std::uint32_t frontier = lookahead();
  episode.frontier = grid_->coord(frontier);
  episode.expanded.reserve(closed_.size());
  for (const std::uint32_t cell : closed_) episode.expanded.push_back(grid_->coord(cell));

  std::vector<GridCoord> route = tree_path(frontier);
  if (rule_ == Rule::Rtaa) {
    update_rtaa(frontier);
  } else {
    update_lrta();
    route.resize(1);
  }
  for (const auto& c : route) {
    trajectory_.push_back(c);
    episode.moves.push_back(c);
  }
  position_ = route.back();
  return episode;
}

namespace {

SearchOutcome run_agent(const Grid& grid, const SolverParams& params, SearchProbe& probe,
                        RealTimeAgent::Rule rule) {
  params.validate();
  // The agent learns its way out of dead ends but would never give up on an
  // unreachable goal; reachability is settled up front, outside the probe.
  if (!reachable(grid, grid.start(), grid.goal())) throw detail::no_path(grid);

  SearchOutcome out;
  {
    RealTimeAgent agent(grid, params, probe, rule);
    const std::size_t move_limit = 100 * grid.cell_count() + 1000;
    while (!agent.at_goal()) {
      agent.run_episode();
      if (agent.trajectory().size() > move_limit)
        throw InternalSearchError("real-time agent exceeded its move budget");
    }
    out.path = agent.trajectory();
    out.expanded = agent.expanded();
  }
  detail::finish(out, probe);
  return out;
}

}  // namespace

SearchOutcome lrta_star_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe) {
  return run_agent(grid, params, probe, RealTimeAgent::Rule::Lrta);
}

SearchOutcome rtaa_star_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe) {
  return run_agent(grid, params, probe, RealTimeAgent::Rule::Rtaa);
}

}  // namespace gridbench
