#include <algorithm>
#include <cstdint>

#include "gridbench/detail/open_list.hpp"
#include "gridbench/errors.hpp"
#include "gridbench/search.hpp"
#include "search_common.hpp"

namespace gridbench {

namespace {

struct WeightedEntry {
  double f = 0.0;
  double g = 0.0;
  std::uint32_t cell = 0;
  std::uint32_t stamp = 0;
};

struct WeightedBefore {
  TieBreak tie_break = TieBreak::HighG;

  bool operator()(const WeightedEntry& a, const WeightedEntry& b) const {
    if (a.f != b.f) return a.f < b.f;
    if (a.g != b.g) return tie_break == TieBreak::HighG ? a.g > b.g : a.g < b.g;
    return a.cell < b.cell;
  }
};

struct OracleNode {
  double g = kInfinity;
  std::uint32_t parent = 0;
  bool closed = false;
};

template <class Map>
std::vector<GridCoord> trace_parents(const Grid& grid, const Map& nodes) {
  std::vector<GridCoord> path;
  std::uint32_t cell = grid.index(grid.goal());
  const std::uint32_t start = grid.index(grid.start());
  path.push_back(grid.goal());
  while (cell != start) {
    if (path.size() > grid.cell_count()) throw InternalSearchError("parent chain contains a cycle");
    cell = nodes.at(cell).parent;
    path.push_back(grid.coord(cell));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

SearchOutcome astar_oracle(const Grid& grid, const SolverParams& params, SearchProbe& probe) {
  params.validate();
  SearchOutcome out;
  {
    auto nodes = make_probed_map<std::uint32_t, OracleNode>(probe);
    detail::OpenList<WeightedEntry, WeightedBefore> open(probe, WeightedBefore{params.tie_break});
    const std::uint32_t start = grid.index(grid.start());
    const std::uint32_t goal = grid.index(grid.goal());
    nodes[start].g = 0.0;
    open.push({euclidean_heuristic(grid.start(), grid.goal()), 0.0, start, 0});

    bool found = false;
    while (!open.empty()) {
      const WeightedEntry top = open.top();
      open.pop();
      OracleNode& node = nodes[top.cell];
      if (node.closed || top.g > node.g) continue;
      if (top.cell == goal) {
        found = true;
        break;
      }
      node.closed = true;
      ++out.expanded;
      const GridCoord c = grid.coord(top.cell);
      probe.on_expand(c);
      for (const auto& n : traversable_neighbors(grid, c)) {
        const std::uint32_t ni = grid.index(n.cell);
        OracleNode& next = nodes[ni];
        const double g = node.g + n.cost;
        if (next.closed || g >= next.g) continue;
        next.g = g;
        next.parent = top.cell;
        open.push({g + euclidean_heuristic(n.cell, grid.goal()), g, ni, 0});
      }
    }
    if (!found) throw detail::no_path(grid);
    out.path = trace_parents(grid, nodes);
  }
  detail::finish(out, probe);
  return out;
}

namespace {

struct AraNode {
  double g = kInfinity;
  std::uint32_t parent = 0;
  std::uint32_t stamp = 0;
  std::uint32_t closed_in = 0;  // iteration that closed the node, 0 = never
  bool open = false;
  bool incons = false;
};

class AraSearch {
public:
  AraSearch(const Grid& grid, const SolverParams& params, SearchProbe& probe)
      : grid_(grid),
        params_(params),
        probe_(probe),
        nodes_(make_probed_map<std::uint32_t, AraNode>(probe)),
        open_(probe, WeightedBefore{params.tie_break}),
        incons_(make_probed_vector<std::uint32_t>(probe)),
        goal_(grid.index(grid.goal())) {}

  SearchOutcome run() {
    SearchOutcome out;
    double weight = params_.ara_initial_weight;
    const std::uint32_t start = grid_.index(grid_.start());
    nodes_[start].g = 0.0;
    queue(start, nodes_[start]);

    improve_path();
    if (goal_g() == kInfinity) throw detail::no_path(grid_);
    publish(out);
    while (weight > 1.0) {
      weight = std::max(1.0, weight - params_.ara_weight_decrement);
      weight_ = weight;
      ++iteration_;
      requeue_with_incons();
      improve_path();
      publish(out);
    }
    out.expanded = expanded_;
    return out;
  }

private:
  const Grid& grid_;
  const SolverParams& params_;
  SearchProbe& probe_;
  ProbedMap<std::uint32_t, AraNode> nodes_;
  detail::OpenList<WeightedEntry, WeightedBefore> open_;
  ProbedVector<std::uint32_t> incons_;
  std::uint32_t goal_;
  double weight_ = params_.ara_initial_weight;
  std::uint32_t iteration_ = 1;
  std::uint32_t next_stamp_ = 0;
  std::size_t expanded_ = 0;

  double goal_g() const {
    auto it = nodes_.find(goal_);
    return it == nodes_.end() ? kInfinity : it->second.g;
  }

  double fvalue(std::uint32_t cell, double g) const {
    return g + weight_ * euclidean_heuristic(grid_.coord(cell), grid_.goal());
  }

  void queue(std::uint32_t cell, AraNode& node) {
    node.open = true;
    node.stamp = ++next_stamp_;
    open_.push({fvalue(cell, node.g), node.g, cell, node.stamp});
  }

  void discard_stale() {
    while (!open_.empty()) {
      const auto& top = open_.top();
      const auto it = nodes_.find(top.cell);
      if (it->second.open && it->second.stamp == top.stamp) return;
      open_.pop();
    }
  }

  void improve_path() {
    while (true) {
      discard_stale();
      if (open_.empty() || !(goal_g() > open_.top().f)) return;
      const std::uint32_t cell = open_.top().cell;
      open_.pop();
      AraNode& node = nodes_[cell];
      node.open = false;
      node.closed_in = iteration_;
      ++expanded_;
      const GridCoord c = grid_.coord(cell);
      probe_.on_expand(c);
      for (const auto& n : traversable_neighbors(grid_, c)) {
        const std::uint32_t ni = grid_.index(n.cell);
        AraNode& next = nodes_[ni];
        const double g = node.g + n.cost;
        if (g >= next.g) continue;
        next.g = g;
        next.parent = cell;
        if (next.closed_in != iteration_) {
          queue(ni, next);
        } else if (!next.incons) {
          next.incons = true;
          incons_.push_back(ni);
        }
      }
    }
  }

  // OPEN := OPEN u INCONS, re-keyed under the new weight; CLOSED := {}.
  void requeue_with_incons() {
    auto pending = make_probed_vector<std::uint32_t>(probe_);
    while (true) {
      discard_stale();
      if (open_.empty()) break;
      pending.push_back(open_.top().cell);
      nodes_[open_.top().cell].open = false;
      open_.pop();
    }
    for (const std::uint32_t cell : incons_) {
      AraNode& node = nodes_[cell];
      node.incons = false;
      if (!node.open) {
        node.open = true;
        pending.push_back(cell);
      }
    }
    incons_.clear();
    for (const std::uint32_t cell : pending) queue(cell, nodes_[cell]);
  }

  void publish(SearchOutcome& out) {
    out.path = trace_parents(grid_, nodes_);
    const double cost = path_cost(out.path);
    out.iterations.push_back({weight_, cost, expanded_});
  }
};

}  // namespace

SearchOutcome ara_star_solve(const Grid& grid, const SolverParams& params, SearchProbe& probe) {
  params.validate();
  SearchOutcome out;
  {
    AraSearch search(grid, params, probe);
    out = search.run();
  }
  detail::finish(out, probe);
  return out;
}

}  // namespace gridbench
