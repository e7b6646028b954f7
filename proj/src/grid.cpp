#include "gridbench/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gridbench/errors.hpp"

namespace gridbench {

namespace {

struct Direction {
  int dx;
  int dy;
};

// Clockwise from north (y grows downwards).
constexpr std::array<Direction, 8> kDirections = {{
    {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1},
}};

void collect_neighbors(const Grid& grid, GridCoord c, NeighborList& out) {
  for (const auto& d : kDirections) {
    const GridCoord n{c.x + d.dx, c.y + d.dy};
    if (!grid.is_traversable(n)) continue;
    const bool diagonal = d.dx != 0 && d.dy != 0;
    if (diagonal && !grid.allow_corner_cutting()) {
      if (!grid.is_traversable({c.x + d.dx, c.y}) || !grid.is_traversable({c.x, c.y + d.dy}))
        continue;
    }
    out.push_back({n, diagonal ? kSqrt2 : 1.0});
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const GridCoord& c) {
  return os << '(' << c.x << ',' << c.y << ')';
}

std::string to_string(const GridCoord& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

Grid::Grid(int width, int height, std::span<const GridCoord> blocked, GridCoord start,
           GridCoord goal, GridOptions options)
    : width_(width), height_(height), start_(start), goal_(goal), options_(options) {
  if (width <= 0 || height <= 0)
    throw InvalidGridError("grid dimensions must be positive, got " + std::to_string(width) +
                           "x" + std::to_string(height));
  occupancy_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
  for (const auto& b : blocked) {
    if (!in_bounds(b)) throw InvalidGridError("blocked cell " + to_string(b) + " out of bounds");
    auto& cell = occupancy_[index(b)];
    if (cell == 0) {
      cell = 1;
      ++blocked_count_;
    }
  }
  validate();
}

void Grid::validate() const {
  if (!in_bounds(start_)) throw InvalidGridError("start " + to_string(start_) + " out of bounds");
  if (!in_bounds(goal_)) throw InvalidGridError("goal " + to_string(goal_) + " out of bounds");
  if (occupancy_[index(start_)] != 0) throw InvalidGridError("start " + to_string(start_) + " is blocked");
  if (occupancy_[index(goal_)] != 0) throw InvalidGridError("goal " + to_string(goal_) + " is blocked");
  if (start_ == goal_ && !options_.allow_trivial)
    throw InvalidGridError("start equals goal; construct with allow_trivial for that case");
}

std::vector<GridCoord> Grid::blocked_cells() const {
  std::vector<GridCoord> cells;
  cells.reserve(blocked_count_);
  for (std::uint32_t i = 0; i < occupancy_.size(); ++i)
    if (occupancy_[i] != 0) cells.push_back(coord(i));
  return cells;
}

Grid Grid::with_changes(std::span<const GridCoord> newly_blocked,
                        std::span<const GridCoord> newly_free) const {
  Grid copy = *this;
  for (const auto& c : newly_blocked) {
    if (!in_bounds(c)) throw InvalidGridError("blocked cell " + to_string(c) + " out of bounds");
    auto& cell = copy.occupancy_[index(c)];
    if (cell == 0) {
      cell = 1;
      ++copy.blocked_count_;
    }
  }
  for (const auto& c : newly_free) {
    if (!in_bounds(c)) throw InvalidGridError("freed cell " + to_string(c) + " out of bounds");
    auto& cell = copy.occupancy_[index(c)];
    if (cell != 0) {
      cell = 0;
      --copy.blocked_count_;
    }
  }
  copy.validate();
  return copy;
}

Grid Grid::with_corner_cutting(bool allow) const {
  Grid copy = *this;
  copy.options_.allow_corner_cutting = allow;
  return copy;
}

Grid Grid::with_endpoints(GridCoord start, GridCoord goal) const {
  Grid copy = *this;
  copy.start_ = start;
  copy.goal_ = goal;
  copy.validate();
  return copy;
}

NeighborList neighbors8(const Grid& grid, GridCoord c) {
  if (!grid.is_traversable(c)) throw InvalidCellError("cell " + to_string(c) + " is not traversable");
  NeighborList out;
  collect_neighbors(grid, c, out);
  return out;
}

NeighborList traversable_neighbors(const Grid& grid, GridCoord c) {
  NeighborList out;
  if (grid.is_traversable(c)) collect_neighbors(grid, c, out);
  return out;
}

bool move_allowed(const Grid& grid, GridCoord a, GridCoord b) {
  if (!is_adjacent(a, b) || !grid.is_traversable(a) || !grid.is_traversable(b)) return false;
  if (a.x != b.x && a.y != b.y && !grid.allow_corner_cutting())
    return grid.is_traversable({b.x, a.y}) && grid.is_traversable({a.x, b.y});
  return true;
}

double euclidean_heuristic(GridCoord a, GridCoord b) {
  const double dx = static_cast<double>(a.x) - static_cast<double>(b.x);
  const double dy = static_cast<double>(a.y) - static_cast<double>(b.y);
  return std::sqrt(dx * dx + dy * dy);
}

bool is_adjacent(GridCoord a, GridCoord b) {
  const int dx = std::abs(a.x - b.x);
  const int dy = std::abs(a.y - b.y);
  return dx <= 1 && dy <= 1 && (dx | dy) != 0;
}

double step_cost(GridCoord a, GridCoord b) {
  if (!is_adjacent(a, b))
    throw AdjacencyError(to_string(a) + " and " + to_string(b) + " are not 8-adjacent");
  return (a.x != b.x && a.y != b.y) ? kSqrt2 : 1.0;
}

double path_cost(std::span<const GridCoord> path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) total += step_cost(path[i - 1], path[i]);
  return total;
}

bool is_valid_path(const Grid& grid, std::span<const GridCoord> path) {
  if (path.empty() || path.front() != grid.start() || path.back() != grid.goal()) return false;
  if (!grid.is_traversable(path.front())) return false;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!move_allowed(grid, path[i - 1], path[i])) return false;
  return true;
}

bool reachable(const Grid& grid, GridCoord from, GridCoord to) {
  if (!grid.is_traversable(from) || !grid.is_traversable(to)) return false;
  if (from == to) return true;
  std::vector<std::uint8_t> seen(grid.cell_count(), 0);
  std::deque<GridCoord> frontier{from};
  seen[grid.index(from)] = 1;
  while (!frontier.empty()) {
    const GridCoord c = frontier.front();
    frontier.pop_front();
    for (const auto& n : traversable_neighbors(grid, c)) {
      auto& mark = seen[grid.index(n.cell)];
      if (mark) continue;
      if (n.cell == to) return true;
      mark = 1;
      frontier.push_back(n.cell);
    }
  }
  return false;
}

Grid read_grid(std::istream& in, GridOptions options) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw GridFormatError("grid text line " + std::to_string(line_no) + ": " + what);
  };

  if (!std::getline(in, line)) {
    line_no = 1;
    fail("missing 'WIDTH HEIGHT' header");
  }
  ++line_no;
  int width = 0;
  int height = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> width >> height) || (header >> extra)) fail("expected 'WIDTH HEIGHT'");
    if (width <= 0 || height <= 0) fail("dimensions must be positive");
  }

  std::vector<GridCoord> blocked;
  GridCoord start{-1, -1};
  GridCoord goal{-1, -1};
  for (int y = 0; y < height; ++y) {
    if (!std::getline(in, line)) {
      ++line_no;
      fail("expected " + std::to_string(height) + " rows, got " + std::to_string(y));
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != static_cast<std::size_t>(width))
      fail("row has " + std::to_string(line.size()) + " characters, expected " + std::to_string(width));
    for (int x = 0; x < width; ++x) {
      switch (line[static_cast<std::size_t>(x)]) {
        case '.':
          break;
        case '#':
          blocked.push_back({x, y});
          break;
        case 'S':
          if (start.x >= 0) fail("more than one 'S'");
          start = {x, y};
          break;
        case 'G':
          if (goal.x >= 0) fail("more than one 'G'");
          goal = {x, y};
          break;
        default:
          fail(std::string("unexpected character '") + line[static_cast<std::size_t>(x)] + "'");
      }
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) fail("trailing content after grid rows");
  }
  if (start.x < 0) fail("no 'S' cell");
  if (goal.x < 0) fail("no 'G' cell");
  return Grid(width, height, blocked, start, goal, options);
}

Grid load_grid(const std::filesystem::path& path, GridOptions options) {
  std::ifstream in(path);
  if (!in) throw GridFormatError("cannot open grid file " + path.string());
  return read_grid(in, options);
}

void write_grid(std::ostream& out, const Grid& grid) {
  if (grid.start() == grid.goal())
    throw GridFormatError("a grid with start == goal has no text representation");
  out << grid.width() << ' ' << grid.height() << '\n';
  std::string row(static_cast<std::size_t>(grid.width()), '.');
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      const GridCoord c{x, y};
      char ch = grid.is_traversable(c) ? '.' : '#';
      if (c == grid.start()) ch = 'S';
      if (c == grid.goal()) ch = 'G';
      row[static_cast<std::size_t>(x)] = ch;
    }
    out << row << '\n';
  }
}

void save_grid(const std::filesystem::path& path, const Grid& grid) {
  std::ofstream out(path);
  if (!out) throw GridFormatError("cannot write grid file " + path.string());
  write_grid(out, grid);
  if (!out) throw GridFormatError("write failed for " + path.string());
}

std::string to_text(const Grid& grid) {
  std::ostringstream os;
  write_grid(os, grid);
  return os.str();
}

}  // namespace gridbench
