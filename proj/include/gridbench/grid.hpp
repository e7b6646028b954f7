#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace gridbench {

inline constexpr double kSqrt2 = std::numbers::sqrt2;

// Strictly greater than any finite cost; IEEE addition saturates on it.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// x is the column, y the row; the origin is the top-left cell.
struct GridCoord {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

struct GridCoordHash {
  std::size_t operator()(const GridCoord& c) const noexcept {
    return (static_cast<std::size_t>(static_cast<std::uint32_t>(c.x)) << 32) ^
           static_cast<std::uint32_t>(c.y);
  }
};

std::ostream& operator<<(std::ostream& os, const GridCoord& c);
std::string to_string(const GridCoord& c);

struct Neighbor {
  GridCoord cell;
  double cost = 0.0;
};

// Fixed-capacity neighbor list; neighbors8 is on every solver's hot path.
class NeighborList {
public:
  void push_back(const Neighbor& n) { items_[size_++] = n; }

  const Neighbor* begin() const { return items_.data(); }
  const Neighbor* end() const { return items_.data() + size_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const Neighbor& operator[](std::size_t i) const { return items_[i]; }

private:
  std::array<Neighbor, 8> items_{};
  std::size_t size_ = 0;
};

struct GridOptions {
  // Permit a diagonal move even when one of its flanking orthogonal cells is
  // blocked. Off by default: the agent may not squeeze between obstacles.
  bool allow_corner_cutting = false;
  // Permit start == goal.
  bool allow_trivial = false;

  friend bool operator==(const GridOptions&, const GridOptions&) = default;
};

// Immutable rectangular cell world. Blocked cells are stored as a row-major
// occupancy map; blocked_cells() reproduces the set view.
class Grid {
public:
  Grid(int width, int height, std::span<const GridCoord> blocked, GridCoord start,
       GridCoord goal, GridOptions options = {});

  int width() const { return width_; }
  int height() const { return height_; }
  GridCoord start() const { return start_; }
  GridCoord goal() const { return goal_; }
  bool allow_corner_cutting() const { return options_.allow_corner_cutting; }
  const GridOptions& options() const { return options_; }

  std::size_t cell_count() const { return occupancy_.size(); }
  std::size_t blocked_count() const { return blocked_count_; }
  std::vector<GridCoord> blocked_cells() const;

  bool in_bounds(GridCoord c) const {
    return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
  }
  bool is_traversable(GridCoord c) const { return in_bounds(c) && occupancy_[index(c)] == 0; }

  std::uint32_t index(GridCoord c) const {
    return static_cast<std::uint32_t>(c.y) * static_cast<std::uint32_t>(width_) +
           static_cast<std::uint32_t>(c.x);
  }
  GridCoord coord(std::uint32_t index) const {
    return {static_cast<int>(index % static_cast<std::uint32_t>(width_)),
            static_cast<int>(index / static_cast<std::uint32_t>(width_))};
  }

  // Copy with cells added to / removed from the blocked set. Used to model a
  // changed world for the incremental planners.
  Grid with_changes(std::span<const GridCoord> newly_blocked,
                    std::span<const GridCoord> newly_free = {}) const;
  Grid with_corner_cutting(bool allow) const;
  Grid with_endpoints(GridCoord start, GridCoord goal) const;

  friend bool operator==(const Grid&, const Grid&) = default;

private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> occupancy_;
  std::size_t blocked_count_ = 0;
  GridCoord start_;
  GridCoord goal_;
  GridOptions options_;

  void validate() const;
};

inline bool in_bounds(const Grid& grid, GridCoord c) { return grid.in_bounds(c); }
inline bool is_traversable(const Grid& grid, GridCoord c) { return grid.is_traversable(c); }

// Traversable 8-neighbors of c, clockwise from north, with move costs 1 and
// sqrt(2). A diagonal needs both flanking orthogonal cells free unless the
// grid allows corner cutting. Throws InvalidCellError if c is not traversable.
NeighborList neighbors8(const Grid& grid, GridCoord c);

// Same enumeration without the precondition: empty for blocked or
// out-of-bounds cells.
NeighborList traversable_neighbors(const Grid& grid, GridCoord c);

// True when a single move a -> b is legal on the grid.
bool move_allowed(const Grid& grid, GridCoord a, GridCoord b);

double euclidean_heuristic(GridCoord a, GridCoord b);

// 1 for orthogonal neighbors, sqrt(2) for diagonal ones. Throws AdjacencyError
// otherwise.
double step_cost(GridCoord a, GridCoord b);

bool is_adjacent(GridCoord a, GridCoord b);

// Sum of step costs along the path. Throws AdjacencyError on a gap.
double path_cost(std::span<const GridCoord> path);

// A chain of legal moves from grid.start() to grid.goal().
bool is_valid_path(const Grid& grid, std::span<const GridCoord> path);

// Breadth-first reachability under the grid's movement model.
bool reachable(const Grid& grid, GridCoord from, GridCoord to);

// Text format: "WIDTH HEIGHT", then HEIGHT rows of WIDTH characters drawn from
// '.', '#', 'S', 'G' with exactly one 'S' and one 'G'.
Grid read_grid(std::istream& in, GridOptions options = {});
Grid load_grid(const std::filesystem::path& path, GridOptions options = {});
void write_grid(std::ostream& out, const Grid& grid);
void save_grid(const std::filesystem::path& path, const Grid& grid);
std::string to_text(const Grid& grid);

}  // namespace gridbench
