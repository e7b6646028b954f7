#include <doctest.h>

#include <random>
#include <sstream>

#include "gridbench/errors.hpp"
#include "gridbench/generators.hpp"
#include "gridbench/grid.hpp"
#include "oracles.hpp"

using namespace gridbench;

namespace {

Grid empty_grid(int w, int h, GridCoord s = {0, 0}, GridCoord g = {-1, -1}) {
  if (g.x < 0) g = {w - 1, h - 1};
  return Grid(w, h, {}, s, g);
}

}  // namespace

TEST_CASE("in_bounds") {
  const Grid g = empty_grid(10, 10);
  CHECK(in_bounds(g, {0, 0}));
  CHECK_FALSE(in_bounds(g, {10, 0}));
  CHECK_FALSE(in_bounds(g, {0, -1}));
  const Grid tall = empty_grid(31, 71);
  CHECK(in_bounds(tall, {29, 69}));
  CHECK_FALSE(in_bounds(tall, {31, 5}));
}

TEST_CASE("is_traversable") {
  const std::vector<GridCoord> blocked = {{2, 3}};
  const Grid g(5, 5, blocked, {0, 0}, {4, 4});
  CHECK(is_traversable(g, {1, 1}));
  CHECK_FALSE(is_traversable(g, {2, 3}));
  CHECK_FALSE(is_traversable(g, {5, 0}));
  CHECK_FALSE(is_traversable(g, {-1, 2}));
}

TEST_CASE("neighbors8 of an interior cell") {
  const Grid g = empty_grid(5, 5);
  const auto ns = neighbors8(g, {2, 2});
  REQUIRE(ns.size() == 8);
  int unit = 0, diag = 0;
  for (const auto& n : ns) {
    if (n.cost == 1.0) ++unit;
    if (n.cost == kSqrt2) ++diag;
  }
  CHECK(unit == 4);
  CHECK(diag == 4);
  // Clockwise from north.
  const std::vector<GridCoord> expected = {{2, 1}, {3, 1}, {3, 2}, {3, 3}, {2, 3}, {1, 3}, {1, 2}, {1, 1}};
  for (std::size_t i = 0; i < 8; ++i) CHECK(ns[i].cell == expected[i]);
}

TEST_CASE("neighbors8 of a corner") {
  const Grid g = empty_grid(5, 5, {4, 4}, {2, 2});
  const auto ns = neighbors8(g, {0, 0});
  REQUIRE(ns.size() == 3);
  CHECK(ns[0].cell == GridCoord{1, 0});
  CHECK(ns[0].cost == 1.0);
  CHECK(ns[1].cell == GridCoord{1, 1});
  CHECK(ns[1].cost == doctest::Approx(kSqrt2));
  CHECK(ns[2].cell == GridCoord{0, 1});
  CHECK(ns[2].cost == 1.0);
}

TEST_CASE("corner cutting rule") {
  // (3,2) blocked: diagonals NE and SE of (2,2) each have it as a flank.
  const std::vector<GridCoord> blocked = {{3, 2}};
  const Grid g(5, 5, blocked, {0, 0}, {4, 4});
  auto has = [](const NeighborList& ns, GridCoord c) {
    for (const auto& n : ns)
      if (n.cell == c) return true;
    return false;
  };
  const auto ns = neighbors8(g, {2, 2});
  CHECK(ns.size() == 5);
  CHECK_FALSE(has(ns, {3, 1}));
  CHECK_FALSE(has(ns, {3, 3}));
  CHECK_FALSE(has(ns, {3, 2}));
  CHECK_FALSE(move_allowed(g, {2, 2}, {3, 3}));

  const Grid cutting = g.with_corner_cutting(true);
  const auto cs = neighbors8(cutting, {2, 2});
  CHECK(cs.size() == 7);
  CHECK(has(cs, {3, 1}));
  CHECK(has(cs, {3, 3}));
}

TEST_CASE("neighbors8 rejects non-traversable cells") {
  const std::vector<GridCoord> blocked = {{1, 1}};
  const Grid g(3, 3, blocked, {0, 0}, {2, 2});
  CHECK_THROWS_AS(neighbors8(g, {1, 1}), InvalidCellError);
  CHECK_THROWS_AS(neighbors8(g, {3, 3}), InvalidCellError);
}

TEST_CASE("neighbors8 size and traversability property") {
  const Grid g = generate_random_grid({20, 0.3, 10, 5});
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      if (!g.is_traversable({x, y})) continue;
      const auto ns = neighbors8(g, {x, y});
      CHECK(ns.size() <= 8);
      for (const auto& n : ns) {
        CHECK(g.is_traversable(n.cell));
        CHECK(n.cost == step_cost({x, y}, n.cell));
      }
    }
  }
}

TEST_CASE("euclidean_heuristic") {
  CHECK(euclidean_heuristic({0, 0}, {3, 4}) == 5.0);
  CHECK(euclidean_heuristic({7, 2}, {7, 2}) == 0.0);
  CHECK(std::abs(euclidean_heuristic({1, 1}, {29, 69}) - 73.539) <= 0.001);
}

TEST_CASE("euclidean_heuristic is a metric on sampled triples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 40);
  for (int i = 0; i < 500; ++i) {
    const GridCoord a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
    CHECK(euclidean_heuristic(a, b) >= 0.0);
    CHECK(euclidean_heuristic(a, b) == euclidean_heuristic(b, a));
    CHECK((euclidean_heuristic(a, b) == 0.0) == (a == b));
    CHECK(euclidean_heuristic(a, c) <= euclidean_heuristic(a, b) + euclidean_heuristic(b, c) + 1e-12);
  }
}

TEST_CASE("step_cost") {
  CHECK(step_cost({2, 2}, {2, 3}) == 1.0);
  CHECK(step_cost({2, 2}, {3, 3}) == doctest::Approx(1.41421356));
  CHECK_THROWS_AS(step_cost({2, 2}, {2, 4}), AdjacencyError);
  CHECK_THROWS_AS(step_cost({2, 2}, {2, 2}), AdjacencyError);
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy)
      if (dx || dy) CHECK(step_cost({5, 5}, {5 + dx, 5 + dy}) == step_cost({5 + dx, 5 + dy}, {5, 5}));
}

TEST_CASE("euclidean heuristic is admissible against the relaxation oracle") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Grid g = generate_random_grid({20, 0.25, 12, seed});
    const auto d = oracle::distances_from(g, g.goal());
    for (int y = 0; y < g.height(); ++y)
      for (int x = 0; x < g.width(); ++x) {
        const double true_cost = d[static_cast<std::size_t>(y) * g.width() + x];
        if (true_cost < kInfinity) CHECK(euclidean_heuristic({x, y}, g.goal()) <= true_cost + 1e-9);
      }
  }
}

TEST_CASE("grid construction invariants") {
  const std::vector<GridCoord> on_start = {{0, 0}};
  CHECK_THROWS_AS(Grid(3, 3, on_start, {0, 0}, {2, 2}), InvalidGridError);
  const std::vector<GridCoord> outside = {{3, 0}};
  CHECK_THROWS_AS(Grid(3, 3, outside, {0, 0}, {2, 2}), InvalidGridError);
  CHECK_THROWS_AS(Grid(3, 3, {}, {0, 0}, {0, 0}), InvalidGridError);
  CHECK_NOTHROW(Grid(3, 3, {}, {0, 0}, {0, 0}, GridOptions{false, true}));
  CHECK_THROWS_AS(Grid(0, 3, {}, {0, 0}, {0, 1}), InvalidGridError);
}

TEST_CASE("path helpers") {
  const Grid g = empty_grid(4, 4);
  const std::vector<GridCoord> diag = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(path_cost(diag) == doctest::Approx(3 * kSqrt2));
  CHECK(is_valid_path(g, diag));
  const std::vector<GridCoord> jump = {{0, 0}, {2, 2}, {3, 3}};
  CHECK_FALSE(is_valid_path(g, jump));
  const std::vector<GridCoord> wrong_end = {{0, 0}, {1, 1}};
  CHECK_FALSE(is_valid_path(g, wrong_end));
}

TEST_CASE("grid text format") {
  const std::string text =
      "4 3\n"
      "S.#.\n"
      "..#.\n"
      "...G\n";
  std::istringstream in(text);
  const Grid g = read_grid(in);
  CHECK(g.width() == 4);
  CHECK(g.height() == 3);
  CHECK(g.start() == GridCoord{0, 0});
  CHECK(g.goal() == GridCoord{3, 2});
  CHECK(g.blocked_count() == 2);
  CHECK_FALSE(g.is_traversable({2, 1}));
  CHECK(to_text(g) == text);

  auto bad = [](const std::string& s) {
    std::istringstream is(s);
    return read_grid(is);
  };
  CHECK_THROWS_AS(bad("2 2\nS.\n..\n"), GridFormatError);          // no goal
  CHECK_THROWS_AS(bad("2 2\nSG\nS.\n"), GridFormatError);          // two starts
  CHECK_THROWS_AS(bad("2 2\nSG\n.\n"), GridFormatError);           // short row
  CHECK_THROWS_AS(bad("2 2\nSG\n.x\n"), GridFormatError);          // bad symbol
  CHECK_THROWS_AS(bad("2 3\nSG\n..\n"), GridFormatError);          // missing row
  CHECK_THROWS_AS(bad("two 2\nSG\n..\n"), GridFormatError);        // bad header
}

TEST_CASE("grid file round-trip over generated grids") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Grid g = generate_random_grid({15 + static_cast<int>(seed), 0.2, 8, seed});
    std::ostringstream out;
    write_grid(out, g);
    std::istringstream in(out.str());
    CHECK(read_grid(in) == g);
  }
  for (int walls = 0; walls <= kMaxWalls; ++walls) {
    const Grid g = generate_wall_grid({walls, 21});
    std::istringstream in(to_text(g));
    CHECK(read_grid(in) == g);
  }
}

TEST_CASE("reachable") {
  std::vector<GridCoord> wall;
  for (int x = 0; x < 5; ++x) wall.push_back({x, 2});
  const Grid cut(5, 5, wall, {0, 0}, {4, 4});
  CHECK_FALSE(reachable(cut, cut.start(), cut.goal()));
  CHECK(reachable(empty_grid(5, 5), {0, 0}, {4, 4}));
  // Diagonal squeeze only opens with corner cutting.
  const std::vector<GridCoord> pinch = {{1, 0}, {0, 1}};
  const Grid squeezed(3, 3, pinch, {0, 0}, {2, 2});
  CHECK_FALSE(reachable(squeezed, squeezed.start(), squeezed.goal()));
  CHECK(reachable(squeezed.with_corner_cutting(true), {0, 0}, {2, 2}));
}
