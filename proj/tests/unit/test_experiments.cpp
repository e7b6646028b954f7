#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "gridbench/errors.hpp"
#include "gridbench/experiments.hpp"
#include "gridbench/generators.hpp"

using namespace gridbench;

namespace {

SweepConfig small(SweepKind kind, std::vector<double> values,
                  std::vector<AlgorithmId> algos = {AlgorithmId::AraStar, AlgorithmId::DStarLite}) {
  SweepConfig cfg;
  cfg.kind = kind;
  cfg.values = std::move(values);
  cfg.algorithms = std::move(algos);
  cfg.instances_per_point = 2;
  cfg.reps = 2;
  cfg.fixed.size = 30;
  cfg.fixed.sg_distance = 15;
  return cfg;
}

}  // namespace

TEST_CASE("sweep kind names") {
  for (const auto kind : {SweepKind::GridSize, SweepKind::SgDistance, SweepKind::Density, SweepKind::WallCount,
                          SweepKind::WallLength}) {
    CHECK(parse_sweep_kind(to_string(kind)) == kind);
    CHECK(parse_sweep_kind(file_stem(kind)) == kind);
  }
  CHECK_FALSE(parse_sweep_kind("nope").has_value());
}

TEST_CASE("default sweeps") {
  const auto sweeps = default_sweeps();
  REQUIRE(sweeps.size() == 5);
  CHECK(sweeps[0].values == std::vector<double>{50, 100, 150, 200, 250, 300});
  CHECK(sweeps[1].values == std::vector<double>{20, 60, 100, 140, 180, 220, 260});
  CHECK(sweeps[2].values == std::vector<double>{0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40});
  CHECK(sweeps[3].values == std::vector<double>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(sweeps[4].values == std::vector<double>{15, 17, 19, 21, 23, 25, 27});
  for (const auto& s : sweeps) {
    CHECK(s.algorithms.size() == 6);
    CHECK(s.instances_per_point == 10);
    CHECK(s.reps == 100);
    CHECK(s.fixed.size == 300);
    CHECK(s.fixed.density == 0.25);
    CHECK(s.fixed.sg_distance == 140.0);
    CHECK_NOTHROW(s.validate());
  }
}

TEST_CASE("config validation") {
  auto cfg = small(SweepKind::GridSize, {20, 30});
  CHECK_NOTHROW(cfg.validate());
  cfg.algorithms.clear();
  CHECK_THROWS_AS(cfg.validate(), InvalidConfigError);
  CHECK_THROWS_AS(run_sweep(cfg), InvalidConfigError);
  cfg = small(SweepKind::GridSize, {});
  CHECK_THROWS_AS(cfg.validate(), InvalidConfigError);
  cfg = small(SweepKind::GridSize, {30, 20});
  CHECK_THROWS_AS(cfg.validate(), InvalidConfigError);
  cfg = small(SweepKind::GridSize, {20, 20});
  CHECK_THROWS_AS(cfg.validate(), InvalidConfigError);
  cfg = small(SweepKind::GridSize, {20});
  cfg.instances_per_point = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidConfigError);
}

TEST_CASE("effective start-goal distance") {
  CHECK(effective_sg_distance(300, 140) == 140);
  CHECK(effective_sg_distance(50, 140) == doctest::Approx(0.5 * std::sqrt(2.0) * 49));
  CHECK(effective_sg_distance(100, 20) == 20);
}

TEST_CASE("grid-size sweep: row count and layout") {
  const auto report = run_sweep(small(SweepKind::GridSize, {20, 30}));
  REQUIRE(report.rows.size() == 4);
  // Value-major, algorithms in config order.
  CHECK(report.rows[0].value == 20);
  CHECK(report.rows[0].algorithm == AlgorithmId::AraStar);
  CHECK(report.rows[1].algorithm == AlgorithmId::DStarLite);
  CHECK(report.rows[2].value == 30);
  for (const auto& r : report.rows) {
    CHECK(r.stats.path_cost.n == 2);
    CHECK(r.point.density.has_value());
    CHECK_FALSE(r.point.num_walls.has_value());
    CHECK(r.point.grid_size == std::to_string(static_cast<int>(r.value)));
    CHECK(r.stats.memory_kb.mean > 0.0);
  }
  // Both optimal solvers agree on path cost at every point.
  CHECK(report.rows[0].stats.path_cost.mean == doctest::Approx(report.rows[1].stats.path_cost.mean));
  CHECK(report.provenance.find("seed=1") != std::string::npos);
  CHECK(report.provenance.find(std::string(kCodeVersion)) != std::string::npos);
}

TEST_CASE("row completeness") {
  auto cfg = small(SweepKind::Density, {0.1, 0.2, 0.3},
                   {AlgorithmId::LrtaStar, AlgorithmId::RtaaStar, AlgorithmId::LpaStar});
  cfg.instances_per_point = 1;
  const auto report = run_sweep(cfg);
  CHECK(report.rows.size() == 9);
  std::set<std::pair<int, double>> seen;
  for (const auto& r : report.rows) seen.insert({static_cast<int>(r.algorithm), r.value});
  CHECK(seen.size() == 9);
}

TEST_CASE("reproducible cost and memory aggregates") {
  const auto cfg = small(SweepKind::SgDistance, {5, 15}, {AlgorithmId::RtaaStar, AlgorithmId::DStar});
  const auto a = run_sweep(cfg);
  const auto b = run_sweep(cfg);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].stats.path_cost.mean == b.rows[i].stats.path_cost.mean);
    CHECK(a.rows[i].stats.path_cost.stddev == b.rows[i].stats.path_cost.stddev);
    CHECK(a.rows[i].stats.memory_kb.mean == b.rows[i].stats.memory_kb.mean);
    CHECK(a.rows[i].point.sg_distance == b.rows[i].point.sg_distance);
  }
}

TEST_CASE("parallel pairs leave deterministic metrics unchanged") {
  auto cfg = small(SweepKind::Density, {0.1, 0.3}, {AlgorithmId::LpaStar, AlgorithmId::RtaaStar});
  const auto serial = run_sweep(cfg);
  cfg.parallel_pairs = true;
  const auto parallel = run_sweep(cfg);
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].stats.path_cost.mean == parallel.rows[i].stats.path_cost.mean);
    CHECK(serial.rows[i].stats.memory_kb.mean == parallel.rows[i].stats.memory_kb.mean);
  }
}

TEST_CASE("aggregation across instances uses per-grid means") {
  auto cfg = small(SweepKind::SgDistance, {12}, {AlgorithmId::AStarOracle});
  cfg.instances_per_point = 4;
  const auto report = run_sweep(cfg);
  const auto grids = grids_for_point(cfg, 0);
  REQUIRE(grids.size() == 4);
  std::vector<double> costs;
  for (const auto& g : grids) costs.push_back(solve(g, AlgorithmId::AStarOracle).path_cost);
  const auto expected = aggregate(costs);
  CHECK(report.rows[0].stats.path_cost.n == 4);
  CHECK(report.rows[0].stats.path_cost.mean == doctest::Approx(expected.mean));
  CHECK(report.rows[0].stats.path_cost.stddev == doctest::Approx(expected.stddev));
}

TEST_CASE("wall sweeps use one deterministic grid per point") {
  auto cfg = small(SweepKind::WallCount, {0, 3, 7});
  const auto report = run_sweep(cfg);
  REQUIRE(report.rows.size() == 6);
  for (const auto& r : report.rows) {
    CHECK(r.stats.path_cost.n == 1);
    CHECK(r.point.grid_size == "31x71");
    CHECK(r.point.num_walls == static_cast<int>(r.value));
    CHECK(r.point.wall_length == cfg.fixed.wall_length);
    CHECK_FALSE(r.point.density.has_value());
    CHECK(r.point.sg_distance == doctest::Approx(73.539).epsilon(1e-5));
  }
  const auto grids = grids_for_point(cfg, 2);
  REQUIRE(grids.size() == 1);
  CHECK(grids[0] == generate_wall_grid({7, cfg.fixed.wall_length}));

  cfg = small(SweepKind::WallLength, {15, 27});
  const auto lengths = run_sweep(cfg);
  for (const auto& r : lengths.rows) {
    CHECK(r.point.wall_length == static_cast<int>(r.value));
    CHECK(r.point.num_walls == cfg.fixed.num_walls);
  }
}

TEST_CASE("generation failure names the sweep point") {
  auto cfg = small(SweepKind::Density, {0.1, 0.97});
  try {
    run_sweep(cfg);
    FAIL("expected a generation failure");
  } catch (const GenerationError& e) {
    const std::string what = e.what();
    CHECK(what.find("DENSITY") != std::string::npos);
    CHECK(what.find("0.97") != std::string::npos);
  }
}

TEST_CASE("oracle cost grows with start-goal distance") {
  auto cfg = small(SweepKind::SgDistance, {5, 10, 20, 30}, {AlgorithmId::AStarOracle});
  cfg.instances_per_point = 3;
  const auto report = run_sweep(cfg);
  for (std::size_t i = 1; i < report.rows.size(); ++i)
    CHECK(report.rows[i].stats.path_cost.mean > report.rows[i - 1].stats.path_cost.mean);
}
