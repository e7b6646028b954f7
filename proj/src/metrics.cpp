#include "gridbench/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridbench/errors.hpp"

namespace gridbench {

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::PathCost: return "path_cost";
    case Metric::MemoryKb: return "memory_kb";
    case Metric::SolveTimeMs: return "solving_time_ms";
  }
  return "?";
}

std::string_view axis_label(Metric m) {
  switch (m) {
    case Metric::PathCost: return "Path cost";
    case Metric::MemoryKb: return "Memory allocation (KB)";
    case Metric::SolveTimeMs: return "Solving time (ms)";
  }
  return "?";
}

double RunMetrics::value(Metric m) const {
  switch (m) {
    case Metric::PathCost: return path_cost;
    case Metric::MemoryKb: return memory_kb;
    case Metric::SolveTimeMs: return solve_time_ms;
  }
  return 0.0;
}

const AggregateStats& MetricStats::operator[](Metric m) const {
  switch (m) {
    case Metric::PathCost: return path_cost;
    case Metric::MemoryKb: return memory_kb;
    case Metric::SolveTimeMs: break;
  }
  return solve_time_ms;
}

AggregateStats& MetricStats::operator[](Metric m) {
  return const_cast<AggregateStats&>(static_cast<const MetricStats&>(*this)[m]);
}

AggregateStats aggregate(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("aggregate() needs at least one sample");
  AggregateStats stats;
  stats.n = samples.size();
  stats.min = samples.front();
  stats.max = samples.front();
  // Welford's update keeps the variance stable for large, tightly clustered samples.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (const double x : samples) {
    ++k;
    const double delta = x - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (x - mean);
    stats.min = std::min(stats.min, x);
    stats.max = std::max(stats.max, x);
  }
  stats.mean = std::clamp(mean, stats.min, stats.max);
  stats.stddev = stats.n > 1 ? std::sqrt(std::max(0.0, m2) / static_cast<double>(stats.n - 1)) : 0.0;
  return stats;
}

RunMetrics measure_run(const Grid& grid, AlgorithmId algo, const SolverParams& params) {
  SearchProbe probe;
  const auto started = std::chrono::steady_clock::now();
  const SearchOutcome outcome = solve(grid, algo, params, probe);
  const auto elapsed = std::chrono::steady_clock::now() - started;

  RunMetrics m;
  m.path_cost = outcome.path_cost;
  m.memory_kb = static_cast<double>(outcome.peak_memory_bytes) / 1024.0;
  m.solve_time_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  m.expanded = outcome.expanded;
  if (!std::isfinite(m.solve_time_ms) || m.solve_time_ms < 0.0)
    throw MeasurementError("clock returned an invalid interval");
  if (probe.live_bytes() != 0)
    throw MeasurementError(std::string(to_string(algo)) + " left " + std::to_string(probe.live_bytes()) +
                           " probe bytes live after returning");
  return m;
}

MetricStats run_repetitions(const Grid& grid, AlgorithmId algo, const SolverParams& params, int reps) {
  if (reps < 1) throw InvalidConfigError("repetitions must be >= 1, got " + std::to_string(reps));
  measure_run(grid, algo, params);

  std::vector<double> cost, memory, time;
  cost.reserve(static_cast<std::size_t>(reps));
  memory.reserve(static_cast<std::size_t>(reps));
  time.reserve(static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i) {
    const RunMetrics m = measure_run(grid, algo, params);
    cost.push_back(m.path_cost);
    memory.push_back(m.memory_kb);
    time.push_back(m.solve_time_ms);
  }
  MetricStats stats;
  stats.path_cost = aggregate(cost);
  stats.memory_kb = aggregate(memory);
  stats.solve_time_ms = aggregate(time);
  return stats;
}

}  // namespace gridbench
