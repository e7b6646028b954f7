#include "gridbench/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "gridbench/errors.hpp"
#include "gridbench/generators.hpp"

namespace gridbench {

namespace {

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string join_values(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_value(values[i]);
  }
  return out;
}

bool is_wall_sweep(SweepKind kind) { return kind == SweepKind::WallCount || kind == SweepKind::WallLength; }

int as_int(double v, std::string_view what) {
  if (v != std::floor(v)) throw InvalidConfigError(std::string(what) + " must be an integer, got " + format_value(v));
  return static_cast<int>(v);
}

WallGridSpec wall_spec(const SweepConfig& cfg, double value) {
  WallGridSpec spec;
  spec.allow_corner_cutting = cfg.allow_corner_cutting;
  if (cfg.kind == SweepKind::WallCount) {
    spec.num_walls = as_int(value, "number of walls");
    spec.wall_length = cfg.fixed.wall_length;
  } else {
    spec.num_walls = cfg.fixed.num_walls;
    spec.wall_length = as_int(value, "wall length");
  }
  return spec;
}

RandomGridSpec random_spec(const SweepConfig& cfg, double value, std::size_t value_index) {
  RandomGridSpec spec;
  spec.n = cfg.fixed.size;
  spec.density = cfg.fixed.density;
  spec.allow_corner_cutting = cfg.allow_corner_cutting;
  switch (cfg.kind) {
    case SweepKind::GridSize:
      spec.n = as_int(value, "grid size");
      spec.sg_distance = effective_sg_distance(spec.n, cfg.fixed.sg_distance);
      break;
    case SweepKind::SgDistance:
      spec.sg_distance = value;
      break;
    case SweepKind::Density:
      spec.density = value;
      spec.sg_distance = effective_sg_distance(spec.n, cfg.fixed.sg_distance);
      break;
    default:
      throw InvalidConfigError("not a random-grid sweep");
  }
  spec.seed = cfg.seed + 1000u * static_cast<std::uint64_t>(value_index);
  return spec;
}

PointDescriptor describe(const SweepConfig& cfg, double value, std::size_t value_index,
                         const std::vector<Grid>& grids) {
  PointDescriptor d;
  double distance = 0.0;
  for (const auto& g : grids) distance += euclidean_heuristic(g.start(), g.goal());
  d.sg_distance = distance / static_cast<double>(grids.size());
  if (is_wall_sweep(cfg.kind)) {
    const WallGridSpec spec = wall_spec(cfg, value);
    d.num_walls = spec.num_walls;
    d.wall_length = spec.wall_length;
    d.grid_size = std::to_string(kWallGridWidth) + "x" + std::to_string(kWallGridHeight);
  } else {
    const RandomGridSpec spec = random_spec(cfg, value, value_index);
    d.density = spec.density;
    d.grid_size = std::to_string(spec.n);
  }
  return d;
}

std::string provenance_text(const SweepConfig& cfg) {
  std::ostringstream os;
  os << "version=" << kCodeVersion << '\n'
     << "sweep=" << to_string(cfg.kind) << '\n'
     << "values=" << join_values(cfg.values) << (cfg.values_are_defaults ? " (default list, interpolated)" : "")
     << '\n'
     << "fixed.size=" << cfg.fixed.size << '\n'
     << "fixed.density=" << format_value(cfg.fixed.density) << '\n'
     << "fixed.sg_distance=" << format_value(cfg.fixed.sg_distance)
     << " (capped at half the grid diagonal when infeasible)\n"
     << "fixed.num_walls=" << cfg.fixed.num_walls << '\n'
     << "fixed.wall_length=" << cfg.fixed.wall_length << '\n'
     << "algorithms=";
  for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) os << (i ? "," : "") << to_string(cfg.algorithms[i]);
  os << '\n'
     << "instances_per_point=" << cfg.instances_per_point << '\n'
     << "reps=" << cfg.reps << '\n'
     << "seed=" << cfg.seed << '\n'
     << "lookahead=" << cfg.params.lookahead << '\n'
     << "ara_initial_weight=" << format_value(cfg.params.ara_initial_weight) << '\n'
     << "ara_weight_decrement=" << format_value(cfg.params.ara_weight_decrement) << '\n'
     << "tie_break=" << (cfg.params.tie_break == TieBreak::HighG ? "high_g" : "low_g") << '\n'
     << "allow_corner_cutting=" << (cfg.allow_corner_cutting ? "true" : "false") << '\n'
     << "memory=peak search-structure bytes / 1024; time=solve call only, after one warm-up run\n";
  return os.str();
}

// Runs job(i) for i in [0, count), on one worker per hardware thread when
// `parallel` is set. Each worker runs one timed job at a time.
template <class Job>
void run_jobs(std::size_t count, bool parallel, Job job) {
  const unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::string_view to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::GridSize: return "GRID_SIZE";
    case SweepKind::SgDistance: return "SG_DISTANCE";
    case SweepKind::Density: return "DENSITY";
    case SweepKind::WallCount: return "WALL_COUNT";
    case SweepKind::WallLength: return "WALL_LENGTH";
  }
  return "?";
}

std::string_view file_stem(SweepKind kind) {
  switch (kind) {
    case SweepKind::GridSize: return "grid_size";
    case SweepKind::SgDistance: return "sg_distance";
    case SweepKind::Density: return "density";
    case SweepKind::WallCount: return "wall_count";
    case SweepKind::WallLength: return "wall_length";
  }
  return "?";
}

std::string_view axis_label(SweepKind kind) {
  switch (kind) {
    case SweepKind::GridSize: return "Grid size";
    case SweepKind::SgDistance: return "SG distance";
    case SweepKind::Density: return "Obstacle density";
    case SweepKind::WallCount: return "Number of walls";
    case SweepKind::WallLength: return "Walls length";
  }
  return "?";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view text) {
  std::string key;
  for (const char ch : text) {
    if (ch == '-' || ch == ' ') {
      key += '_';
      continue;
    }
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  for (const SweepKind k : {SweepKind::GridSize, SweepKind::SgDistance, SweepKind::Density,
                            SweepKind::WallCount, SweepKind::WallLength}) {
    if (key == file_stem(k)) return k;
  }
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (values.empty()) throw InvalidConfigError(std::string(to_string(kind)) + ": value list is empty");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1]))
      throw InvalidConfigError(std::string(to_string(kind)) + ": values must be strictly increasing");
  if (algorithms.empty()) throw InvalidConfigError(std::string(to_string(kind)) + ": algorithm list is empty");
  if (instances_per_point < 1) throw InvalidConfigError("instances_per_point must be >= 1");
  if (reps < 1) throw InvalidConfigError("reps must be >= 1");
  if (fixed.size < 3) throw InvalidConfigError("size must be >= 3");
  if (!(fixed.density >= 0.0 && fixed.density < 1.0)) throw InvalidConfigError("density must lie in [0, 1)");
  if (!(fixed.sg_distance >= 0.0)) throw InvalidConfigError("sg_distance must be >= 0");
  params.validate();
}

double effective_sg_distance(int n, double requested) {
  return std::min(requested, 0.5 * kSqrt2 * static_cast<double>(n - 1));
}

std::vector<Grid> grids_for_point(const SweepConfig& cfg, std::size_t value_index) {
  const double value = cfg.values.at(value_index);
  try {
    if (is_wall_sweep(cfg.kind)) return {generate_wall_grid(wall_spec(cfg, value))};
    return generate_instance_set(random_spec(cfg, value, value_index), cfg.instances_per_point);
  } catch (const Error& e) {
    throw GenerationError(std::string(to_string(cfg.kind)) + " point " + format_value(value) + ": " + e.what());
  }
}

ExperimentReport run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  ExperimentReport report;
  report.config = cfg;
  report.provenance = provenance_text(cfg);

  std::vector<std::vector<Grid>> grids;
  grids.reserve(cfg.values.size());
  for (std::size_t v = 0; v < cfg.values.size(); ++v) grids.push_back(grids_for_point(cfg, v));

  struct Job {
    std::size_t value_index;
    std::size_t algo_index;
    std::size_t instance;
  };
  std::vector<Job> jobs;
  for (std::size_t v = 0; v < grids.size(); ++v)
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a)
      for (std::size_t i = 0; i < grids[v].size(); ++i) jobs.push_back({v, a, i});

  std::vector<MetricStats> per_instance(jobs.size());
  run_jobs(jobs.size(), cfg.parallel_pairs, [&](std::size_t j) {
    const Job& job = jobs[j];
    per_instance[j] =
        run_repetitions(grids[job.value_index][job.instance], cfg.algorithms[job.algo_index], cfg.params, cfg.reps);
  });

  std::size_t j = 0;
  for (std::size_t v = 0; v < grids.size(); ++v) {
    const PointDescriptor point = describe(cfg, cfg.values[v], v, grids[v]);
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
      ReportRow row;
      row.algorithm = cfg.algorithms[a];
      row.value = cfg.values[v];
      row.point = point;
      for (const Metric m : kAllMetrics) {
        std::vector<double> means;
        for (std::size_t i = 0; i < grids[v].size(); ++i) means.push_back(per_instance[j + i][m].mean);
        row.stats[m] = aggregate(means);
      }
      j += grids[v].size();
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::vector<SweepConfig> default_sweeps() {
  const std::vector<AlgorithmId> algorithms(benchmarked_algorithms().begin(), benchmarked_algorithms().end());
  auto make = [&](SweepKind kind, std::vector<double> values) {
    SweepConfig cfg;
    cfg.kind = kind;
    cfg.values = std::move(values);
    cfg.algorithms = algorithms;
    cfg.values_are_defaults = true;
    return cfg;
  };
  std::vector<double> lengths;
  for (const int l : wall_length_sequence()) lengths.push_back(l);
  return {
      make(SweepKind::GridSize, {50, 100, 150, 200, 250, 300}),
      make(SweepKind::SgDistance, {20, 60, 100, 140, 180, 220, 260}),
      make(SweepKind::Density, {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40}),
      make(SweepKind::WallCount, {0, 1, 2, 3, 4, 5, 6, 7}),
      make(SweepKind::WallLength, std::move(lengths)),
  };
}

}  // namespace gridbench
