#include "gridbench/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <vector>

#include "gridbench/config.hpp"
#include "gridbench/errors.hpp"
#include "gridbench/generators.hpp"
#include "gridbench/report.hpp"
#include "gridbench/selector.hpp"

namespace gridbench {

namespace {

struct GridArgs {
  std::string path;
  bool corner_cutting = false;
};

void add_grid_args(CLI::App* cmd, GridArgs& g) {
  cmd->add_option("grid", g.path, "Grid file ('.' free, '#' blocked, 'S' start, 'G' goal)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_flag("--allow-corner-cutting", g.corner_cutting, "Permit diagonal moves past blocked corners");
}

Grid load(const GridArgs& g) {
  GridOptions opts;
  opts.allow_corner_cutting = g.corner_cutting;
  return load_grid(g.path, opts);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw Error("write failed for " + path);
}

int run_sweeps(const std::string& config_path, const std::string& output_dir, int reps_override,
               int instances_override, std::ostream& out) {
  RunPlan plan = parse_config(config_path);
  if (!output_dir.empty()) plan.output_dir = output_dir;
  std::filesystem::create_directories(plan.output_dir);
  for (auto& cfg : plan.sweeps) {
    if (reps_override > 0) cfg.reps = reps_override;
    if (instances_override > 0) cfg.instances_per_point = instances_override;
    const ExperimentReport report = run_sweep(cfg);
    const std::string stem(file_stem(cfg.kind));
    const auto csv = plan.output_dir / (stem + ".csv");
    const std::size_t n = write_csv(report, csv);
    render_plots(report, plan.output_dir);
    write_text((plan.output_dir / (stem + ".provenance.txt")).string(), report.provenance);
    out << to_string(cfg.kind) << ": " << n << " rows -> " << csv.string() << '\n';
  }
  return 0;
}

int run_solve(const GridArgs& g, const std::string& algo_name, bool show_path, const SolverParams& params,
              std::ostream& out) {
  const auto algo = parse_algorithm(algo_name);
  if (!algo) throw InvalidConfigError("unknown algorithm '" + algo_name + "'");
  const Grid grid = load(g);
  SearchOutcome res;
  try {
    res = solve(grid, *algo, params);
  } catch (const NoPathError&) {
    out << "no path\n";
    return 1;
  }
  out << "algorithm: " << to_string(*algo) << '\n'
      << "path_cost: " << format3(res.path_cost) << '\n'
      << "steps: " << (res.path.empty() ? 0 : res.path.size() - 1) << '\n'
      << "expanded: " << res.expanded << '\n'
      << "memory_kb: " << format3(static_cast<double>(res.peak_memory_bytes) / 1024.0) << '\n'
      << "solve_time_ms: " << format3(res.solve_time_ms) << '\n';
  for (const auto& it : res.iterations)
    out << "iterate: weight " << format3(it.weight) << " cost " << format3(it.cost) << " expanded "
        << it.expanded << '\n';
  if (show_path) {
    for (const auto& c : res.path) out << c.x << ' ' << c.y << '\n';
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benchmark and select grid path-planning algorithms", "gridbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kCodeVersion));

  std::string config_path, output_dir;
  int sweep_reps = 0, sweep_instances = 0;
  auto* sweep = app.add_subcommand("sweep", "Run the sweeps of a config file; write CSV tables and SVG plots");
  sweep->add_option("config", config_path, "Config file (key=value lines)")->required()->check(CLI::ExistingFile);
  sweep->add_option("-o,--output-dir", output_dir, "Output directory (overrides the config)");
  sweep->add_option("--reps", sweep_reps, "Override repetitions per measurement")->check(CLI::PositiveNumber);
  sweep->add_option("--instances", sweep_instances, "Override instances per point")->check(CLI::PositiveNumber);

  GridArgs solve_grid;
  std::string algo_name;
  bool show_path = false;
  SolverParams params;
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on a grid file");
  add_grid_args(solve_cmd, solve_grid);
  solve_cmd->add_option("-a,--algo", algo_name, "Algorithm id, e.g. D_STAR_LITE or 'LRTA*'")->required();
  solve_cmd->add_flag("--path", show_path, "Print the executed path as 'x y' lines");
  solve_cmd->add_option("--lookahead", params.lookahead, "Real-time lookahead expansions")
      ->check(CLI::PositiveNumber);

  GridArgs select_grid;
  std::string priority_name;
  double threshold = kDefaultDistanceThreshold;
  auto* select_cmd = app.add_subcommand("select", "Print the recommended algorithm for a grid");
  add_grid_args(select_cmd, select_grid);
  select_cmd->add_option("-p,--priority", priority_name, "memory, pathcost or solvingtime")->required();
  select_cmd->add_option("-t,--threshold", threshold, "Start-goal distance threshold")
      ->check(CLI::NonNegativeNumber);

  GridArgs eval_grid;
  int eval_reps = 100;
  std::optional<int> eval_walls, eval_wall_length;
  std::string eval_csv;
  auto* eval_cmd = app.add_subcommand("evaluate", "Benchmark the selector's candidates and mark the best");
  add_grid_args(eval_cmd, eval_grid);
  eval_cmd->add_option("-p,--priority", priority_name, "memory, pathcost or solvingtime")->required();
  eval_cmd->add_option("-t,--threshold", threshold, "Start-goal distance threshold")
      ->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--reps", eval_reps, "Repetitions per candidate")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--walls", eval_walls, "Wall count reported in the table");
  eval_cmd->add_option("--wall-length", eval_wall_length, "Wall length reported in the table");
  eval_cmd->add_option("--csv", eval_csv, "Also write the table to this file");

  auto* gen = app.add_subcommand("gen", "Generate a grid file");
  gen->require_subcommand(1);
  RandomGridSpec rspec;
  rspec.n = 100;
  rspec.density = 0.25;
  rspec.sg_distance = 50;
  rspec.seed = 1;
  std::string gen_out;
  auto* gen_random = gen->add_subcommand("random", "Uniform random obstacles");
  gen_random->add_option("-n,--size", rspec.n, "Grid side")->capture_default_str();
  gen_random->add_option("-d,--density", rspec.density, "Obstacle density")->capture_default_str();
  gen_random->add_option("-s,--sg-distance", rspec.sg_distance, "Start-goal distance")->capture_default_str();
  gen_random->add_option("--seed", rspec.seed, "PRNG seed")->capture_default_str();
  gen_random->add_flag("--allow-corner-cutting", rspec.allow_corner_cutting);
  gen_random->add_option("-o,--output", gen_out, "Output file (default stdout)");
  WallGridSpec wspec;
  auto* gen_walls = gen->add_subcommand("walls", "31x71 grid with alternating walls");
  gen_walls->add_option("-w,--walls", wspec.num_walls, "Number of walls (0-7)")->capture_default_str();
  gen_walls->add_option("-l,--length", wspec.wall_length, "Wall length (1-29)")->capture_default_str();
  gen_walls->add_option("-o,--output", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) return run_sweeps(config_path, output_dir, sweep_reps, sweep_instances, out);

    if (solve_cmd->parsed()) return run_solve(solve_grid, algo_name, show_path, params, out);

    if (select_cmd->parsed()) {
      const Priority p = parse_priority(priority_name);
      const Grid grid = load(select_grid);
      out << to_string(select_algorithm(SelectionRequest::for_grid(grid, p, threshold))) << '\n';
      return 0;
    }

    if (eval_cmd->parsed()) {
      const Priority p = parse_priority(priority_name);
      const Grid grid = load(eval_grid);
      const auto req = SelectionRequest::for_grid(grid, p, threshold);
      const auto eval = evaluate_selection(grid, req, selection_candidates(), SolverParams{}, eval_reps);
      const auto rows = evaluation_rows(eval, grid, eval_walls, eval_wall_length);
      const std::size_t n = eval.candidates.size();
      const auto best = std::make_unique<bool[]>(n);
      for (std::size_t i = 0; i < n; ++i) best[i] = eval.candidates[i].best_for_priority;
      const std::span<const bool> marks(best.get(), n);
      write_csv(out, rows, marks);
      if (!eval_csv.empty()) {
        std::ofstream f(eval_csv, std::ios::binary);
        if (!f) throw Error("cannot open " + eval_csv + " for writing");
        write_csv(f, rows, marks);
      }
      out << "selected: " << to_string(eval.selected) << (eval.selected_is_best ? "" : " (not best)") << '\n';
      return 0;
    }

    if (gen_random->parsed() || gen_walls->parsed()) {
      const Grid grid = gen_random->parsed() ? generate_random_grid(rspec) : generate_wall_grid(wspec);
      if (gen_out.empty()) {
        write_grid(out, grid);
      } else {
        save_grid(gen_out, grid);
      }
      return 0;
    }
  } catch (const ConfigParseError& e) {
    err << "error: " << config_path << ":" << e.line() << ": " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace gridbench
