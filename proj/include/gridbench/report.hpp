#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridbench/experiments.hpp"
#include "gridbench/selector.hpp"

namespace gridbench {

inline constexpr std::string_view kCsvHeader =
    "algorithm,number_of_walls,wall_length,obstacle_density,grid_size,sg_distance,path_cost,"
    "memory_allocation_kb,solving_time_ms";

// Appended after the fixed columns in selector evaluation tables.
inline constexpr std::string_view kBestMarkerColumn = "best_for_priority";

// One table line. Inapplicable parameters are "-".
struct CsvRow {
  std::string algorithm;
  std::string number_of_walls = "-";
  std::string wall_length = "-";
  std::string obstacle_density = "-";
  std::string grid_size;
  double sg_distance = 0.0;
  double path_cost = 0.0;
  double memory_allocation_kb = 0.0;
  double solving_time_ms = 0.0;
};

// Fixed-point with three decimals, the precision of every printed number.
std::string format3(double v);

std::vector<CsvRow> csv_rows(const ExperimentReport& report);

// Header plus one line per row; `best` (when given) adds the marker column.
void write_csv(std::ostream& out, std::span<const CsvRow> rows,
               std::span<const bool> best = {});
// Returns the number of data rows written. Throws std::runtime_error-derived
// gridbench::Error on I/O failure.
std::size_t write_csv(const ExperimentReport& report, const std::filesystem::path& path);
std::vector<CsvRow> read_csv(const std::filesystem::path& path);

// Table rows for a selector evaluation: one per candidate, with the marker
// column flagging the best value of the requested metric.
std::vector<CsvRow> evaluation_rows(const SelectionEvaluation& eval, const Grid& grid,
                                    std::optional<int> num_walls = std::nullopt,
                                    std::optional<int> wall_length = std::nullopt);

// SVG 1.1 line chart: one polyline per algorithm over the sweep values, a
// translucent mean +/- stddev band, a legend and labelled axes.
std::string render_plot(const ExperimentReport& report, Metric metric);

// Writes <stem>_<metric>.svg for each of the three metrics and returns the
// paths in metric order.
std::vector<std::filesystem::path> render_plots(const ExperimentReport& report,
                                                const std::filesystem::path& out_dir);

}  // namespace gridbench
