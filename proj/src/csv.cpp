#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gridbench/errors.hpp"
#include "gridbench/report.hpp"

namespace gridbench {

std::string format3(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::vector<CsvRow> csv_rows(const ExperimentReport& report) {
  std::vector<CsvRow> rows;
  rows.reserve(report.rows.size());
  for (const auto& r : report.rows) {
    CsvRow row;
    row.algorithm = std::string(to_string(r.algorithm));
    if (r.point.num_walls) row.number_of_walls = std::to_string(*r.point.num_walls);
    if (r.point.wall_length) row.wall_length = std::to_string(*r.point.wall_length);
    if (r.point.density) row.obstacle_density = format3(*r.point.density);
    row.grid_size = r.point.grid_size;
    row.sg_distance = r.point.sg_distance;
    row.path_cost = r.stats.path_cost.mean;
    row.memory_allocation_kb = r.stats.memory_kb.mean;
    row.solving_time_ms = r.stats.solve_time_ms.mean;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const CsvRow> rows, std::span<const bool> best) {
  const bool marker = !best.empty();
  out << kCsvHeader;
  if (marker) out << ',' << kBestMarkerColumn;
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CsvRow& r = rows[i];
    out << r.algorithm << ',' << r.number_of_walls << ',' << r.wall_length << ',' << r.obstacle_density << ','
        << r.grid_size << ',' << format3(r.sg_distance) << ',' << format3(r.path_cost) << ','
        << format3(r.memory_allocation_kb) << ',' << format3(r.solving_time_ms);
    if (marker) out << ',' << (i < best.size() && best[i] ? "yes" : "no");
    out << '\n';
  }
}

std::size_t write_csv(const ExperimentReport& report, const std::filesystem::path& path) {
  if (report.rows.empty()) throw InvalidConfigError("refusing to write an empty report");
  const auto rows = csv_rows(report);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_csv(out, rows);
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
  return rows.size();
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind(kCsvHeader, 0) != 0)
    throw Error(path.string() + ": missing or unexpected CSV header");
  std::vector<CsvRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (cells.size() < 9) throw Error(path.string() + ":" + std::to_string(line_no) + ": expected 9 columns");
    CsvRow r;
    r.algorithm = cells[0];
    r.number_of_walls = cells[1];
    r.wall_length = cells[2];
    r.obstacle_density = cells[3];
    r.grid_size = cells[4];
    try {
      r.sg_distance = std::stod(cells[5]);
      r.path_cost = std::stod(cells[6]);
      r.memory_allocation_kb = std::stod(cells[7]);
      r.solving_time_ms = std::stod(cells[8]);
    } catch (const std::exception&) {
      throw Error(path.string() + ":" + std::to_string(line_no) + ": malformed number");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<CsvRow> evaluation_rows(const SelectionEvaluation& eval, const Grid& grid,
                                    std::optional<int> num_walls, std::optional<int> wall_length) {
  std::vector<CsvRow> rows;
  const double free_cells = static_cast<double>(grid.cell_count()) - 2.0;
  const std::string size = grid.width() == grid.height()
                               ? std::to_string(grid.width())
                               : std::to_string(grid.width()) + "x" + std::to_string(grid.height());
  for (const auto& c : eval.candidates) {
    CsvRow r;
    r.algorithm = std::string(to_string(c.algorithm));
    if (num_walls) r.number_of_walls = std::to_string(*num_walls);
    if (wall_length) r.wall_length = std::to_string(*wall_length);
    if (!num_walls && !wall_length && free_cells > 0)
      r.obstacle_density = format3(static_cast<double>(grid.blocked_count()) / free_cells);
    r.grid_size = size;
    r.sg_distance = eval.sg_distance;
    r.path_cost = c.stats.path_cost.mean;
    r.memory_allocation_kb = c.stats.memory_kb.mean;
    r.solving_time_ms = c.stats.solve_time_ms.mean;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace gridbench
