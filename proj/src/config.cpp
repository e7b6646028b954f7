#include "gridbench/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "gridbench/errors.hpp"
#include "gridbench/generators.hpp"

namespace gridbench {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

struct Entry {
  std::string value;
  std::size_t line;
};

class Reader {
public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  const Entry* find(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  double real(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    return e ? parse_real(*e, key) : fallback;
  }

  long long integer(const std::string& key, long long fallback) const {
    const Entry* e = find(key);
    return e ? parse_integer(*e, key) : fallback;
  }

  bool boolean(const std::string& key, bool fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    std::string v;
    for (const char ch : e->value) v += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigParseError(e->line, key + ": expected true or false, got '" + e->value + "'");
  }

  std::optional<std::vector<double>> reals(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) return std::nullopt;
    std::vector<double> out;
    for (const auto& item : split_list(e->value)) out.push_back(parse_real({item, e->line}, key));
    if (out.empty()) throw ConfigParseError(e->line, key + ": empty list");
    return out;
  }

  static double parse_real(const Entry& e, const std::string& key) {
    double v = 0.0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
      throw ConfigParseError(e.line, key + ": expected a number, got '" + e.value + "'");
    return v;
  }

  static long long parse_integer(const Entry& e, const std::string& key) {
    long long v = 0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
      throw ConfigParseError(e.line, key + ": expected an integer, got '" + e.value + "'");
    return v;
  }

  std::size_t line_of(const std::string& key) const {
    const Entry* e = find(key);
    return e ? e->line : 0;
  }

private:
  std::map<std::string, Entry> entries_;
};

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "sweeps",           "grid_size_values", "sg_distance_values",  "density_values",
      "wall_count_values", "wall_length_values", "size",             "density",
      "sg_distance",      "num_walls",        "wall_length",         "algorithms",
      "instances_per_point", "reps",          "seed",                "output_dir",
      "parallel_pairs",   "allow_corner_cutting", "lookahead",       "ara_initial_weight",
      "ara_weight_decrement", "tie_break",
  };
  return keys;
}

void require(bool ok, std::size_t line, const std::string& what) {
  if (!ok) throw ConfigParseError(line, what);
}

}  // namespace

RunPlan parse_config_text(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigParseError(line_no, "expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigParseError(line_no, "missing key");
    if (!known_keys().count(key)) throw ConfigParseError(line_no, "unknown key '" + key + "'");
    if (value.empty()) throw ConfigParseError(line_no, key + ": missing value");
    if (entries.count(key)) throw ConfigParseError(line_no, "duplicate key '" + key + "'");
    entries.emplace(key, Entry{value, line_no});
  }
  const Reader r(std::move(entries));

  FixedParameters fixed;
  fixed.size = static_cast<int>(r.integer("size", fixed.size));
  require(fixed.size >= 3, r.line_of("size"), "size must be >= 3");
  fixed.density = r.real("density", fixed.density);
  require(fixed.density >= 0.0 && fixed.density < 1.0, r.line_of("density"), "density must lie in [0, 1)");
  fixed.sg_distance = r.real("sg_distance", fixed.sg_distance);
  require(fixed.sg_distance >= 0.0, r.line_of("sg_distance"), "sg_distance must be >= 0");
  fixed.num_walls = static_cast<int>(r.integer("num_walls", fixed.num_walls));
  require(fixed.num_walls >= 0 && fixed.num_walls <= kMaxWalls, r.line_of("num_walls"),
          "num_walls must lie in [0, 7]");
  fixed.wall_length = static_cast<int>(r.integer("wall_length", fixed.wall_length));
  require(fixed.wall_length >= 1 && fixed.wall_length <= 29, r.line_of("wall_length"),
          "wall_length must lie in [1, 29]");

  SolverParams params;
  params.lookahead = static_cast<int>(r.integer("lookahead", params.lookahead));
  require(params.lookahead >= 1, r.line_of("lookahead"), "lookahead must be >= 1");
  params.ara_initial_weight = r.real("ara_initial_weight", params.ara_initial_weight);
  require(params.ara_initial_weight >= 1.0, r.line_of("ara_initial_weight"), "ara_initial_weight must be >= 1");
  params.ara_weight_decrement = r.real("ara_weight_decrement", params.ara_weight_decrement);
  require(params.ara_weight_decrement > 0.0, r.line_of("ara_weight_decrement"),
          "ara_weight_decrement must be > 0");
  if (const Entry* e = r.find("tie_break")) {
    if (e->value == "high_g") params.tie_break = TieBreak::HighG;
    else if (e->value == "low_g") params.tie_break = TieBreak::LowG;
    else throw ConfigParseError(e->line, "tie_break must be high_g or low_g");
  }

  const long long instances = r.integer("instances_per_point", 10);
  require(instances >= 1, r.line_of("instances_per_point"), "instances_per_point must be >= 1");
  const long long reps = r.integer("reps", 100);
  require(reps >= 1, r.line_of("reps"), "reps must be >= 1");
  const long long seed = r.integer("seed", 1);
  require(seed >= 0, r.line_of("seed"), "seed must be >= 0");
  const bool parallel = r.boolean("parallel_pairs", false);
  const bool corner_cutting = r.boolean("allow_corner_cutting", false);

  std::vector<AlgorithmId> algorithms(benchmarked_algorithms().begin(), benchmarked_algorithms().end());
  if (const Entry* e = r.find("algorithms")) {
    algorithms.clear();
    for (const auto& name : split_list(e->value)) {
      const auto id = parse_algorithm(name);
      if (!id) throw ConfigParseError(e->line, "unknown algorithm '" + name + "'");
      algorithms.push_back(*id);
    }
    require(!algorithms.empty(), e->line, "algorithms: empty list");
  }

  std::vector<SweepConfig> defaults = default_sweeps();
  std::vector<SweepKind> selected;
  if (const Entry* e = r.find("sweeps")) {
    for (const auto& name : split_list(e->value)) {
      const auto kind = parse_sweep_kind(name);
      if (!kind) throw ConfigParseError(e->line, "unknown sweep '" + name + "'");
      selected.push_back(*kind);
    }
    require(!selected.empty(), e->line, "sweeps: empty list");
  } else {
    for (const auto& d : defaults) selected.push_back(d.kind);
  }

  RunPlan plan;
  if (const Entry* e = r.find("output_dir")) plan.output_dir = e->value;
  for (const SweepKind kind : selected) {
    SweepConfig cfg;
    for (const auto& d : defaults)
      if (d.kind == kind) cfg = d;
    const std::string values_key = std::string(file_stem(kind)) + "_values";
    if (auto values = r.reals(values_key)) {
      cfg.values = std::move(*values);
      cfg.values_are_defaults = false;
      const std::size_t line = r.line_of(values_key);
      for (std::size_t i = 1; i < cfg.values.size(); ++i)
        require(cfg.values[i] > cfg.values[i - 1], line, values_key + ": values must be strictly increasing");
      for (const double v : cfg.values) {
        switch (kind) {
          case SweepKind::GridSize: require(v >= 3 && v == static_cast<int>(v), line, values_key + ": sizes must be integers >= 3"); break;
          case SweepKind::SgDistance: require(v >= 0, line, values_key + ": distances must be >= 0"); break;
          case SweepKind::Density: require(v >= 0 && v < 1, line, values_key + ": densities must lie in [0, 1)"); break;
          case SweepKind::WallCount: require(v >= 0 && v <= kMaxWalls && v == static_cast<int>(v), line, values_key + ": wall counts must be integers in [0, 7]"); break;
          case SweepKind::WallLength: require(v >= 1 && v <= 29 && v == static_cast<int>(v), line, values_key + ": wall lengths must be integers in [1, 29]"); break;
        }
      }
    }
    cfg.fixed = fixed;
    cfg.algorithms = algorithms;
    cfg.instances_per_point = static_cast<int>(instances);
    cfg.reps = static_cast<int>(reps);
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.params = params;
    cfg.parallel_pairs = parallel;
    cfg.allow_corner_cutting = corner_cutting;
    plan.sweeps.push_back(std::move(cfg));
  }
  return plan;
}

RunPlan parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError(0, "cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

}  // namespace gridbench
