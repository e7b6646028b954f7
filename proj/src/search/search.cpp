#include "gridbench/search.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <string>

#include "gridbench/errors.hpp"

namespace gridbench {

namespace {

constexpr std::array<AlgorithmId, 7> kAll = {
    AlgorithmId::LrtaStar, AlgorithmId::RtaaStar, AlgorithmId::AraStar,    AlgorithmId::LpaStar,
    AlgorithmId::DStar,    AlgorithmId::DStarLite, AlgorithmId::AStarOracle,
};

std::string normalize(std::string_view text) {
  std::string out;
  for (const char ch : text) {
    if (ch == '_' || ch == '-' || ch == ' ') continue;
    if (ch == '*') {
      out += "star";
      continue;
    }
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

}  // namespace

std::string_view to_string(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::LrtaStar: return "LRTA_STAR";
    case AlgorithmId::RtaaStar: return "RTAA_STAR";
    case AlgorithmId::AraStar: return "ARA_STAR";
    case AlgorithmId::LpaStar: return "LPA_STAR";
    case AlgorithmId::DStar: return "D_STAR";
    case AlgorithmId::DStarLite: return "D_STAR_LITE";
    case AlgorithmId::AStarOracle: return "ASTAR_ORACLE";
  }
  return "UNKNOWN";
}

std::string_view display_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::LrtaStar: return "LRTA*";
    case AlgorithmId::RtaaStar: return "RTAA*";
    case AlgorithmId::AraStar: return "ARA*";
    case AlgorithmId::LpaStar: return "LPA*";
    case AlgorithmId::DStar: return "D*";
    case AlgorithmId::DStarLite: return "D* Lite";
    case AlgorithmId::AStarOracle: return "A* (oracle)";
  }
  return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view text) {
  const std::string key = normalize(text);
  for (const AlgorithmId id : kAll) {
    if (key == normalize(to_string(id)) || key == normalize(display_name(id))) return id;
  }
  if (key == "astar" || key == "oracle" || key == "astaroracle") return AlgorithmId::AStarOracle;
  return std::nullopt;
}

std::span<const AlgorithmId> benchmarked_algorithms() { return std::span(kAll).first(6); }
std::span<const AlgorithmId> all_algorithms() { return kAll; }

void SolverParams::validate() const {
  if (lookahead < 1) throw InvalidConfigError("lookahead must be >= 1, got " + std::to_string(lookahead));
  if (!(ara_initial_weight >= 1.0) || !std::isfinite(ara_initial_weight))
    throw InvalidConfigError("ara_initial_weight must be >= 1");
  if (!(ara_weight_decrement > 0.0) || !std::isfinite(ara_weight_decrement))
    throw InvalidConfigError("ara_weight_decrement must be > 0");
}

namespace {

SearchOutcome dispatch(const Grid& grid, AlgorithmId algo, const SolverParams& params, SearchProbe& probe) {
  switch (algo) {
    case AlgorithmId::LrtaStar: return lrta_star_solve(grid, params, probe);
    case AlgorithmId::RtaaStar: return rtaa_star_solve(grid, params, probe);
    case AlgorithmId::AraStar: return ara_star_solve(grid, params, probe);
    case AlgorithmId::LpaStar: return lpa_star_solve(grid, params, probe);
    case AlgorithmId::DStar: return dstar_solve(grid, params, probe);
    case AlgorithmId::DStarLite: return dstar_lite_solve(grid, params, probe);
    case AlgorithmId::AStarOracle: return astar_oracle(grid, params, probe);
  }
  throw InternalSearchError("unhandled algorithm id");
}

}  // namespace

SearchOutcome solve(const Grid& grid, AlgorithmId algo, const SolverParams& params, SearchProbe& probe) {
  probe.reset();
  const auto started = std::chrono::steady_clock::now();
  SearchOutcome out = dispatch(grid, algo, params, probe);
  const auto elapsed = std::chrono::steady_clock::now() - started;
  out.solve_time_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  return out;
}

SearchOutcome solve(const Grid& grid, AlgorithmId algo, const SolverParams& params) {
  SearchProbe probe;
  return solve(grid, algo, params, probe);
}

}  // namespace gridbench
