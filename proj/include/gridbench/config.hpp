#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "gridbench/experiments.hpp"

namespace gridbench {

struct RunPlan {
  std::vector<SweepConfig> sweeps;
  std::filesystem::path output_dir = "results";
};

// Flat `key=value` lines; '#' starts a comment. Missing keys keep their
// defaults, so an empty file yields the five default sweeps. Recognised keys:
//
//   sweeps                comma list of grid_size, sg_distance, density,
//                         wall_count, wall_length (default: all five)
//   <sweep>_values        value list overriding one sweep's defaults
//   size, density, sg_distance, num_walls, wall_length
//                         held-constant parameters
//   algorithms            comma list of algorithm ids (default: the six)
//   instances_per_point, reps, seed, output_dir
//   parallel_pairs, allow_corner_cutting          true/false
//   lookahead, ara_initial_weight, ara_weight_decrement, tie_break
//
// Throws ConfigParseError carrying the offending line number.
RunPlan parse_config_text(std::string_view text);
RunPlan parse_config(const std::filesystem::path& path);

}  // namespace gridbench
