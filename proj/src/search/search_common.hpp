#pragma once

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"
#include "gridbench/probe.hpp"
#include "gridbench/search.hpp"

namespace gridbench::detail {

inline NoPathError no_path(const Grid& grid) {
  return NoPathError("no path from " + to_string(grid.start()) + " to " + to_string(grid.goal()));
}

// Derives path_cost from the path and copies the probe's high-water mark.
inline void finish(SearchOutcome& out, const SearchProbe& probe) {
  out.path_cost = path_cost(out.path);
  out.peak_memory_bytes = probe.peak_bytes();
}

}  // namespace gridbench::detail
