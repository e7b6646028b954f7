#pragma once

#include <iosfwd>

namespace gridbench {

// Entry point of the gridbench tool. Exit status: 0 on success, 1 when a
// library error is raised (bad grid, no path, bad config), 2 on usage errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace gridbench
