#pragma once
// Frozen figure recipes: each id maps to a fixed parameter set compiled into
// the library (never read from user configs), and reproduces the figure's raw
// curves as CSV datasets with metadata sidecars.  Curves within a figure are
// independent panels: each writes its own files, so they distribute freely
// across worker threads.

#include <string>
#include <vector>

#include "jcsim/scenario.hpp"

namespace jcsim {

// All known figure ids, in catalogue order.
std::vector<std::string> figure_ids();

// Reproduce one figure into `out_dir`.  Throws std::invalid_argument for an
// unknown id.  Returns every file written (csv before json per dataset).
RunResult reproduce_figure(const std::string& id, const std::string& out_dir);

}  // namespace jcsim
