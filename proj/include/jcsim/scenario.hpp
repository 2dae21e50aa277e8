#pragma once
// Scenario execution: wires a resolved configuration through the operator,
// dynamics, and spectrum layers and serializes CSV datasets with JSON
// metadata sidecars.
//
// Auto omega grids follow the documented rule: 2001 points spanning
// [lowest predicted line - 6 Gamma, highest predicted line + 6 Gamma], the
// line positions coming from the dressed-doublet analysis of the configured
// initial state (weight threshold 1e-5 for mixtures).

#include <string>
#include <vector>

#include "jcsim/config.hpp"
#include "jcsim/dynamics.hpp"
#include "jcsim/output.hpp"

namespace jcsim {

// Output directory precedence: explicit flag > JCSIM_OUT env var > config
// out_dir > "./out".
std::string resolve_out_dir(const std::string& flag_dir, const ScenarioConfig& config);

struct RunResult {
  std::vector<std::string> files;  // paths written, csv before json
};

// Predicted emission-line positions for the configured initial state:
// dressed-doublet transition corners for coupled models, level spacings for
// the bare field.  Sorted ascending; mixture components below weight 1e-5
// are ignored.
std::vector<double> predicted_lines(const ScenarioConfig& config, const InitialState& state);

// Fill in omega bounds (if auto) and return the ready-to-use grid.
std::vector<double> resolve_omega_grid(ScenarioConfig& config, const InitialState& state);

// Build the two-time correlation kernel for the configured probe on `grid`,
// via the propagator or the closed-form trajectory builders.
CorrelationGrid build_kernel(const ScenarioConfig& config, const InitialState& state,
                             const TimeGrid& grid);

// `extra`, when a non-empty JSON object, is merged into the metadata sidecar
// (used by the figure recipes for figure-level annotations).
RunResult run_spectrum(ScenarioConfig config, const std::string& out_dir,
                       const Json& extra = Json());
RunResult run_correlation(ScenarioConfig config, const std::string& out_dir,
                          const Json& extra = Json());
RunResult run_eigensweep(ScenarioConfig config, const std::string& out_dir,
                         const Json& extra = Json());

}  // namespace jcsim
