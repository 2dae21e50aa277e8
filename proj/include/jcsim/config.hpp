#pragma once
// Flat key = value configuration schema for the command-line runner.
//
// A configuration document is a sequence of `key = value` lines; blank lines
// and `#` comments are ignored.  Unknown keys are rejected (with a line number
// and a closest-match suggestion), as are duplicate keys, malformed lines, and
// semantically inconsistent combinations.  parse_config returns a fully
// resolved ScenarioConfig with every default applied, so the canonical echo of
// a parsed config re-parses to the identical configuration.

#include <string>
#include <vector>

#include "jcsim/dynamics.hpp"
#include "jcsim/models.hpp"

namespace jcsim {

inline constexpr const char* kVersion = "1.0.0";

enum class ProbeKind { atom, field };
enum class RunMethod { numeric, closed_form, both };
enum class KernelChoice { numeric, analytic };

const char* probe_name(ProbeKind probe);
const char* run_method_name(RunMethod method);
const char* kernel_choice_name(KernelChoice kernel);

struct ScenarioConfig {
  ModelKind model = ModelKind::JC;
  ModelParams params;        // omega_c already resolved if selective_m was used
  bool selective = false;    // omega_c came from selective_m
  int selective_m = 0;

  StateSpec state;
  int reference_n = 0;       // doublet index defining the time unit tau

  std::vector<double> t_periods{16.0};  // observation times in units of tau()
  double samples_per_period = 0.0;      // 0 = engine default (25 per period)

  double Gamma = 0.01;
  bool omega_auto = true;    // derive bounds from the predicted line positions
  double omega_min = 0.0;
  double omega_max = 0.0;
  int omega_points = 2001;
  double frame_shift = 0.0;

  ProbeKind probe = ProbeKind::atom;
  RunMethod method = RunMethod::numeric;
  KernelChoice kernel = KernelChoice::numeric;
  int corr_samples = 129;    // time resolution of `correlation` output

  double coupling_min = 0.0;   // eigensweep x-axis: Omega0 / (2 omega_a)
  double coupling_max = 0.3;
  int coupling_points = 61;
  int num_eigenvalues = 14;

  std::string out_dir;       // empty = resolved later (flag / env / default)
  std::string dataset;       // empty = subcommand-derived name

  // Reference period: 2 pi / (Omega0 sqrt(reference_n + 1)) for coupled
  // models, one cavity cycle 2 pi / omega_c for the bare field.
  double tau() const;
  std::vector<double> observation_times() const;  // t_periods scaled by tau()
};

// Parse a configuration document.  Throws std::invalid_argument with a
// line/field diagnostic on any violation of the schema.
ScenarioConfig parse_config(const std::string& text);

// Read the file at `path` and parse it.
ScenarioConfig load_config(const std::string& path);

// Canonical flat document with every resolved value spelled out; re-parsing
// it reproduces `config` field for field.
std::string canonical_config_text(const ScenarioConfig& config);

}  // namespace jcsim
