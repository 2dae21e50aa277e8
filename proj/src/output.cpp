#include "jcsim/output.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace jcsim {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

void check_name(const std::string& name, const char* what) {
  if (name.empty()) {
    throw std::invalid_argument(std::string("write_dataset: empty ") + what);
  }
  if (name.find_first_of(",\n\r") != std::string::npos) {
    throw std::invalid_argument(std::string("write_dataset: ") + what + " '" + name +
                                "' contains a separator character");
  }
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf.data(), p);
}

std::string render_csv(const std::vector<Column>& columns) {
  if (columns.empty()) {
    throw std::invalid_argument("render_csv: no columns");
  }
  const std::size_t rows = columns.front().values.size();
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    check_name(columns[c].name, "column name");
    if (columns[c].values.size() != rows) {
      throw std::invalid_argument("render_csv: column '" + columns[c].name +
                                  "' has mismatched length");
    }
    if (c > 0) out += ',';
    out += columns[c].name;
  }
  out += '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) out += ',';
      out += format_double(columns[c].values[r]);
    }
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path());
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_file: cannot open '" + path + "'");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw std::runtime_error("write_file: write failed for '" + path + "'");
  }
}

Json config_json(const ScenarioConfig& c) {
  Json j;
  j["model"] = model_name(c.model);
  j["omega_a"] = c.params.omega_a;
  j["omega_c"] = c.params.omega_c;
  if (c.selective) j["selective_m"] = c.selective_m;
  if (c.model != ModelKind::FieldOnly && c.params.Omega0 > 0.0) {
    j["Omega0"] = c.params.Omega0;
  }
  const DeformationSpec& def = c.params.deformation;
  j["deformation"] = deformation_name(def.kind);
  switch (def.kind) {
    case DeformationKind::identity: break;
    case DeformationKind::linear_kerr: j["chi"] = def.chi; break;
    case DeformationKind::q_oscillator: j["lambda"] = def.lambda; break;
    case DeformationKind::lamb_dicke: j["eta"] = def.eta; break;
    case DeformationKind::poschl_teller:
      j["pt_c"] = def.c;
      j["pt_s"] = def.s;
      break;
    case DeformationKind::transmon: j["anharmonicity"] = def.alpha; break;
  }
  j["state"] = state_name(c.state.kind);
  switch (c.state.kind) {
    case StateKind::FockExcited:
    case StateKind::FockPair:
    case StateKind::FockField:
      j["n"] = c.state.n;
      break;
    case StateKind::CoherentExcited:
    case StateKind::CoherentField:
      j["alpha"] = c.state.alpha.real();
      break;
    case StateKind::ThermalField:
      j["nbar"] = c.state.nbar;
      break;
  }
  j["fock_cutoff"] = c.state.fock_cutoff;
  j["reference_n"] = c.reference_n;
  j["t_periods"] = c.t_periods;
  j["samples_per_period"] = c.samples_per_period;
  j["Gamma"] = c.Gamma;
  if (!c.omega_auto) {
    j["omega_min"] = c.omega_min;
    j["omega_max"] = c.omega_max;
  }
  j["omega_points"] = c.omega_points;
  j["frame_shift"] = c.frame_shift;
  j["probe"] = probe_name(c.probe);
  j["method"] = run_method_name(c.method);
  j["kernel"] = kernel_choice_name(c.kernel);
  j["corr_samples"] = c.corr_samples;
  j["coupling_min"] = c.coupling_min;
  j["coupling_max"] = c.coupling_max;
  j["coupling_points"] = c.coupling_points;
  j["num_eigenvalues"] = c.num_eigenvalues;
  if (!c.out_dir.empty()) j["out_dir"] = c.out_dir;
  if (!c.dataset.empty()) j["dataset"] = c.dataset;
  j["config_document"] = canonical_config_text(c);
  return j;
}

Json base_metadata(const std::string& subcommand, const ScenarioConfig& config) {
  Json meta;
  meta["version"] = kVersion;
  meta["subcommand"] = subcommand;
  meta["generated_at"] = utc_timestamp();
  meta["resolved_config"] = config_json(config);
  return meta;
}

void write_dataset(const std::string& dir, const std::string& name,
                   const std::vector<Column>& columns, const Json& metadata) {
  check_name(name, "dataset name");
  if (name.find('/') != std::string::npos) {
    throw std::invalid_argument("write_dataset: dataset name '" + name +
                                "' must not contain path separators");
  }
  const std::string base = dir.empty() ? name : dir + "/" + name;
  write_file(base + ".csv", render_csv(columns));
  write_file(base + ".json", metadata.dump(2) + "\n");
}

}  // namespace jcsim
