#include "jcsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "jcsim/output.hpp"

namespace jcsim {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

using KeyMap = std::map<std::string, Entry>;

// Schema order; also the emission order of canonical_config_text.
const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "model",         "omega_a",        "omega_c",
      "selective_m",   "Omega0",         "deformation",
      "chi",           "lambda",         "eta",
      "pt_c",          "pt_s",           "anharmonicity",
      "state",         "n",              "alpha",
      "nbar",          "fock_cutoff",    "reference_n",
      "t_periods",     "samples_per_period", "Gamma",
      "omega_min",     "omega_max",      "omega_points",
      "frame_shift",   "probe",          "method",
      "kernel",        "corr_samples",   "coupling_min",
      "coupling_max",  "coupling_points", "num_eigenvalues",
      "out_dir",       "dataset",
  };
  return keys;
}

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("parse_config: " + msg);
}

[[noreturn]] void fail_line(int line, const std::string& msg) {
  fail("line " + std::to_string(line) + ": " + msg);
}

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int edit_distance(const std::string& a, const std::string& b) {
  std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string suggestion_for(const std::string& key) {
  int best = 3;  // suggest only within edit distance 2
  std::string pick;
  for (const std::string& k : known_keys()) {
    const int d = edit_distance(key, k);
    if (d < best) {
      best = d;
      pick = k;
    }
  }
  return pick;
}

const Entry* find(const KeyMap& kv, const std::string& key) {
  const auto it = kv.find(key);
  return it == kv.end() ? nullptr : &it->second;
}

double to_double(const Entry& e, const std::string& key) {
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  double v = 0.0;
  const auto [p, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || p != end) {
    fail_line(e.line, "value for '" + key + "' is not a number: '" + e.value + "'");
  }
  if (!std::isfinite(v)) {
    fail_line(e.line, "'" + key + "' must be finite");
  }
  return v;
}

int to_int(const Entry& e, const std::string& key) {
  const char* begin = e.value.data();
  const char* end = begin + e.value.size();
  int v = 0;
  const auto [p, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || p != end) {
    fail_line(e.line, "value for '" + key + "' is not an integer: '" + e.value + "'");
  }
  return v;
}

std::vector<double> to_list(const Entry& e, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string piece = trimmed(item);
    if (piece.empty()) {
      fail_line(e.line, "empty element in list '" + key + "'");
    }
    out.push_back(to_double(Entry{piece, e.line}, key));
  }
  if (out.empty()) {
    fail_line(e.line, "empty list for '" + key + "'");
  }
  return out;
}

double get_double(const KeyMap& kv, const std::string& key, double fallback) {
  const Entry* e = find(kv, key);
  return e ? to_double(*e, key) : fallback;
}

int get_int(const KeyMap& kv, const std::string& key, int fallback) {
  const Entry* e = find(kv, key);
  return e ? to_int(*e, key) : fallback;
}

std::string get_string(const KeyMap& kv, const std::string& key, const std::string& fallback) {
  const Entry* e = find(kv, key);
  return e ? e->value : fallback;
}

void require_positive(const KeyMap& kv, const std::string& key, double v) {
  if (v > 0.0) return;
  const Entry* e = find(kv, key);
  const std::string msg = "'" + key + "' must be positive (got " + format_double(v) + ")";
  if (e) fail_line(e->line, msg);
  fail(msg);
}

void require_at_least(const KeyMap& kv, const std::string& key, int v, int floor_value) {
  if (v >= floor_value) return;
  const Entry* e = find(kv, key);
  const std::string msg =
      "'" + key + "' must be at least " + std::to_string(floor_value) + " (got " +
      std::to_string(v) + ")";
  if (e) fail_line(e->line, msg);
  fail(msg);
}

void forbid(const KeyMap& kv, const std::string& key, const std::string& why) {
  if (const Entry* e = find(kv, key)) {
    fail_line(e->line, "'" + key + "' " + why);
  }
}

template <typename T>
T parse_choice(const Entry& e, const std::string& key,
               const std::vector<std::pair<std::string, T>>& choices) {
  for (const auto& [name, value] : choices) {
    if (e.value == name) return value;
  }
  std::string allowed;
  for (const auto& [name, value] : choices) {
    if (!allowed.empty()) allowed += ", ";
    allowed += name;
  }
  fail_line(e.line, "value for '" + key + "' must be one of " + allowed + " (got '" +
                        e.value + "')");
}

DeformationSpec resolve_deformation(const KeyMap& kv) {
  static const std::vector<std::pair<std::string, DeformationKind>> kinds = {
      {"identity", DeformationKind::identity},
      {"linear_kerr", DeformationKind::linear_kerr},
      {"q_oscillator", DeformationKind::q_oscillator},
      {"lamb_dicke", DeformationKind::lamb_dicke},
      {"poschl_teller", DeformationKind::poschl_teller},
      {"transmon", DeformationKind::transmon},
  };
  DeformationKind kind = DeformationKind::identity;
  if (const Entry* e = find(kv, "deformation")) {
    kind = parse_choice(*e, "deformation", kinds);
  }

  // Each profile parameter belongs to exactly one profile; it is required
  // there and rejected everywhere else.
  const std::map<std::string, DeformationKind> owner = {
      {"chi", DeformationKind::linear_kerr},
      {"lambda", DeformationKind::q_oscillator},
      {"eta", DeformationKind::lamb_dicke},
      {"pt_c", DeformationKind::poschl_teller},
      {"pt_s", DeformationKind::poschl_teller},
      {"anharmonicity", DeformationKind::transmon},
  };
  for (const auto& [key, needed_by] : owner) {
    const Entry* e = find(kv, key);
    if (e && kind != needed_by) {
      fail_line(e->line, "'" + key + "' is only meaningful for deformation = " +
                             std::string(deformation_name(needed_by)));
    }
    if (!e && kind == needed_by) {
      fail("deformation = " + std::string(deformation_name(kind)) + " requires '" + key + "'");
    }
  }

  switch (kind) {
    case DeformationKind::identity:
      return DeformationSpec::Identity();
    case DeformationKind::linear_kerr:
      return DeformationSpec::LinearKerr(to_double(*find(kv, "chi"), "chi"));
    case DeformationKind::q_oscillator:
      return DeformationSpec::QOscillator(to_double(*find(kv, "lambda"), "lambda"));
    case DeformationKind::lamb_dicke:
      return DeformationSpec::LambDicke(to_double(*find(kv, "eta"), "eta"));
    case DeformationKind::poschl_teller:
      return DeformationSpec::PoschlTeller(to_double(*find(kv, "pt_c"), "pt_c"),
                                           to_double(*find(kv, "pt_s"), "pt_s"));
    case DeformationKind::transmon:
      return DeformationSpec::Transmon(to_double(*find(kv, "anharmonicity"), "anharmonicity"));
  }
  fail("unhandled deformation kind");
}

}  // namespace

const char* probe_name(ProbeKind probe) {
  switch (probe) {
    case ProbeKind::atom: return "atom";
    case ProbeKind::field: return "field";
  }
  return "?";
}

const char* run_method_name(RunMethod method) {
  switch (method) {
    case RunMethod::numeric: return "numeric";
    case RunMethod::closed_form: return "closed_form";
    case RunMethod::both: return "both";
  }
  return "?";
}

const char* kernel_choice_name(KernelChoice kernel) {
  switch (kernel) {
    case KernelChoice::numeric: return "numeric";
    case KernelChoice::analytic: return "analytic";
  }
  return "?";
}

double ScenarioConfig::tau() const {
  if (model == ModelKind::FieldOnly) {
    if (params.omega_c <= 0.0) {
      throw std::runtime_error("tau: omega_c is not set");
    }
    return 2.0 * std::numbers::pi / params.omega_c;  // one cavity cycle
  }
  if (params.Omega0 <= 0.0) {
    throw std::runtime_error("tau: Omega0 is not set");
  }
  return 2.0 * std::numbers::pi /
         (params.Omega0 * std::sqrt(static_cast<double>(reference_n) + 1.0));
}

std::vector<double> ScenarioConfig::observation_times() const {
  const double unit = tau();
  std::vector<double> out;
  out.reserve(t_periods.size());
  for (double p : t_periods) out.push_back(p * unit);
  return out;
}

ScenarioConfig parse_config(const std::string& text) {
  KeyMap kv;
  {
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
      ++line_no;
      std::string line = raw;
      if (const auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      line = trimmed(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        fail_line(line_no, "expected 'key = value', got '" + line + "'");
      }
      const std::string key = trimmed(line.substr(0, eq));
      const std::string value = trimmed(line.substr(eq + 1));
      if (key.empty()) {
        fail_line(line_no, "missing key before '='");
      }
      if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
        const std::string hint = suggestion_for(key);
        std::string msg = "unknown key '" + key + "'";
        if (!hint.empty()) msg += " (did you mean '" + hint + "'?)";
        fail_line(line_no, msg);
      }
      if (const auto it = kv.find(key); it != kv.end()) {
        fail_line(line_no, "duplicate key '" + key + "' (first set on line " +
                               std::to_string(it->second.line) + ")");
      }
      if (value.empty()) {
        fail_line(line_no, "missing value for '" + key + "'");
      }
      kv.emplace(key, Entry{value, line_no});
    }
  }

  ScenarioConfig cfg;

  // --- model -------------------------------------------------------------
  const Entry* model_entry = find(kv, "model");
  if (!model_entry) fail("missing required key 'model'");
  static const std::vector<std::pair<std::string, ModelKind>> models = {
      {"jc", ModelKind::JC},       {"djc", ModelKind::DJC},
      {"rabi", ModelKind::Rabi},   {"drabi", ModelKind::DRabi},
      {"field_only", ModelKind::FieldOnly},
  };
  cfg.model = parse_choice(*model_entry, "model", models);
  const bool field_only = cfg.model == ModelKind::FieldOnly;

  // --- deformation -------------------------------------------------------
  cfg.params.deformation = resolve_deformation(kv);
  if (cfg.params.deformation.kind != DeformationKind::identity &&
      (cfg.model == ModelKind::JC || cfg.model == ModelKind::Rabi)) {
    fail("deformation = " + std::string(deformation_name(cfg.params.deformation.kind)) +
         " requires model djc, drabi, or field_only");
  }
  // Probe the low-lying profile values here; the runner re-validates at the
  // actual cutoff when it builds operators.
  validate_deformation(cfg.params.deformation, 2);

  // --- frequencies and coupling ------------------------------------------
  cfg.params.omega_a = get_double(kv, "omega_a", 1.0);
  require_positive(kv, "omega_a", cfg.params.omega_a);

  const Entry* omega_c_entry = find(kv, "omega_c");
  const Entry* selective_entry = find(kv, "selective_m");
  if (omega_c_entry && selective_entry) {
    fail_line(std::max(omega_c_entry->line, selective_entry->line),
              "'omega_c' and 'selective_m' are mutually exclusive");
  }
  if (selective_entry) {
    if (cfg.params.deformation.kind != DeformationKind::linear_kerr) {
      fail_line(selective_entry->line, "'selective_m' requires deformation = linear_kerr");
    }
    cfg.selective_m = to_int(*selective_entry, "selective_m");
    if (cfg.selective_m < 0) {
      fail_line(selective_entry->line, "'selective_m' must be nonnegative");
    }
    cfg.selective = true;
    cfg.params.omega_c = cfg.params.omega_a *
                         selective_cavity_frequency(cfg.selective_m, cfg.params.deformation.chi);
  } else {
    cfg.params.omega_c = get_double(kv, "omega_c", 1.0);
    require_positive(kv, "omega_c", cfg.params.omega_c);
  }

  if (const Entry* e = find(kv, "Omega0")) {
    if (field_only) {
      fail_line(e->line, "'Omega0' is not meaningful for model = field_only");
    }
    cfg.params.Omega0 = to_double(*e, "Omega0");
    require_positive(kv, "Omega0", cfg.params.Omega0);
  }

  // --- initial state ------------------------------------------------------
  static const std::vector<std::pair<std::string, StateKind>> states = {
      {"fock_excited", StateKind::FockExcited},
      {"fock_pair", StateKind::FockPair},
      {"coherent_excited", StateKind::CoherentExcited},
      {"coherent_field", StateKind::CoherentField},
      {"thermal_field", StateKind::ThermalField},
      {"fock_field", StateKind::FockField},
  };
  cfg.state.kind = field_only ? StateKind::FockField : StateKind::FockExcited;
  if (const Entry* e = find(kv, "state")) {
    cfg.state.kind = parse_choice(*e, "state", states);
  }
  const bool field_state = cfg.state.kind == StateKind::FockField ||
                           cfg.state.kind == StateKind::CoherentField ||
                           cfg.state.kind == StateKind::ThermalField;
  if (field_only != field_state) {
    fail(field_only
             ? "model field_only requires a field-only state (fock_field, coherent_field, "
               "thermal_field)"
             : "state " + state_name(cfg.state.kind) + " requires model = field_only");
  }

  const bool fock_state = cfg.state.kind == StateKind::FockExcited ||
                          cfg.state.kind == StateKind::FockPair ||
                          cfg.state.kind == StateKind::FockField;
  const bool coherent_state = cfg.state.kind == StateKind::CoherentExcited ||
                              cfg.state.kind == StateKind::CoherentField;
  const bool thermal_state = cfg.state.kind == StateKind::ThermalField;

  if (fock_state) {
    cfg.state.n = get_int(kv, "n", 0);
    if (cfg.state.n < 0) {
      fail_line(find(kv, "n")->line, "'n' must be nonnegative");
    }
  } else {
    forbid(kv, "n", "is only meaningful for Fock-state kinds");
  }
  if (coherent_state) {
    const Entry* e = find(kv, "alpha");
    if (!e) fail("state " + state_name(cfg.state.kind) + " requires 'alpha'");
    cfg.state.alpha = Complex{to_double(*e, "alpha"), 0.0};
  } else {
    forbid(kv, "alpha", "is only meaningful for coherent-state kinds");
  }
  if (thermal_state) {
    const Entry* e = find(kv, "nbar");
    if (!e) fail("state thermal_field requires 'nbar'");
    cfg.state.nbar = to_double(*e, "nbar");
    require_positive(kv, "nbar", cfg.state.nbar);
  } else {
    forbid(kv, "nbar", "is only meaningful for state = thermal_field");
  }
  cfg.state.fock_cutoff = get_int(kv, "fock_cutoff", 0);
  if (cfg.state.fock_cutoff < 0) {
    fail_line(find(kv, "fock_cutoff")->line, "'fock_cutoff' must be nonnegative (0 = auto)");
  }

  // --- time base ----------------------------------------------------------
  if (const Entry* e = find(kv, "reference_n")) {
    cfg.reference_n = to_int(*e, "reference_n");
    if (cfg.reference_n < 0) {
      fail_line(e->line, "'reference_n' must be nonnegative");
    }
  } else if (fock_state) {
    cfg.reference_n = cfg.state.n;
  } else if (field_state) {
    cfg.reference_n = 0;  // field-only time unit is the cavity cycle
  } else {
    fail("state " + state_name(cfg.state.kind) +
         " requires 'reference_n' (defines the time unit tau)");
  }

  if (const Entry* e = find(kv, "t_periods")) {
    cfg.t_periods = to_list(*e, "t_periods");
    for (double p : cfg.t_periods) {
      if (!(p > 0.0)) {
        fail_line(e->line, "'t_periods' entries must be positive");
      }
    }
  }
  cfg.samples_per_period = get_double(kv, "samples_per_period", 0.0);
  if (cfg.samples_per_period < 0.0) {
    fail_line(find(kv, "samples_per_period")->line,
              "'samples_per_period' must be nonnegative (0 = auto)");
  }

  // --- spectrum request ---------------------------------------------------
  cfg.Gamma = get_double(kv, "Gamma", 0.01);
  require_positive(kv, "Gamma", cfg.Gamma);

  const Entry* omin = find(kv, "omega_min");
  const Entry* omax = find(kv, "omega_max");
  if ((omin == nullptr) != (omax == nullptr)) {
    fail_line((omin ? omin : omax)->line,
              "'omega_min' and 'omega_max' must be given together");
  }
  if (omin) {
    cfg.omega_auto = false;
    cfg.omega_min = to_double(*omin, "omega_min");
    cfg.omega_max = to_double(*omax, "omega_max");
    if (!(cfg.omega_max > cfg.omega_min)) {
      fail_line(omax->line, "'omega_max' must exceed 'omega_min'");
    }
  }
  cfg.omega_points = get_int(kv, "omega_points", 2001);
  require_at_least(kv, "omega_points", cfg.omega_points, 2);
  cfg.frame_shift = get_double(kv, "frame_shift", 0.0);

  // --- probe / method -----------------------------------------------------
  cfg.probe = field_only ? ProbeKind::field : ProbeKind::atom;
  if (const Entry* e = find(kv, "probe")) {
    static const std::vector<std::pair<std::string, ProbeKind>> probes = {
        {"atom", ProbeKind::atom}, {"field", ProbeKind::field}};
    cfg.probe = parse_choice(*e, "probe", probes);
    if (field_only && cfg.probe == ProbeKind::atom) {
      fail_line(e->line, "probe = atom is not available for model = field_only");
    }
  }
  if (const Entry* e = find(kv, "method")) {
    static const std::vector<std::pair<std::string, RunMethod>> methods = {
        {"numeric", RunMethod::numeric},
        {"closed_form", RunMethod::closed_form},
        {"both", RunMethod::both}};
    cfg.method = parse_choice(*e, "method", methods);
  }
  if (const Entry* e = find(kv, "kernel")) {
    static const std::vector<std::pair<std::string, KernelChoice>> kernels = {
        {"numeric", KernelChoice::numeric}, {"analytic", KernelChoice::analytic}};
    cfg.kernel = parse_choice(*e, "kernel", kernels);
  }
  cfg.corr_samples = get_int(kv, "corr_samples", 129);
  require_at_least(kv, "corr_samples", cfg.corr_samples, 2);

  // --- eigensweep block ---------------------------------------------------
  cfg.coupling_min = get_double(kv, "coupling_min", 0.0);
  if (cfg.coupling_min < 0.0) {
    fail_line(find(kv, "coupling_min")->line, "'coupling_min' must be nonnegative");
  }
  cfg.coupling_max = get_double(kv, "coupling_max", 0.3);
  if (!(cfg.coupling_max > cfg.coupling_min)) {
    const Entry* e = find(kv, "coupling_max");
    const std::string msg = "'coupling_max' must exceed 'coupling_min'";
    if (e) fail_line(e->line, msg);
    fail(msg);
  }
  cfg.coupling_points = get_int(kv, "coupling_points", 61);
  require_at_least(kv, "coupling_points", cfg.coupling_points, 2);
  cfg.num_eigenvalues = get_int(kv, "num_eigenvalues", 14);
  require_at_least(kv, "num_eigenvalues", cfg.num_eigenvalues, 1);

  // --- output -------------------------------------------------------------
  cfg.out_dir = get_string(kv, "out_dir", "");
  cfg.dataset = get_string(kv, "dataset", "");

  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("load_config: cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string canonical_config_text(const ScenarioConfig& config) {
  std::string out;
  const auto emit = [&out](const std::string& key, const std::string& value) {
    out += key + " = " + value + "\n";
  };
  const auto emit_d = [&emit](const std::string& key, double value) {
    emit(key, format_double(value));
  };
  const auto emit_i = [&emit](const std::string& key, int value) {
    emit(key, std::to_string(value));
  };

  emit("model", model_name(config.model));
  emit_d("omega_a", config.params.omega_a);
  if (config.selective) {
    emit_i("selective_m", config.selective_m);
  } else {
    emit_d("omega_c", config.params.omega_c);
  }
  if (config.model != ModelKind::FieldOnly && config.params.Omega0 > 0.0) {
    emit_d("Omega0", config.params.Omega0);
  }
  const DeformationSpec& def = config.params.deformation;
  emit("deformation", deformation_name(def.kind));
  switch (def.kind) {
    case DeformationKind::identity: break;
    case DeformationKind::linear_kerr: emit_d("chi", def.chi); break;
    case DeformationKind::q_oscillator: emit_d("lambda", def.lambda); break;
    case DeformationKind::lamb_dicke: emit_d("eta", def.eta); break;
    case DeformationKind::poschl_teller:
      emit_d("pt_c", def.c);
      emit_d("pt_s", def.s);
      break;
    case DeformationKind::transmon: emit_d("anharmonicity", def.alpha); break;
  }
  emit("state", state_name(config.state.kind));
  switch (config.state.kind) {
    case StateKind::FockExcited:
    case StateKind::FockPair:
    case StateKind::FockField:
      emit_i("n", config.state.n);
      break;
    case StateKind::CoherentExcited:
    case StateKind::CoherentField:
      emit_d("alpha", config.state.alpha.real());
      break;
    case StateKind::ThermalField:
      emit_d("nbar", config.state.nbar);
      break;
  }
  emit_i("fock_cutoff", config.state.fock_cutoff);
  emit_i("reference_n", config.reference_n);
  {
    std::string list;
    for (double p : config.t_periods) {
      if (!list.empty()) list += ", ";
      list += format_double(p);
    }
    emit("t_periods", list);
  }
  emit_d("samples_per_period", config.samples_per_period);
  emit_d("Gamma", config.Gamma);
  if (!config.omega_auto) {
    emit_d("omega_min", config.omega_min);
    emit_d("omega_max", config.omega_max);
  }
  emit_i("omega_points", config.omega_points);
  emit_d("frame_shift", config.frame_shift);
  emit("probe", probe_name(config.probe));
  emit("method", run_method_name(config.method));
  emit("kernel", kernel_choice_name(config.kernel));
  emit_i("corr_samples", config.corr_samples);
  emit_d("coupling_min", config.coupling_min);
  emit_d("coupling_max", config.coupling_max);
  emit_i("coupling_points", config.coupling_points);
  emit_i("num_eigenvalues", config.num_eigenvalues);
  if (!config.out_dir.empty()) emit("out_dir", config.out_dir);
  if (!config.dataset.empty()) emit("dataset", config.dataset);
  return out;
}

}  // namespace jcsim
