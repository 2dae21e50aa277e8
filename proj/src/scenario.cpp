#include "jcsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "jcsim/algebra.hpp"
#include "jcsim/analytic.hpp"
#include "jcsim/output.hpp"
#include "jcsim/spectrum.hpp"

namespace jcsim {

namespace {

constexpr double kLineWeightThreshold = 1e-5;

void require_coupling(const ScenarioConfig& cfg, const char* where) {
  if (cfg.model != ModelKind::FieldOnly && cfg.params.Omega0 <= 0.0) {
    throw std::invalid_argument(std::string(where) +
                                ": 'Omega0' is required for coupled models");
  }
}

bool nearly_resonant(const ModelParams& p) {
  return std::abs(p.omega_a - p.omega_c) <= 1e-12 * std::max(1.0, std::abs(p.omega_a));
}

// Mixture-summed occupation probability per field level.
std::vector<double> field_occupation(const InitialState& state) {
  std::vector<double> p;
  for (const StateComponent& c : state.components) {
    const Eigen::Index dim = c.amplitudes.size();
    const Eigen::Index modes = state.field_only ? dim : dim / 2;
    if (p.size() < static_cast<std::size_t>(modes)) p.resize(modes, 0.0);
    for (Eigen::Index n = 0; n < modes; ++n) {
      const double w =
          state.field_only
              ? std::norm(c.amplitudes(n))
              : std::norm(c.amplitudes(2 * n)) + std::norm(c.amplitudes(2 * n + 1));
      p[static_cast<std::size_t>(n)] += c.weight * w;
    }
  }
  return p;
}

// Doublet indices populated by the initial state: |e,n> and |g,n+1> both
// belong to doublet n; |g,0> is the dark ground singlet.
std::vector<int> doublet_support(const InitialState& state) {
  std::vector<double> weight;
  for (const StateComponent& c : state.components) {
    const Eigen::Index modes = c.amplitudes.size() / 2;
    if (weight.size() < static_cast<std::size_t>(modes)) weight.resize(modes, 0.0);
    for (Eigen::Index n = 0; n < modes; ++n) {
      const double pe = c.weight * std::norm(c.amplitudes(2 * n + 1));
      weight[static_cast<std::size_t>(n)] += pe;  // |e,n> -> doublet n
      if (n >= 1) {
        const double pg = c.weight * std::norm(c.amplitudes(2 * n));
        weight[static_cast<std::size_t>(n - 1)] += pg;  // |g,n> -> doublet n-1
      }
    }
  }
  std::vector<int> support;
  for (std::size_t n = 0; n < weight.size(); ++n) {
    if (weight[n] >= kLineWeightThreshold) support.push_back(static_cast<int>(n));
  }
  return support;
}

double field_level_energy(const ModelParams& p, int n) {
  const double fn = deformation_eval(p.deformation, n);
  const double fn1 = deformation_eval(p.deformation, n + 1);
  return 0.5 * p.omega_c * (n * fn * fn + (n + 1) * fn1 * fn1);
}

struct ClosedForm {
  std::function<double(double, double)> eval;  // (omega, t)
  std::string tag;
};

ClosedForm resolve_closed_form(const ScenarioConfig& cfg, const InitialState& istate) {
  const ModelParams& p = cfg.params;
  const double Gamma = cfg.Gamma;
  if (cfg.model == ModelKind::FieldOnly) {
    if (p.deformation.kind != DeformationKind::linear_kerr) {
      throw std::runtime_error(
          "run_spectrum: the closed-form field spectrum needs deformation = linear_kerr");
    }
    return {[p, istate, Gamma](double w, double) { return kerr_longtime(p, istate, Gamma, w); },
            "closed_form_longtime"};
  }
  if (cfg.probe != ProbeKind::atom) {
    throw std::runtime_error("run_spectrum: closed-form spectra cover the atom probe only");
  }
  if (cfg.state.kind != StateKind::FockExcited || cfg.state.n != 0) {
    throw std::runtime_error(
        "run_spectrum: closed-form spectra cover the vacuum doublet "
        "(state = fock_excited, n = 0)");
  }
  if (cfg.model == ModelKind::JC) {
    if (nearly_resonant(p)) {
      return {[p, Gamma](double w, double t) { return vrs_fulltime(p, Gamma, w, t); },
              "closed_form_finite_window"};
    }
    ModelParams detuned = p;  // undeformed detuned doublet = Kerr form at chi = 0
    detuned.deformation = DeformationSpec::LinearKerr(0.0);
    return {[detuned, Gamma](double w, double) { return dvrs_longtime(detuned, Gamma, w); },
            "closed_form_longtime"};
  }
  if (cfg.model == ModelKind::DJC) {
    if (p.deformation.kind != DeformationKind::linear_kerr) {
      throw std::runtime_error(
          "run_spectrum: the deformed vacuum doublet closed form needs deformation = "
          "linear_kerr");
    }
    return {[p, Gamma](double w, double) { return dvrs_longtime(p, Gamma, w); },
            "closed_form_longtime"};
  }
  throw std::runtime_error("run_spectrum: no closed form for model " +
                           std::string(model_name(cfg.model)));
}

std::string default_dataset(const ScenarioConfig& cfg, const char* fallback) {
  return cfg.dataset.empty() ? fallback : cfg.dataset;
}

Json lines_json(const std::vector<double>& lines) {
  Json arr = Json::array();
  for (double v : lines) arr.push_back(v);
  return arr;
}

void merge_extra(Json& meta, const Json& extra) {
  if (extra.is_object() && !extra.empty()) meta.update(extra);
}

}  // namespace

std::string resolve_out_dir(const std::string& flag_dir, const ScenarioConfig& config) {
  if (!flag_dir.empty()) return flag_dir;
  if (const char* env = std::getenv("JCSIM_OUT"); env != nullptr && *env != '\0') {
    return env;
  }
  if (!config.out_dir.empty()) return config.out_dir;
  return "./out";
}

std::vector<double> predicted_lines(const ScenarioConfig& config, const InitialState& state) {
  const ModelParams& p = config.params;
  std::vector<double> lines;
  if (config.model == ModelKind::FieldOnly) {
    const std::vector<double> occ = field_occupation(state);
    for (std::size_t n = 1; n < occ.size(); ++n) {
      if (occ[n] >= kLineWeightThreshold) {
        lines.push_back(field_level_energy(p, static_cast<int>(n)) -
                        field_level_energy(p, static_cast<int>(n) - 1));
      }
    }
  } else {
    for (int k : doublet_support(state)) {
      if (k == 0) {
        const DressedDoublet d0 = doublet_block(p, 0);
        const double nu = p.omega_a - 0.5 * d0.detuning;
        lines.push_back(nu - 0.5 * d0.phi);
        lines.push_back(nu + 0.5 * d0.phi);
      } else {
        const DressedDoublet upper = doublet_block(p, k);
        const DressedDoublet lower = doublet_block(p, k - 1);
        const double delta_e = upper.E0 - lower.E0;
        for (int s1 : {-1, +1}) {
          for (int s2 : {-1, +1}) {
            lines.push_back(delta_e + 0.5 * s1 * upper.phi + 0.5 * s2 * lower.phi);
          }
        }
      }
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

std::vector<double> resolve_omega_grid(ScenarioConfig& config, const InitialState& state) {
  if (config.omega_auto) {
    const std::vector<double> lines = predicted_lines(config, state);
    double lo, hi;
    if (lines.empty()) {
      // Dark state (no emission lines): center the window on the bare
      // frequency so the flat spectrum is still well defined.
      const double center = config.model == ModelKind::FieldOnly ? config.params.omega_c
                                                                 : config.params.omega_a;
      lo = hi = center;
    } else {
      lo = lines.front();
      hi = lines.back();
    }
    config.omega_min = lo - 6.0 * config.Gamma;
    config.omega_max = hi + 6.0 * config.Gamma;
    config.omega_auto = false;
  }
  return uniform_grid(config.omega_min, config.omega_max, config.omega_points);
}

CorrelationGrid build_kernel(const ScenarioConfig& config, const InitialState& state,
                             const TimeGrid& grid) {
  const ModelParams& p = config.params;
  if (config.kernel == KernelChoice::analytic) {
    if (config.model == ModelKind::FieldOnly) {
      return kerr_corr_grid(p, state, grid, config.frame_shift);
    }
    if (config.state.kind != StateKind::FockExcited) {
      throw std::runtime_error(
          "build_kernel: analytic kernels cover Fock initial states (fock_excited) only; "
          "use kernel = numeric");
    }
    if (config.model == ModelKind::JC) {
      if (!nearly_resonant(p)) {
        throw std::runtime_error(
            "build_kernel: the undeformed analytic kernels assume resonance "
            "(omega_c = omega_a); use model = djc or kernel = numeric");
      }
      return config.probe == ProbeKind::atom
                 ? atom_corr_jc_grid(p, config.state.n, grid, config.frame_shift)
                 : field_corr_jc_grid(p, config.state.n, grid, config.frame_shift);
    }
    if (config.model == ModelKind::DJC && config.probe == ProbeKind::atom) {
      return atom_corr_djc_grid(p, config.state.n, grid, config.frame_shift);
    }
    throw std::runtime_error(
        "build_kernel: no analytic kernel for this model/probe combination; "
        "use kernel = numeric");
  }

  // Propagator route.
  const int N = state.fock_cutoff;
  if (config.model == ModelKind::FieldOnly) {
    const Matrix h = build_hamiltonian(ModelKind::FieldOnly, p, HilbertLayout(N));
    return two_time_correlation(h, ladder_matrices(N).a, state, grid, config.frame_shift,
                                "a");
  }
  const HilbertLayout layout(N);
  const Matrix h = build_hamiltonian(config.model, p, layout);
  const Matrix probe_op =
      config.probe == ProbeKind::atom
          ? tensor_product(Matrix::Identity(N, N), qubit_sigma_minus())
          : tensor_product(ladder_matrices(N).a, Matrix::Identity(2, 2));
  return two_time_correlation(h, probe_op, state, grid, config.frame_shift,
                              probe_name(config.probe));
}

RunResult run_spectrum(ScenarioConfig cfg, const std::string& out_dir,
                       const Json& extra) {
  require_coupling(cfg, "run_spectrum");
  const InitialState istate = make_initial_state(cfg.state);
  cfg.state.fock_cutoff = istate.fock_cutoff;  // pin the resolved cutoff in the echo

  const std::vector<double> omega = resolve_omega_grid(cfg, istate);
  const std::vector<double> times = cfg.observation_times();
  const double per = cfg.samples_per_period > 0.0 ? cfg.samples_per_period : 25.0;

  const bool want_numeric = cfg.method != RunMethod::closed_form;
  const bool want_closed = cfg.method != RunMethod::numeric;
  ClosedForm closed;
  if (want_closed) closed = resolve_closed_form(cfg, istate);

  double band = 0.0;
  for (double w : omega) band = std::max(band, std::abs(w - cfg.frame_shift));
  if (want_numeric) {
    // Two-sample probe build to learn the kernel's internal bandwidth.
    const double t_max = *std::max_element(times.begin(), times.end());
    band = std::max(band, build_kernel(cfg, istate, TimeGrid(t_max, 2)).max_frequency);
  }

  std::vector<double> col_t, col_omega, col_num, col_closed;
  Json samples_meta = Json::array();
  Json diffs = Json::array();
  double max_diff = 0.0;
  for (double t : times) {
    SpectrumRequest req;
    req.Gamma = cfg.Gamma;
    req.t = t;
    req.omega = omega;

    std::vector<double> s_num, s_cl;
    int samples = 0;
    if (want_numeric) {
      samples = auto_samples(t, band, per);
      const CorrelationGrid corr = build_kernel(cfg, istate, TimeGrid(t, samples));
      s_num = ew_numeric(corr, req).S;
    }
    if (want_closed) {
      s_cl.reserve(omega.size());
      for (double w : omega) s_cl.push_back(closed.eval(w, t));
    }
    for (std::size_t i = 0; i < omega.size(); ++i) {
      col_t.push_back(t);
      col_omega.push_back(omega[i]);
      if (want_numeric) col_num.push_back(s_num[i]);
      if (want_closed) col_closed.push_back(s_cl[i]);
    }
    samples_meta.push_back(Json{{"t", t}, {"samples", samples}});
    if (want_numeric && want_closed) {
      double local = 0.0;
      for (std::size_t i = 0; i < omega.size(); ++i) {
        local = std::max(local, std::abs(s_num[i] - s_cl[i]));
      }
      diffs.push_back(local);
      max_diff = std::max(max_diff, local);
    }
  }

  std::vector<Column> cols;
  if (times.size() > 1) cols.push_back({"t", std::move(col_t)});
  cols.push_back({"omega", std::move(col_omega)});
  if (want_numeric && want_closed) {
    cols.push_back({"S_numeric", std::move(col_num)});
    cols.push_back({"S_closed", std::move(col_closed)});
  } else {
    cols.push_back({"S", want_numeric ? std::move(col_num) : std::move(col_closed)});
  }

  Json meta = base_metadata("spectrum", cfg);
  Json tags = Json::array();
  if (want_numeric) tags.push_back(method_name(SpectrumMethod::numeric_gram));
  if (want_closed) tags.push_back(closed.tag);
  meta["method_tags"] = tags;
  meta["fock_cutoff_used"] = istate.fock_cutoff;
  meta["truncation_deficit"] = istate.truncation_deficit;
  meta["predicted_lines"] = lines_json(predicted_lines(cfg, istate));
  meta["kernel_band"] = band;
  meta["samples_per_time"] = samples_meta;
  if (want_numeric && want_closed) {
    meta["max_abs_difference"] = max_diff;
    meta["max_abs_difference_per_time"] = diffs;
  }

  merge_extra(meta, extra);
  const std::string name = default_dataset(cfg, "spectrum");
  write_dataset(out_dir, name, cols, meta);
  return {{out_dir + "/" + name + ".csv", out_dir + "/" + name + ".json"}};
}

RunResult run_correlation(ScenarioConfig cfg, const std::string& out_dir,
                          const Json& extra) {
  require_coupling(cfg, "run_correlation");
  const InitialState istate = make_initial_state(cfg.state);
  cfg.state.fock_cutoff = istate.fock_cutoff;

  const std::vector<double> times = cfg.observation_times();
  const double t_final = *std::max_element(times.begin(), times.end());
  const TimeGrid grid(t_final, cfg.corr_samples);
  const CorrelationGrid corr = build_kernel(cfg, istate, grid);

  const auto t = grid.values();
  std::vector<double> c_t1, c_t2, c_re, c_im;
  const std::size_t nt = t.size();
  c_t1.reserve(nt * nt);
  c_t2.reserve(nt * nt);
  c_re.reserve(nt * nt);
  c_im.reserve(nt * nt);
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const Complex g = corr.kernel_entry(static_cast<Eigen::Index>(i),
                                          static_cast<Eigen::Index>(j));
      c_t1.push_back(t[i]);
      c_t2.push_back(t[j]);
      c_re.push_back(g.real());
      c_im.push_back(g.imag());
    }
  }
  std::vector<Column> cols = {{"t1", std::move(c_t1)},
                              {"t2", std::move(c_t2)},
                              {"g_re", std::move(c_re)},
                              {"g_im", std::move(c_im)}};

  Json meta = base_metadata("correlation", cfg);
  meta["fock_cutoff_used"] = istate.fock_cutoff;
  meta["truncation_deficit"] = istate.truncation_deficit;
  meta["kernel_band"] = corr.max_frequency;
  meta["probe_operator"] = corr.probe;

  merge_extra(meta, extra);
  const std::string name = default_dataset(cfg, "correlation");
  write_dataset(out_dir, name, cols, meta);
  return {{out_dir + "/" + name + ".csv", out_dir + "/" + name + ".json"}};
}

RunResult run_eigensweep(ScenarioConfig cfg, const std::string& out_dir,
                         const Json& extra) {
  if (cfg.model == ModelKind::FieldOnly) {
    throw std::invalid_argument("run_eigensweep: field_only has no coupling to sweep");
  }
  const std::vector<double> x =
      uniform_grid(cfg.coupling_min, cfg.coupling_max, cfg.coupling_points);
  std::vector<double> omega0(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    omega0[i] = 2.0 * cfg.params.omega_a * x[i];  // x-axis is Omega0 / (2 omega_a)
  }
  const HilbertLayout layout(std::max(cfg.state.fock_cutoff, 2));
  const EigenSweep sweep =
      eigen_sweep(cfg.model, cfg.params, omega0, layout, cfg.num_eigenvalues);

  std::vector<Column> cols;
  cols.push_back({"coupling", x});
  for (int j = 0; j < cfg.num_eigenvalues; ++j) {
    std::vector<double> level(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      level[i] = sweep.energies(j, static_cast<Eigen::Index>(i));
    }
    cols.push_back({"E" + std::to_string(j), std::move(level)});
  }

  Json meta = base_metadata("eigensweep", cfg);
  meta["fock_cutoff_used"] = sweep.fock_cutoff;

  merge_extra(meta, extra);
  const std::string name = default_dataset(cfg, "eigensweep");
  write_dataset(out_dir, name, cols, meta);
  return {{out_dir + "/" + name + ".csv", out_dir + "/" + name + ".json"}};
}

}  // namespace jcsim
