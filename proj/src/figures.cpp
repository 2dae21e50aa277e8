#include "jcsim/figures.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <stdexcept>

#include "jcsim/models.hpp"
#include "jcsim/output.hpp"
#include "jcsim/parallel.hpp"
#include "jcsim/spectrum.hpp"

namespace jcsim {

namespace {

// Run independent panels (each writes its own files) across the worker pool,
// preserving catalogue order in the merged file list.
RunResult run_panels(std::vector<std::function<RunResult()>> panels) {
  std::vector<RunResult> results(panels.size());
  std::vector<std::exception_ptr> errors(panels.size());
  parallel_for(static_cast<long>(panels.size()), [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      try {
        results[static_cast<std::size_t>(i)] = panels[static_cast<std::size_t>(i)]();
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  });
  for (const std::exception_ptr& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  RunResult all;
  for (RunResult& r : results) {
    all.files.insert(all.files.end(), r.files.begin(), r.files.end());
  }
  return all;
}

Json tag(const std::string& id) { return Json{{"figure", id}}; }

// ---- Fig. 1: Kerr field spectroscopy (closed forms) -----------------------

ScenarioConfig field_spectrum_config(double chi, double lo, double hi) {
  ScenarioConfig cfg;
  cfg.model = ModelKind::FieldOnly;
  cfg.params.omega_a = 1.0;
  cfg.params.omega_c = 1.0;
  cfg.params.deformation = DeformationSpec::LinearKerr(chi);
  cfg.probe = ProbeKind::field;
  cfg.method = RunMethod::closed_form;
  cfg.Gamma = 0.05;
  cfg.omega_auto = false;
  cfg.omega_min = lo;
  cfg.omega_max = hi;
  return cfg;
}

RunResult fig1_fock(const std::string& id, double chi, double lo, double hi,
                    const std::string& out_dir) {
  std::vector<std::function<RunResult()>> panels;
  for (int n : {1, 2, 3}) {
    panels.push_back([=] {
      ScenarioConfig cfg = field_spectrum_config(chi, lo, hi);
      cfg.state.kind = StateKind::FockField;
      cfg.state.n = n;
      cfg.dataset = id + "_n" + std::to_string(n);
      return run_spectrum(cfg, out_dir, tag(id));
    });
  }
  return run_panels(std::move(panels));
}

RunResult fig1c(const std::string& out_dir) {
  std::vector<std::function<RunResult()>> panels;
  for (int nbar : {2, 4}) {
    panels.push_back([=] {
      ScenarioConfig cfg = field_spectrum_config(0.2, 0.7, 7.1);
      cfg.state.kind = StateKind::CoherentField;
      cfg.state.alpha = Complex(std::sqrt(static_cast<double>(nbar)), 0.0);
      cfg.dataset = "fig1c_nbar" + std::to_string(nbar);
      return run_spectrum(cfg, out_dir, tag("fig1c"));
    });
  }
  return run_panels(std::move(panels));
}

RunResult fig1d(const std::string& out_dir) {
  std::vector<std::function<RunResult()>> panels;
  for (int nbar : {2, 4}) {
    panels.push_back([=] {
      ScenarioConfig cfg = field_spectrum_config(0.2, 0.7, 7.1);
      cfg.state.kind = StateKind::ThermalField;
      cfg.state.nbar = static_cast<double>(nbar);
      cfg.dataset = "fig1d_nbar" + std::to_string(nbar);
      return run_spectrum(cfg, out_dir, tag("fig1d"));
    });
  }
  return run_panels(std::move(panels));
}

// ---- Fig. 2: eigenvalue sweeps with the RWA-validity bound ----------------

ScenarioConfig sweep_config(ModelKind kind, double chi) {
  ScenarioConfig cfg;
  cfg.model = kind;
  cfg.params.omega_a = 1.0;
  cfg.params.omega_c = 1.0 / 1.3;  // selective m = 2 at chi = 0.05
  cfg.params.deformation =
      (kind == ModelKind::JC || kind == ModelKind::Rabi)
          ? DeformationSpec::Identity()
          : DeformationSpec::LinearKerr(chi);
  cfg.coupling_min = 0.0;
  cfg.coupling_max = 0.3;
  cfg.coupling_points = 61;
  cfg.num_eigenvalues = 14;
  return cfg;
}

// Coupling-dependent RWA bound n_max(Omega0) on the shared sweep axis.  The
// x = 0 row is skipped: the undeformed bound diverges there.
RunResult write_bound_dataset(const std::string& id, double chi,
                              const std::string& out_dir) {
  ScenarioConfig cfg = sweep_config(chi > 0.0 ? ModelKind::DJC : ModelKind::JC, chi);
  std::vector<double> xs, bound;
  for (double x : uniform_grid(cfg.coupling_min, cfg.coupling_max, cfg.coupling_points)) {
    if (x == 0.0) continue;
    ModelParams p = cfg.params;
    p.deformation = DeformationSpec::LinearKerr(chi);
    p.Omega0 = 2.0 * p.omega_a * x;
    xs.push_back(x);
    bound.push_back(rwa_nmax(p));
  }
  Json meta = base_metadata("figure", cfg);
  meta["figure"] = id;
  meta["dataset_role"] = "rwa_bound";
  const std::string name = id + "_bounds";
  write_dataset(out_dir, name, {{"coupling", xs}, {"nmax", bound}}, meta);
  return {{out_dir + "/" + name + ".csv", out_dir + "/" + name + ".json"}};
}

// Bounding box of the selective doublet's dressed branch over the sweep, for
// marking the selective-transition region on the eigenvalue plot.
Json selective_rectangle(const ScenarioConfig& cfg, int m) {
  double emin = std::numeric_limits<double>::infinity();
  double emax = -std::numeric_limits<double>::infinity();
  for (double x : uniform_grid(cfg.coupling_min, cfg.coupling_max, cfg.coupling_points)) {
    ModelParams p = cfg.params;
    p.Omega0 = 2.0 * p.omega_a * x;
    const DressedDoublet d = doublet_block(p, m);
    emin = std::min(emin, d.E_minus);
    emax = std::max(emax, d.E_plus);
  }
  return Json{{"m", m},
              {"coupling_min", cfg.coupling_min},
              {"coupling_max", cfg.coupling_max},
              {"energy_min", emin},
              {"energy_max", emax}};
}

RunResult fig2(const std::string& id, ModelKind left, ModelKind right, double bound_chi,
               const std::string& out_dir) {
  std::vector<std::function<RunResult()>> panels;
  for (ModelKind kind : {left, right}) {
    panels.push_back([=] {
      ScenarioConfig cfg = sweep_config(kind, 0.05);
      cfg.dataset = id + "_" + model_name(kind);
      Json extra = tag(id);
      if (id == "fig2b" && kind == ModelKind::DJC) {
        extra["selective_rectangle"] = selective_rectangle(cfg, 2);
      }
      return run_eigensweep(cfg, out_dir, extra);
    });
  }
  panels.push_back([=] { return write_bound_dataset(id, bound_chi, out_dir); });
  return run_panels(std::move(panels));
}

// ---- Fig. 3: deformed vacuum doublet, closed forms ------------------------

RunResult fig3(const std::string& out_dir) {
  const std::vector<std::pair<std::string, double>> curves = {
      {"fig3_chi0", 0.0}, {"fig3_chi125", 0.125}, {"fig3_chi250", 0.25}};
  std::vector<std::function<RunResult()>> panels;
  for (const auto& [name, chi] : curves) {
    panels.push_back([=] {
      ScenarioConfig cfg;
      cfg.model = ModelKind::DJC;
      cfg.params.omega_a = 1.0;
      cfg.params.omega_c = 0.8;
      cfg.params.Omega0 = 0.25;
      cfg.params.deformation = DeformationSpec::LinearKerr(chi);
      cfg.state.kind = StateKind::FockExcited;
      cfg.state.n = 0;
      cfg.Gamma = 0.01;
      cfg.method = RunMethod::closed_form;
      cfg.omega_auto = false;
      cfg.omega_min = 0.67;
      cfg.omega_max = 1.34;
      cfg.dataset = name;
      return run_spectrum(cfg, out_dir, tag("fig3"));
    });
  }
  return run_panels(std::move(panels));
}

// ---- Figs. 4-5: Fock-doublet spectra via the factorized kernels -----------

ScenarioConfig doublet_spectrum_config(double chi, double omega_c, double Omega0) {
  ScenarioConfig cfg;
  cfg.model = ModelKind::DJC;
  cfg.params.omega_a = 1.0;
  cfg.params.omega_c = omega_c;
  cfg.params.Omega0 = Omega0;
  cfg.params.deformation = DeformationSpec::LinearKerr(chi);
  cfg.state.kind = StateKind::FockExcited;
  cfg.Gamma = 0.01;
  cfg.method = RunMethod::numeric;
  cfg.kernel = KernelChoice::analytic;
  cfg.frame_shift = 1.0;  // numeric device only: rotates the kernel, not S
  return cfg;
}

RunResult fig4(const std::string& out_dir) {
  std::vector<std::function<RunResult()>> panels;
  for (int n : {1, 3, 5}) {
    panels.push_back([=] {
      ScenarioConfig cfg = doublet_spectrum_config(1.0 / 72.0, 0.9, 0.25);
      cfg.state.n = n;
      cfg.reference_n = 4;  // caption's 16 tau(4) observation window
      cfg.t_periods = {16.0};
      cfg.dataset = "fig4_n" + std::to_string(n);
      Json extra = tag("fig4");
      const double det = effective_detuning(cfg.params, n);
      extra["effective_detuning"] = det;
      extra["effective_detuning_sign"] =
          std::abs(det) <= 1e-12 ? "zero" : (det > 0.0 ? "positive" : "negative");
      return run_spectrum(cfg, out_dir, extra);
    });
  }
  return run_panels(std::move(panels));
}

RunResult fig5(const std::string& out_dir) {
  std::vector<std::function<RunResult()>> panels;
  for (int periods : {2, 4, 8, 16, 32, 64}) {
    panels.push_back([=] {
      ScenarioConfig cfg = doublet_spectrum_config(0.0125, 1.0 / 1.125, 0.125);
      cfg.state.n = 4;
      cfg.reference_n = 4;
      cfg.t_periods = {static_cast<double>(periods)};
      cfg.dataset = "fig5_t" + std::to_string(periods);
      return run_spectrum(cfg, out_dir, tag("fig5"));
    });
  }
  return run_panels(std::move(panels));
}

// ---- Figs. 6-7: coherent initial state via the propagator -----------------

ScenarioConfig coherent_config(double chi) {
  ScenarioConfig cfg;
  cfg.model = ModelKind::DJC;
  cfg.params.omega_a = 1.0;
  cfg.params.omega_c = 1.0 / (1.0 + 6.0 * chi);  // n = 2 selective binding
  cfg.params.Omega0 = 0.125;
  cfg.params.deformation = DeformationSpec::LinearKerr(chi);
  cfg.state.kind = StateKind::CoherentExcited;
  cfg.state.alpha = Complex(2.0, 0.0);
  cfg.reference_n = 2;
  cfg.Gamma = 0.01;
  cfg.method = RunMethod::numeric;
  cfg.kernel = KernelChoice::numeric;  // n = 0 component to full mixing
  cfg.frame_shift = 1.0;
  return cfg;
}

RunResult fig6(const std::string& out_dir) {
  std::vector<std::function<RunResult()>> panels;
  for (int periods : {2, 4, 8, 16, 32, 64}) {
    panels.push_back([=] {
      ScenarioConfig cfg = coherent_config(0.0125);
      cfg.t_periods = {static_cast<double>(periods)};
      cfg.dataset = "fig6_t" + std::to_string(periods);
      return run_spectrum(cfg, out_dir, tag("fig6"));
    });
  }
  return run_panels(std::move(panels));
}

RunResult fig7(const std::string& out_dir) {
  const std::vector<std::pair<std::string, double>> curves = {
      {"fig7_chi0000", 0.0},   {"fig7_chi0025", 0.0025}, {"fig7_chi0050", 0.005},
      {"fig7_chi0075", 0.0075}, {"fig7_chi0100", 0.01},  {"fig7_chi0125", 0.0125}};
  std::vector<std::function<RunResult()>> panels;
  for (const auto& [name, chi] : curves) {
    panels.push_back([=] {
      ScenarioConfig cfg = coherent_config(chi);
      cfg.t_periods = {16.0};
      cfg.dataset = name;
      return run_spectrum(cfg, out_dir, tag("fig7"));
    });
  }
  return run_panels(std::move(panels));
}

}  // namespace

std::vector<std::string> figure_ids() {
  return {"fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b",
          "fig2c", "fig3",  "fig4",  "fig5",  "fig6",  "fig7"};
}

RunResult reproduce_figure(const std::string& id, const std::string& out_dir) {
  if (id == "fig1a") return fig1_fock(id, 0.0, 0.7, 1.3, out_dir);
  if (id == "fig1b") return fig1_fock(id, 0.2, 0.7, 2.5, out_dir);
  if (id == "fig1c") return fig1c(out_dir);
  if (id == "fig1d") return fig1d(out_dir);
  if (id == "fig2a") return fig2(id, ModelKind::JC, ModelKind::Rabi, 0.0, out_dir);
  if (id == "fig2b") return fig2(id, ModelKind::JC, ModelKind::DJC, 0.05, out_dir);
  if (id == "fig2c") return fig2(id, ModelKind::DJC, ModelKind::DRabi, 0.05, out_dir);
  if (id == "fig3") return fig3(out_dir);
  if (id == "fig4") return fig4(out_dir);
  if (id == "fig5") return fig5(out_dir);
  if (id == "fig6") return fig6(out_dir);
  if (id == "fig7") return fig7(out_dir);
  std::string known;
  for (const std::string& k : figure_ids()) known += " " + k;
  throw std::invalid_argument("reproduce_figure: unknown figure id '" + id +
                              "'; known ids:" + known);
}

}  // namespace jcsim
