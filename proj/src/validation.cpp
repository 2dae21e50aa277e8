#include "jcsim/validation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "jcsim/algebra.hpp"
#include "jcsim/analytic.hpp"
#include "jcsim/dynamics.hpp"
#include "jcsim/figures.hpp"
#include "jcsim/models.hpp"
#include "jcsim/spectrum.hpp"

namespace jcsim {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> eigenvalues_of(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Two tallest peaks of a curve, ordered left to right.
std::pair<Peak, Peak> doublet_peaks(const std::vector<double>& omega,
                                    const std::vector<double>& s) {
  const std::vector<Peak> peaks = find_peaks(omega, s);
  if (peaks.size() < 2) {
    throw std::runtime_error("validation: expected a two-peak spectrum");
  }
  Peak a = peaks[0], b = peaks[1];
  if (a.omega > b.omega) std::swap(a, b);
  return {a, b};
}

// ---- 1. Kerr Fock spectroscopy --------------------------------------------

Outcome criterion_kerr_fock() {
  ModelParams p;
  p.omega_a = 1.0;
  p.omega_c = 1.0;
  p.deformation = DeformationSpec::LinearKerr(0.2);
  const double Gamma = 0.05;
  const double t = 20.0 / Gamma;
  bool pass = true;
  std::string detail;
  for (int n : {1, 2, 3}) {
    const auto start = Clock::now();
    StateSpec st;
    st.kind = StateKind::FockField;
    st.n = n;
    const InitialState istate = make_initial_state(st);
    const double nu = p.omega_c * (1.0 + 2.0 * p.deformation.chi * n);
    const std::vector<double> omega = uniform_grid(nu - 0.3, nu + 0.3, 2001);
    const double step = omega[1] - omega[0];
    const int samples = auto_samples(t, 0.3, 25.0);
    const CorrelationGrid corr = kerr_corr_grid(p, istate, TimeGrid(t, samples), nu);
    SpectrumRequest req;
    req.Gamma = Gamma;
    req.t = t;
    req.omega = omega;
    const SpectrumResult res = ew_numeric(corr, req);
    const std::vector<Peak> peaks = find_peaks(omega, res.S);
    const double elapsed = seconds_since(start);
    if (peaks.empty()) {
      pass = false;
      detail += fmt("n=%d: no peak; ", n);
      continue;
    }
    const double pos_steps = std::abs(peaks[0].omega - nu) / step;
    const double height_rel = std::abs(peaks[0].height - 2.0 * n / Gamma) / (2.0 * n / Gamma);
    const bool ok = pos_steps <= 1.0 && height_rel <= 2e-2 && elapsed <= 1.0;
    pass = pass && ok;
    detail += fmt("n=%d: pos %.2f step, height rel %.2e, %.2f s; ", n, pos_steps,
                  height_rel, elapsed);
  }
  return {pass, detail + "need pos <= 1 step, height rel <= 2e-2, <= 1 s per curve"};
}

// ---- shared vacuum-doublet scaffolding ------------------------------------

ModelParams vacuum_doublet_params() {
  ModelParams p;
  p.omega_a = 1.0;
  p.omega_c = 1.0;
  p.Omega0 = 0.25;
  return p;
}

std::vector<double> vacuum_window(const ModelParams& p, double Gamma) {
  const double lo = p.omega_a - 0.5 * p.Omega0 - 6.0 * Gamma;
  const double hi = p.omega_a + 0.5 * p.Omega0 + 6.0 * Gamma;
  return uniform_grid(lo, hi, 2001);
}

SpectrumResult vacuum_numeric(const ModelParams& p, double Gamma, double t,
                              const std::vector<double>& omega, double h = 0.02) {
  const int samples = static_cast<int>(std::lround(t / h)) + 1;
  const CorrelationGrid corr =
      atom_corr_jc_grid(p, 0, TimeGrid(t, samples), p.omega_a);
  SpectrumRequest req;
  req.Gamma = Gamma;
  req.t = t;
  req.omega = omega;
  return ew_numeric(corr, req);
}

// ---- 2. vacuum doublet vs the long-time closed form -----------------------

Outcome criterion_vrs_longtime() {
  const ModelParams p = vacuum_doublet_params();
  const double Gamma = 0.01;
  const double t = 20.0 / Gamma;
  const std::vector<double> omega = vacuum_window(p, Gamma);
  const double step = omega[1] - omega[0];

  const SpectrumResult num = vacuum_numeric(p, Gamma, t, omega);
  std::vector<double> closed(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    closed[i] = vrs_longtime(p, Gamma, omega[i]);
  }
  const auto [nl, nr] = doublet_peaks(omega, num.S);
  const auto [cl, cr] = doublet_peaks(omega, closed);
  const double pos_steps =
      std::max(std::abs(nl.omega - cl.omega), std::abs(nr.omega - cr.omega)) / step;
  const double height_rel =
      std::max(std::abs(nl.height - cl.height) / cl.height,
               std::abs(nr.height - cr.height) / cr.height);
  const double sep_steps = std::abs((nr.omega - nl.omega) - p.Omega0) / step;
  const bool pass = pos_steps <= 1.0 && height_rel <= 1e-3 && sep_steps <= 1.0;
  return {pass,
          fmt("peak pos err %.2f steps (need <= 1), height rel %.3e (need <= 1e-3), "
              "separation err %.2f steps (need <= 1); undamped interference "
              "persists at finite Gamma/Omega0",
              pos_steps, height_rel, sep_steps)};
}

// ---- 3. finite-window closed form -----------------------------------------

Outcome criterion_vrs_fulltime() {
  const ModelParams p = vacuum_doublet_params();
  const double Gamma = 0.01;
  const std::vector<double> omega = vacuum_window(p, Gamma);

  // Trapezoid error scales as h^2 with the cross-line phase |omega - nu|
  // ~ 0.3 at the window edge; h = 0.005 lands the quadrature near 4e-7.
  const double h = 0.005;
  double quad_max = 0.0;
  for (double gt : {0.5, 2.0, 5.0, 20.0}) {
    const double t = gt / Gamma;
    const SpectrumResult num = vacuum_numeric(p, Gamma, t, omega, h);
    for (std::size_t i = 0; i < omega.size(); ++i) {
      quad_max = std::max(quad_max,
                          std::abs(num.S[i] - vrs_fulltime(p, Gamma, omega[i], t)));
    }
  }
  const bool clause1 = quad_max <= 1e-6;

  const double t20 = 20.0 / Gamma;
  double conv_max = 0.0;
  for (double w : omega) {
    const double full = vrs_fulltime(p, Gamma, w, t20);
    const double lt = vrs_longtime(p, Gamma, w);
    conv_max = std::max(conv_max, std::abs(full - lt) / lt);
  }
  const bool clause2 = conv_max <= 1e-6;
  return {clause1 && clause2,
          fmt("numeric vs closed form max |dS| %.3e (need <= 1e-6); convergence "
              "to the long-time form at Gamma t = 20: max rel %.3e (need <= 1e-6)",
              quad_max, conv_max)};
}

// ---- 4. deformed doublet weights ------------------------------------------

Outcome criterion_dvrs() {
  const double Gamma = 0.01;

  // Resonant: chi = 0.125, omega_c = 1/1.25 makes the n = 0 detuning vanish.
  ModelParams res;
  res.omega_a = 1.0;
  res.omega_c = 1.0 / 1.25;
  res.Omega0 = 0.25;
  res.deformation = DeformationSpec::LinearKerr(0.125);
  const DressedDoublet dres = doublet_block(res, 0);
  const double nu0 = res.omega_a - 0.5 * dres.detuning;
  const std::vector<double> w1 =
      uniform_grid(nu0 - 0.5 * dres.phi - 6.0 * Gamma,
                   nu0 + 0.5 * dres.phi + 6.0 * Gamma, 2001);
  const double step1 = w1[1] - w1[0];
  std::vector<double> s1(w1.size());
  for (std::size_t i = 0; i < w1.size(); ++i) s1[i] = dvrs_longtime(res, Gamma, w1[i]);
  const auto [rl, rr] = doublet_peaks(w1, s1);
  const double target_sep = 0.25 * std::sqrt(1.125);
  const double sep_steps = std::abs((rr.omega - rl.omega) - target_sep) / step1;
  const double height_diff = std::abs(rl.height - rr.height) /
                             std::max(rl.height, rr.height);
  const bool res_ok = sep_steps <= 1.0 && height_diff <= 1e-9;

  // Asymmetric: chi = 0 at omega_c = 0.8 splits the weights (1 -/+ d0)^2.
  ModelParams asym;
  asym.omega_a = 1.0;
  asym.omega_c = 0.8;
  asym.Omega0 = 0.25;
  asym.deformation = DeformationSpec::LinearKerr(0.0);
  const DressedDoublet dasym = doublet_block(asym, 0);
  const double d0 = dasym.detuning / dasym.phi;
  const double nua = asym.omega_a - 0.5 * dasym.detuning;
  const double c_left = nua - 0.5 * dasym.phi;
  const double c_right = nua + 0.5 * dasym.phi;
  const double w_left = (1.0 - d0) * (1.0 - d0);
  const double w_right = (1.0 + d0) * (1.0 + d0);
  const std::vector<double> w2 =
      uniform_grid(c_left - 6.0 * Gamma, c_right + 6.0 * Gamma, 2001);
  std::vector<double> s2(w2.size());
  for (std::size_t i = 0; i < w2.size(); ++i) s2[i] = dvrs_longtime(asym, Gamma, w2[i]);
  const auto [al, ar] = doublet_peaks(w2, s2);
  // Each measured height includes the partner line's Lorentzian tail (~2% at
  // this splitting); subtract it before comparing to the weight ratio.
  auto lorentz = [&](double weight, double center, double w) {
    return weight * (Gamma / 2.0) / (Gamma * Gamma + (w - center) * (w - center));
  };
  const double left_line = al.height - lorentz(w_right, c_right, al.omega);
  const double right_line = ar.height - lorentz(w_left, c_left, ar.omega);
  const double ratio_err =
      std::abs((left_line / right_line) / (w_left / w_right) - 1.0);
  const bool asym_ok = ratio_err <= 1e-3;

  return {res_ok && asym_ok,
          fmt("resonant: separation err %.2f steps (need <= 1), height asymmetry "
              "%.2e; detuned: tail-subtracted weight-ratio err %.3e (need <= 1e-3, "
              "d0 = %.6f)",
              sep_steps, height_diff, ratio_err, d0)};
}

// ---- 5. factorized kernels vs the propagator ------------------------------

Outcome criterion_kernel_oracle() {
  struct Case {
    ModelKind kind;
    ProbeKind probe;
    double omega_c;
    double chi;
    double Omega0;
    int n;
  };
  const double chi = 0.0125;
  std::vector<Case> cases;
  for (int n = 1; n <= 4; ++n) {
    cases.push_back({ModelKind::JC, ProbeKind::atom, 1.0, 0.0, 0.25, n});
    cases.push_back({ModelKind::JC, ProbeKind::field, 1.0, 0.0, 0.25, n});
    cases.push_back({ModelKind::DJC, ProbeKind::atom, 1.0 / (1.0 + 2.0 * chi * (n + 1)),
                     chi, 0.25, n});  // vanishing doublet detuning
    cases.push_back({ModelKind::DJC, ProbeKind::atom, 1.0 / (1.0 + 6.0 * chi), chi,
                     0.25, n});  // selective m = 2
    cases.push_back({ModelKind::DJC, ProbeKind::atom, 0.9, chi, 0.25, n});  // detuned
  }
  cases.push_back({ModelKind::DJC, ProbeKind::atom, 1.0 / 1.125, chi, 0.125, 4});

  double worst = 0.0;
  for (const Case& c : cases) {
    ModelParams p;
    p.omega_a = 1.0;
    p.omega_c = c.omega_c;
    p.Omega0 = c.Omega0;
    p.deformation = c.chi == 0.0 ? DeformationSpec::Identity()
                                 : DeformationSpec::LinearKerr(c.chi);
    const double t = 16.0 * 2.0 * M_PI / (c.Omega0 * std::sqrt(c.n + 1.0));
    const TimeGrid grid(t, 32);

    const CorrelationGrid analytic =
        c.kind == ModelKind::JC
            ? (c.probe == ProbeKind::atom ? atom_corr_jc_grid(p, c.n, grid)
                                          : field_corr_jc_grid(p, c.n, grid))
            : atom_corr_djc_grid(p, c.n, grid);

    StateSpec st;
    st.kind = StateKind::FockExcited;
    st.n = c.n;
    const InitialState istate = make_initial_state(st);
    const int N = istate.fock_cutoff;
    const Matrix h = build_hamiltonian(c.kind, p, HilbertLayout(N));
    const Matrix op = c.probe == ProbeKind::atom
                          ? tensor_product(Matrix::Identity(N, N), qubit_sigma_minus())
                          : tensor_product(ladder_matrices(N).a, Matrix::Identity(2, 2));
    const CorrelationGrid numeric = two_time_correlation(h, op, istate, grid);

    const Matrix diff = analytic.kernel() - numeric.kernel();
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-8,
          fmt("%zu kernel cases on 32x32 grids, max |dG| = %.3e (need <= 1e-8)",
              cases.size(), worst)};
}

// ---- 6. selective transition and doublet energies -------------------------

Outcome criterion_selective() {
  const double ratio = selective_cavity_frequency(2, 0.05);
  const double ratio_err = std::abs(ratio - 1.0 / 1.3) / (1.0 / 1.3);

  ModelParams p;
  p.omega_a = 1.0;
  p.omega_c = ratio * p.omega_a;
  p.Omega0 = 0.25;
  p.deformation = DeformationSpec::LinearKerr(0.05);
  const double det = std::abs(effective_detuning(p, 2));

  const int N = 40;
  const Matrix h = build_hamiltonian(ModelKind::DJC, p, HilbertLayout(N));
  const std::vector<double> numeric = eigenvalues_of(h);
  std::vector<double> predicted = {h(0, 0).real()};  // decoupled ground level
  for (int n = 0; n + 2 <= N; ++n) {
    const DressedDoublet d = doublet_block(p, n);
    predicted.push_back(d.E_minus);
    predicted.push_back(d.E_plus);
  }
  std::sort(predicted.begin(), predicted.end());
  double worst = 0.0;
  for (int i = 0; i < 23; ++i) {  // ground level + doublets n <= 10
    worst = std::max(worst, std::abs(predicted[i] - numeric[i]) /
                                std::abs(numeric[i]));
  }
  const bool pass = ratio_err <= 1e-12 && det <= 1e-12 && worst <= 1e-10;
  return {pass,
          fmt("frequency ratio err %.2e (need <= 1e-12), detuning at n=2: %.2e "
              "(need <= 1e-12), doublet energies vs diagonalization max rel %.3e "
              "(need <= 1e-10)",
              ratio_err, det, worst)};
}

// ---- 7. coupling-validity bound -------------------------------------------

Outcome criterion_rwa_bound() {
  ModelParams p;
  p.omega_a = 1.0;
  p.omega_c = 1.0;
  p.Omega0 = 0.25;
  p.deformation = DeformationSpec::LinearKerr(0.0);
  const double limit = rwa_nmax(p);
  const double limit_err = std::abs(limit - 256.0) / 256.0;
  const bool clause1 = limit_err <= 1e-12;

  p.deformation = DeformationSpec::LinearKerr(1e-6);
  const double near = rwa_nmax(p);
  const double cont_err = std::abs(near - limit) / limit;
  const bool clause2 = cont_err <= 1e-3;

  // Eigenvalue agreement below the bound at Omega0 / 2 omega_a = 0.05.
  ModelParams q;
  q.omega_a = 1.0;
  q.omega_c = 1.0 / 1.3;
  q.Omega0 = 0.1;
  q.deformation = DeformationSpec::LinearKerr(0.05);
  const double bound = rwa_nmax(q);
  const Matrix hd = build_hamiltonian(ModelKind::DJC, q, HilbertLayout(40));
  const std::vector<double> djc = eigenvalues_of(hd);
  const std::vector<double> drabi =
      eigenvalues_of(build_hamiltonian(ModelKind::DRabi, q, HilbertLayout(64)));
  // The decoupled ground level is not a doublet member; skip its slot.
  const double ground = hd(0, 0).real();
  std::size_t ground_idx = 0;
  for (std::size_t i = 1; i < djc.size(); ++i) {
    if (std::abs(djc[i] - ground) < std::abs(djc[ground_idx] - ground)) ground_idx = i;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < 23; ++i) {
    if (i == ground_idx) continue;
    worst = std::max(worst, std::abs(djc[i] - drabi[i]) / std::abs(djc[i]));
  }
  const bool clause3 = worst <= 1e-2;
  return {clause1 && clause2 && clause3,
          fmt("undeformed limit rel err %.2e (need <= 1e-12); continuity at "
              "chi = 1e-6: rel %.3e (need <= 1e-3); doublet agreement below the "
              "bound: max rel %.3e (need <= 1e-2, bound value %.3f: no positive "
              "root, all doublets compared)",
              limit_err, cont_err, worst, bound)};
}

// ---- 8. parity conservation -----------------------------------------------

Outcome criterion_parity() {
  const int N = 16;
  const HilbertLayout layout(N);
  const Matrix parity = parity_operator(layout);
  double worst = 0.0;
  for (unsigned seed = 0; seed < 10; ++seed) {
    std::mt19937 rng(seed);
    auto draw = [&rng](double lo, double hi) {
      return lo + (hi - lo) * (static_cast<double>(rng()) / 4294967296.0);
    };
    ModelParams p;
    p.omega_a = draw(0.5, 1.5);
    p.omega_c = draw(0.5, 1.5);
    p.Omega0 = draw(0.05, 0.5);
    const double chi = draw(0.0, 0.3);
    for (ModelKind kind :
         {ModelKind::JC, ModelKind::Rabi, ModelKind::DJC, ModelKind::DRabi}) {
      p.deformation = (kind == ModelKind::JC || kind == ModelKind::Rabi)
                          ? DeformationSpec::Identity()
                          : DeformationSpec::LinearKerr(chi);
      const Matrix c = commutator(build_hamiltonian(kind, p, layout), parity);
      // Interior block: rows/cols below the truncation edge.
      const Eigen::Index interior = 2 * (N - 1);
      worst = std::max(
          worst, c.topLeftCorner(interior, interior).cwiseAbs().maxCoeff());
    }
  }
  return {worst == 0.0,
          fmt("max |[H, Pi]| over 10 seeds x 4 models = %.1e (need exactly 0)",
              worst)};
}

// ---- 9. positivity and kernel structure -----------------------------------

Outcome criterion_positivity() {
  const double Gamma = 0.05;
  const double t = 50.0;

  ModelParams jc = vacuum_doublet_params();
  ModelParams djc;
  djc.omega_a = 1.0;
  djc.omega_c = 0.9;
  djc.Omega0 = 0.25;
  djc.deformation = DeformationSpec::LinearKerr(0.0125);
  ModelParams kerr;
  kerr.omega_a = 1.0;
  kerr.omega_c = 1.0;
  kerr.deformation = DeformationSpec::LinearKerr(0.2);
  StateSpec thermal;
  thermal.kind = StateKind::ThermalField;
  thermal.nbar = 2.0;
  StateSpec coherent;
  coherent.kind = StateKind::CoherentExcited;
  coherent.alpha = Complex(1.0, 0.0);
  const InitialState cstate = make_initial_state(coherent);
  const int N = cstate.fock_cutoff;
  const Matrix h_djc = build_hamiltonian(ModelKind::DJC, djc, HilbertLayout(N));
  const Matrix op_atom =
      tensor_product(Matrix::Identity(N, N), qubit_sigma_minus());

  using Maker = std::function<CorrelationGrid(const TimeGrid&)>;
  const std::vector<Maker> makers = {
      [&](const TimeGrid& g) { return atom_corr_jc_grid(jc, 2, g, 1.0); },
      [&](const TimeGrid& g) { return field_corr_jc_grid(jc, 1, g, 1.0); },
      [&](const TimeGrid& g) { return atom_corr_djc_grid(djc, 3, g, 1.0); },
      [&](const TimeGrid& g) {
        return kerr_corr_grid(kerr, make_initial_state(thermal), g, 1.0);
      },
      [&](const TimeGrid& g) {
        return two_time_correlation(h_djc, op_atom, cstate, g, 1.0, "atom");
      },
  };

  const std::vector<double> omega = uniform_grid(0.3, 1.7, 281);
  double herm_worst = 0.0;
  double psd_worst = 0.0;  // most negative eigenvalue / largest eigenvalue
  double spectrum_min = 0.0;
  double trap_min_ratio = 0.0;
  for (const Maker& make : makers) {
    // Structure checks on a fixed coarse grid: hermiticity and positive
    // semidefiniteness hold for any sampling of a valid kernel.
    const CorrelationGrid coarse = make(TimeGrid(t, 257));
    const Matrix g = coarse.kernel();
    herm_worst = std::max(herm_worst, (g - g.adjoint()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Matrix> solver((g + g.adjoint()) / 2.0);
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    psd_worst = std::min(psd_worst, lo / hi);

    // Spectrum checks need a grid that resolves both the kernel's own
    // bandwidth (the thermal mixture reaches high Fock levels) and the
    // requested window around the frame shift.
    const double band = std::max(coarse.max_frequency, 0.7);
    const CorrelationGrid corr = make(TimeGrid(t, auto_samples(t, band, 25.0)));
    SpectrumRequest req;
    req.Gamma = Gamma;
    req.t = t;
    req.omega = omega;
    const SpectrumResult gram = ew_numeric(corr, req);
    spectrum_min = std::min(spectrum_min,
                            *std::min_element(gram.S.begin(), gram.S.end()));
    const SpectrumResult trap = ew_numeric_trapezoid(corr, req);
    const double peak = *std::max_element(trap.S.begin(), trap.S.end());
    const double low = *std::min_element(trap.S.begin(), trap.S.end());
    trap_min_ratio = std::min(trap_min_ratio, low / std::max(peak, 1e-300));
  }
  double closed_min = 0.0;
  for (double w : omega) {
    closed_min = std::min({closed_min, vrs_longtime(jc, Gamma, w),
                           dvrs_longtime(djc, Gamma, w),
                           vrs_fulltime(jc, Gamma, w, 5.0)});
  }

  const bool pass = herm_worst <= 1e-12 && psd_worst >= -1e-10 &&
                    spectrum_min >= 0.0 && trap_min_ratio >= -1e-10 &&
                    closed_min >= -1e-12;
  return {pass,
          fmt("kernel hermiticity max |G - G^dag| %.1e, min eigenvalue ratio %.1e "
              "(need >= -1e-10); spectra: gram min %.1e (need >= 0), trapezoid "
              "min/peak %.1e (need >= -1e-10), closed forms min %.1e",
              herm_worst, psd_worst, spectrum_min, trap_min_ratio, closed_min)};
}

// ---- 10. figure regression ------------------------------------------------

bool run_figures_into(const std::string& dir, const std::string& cli_path) {
  for (const std::string& id : figure_ids()) {
    if (cli_path.empty()) {
      reproduce_figure(id, dir);
    } else {
      const std::string cmd = "\"" + cli_path + "\" figure " + id + " --out \"" +
                              dir + "\" > /dev/null 2>&1";
      if (std::system(cmd.c_str()) != 0) return false;
    }
  }
  return true;
}

Outcome criterion_figures(const std::string& cli_path) {
  const fs::path run1 = "acceptance_figures_run1";
  const fs::path run2 = "acceptance_figures_run2";
  fs::remove_all(run1);
  fs::remove_all(run2);

  const auto start = Clock::now();
  if (!run_figures_into(run1.string(), cli_path)) {
    return {false, "figure command failed (see stderr)"};
  }
  const double elapsed = seconds_since(start);
  if (!run_figures_into(run2.string(), cli_path)) {
    return {false, "figure command failed on the repeat run"};
  }

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  int csv_count = 0;
  int mismatches = 0;
  for (const auto& entry : fs::directory_iterator(run1)) {
    if (entry.path().extension() != ".csv") continue;
    ++csv_count;
    if (slurp(entry.path()) != slurp(run2 / entry.path().filename())) ++mismatches;
  }
  fs::remove_all(run1);
  fs::remove_all(run2);

  const bool pass = elapsed <= 60.0 && mismatches == 0 && csv_count > 0;
  return {pass, fmt("%zu figures -> %d csv datasets in %.1f s (need <= 60 s) via "
                    "%s; %d byte mismatches across runs (need 0)",
                    figure_ids().size(), csv_count, elapsed,
                    cli_path.empty() ? "library calls" : "the command line", mismatches)};
}

}  // namespace

CriterionResult run_criterion(int id, const std::string& cli_path) {
  static const char* titles[10] = {
      "kerr fock spectroscopy",
      "vacuum doublet long-time spectrum",
      "finite-window closed form",
      "deformed doublet weights",
      "factorized kernels vs propagator",
      "selective transition and doublet energies",
      "coupling-validity bound",
      "parity conservation",
      "positivity and kernel structure",
      "figure regression",
  };
  if (id < 1 || id > 10) {
    throw std::invalid_argument("run_criterion: id must be 1..10");
  }
  const auto start = Clock::now();
  Outcome out;
  switch (id) {
    case 1: out = criterion_kerr_fock(); break;
    case 2: out = criterion_vrs_longtime(); break;
    case 3: out = criterion_vrs_fulltime(); break;
    case 4: out = criterion_dvrs(); break;
    case 5: out = criterion_kernel_oracle(); break;
    case 6: out = criterion_selective(); break;
    case 7: out = criterion_rwa_bound(); break;
    case 8: out = criterion_parity(); break;
    case 9: out = criterion_positivity(); break;
    case 10: out = criterion_figures(cli_path); break;
  }
  CriterionResult r;
  r.id = id;
  r.title = titles[id - 1];
  r.pass = out.pass;
  r.detail = out.detail;
  r.seconds = seconds_since(start);
  return r;
}

bool ValidationReport::all_pass() const {
  for (const CriterionResult& r : results) {
    if (!r.pass) return false;
  }
  return !results.empty();
}

ValidationReport validate_suite(const std::string& cli_path) {
  ValidationReport report;
  for (int id = 1; id <= 10; ++id) {
    report.results.push_back(run_criterion(id, cli_path));
  }
  return report;
}

std::string format_criterion(const CriterionResult& r) {
  return fmt("[%s] criterion %2d (%6.2f s) %s: %s", r.pass ? "PASS" : "FAIL", r.id,
             r.seconds, r.title.c_str(), r.detail.c_str());
}

}  // namespace jcsim
