#include "jcsim/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jcsim {

namespace {

constexpr double kDegenerateSplitting = 1e-12;

// Omega_n = Omega0 sqrt(n+1), with the printed convention Omega_{-1} = 0.
double bare_rabi(const ModelParams& params, int n) {
  if (n < -1) {
    throw std::invalid_argument("bare_rabi: index below -1");
  }
  return n == -1 ? 0.0 : params.Omega0 * std::sqrt(static_cast<double>(n + 1));
}

DressedDoublet checked_doublet(const ModelParams& params, int n, const char* where) {
  const DressedDoublet d = doublet_block(params, n);
  if (std::abs(d.phi) < kDegenerateSplitting) {
    throw std::runtime_error(std::string(where) +
                             ": degenerate doublet (phi = 0) at n = " + std::to_string(n));
  }
  return d;
}

// cos(phi t/2) - i (Delta/phi) sin(phi t/2): excited-state amplitude factor of
// a dressed doublet.
Complex doublet_amplitude(const DressedDoublet& d, double t) {
  const double half = 0.5 * d.phi * t;
  return Complex{std::cos(half), 0.0} -
         I * (d.detuning / d.phi) * std::sin(half);
}

void finalize_grid(CorrelationGrid& out) {
  if (out.grid.samples <= 2048) {
    out.dense = out.kernel();
  }
}

double shifted_band(std::initializer_list<double> freqs, double shift) {
  double band = 0.0;
  for (double f : freqs) {
    band = std::max(band, std::abs(f - shift));
  }
  return band;
}

}  // namespace

Complex atom_corr_jc(const ModelParams& params, int n, double t1, double t2) {
  if (n < 0) {
    throw std::invalid_argument("atom_corr_jc: n must be >= 0");
  }
  const double om_n = bare_rabi(params, n);
  const double om_m = bare_rabi(params, n - 1);
  return std::exp(I * params.omega_a * (t1 - t2)) * std::cos(0.5 * om_n * t1) *
         std::cos(0.5 * om_m * (t1 - t2)) * std::cos(0.5 * om_n * t2);
}

Complex field_corr_jc(const ModelParams& params, int n, double t1, double t2) {
  if (n < 0) {
    throw std::invalid_argument("field_corr_jc: n must be >= 0");
  }
  const double om_plus = bare_rabi(params, n) + bare_rabi(params, n - 1);
  const double om_minus = bare_rabi(params, n) - bare_rabi(params, n - 1);
  const double root = 2.0 * std::sqrt(static_cast<double>(n) * (n + 1));
  const Complex bracket =
      (1.0 + 2.0 * n + root) * std::cos(0.5 * om_minus * (t1 - t2)) -
      std::cos(0.5 * (om_minus * t2 + om_plus * t1)) -
      std::cos(0.5 * (om_minus * t1 + om_plus * t2)) +
      (1.0 + 2.0 * n - root) * std::cos(0.5 * om_plus * (t1 - t2));
  return 0.25 * std::exp(I * params.omega_c * (t1 - t2)) * bracket;
}

Complex kerr_field_corr(const ModelParams& params, const InitialState& state,
                        double t1, double t2) {
  if (params.deformation.kind != DeformationKind::linear_kerr) {
    throw std::invalid_argument("kerr_field_corr: requires the linear Kerr profile");
  }
  if (!state.field_only) {
    throw std::invalid_argument("kerr_field_corr: requires a field-only state");
  }
  const double chi = params.deformation.chi;
  Complex g{0.0, 0.0};
  for (const StateComponent& c : state.components) {
    for (Eigen::Index n = 0; n < c.amplitudes.size(); ++n) {
      const double p = c.weight * std::norm(c.amplitudes(n));
      if (p == 0.0 || n == 0) continue;
      const double nu = params.omega_c * (1.0 + 2.0 * chi * static_cast<double>(n));
      g += p * static_cast<double>(n) * std::exp(I * nu * (t1 - t2));
    }
  }
  return g;
}

Complex atom_corr_djc(const ModelParams& params, int n, double t1, double t2) {
  if (n < 1) {
    throw std::invalid_argument(
        "atom_corr_djc: n must be >= 1 (the n = 0 sector has no lower doublet)");
  }
  const DressedDoublet dn = checked_doublet(params, n, "atom_corr_djc");
  const DressedDoublet dm = checked_doublet(params, n - 1, "atom_corr_djc");
  const double rn = dn.detuning / dn.phi;
  const double rm = dm.detuning / dm.phi;
  const double phi_plus = dn.phi + dm.phi;
  const double phi_minus = dn.phi - dm.phi;
  const double delta_e = dn.E0 - dm.E0;

  const Complex prefactor =
      0.125 * std::exp(I * delta_e * (t1 - t2)) *
      std::exp(-0.5 * I * (phi_minus * t2 + phi_plus * t1));
  const Complex bracket1 =
      std::exp(I * dn.phi * t1) * (1.0 + rn) + Complex{1.0 - rn, 0.0};
  const Complex bracket2 =
      Complex{1.0 + rn, 0.0} + std::exp(I * dn.phi * t2) * (1.0 - rn);
  const Complex bracket3 =
      std::exp(I * dm.phi * (t1 - t2)) * (1.0 + rm) + Complex{1.0 - rm, 0.0};
  return prefactor * bracket1 * bracket2 * bracket3;
}

CorrelationGrid atom_corr_jc_grid(const ModelParams& params, int n, const TimeGrid& grid,
                                  double frame_shift) {
  if (n < 0) {
    throw std::invalid_argument("atom_corr_jc_grid: n must be >= 0");
  }
  const double om_n = bare_rabi(params, n);
  const double om_m = bare_rabi(params, n - 1);
  const auto t = grid.values();

  CorrelationGrid out;
  out.grid = grid;
  out.probe = "sigma_minus";
  out.frame_shift = frame_shift;
  out.max_frequency = shifted_band({params.omega_a + 0.5 * (om_n + om_m),
                                    params.omega_a + 0.5 * (om_n - om_m),
                                    params.omega_a - 0.5 * (om_n - om_m),
                                    params.omega_a - 0.5 * (om_n + om_m)},
                                   frame_shift);
  Matrix traj(grid.samples, 2);
  for (int k = 0; k < grid.samples; ++k) {
    const double tk = t[static_cast<std::size_t>(k)];
    const Complex carrier = std::exp(I * (frame_shift - params.omega_a) * tk) *
                            std::cos(0.5 * om_n * tk);
    traj(k, 0) = carrier * std::cos(0.5 * om_m * tk);
    traj(k, 1) = carrier * I * std::sin(0.5 * om_m * tk);
  }
  out.components.push_back({1.0, std::move(traj)});
  finalize_grid(out);
  return out;
}

CorrelationGrid field_corr_jc_grid(const ModelParams& params, int n, const TimeGrid& grid,
                                   double frame_shift) {
  if (n < 0) {
    throw std::invalid_argument("field_corr_jc_grid: n must be >= 0");
  }
  const double om_n = bare_rabi(params, n);
  const double om_m = bare_rabi(params, n - 1);
  const auto t = grid.values();

  CorrelationGrid out;
  out.grid = grid;
  out.probe = "a";
  out.frame_shift = frame_shift;
  out.max_frequency = shifted_band({params.omega_c + 0.5 * (om_n + om_m),
                                    params.omega_c + 0.5 * (om_n - om_m),
                                    params.omega_c - 0.5 * (om_n - om_m),
                                    params.omega_c - 0.5 * (om_n + om_m)},
                                   frame_shift);
  if (n == 0) {
    Matrix traj(grid.samples, 1);
    for (int k = 0; k < grid.samples; ++k) {
      const double tk = t[static_cast<std::size_t>(k)];
      traj(k, 0) = -I * std::exp(I * (frame_shift - params.omega_c) * tk) *
                   std::sin(0.5 * om_n * tk);
    }
    out.components.push_back({1.0, std::move(traj)});
  } else {
    const double root_n = std::sqrt(static_cast<double>(n));
    const double root_n1 = std::sqrt(static_cast<double>(n + 1));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix traj(grid.samples, 2);
    for (int k = 0; k < grid.samples; ++k) {
      const double tk = t[static_cast<std::size_t>(k)];
      const Complex carrier = inv_sqrt2 * std::exp(I * (frame_shift - params.omega_c) * tk);
      const Complex cos_part{root_n * std::cos(0.5 * om_n * tk), 0.0};
      const Complex sin_part = I * root_n1 * std::sin(0.5 * om_n * tk);
      traj(k, 0) = carrier * (cos_part - sin_part) * std::exp(I * 0.5 * om_m * tk);
      traj(k, 1) = carrier * (cos_part + sin_part) * std::exp(-I * 0.5 * om_m * tk);
    }
    out.components.push_back({1.0, std::move(traj)});
  }
  finalize_grid(out);
  return out;
}

CorrelationGrid kerr_corr_grid(const ModelParams& params, const InitialState& state,
                               const TimeGrid& grid, double frame_shift) {
  if (params.deformation.kind != DeformationKind::linear_kerr) {
    throw std::invalid_argument("kerr_corr_grid: requires the linear Kerr profile");
  }
  if (!state.field_only) {
    throw std::invalid_argument("kerr_corr_grid: requires a field-only state");
  }
  const double chi = params.deformation.chi;
  const auto t = grid.values();

  CorrelationGrid out;
  out.grid = grid;
  out.probe = "a";
  out.frame_shift = frame_shift;
  for (const StateComponent& c : state.components) {
    for (Eigen::Index n = 0; n < c.amplitudes.size(); ++n) {
      const double p = c.weight * std::norm(c.amplitudes(n));
      if (p == 0.0 || n == 0) continue;
      const double nu = params.omega_c * (1.0 + 2.0 * chi * static_cast<double>(n));
      out.max_frequency = std::max(out.max_frequency, std::abs(nu - frame_shift));
      Matrix traj(grid.samples, 1);
      const double amp = std::sqrt(static_cast<double>(n));
      for (int k = 0; k < grid.samples; ++k) {
        traj(k, 0) = amp * std::exp(I * (frame_shift - nu) * t[static_cast<std::size_t>(k)]);
      }
      out.components.push_back({p, std::move(traj)});
    }
  }
  if (out.components.empty()) {
    out.components.push_back({1.0, Matrix::Zero(grid.samples, 1)});  // vacuum emits nothing
  }
  finalize_grid(out);
  return out;
}

CorrelationGrid atom_corr_djc_grid(const ModelParams& params, int n, const TimeGrid& grid,
                                   double frame_shift) {
  if (n < 0) {
    throw std::invalid_argument("atom_corr_djc_grid: n must be >= 0");
  }
  const auto t = grid.values();
  CorrelationGrid out;
  out.grid = grid;
  out.probe = "sigma_minus";
  out.frame_shift = frame_shift;

  if (n == 0) {
    // Vacuum sector: rank-1 kernel w(t) = e^{-i nu t} c_0(t) with
    // nu = omega_a - Delta_{f,0}/2 (the |e,0> doublet relative to |g,0>).
    const DressedDoublet d0 = checked_doublet(params, 0, "atom_corr_djc_grid");
    const double nu = params.omega_a - 0.5 * d0.detuning;
    out.max_frequency =
        shifted_band({nu + 0.5 * d0.phi, nu - 0.5 * d0.phi}, frame_shift);
    Matrix traj(grid.samples, 1);
    for (int k = 0; k < grid.samples; ++k) {
      const double tk = t[static_cast<std::size_t>(k)];
      traj(k, 0) = std::exp(I * (frame_shift - nu) * tk) * doublet_amplitude(d0, tk);
    }
    out.components.push_back({1.0, std::move(traj)});
  } else {
    const DressedDoublet dn = checked_doublet(params, n, "atom_corr_djc_grid");
    const DressedDoublet dm = checked_doublet(params, n - 1, "atom_corr_djc_grid");
    const double delta_e = dn.E0 - dm.E0;
    const double sin_half = std::sin(0.5 * dm.mixing_angle);
    const double cos_half = std::cos(0.5 * dm.mixing_angle);
    out.max_frequency = shifted_band({delta_e + 0.5 * (dn.phi + dm.phi),
                                      delta_e + 0.5 * (dn.phi - dm.phi),
                                      delta_e - 0.5 * (dn.phi - dm.phi),
                                      delta_e - 0.5 * (dn.phi + dm.phi)},
                                     frame_shift);
    Matrix traj(grid.samples, 2);
    for (int k = 0; k < grid.samples; ++k) {
      const double tk = t[static_cast<std::size_t>(k)];
      const Complex cn = doublet_amplitude(dn, tk);
      const Complex shift = std::exp(I * frame_shift * tk);
      traj(k, 0) = -I * sin_half * std::exp(-I * (delta_e - 0.5 * dm.phi) * tk) * cn * shift;
      traj(k, 1) = I * cos_half * std::exp(-I * (delta_e + 0.5 * dm.phi) * tk) * cn * shift;
    }
    out.components.push_back({1.0, std::move(traj)});
  }
  finalize_grid(out);
  return out;
}

double two_sin_sq_half_arctan(double x) { return 1.0 - 1.0 / std::sqrt(1.0 + x * x); }

double two_cos_sq_half_arctan(double x) { return 1.0 + 1.0 / std::sqrt(1.0 + x * x); }

}  // namespace jcsim
