#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jcsim/analytic.hpp"
#include "jcsim/dynamics.hpp"
#include "jcsim/models.hpp"

namespace jcsim {

// Time-windowed physical spectrum of a two-time correlation kernel:
//   S(omega, Gamma, t) = 2 Gamma e^{-2 Gamma t}
//       \int_0^t dt1 \int_0^t dt2 e^{Gamma(t1+t2)} e^{-i omega (t1-t2)} G(t1,t2),
// evaluated verbatim (no area renormalization).

struct SpectrumRequest {
  double Gamma = 0.01;
  double t = 0.0;                // observation time; must match the kernel grid
  std::vector<double> omega;     // strictly increasing, lab frame
};

enum class SpectrumMethod { numeric_gram, numeric_trapezoid, closed_form };

std::string method_name(SpectrumMethod method);

struct SpectrumResult {
  std::vector<double> omega;
  std::vector<double> S;
  double Gamma = 0.0;
  double t = 0.0;
  SpectrumMethod method = SpectrumMethod::numeric_gram;
};

// Fast path: S = 2 Gamma || sum_k c_k e^{(Gamma + i w)(t_k - t)} w(t_k) ||^2
// over the stored trajectory vectors (trapezoid weights c_k), nonnegative by
// construction and O(samples) per frequency.  Requires Gram components.
SpectrumResult ew_numeric(const CorrelationGrid& corr, const SpectrumRequest& req);

// Slow oracle: trapezoid quadrature of the double integral over the kernel
// matrix, reduced along anti-diagonals so each frequency costs O(samples).
SpectrumResult ew_numeric_trapezoid(const CorrelationGrid& corr, const SpectrumRequest& req);

// Closed-form long-time and full-time spectra.

// Two half-weight Lorentzians at omega_a ± Omega0/2 (vacuum Rabi splitting).
double vrs_longtime(const ModelParams& params, double Gamma, double omega);

// Finite-time closed form: the two filtered Lorentzian terms plus the
// interference cross term, transcribed with paired conjugate denominators.
double vrs_fulltime(const ModelParams& params, double Gamma, double omega, double t);

// Kerr field spectrum: sum over Fock weights of 2 n Gamma Lorentzians centered
// at omega_c (1 + 2 chi n).  Field-only states, linear Kerr profile.
double kerr_longtime(const ModelParams& params, const InitialState& state, double Gamma,
                     double omega);

// Deformed vacuum Rabi splitting, n = 0 sector:
//   S_± = (1 -/+ d0)^2 (Gamma/2) / (Gamma^2 + (omega - omega_a + Delta0/2 ± phi0/2)^2),
// Delta0 = omega_a - omega_c(1+2chi), phi0 = sqrt(Delta0^2 + Omega0^2(1+chi)),
// d0 = Delta0/phi0.  Linear Kerr profile only.
double dvrs_longtime(const ModelParams& params, double Gamma, double omega);

// Grid helpers.
std::vector<double> uniform_grid(double lo, double hi, int points);

// Sample count giving ~samples_per_period points per period of the fastest
// frequency (floor 33), with margin over the 20-per-period refusal bound.
int auto_samples(double t_final, double max_frequency, double samples_per_period = 25.0);

SpectrumResult closed_form_curve(const std::function<double(double)>& f,
                                 const std::vector<double>& omega, double Gamma, double t);

// Quadratic peak interpolation through each local maximum and its neighbors;
// returned in descending height order.
struct Peak {
  double omega = 0.0;
  double height = 0.0;
  int index = 0;
};

std::vector<Peak> find_peaks(const std::vector<double>& omega, const std::vector<double>& s);

}  // namespace jcsim
