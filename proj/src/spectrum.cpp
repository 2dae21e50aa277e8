#include "jcsim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jcsim/parallel.hpp"

namespace jcsim {

namespace {

constexpr double kSamplesPerPeriodFloor = 20.0;  // refusal bound

void check_request(const SpectrumRequest& req) {
  if (!(req.Gamma > 0.0)) {
    throw std::invalid_argument("ew spectrum: Gamma must be positive");
  }
  if (req.omega.empty()) {
    throw std::invalid_argument("ew spectrum: empty frequency grid");
  }
  for (std::size_t i = 1; i < req.omega.size(); ++i) {
    if (!(req.omega[i] > req.omega[i - 1])) {
      throw std::invalid_argument("ew spectrum: frequency grid must be strictly increasing");
    }
  }
  if (req.t < 0.0) {
    throw std::invalid_argument("ew spectrum: observation time must be >= 0");
  }
}

// Sampling-density police: the grid must resolve both the kernel's internal
// oscillations and the largest |omega - frame_shift| requested.
void check_sampling(const CorrelationGrid& corr, const SpectrumRequest& req) {
  if (std::abs(req.t - corr.grid.t_final) > 1e-9 * std::max(1.0, req.t)) {
    throw std::invalid_argument("ew spectrum: kernel grid spans t = " +
                                std::to_string(corr.grid.t_final) +
                                " but the request asks for t = " + std::to_string(req.t));
  }
  double band = corr.max_frequency;
  for (double w : req.omega) {
    band = std::max(band, std::abs(w - corr.frame_shift));
  }
  if (band <= 0.0) return;
  const double h = corr.grid.step();
  const double h_limit = 2.0 * std::numbers::pi / (kSamplesPerPeriodFloor * band);
  if (h > h_limit) {
    const int needed =
        static_cast<int>(std::ceil(corr.grid.t_final / h_limit)) + 1;
    throw std::runtime_error(
        "ew spectrum: undersampled kernel; step " + std::to_string(h) + " exceeds " +
        std::to_string(h_limit) + " for bandwidth " + std::to_string(band) + " (need >= " +
        std::to_string(needed) + " samples, have " + std::to_string(corr.grid.samples) + ")");
  }
}

// Trapezoid weights scaled by the filter envelope relative to the window end:
// b_k = c_k e^{Gamma (t_k - t)}, so every magnitude stays <= h for any Gamma t.
std::vector<double> envelope_weights(const CorrelationGrid& corr, double Gamma) {
  const auto t = corr.grid.values();
  const double h = corr.grid.step();
  std::vector<double> b(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double c = (k == 0 || k + 1 == t.size()) ? 0.5 * h : h;
    b[k] = c * std::exp(Gamma * (t[k] - corr.grid.t_final));
  }
  return b;
}

SpectrumResult zero_result(const SpectrumRequest& req, SpectrumMethod method) {
  SpectrumResult out;
  out.omega = req.omega;
  out.S.assign(req.omega.size(), 0.0);
  out.Gamma = req.Gamma;
  out.t = req.t;
  out.method = method;
  return out;
}

}  // namespace

std::string method_name(SpectrumMethod method) {
  switch (method) {
    case SpectrumMethod::numeric_gram: return "numeric_gram";
    case SpectrumMethod::numeric_trapezoid: return "numeric_trapezoid";
    case SpectrumMethod::closed_form: return "closed_form";
  }
  throw std::invalid_argument("method_name: unknown method");
}

SpectrumResult ew_numeric(const CorrelationGrid& corr, const SpectrumRequest& req) {
  check_request(req);
  if (req.t == 0.0) {
    return zero_result(req, SpectrumMethod::numeric_gram);
  }
  if (corr.components.empty()) {
    throw std::runtime_error(
        "ew_numeric: Gram path needs trajectory components; only a dense kernel is stored");
  }
  check_sampling(corr, req);

  const auto times = corr.grid.values();
  const Eigen::Index nt = static_cast<Eigen::Index>(times.size());
  const std::vector<double> b = envelope_weights(corr, req.Gamma);
  const double h = corr.grid.step();

  SpectrumResult out = zero_result(req, SpectrumMethod::numeric_gram);
  parallel_for(static_cast<long>(req.omega.size()), [&](long begin, long end) {
    Vector phase(nt);
    for (long i = begin; i < end; ++i) {
      const double w = req.omega[static_cast<std::size_t>(i)] - corr.frame_shift;
      // phase_k = b_k e^{i w (t_k - t)}, built by an ascending recurrence.
      Complex p = std::exp(Complex{0.0, -w * corr.grid.t_final});
      const Complex q = std::exp(Complex{0.0, w * h});
      for (Eigen::Index k = 0; k < nt; ++k) {
        phase(k) = b[static_cast<std::size_t>(k)] * p;
        p *= q;
      }
      double s = 0.0;
      for (const CorrelationComponent& c : corr.components) {
        s += c.weight * (c.trajectory.transpose() * phase).squaredNorm();
      }
      out.S[static_cast<std::size_t>(i)] = 2.0 * req.Gamma * s;
    }
  });
  return out;
}

SpectrumResult ew_numeric_trapezoid(const CorrelationGrid& corr, const SpectrumRequest& req) {
  check_request(req);
  if (req.t == 0.0) {
    return zero_result(req, SpectrumMethod::numeric_trapezoid);
  }
  if (!corr.dense && corr.components.empty()) {
    throw std::runtime_error("ew_numeric_trapezoid: kernel holds neither components nor values");
  }
  check_sampling(corr, req);

  const Eigen::Index nt = corr.grid.samples;
  const std::vector<double> b = envelope_weights(corr, req.Gamma);
  const double h = corr.grid.step();

  // Anti-diagonal reduction: d_m = sum_j b_j b_{j+m} G(t_j, t_{j+m}); then
  // S(w) = 2 Gamma (d_0 + 2 Re sum_{m>=1} e^{i w m h} d_m).
  std::vector<Complex> d(static_cast<std::size_t>(nt), Complex{0.0, 0.0});
  if (corr.dense) {
    const Matrix& g = *corr.dense;
    for (Eigen::Index m = 0; m < nt; ++m) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index j = 0; j + m < nt; ++j) {
        acc += b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j + m)] * g(j, j + m);
      }
      d[static_cast<std::size_t>(m)] = acc;
    }
  } else {
    for (const CorrelationComponent& c : corr.components) {
      for (Eigen::Index m = 0; m < nt; ++m) {
        Complex acc{0.0, 0.0};
        for (Eigen::Index j = 0; j + m < nt; ++j) {
          acc += b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j + m)] *
                 c.trajectory.row(j).dot(c.trajectory.row(j + m));
        }
        d[static_cast<std::size_t>(m)] += c.weight * acc;
      }
    }
  }

  SpectrumResult out = zero_result(req, SpectrumMethod::numeric_trapezoid);
  parallel_for(static_cast<long>(req.omega.size()), [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      const double w = req.omega[static_cast<std::size_t>(i)] - corr.frame_shift;
      const Complex q = std::exp(Complex{0.0, w * h});
      Complex p = q;
      double s = d[0].real();
      for (Eigen::Index m = 1; m < nt; ++m) {
        s += 2.0 * (p * d[static_cast<std::size_t>(m)]).real();
        p *= q;
      }
      out.S[static_cast<std::size_t>(i)] = 2.0 * req.Gamma * s;
    }
  });
  return out;
}

double vrs_longtime(const ModelParams& params, double Gamma, double omega) {
  const double xp = omega - params.omega_a + 0.5 * params.Omega0;
  const double xm = omega - params.omega_a - 0.5 * params.Omega0;
  return 0.5 * Gamma / (Gamma * Gamma + xp * xp) + 0.5 * Gamma / (Gamma * Gamma + xm * xm);
}

double vrs_fulltime(const ModelParams& params, double Gamma, double omega, double t) {
  const double xp = omega - params.omega_a + 0.5 * params.Omega0;
  const double xm = omega - params.omega_a - 0.5 * params.Omega0;
  const double damp = std::exp(-Gamma * t);
  const double damp2 = damp * damp;

  const double lorentz_p = (1.0 - 2.0 * damp * std::cos(xp * t) + damp2) /
                           (Gamma * Gamma + xp * xp);
  const double lorentz_m = (1.0 - 2.0 * damp * std::cos(xm * t) + damp2) /
                           (Gamma * Gamma + xm * xm);
  const Complex numerator = std::exp(I * params.Omega0 * t) -
                            damp * (std::exp(I * xp * t) + std::exp(-I * xm * t)) + damp2;
  const Complex denominator = (Complex{Gamma, 0.0} + I * xp) * (Complex{Gamma, 0.0} - I * xm);
  const double cross = 2.0 * (numerator / denominator).real();
  return 0.5 * Gamma * (lorentz_p + lorentz_m + cross);
}

double kerr_longtime(const ModelParams& params, const InitialState& state, double Gamma,
                     double omega) {
  if (params.deformation.kind != DeformationKind::linear_kerr) {
    throw std::invalid_argument("kerr_longtime: requires the linear Kerr profile");
  }
  if (!state.field_only) {
    throw std::invalid_argument("kerr_longtime: requires a field-only state");
  }
  const double chi = params.deformation.chi;
  double s = 0.0;
  for (const StateComponent& c : state.components) {
    for (Eigen::Index n = 0; n < c.amplitudes.size(); ++n) {
      const double p = c.weight * std::norm(c.amplitudes(n));
      if (p == 0.0 || n == 0) continue;
      const double x = omega - params.omega_c * (1.0 + 2.0 * chi * static_cast<double>(n));
      s += p * 2.0 * static_cast<double>(n) * Gamma / (Gamma * Gamma + x * x);
    }
  }
  return s;
}

double dvrs_longtime(const ModelParams& params, double Gamma, double omega) {
  if (params.deformation.kind != DeformationKind::linear_kerr) {
    throw std::invalid_argument("dvrs_longtime: requires the linear Kerr profile");
  }
  const double chi = params.deformation.chi;
  const double delta0 = params.omega_a - params.omega_c * (1.0 + 2.0 * chi);
  const double phi0 =
      std::sqrt(delta0 * delta0 + params.Omega0 * params.Omega0 * (1.0 + chi));
  if (phi0 == 0.0) {
    throw std::runtime_error("dvrs_longtime: degenerate vacuum doublet (phi0 = 0)");
  }
  const double d0 = delta0 / phi0;
  double s = 0.0;
  for (int sign : {+1, -1}) {
    const double weight = std::pow(1.0 - sign * d0, 2);
    const double x = omega - params.omega_a + 0.5 * delta0 + sign * 0.5 * phi0;
    s += weight * 0.5 * Gamma / (Gamma * Gamma + x * x);
  }
  return s;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2) {
    throw std::invalid_argument("uniform_grid: need at least 2 points");
  }
  if (!(hi > lo)) {
    throw std::invalid_argument("uniform_grid: upper bound must exceed lower bound");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + step * i;
  }
  grid.back() = hi;
  return grid;
}

int auto_samples(double t_final, double max_frequency, double samples_per_period) {
  const int floor_samples = 33;
  if (t_final <= 0.0 || max_frequency <= 0.0) {
    return floor_samples;
  }
  const double cycles = max_frequency * t_final / (2.0 * std::numbers::pi);
  const int n = static_cast<int>(std::ceil(samples_per_period * cycles)) + 1;
  return std::max(n, floor_samples);
}

SpectrumResult closed_form_curve(const std::function<double(double)>& f,
                                 const std::vector<double>& omega, double Gamma, double t) {
  SpectrumResult out;
  out.omega = omega;
  out.S.reserve(omega.size());
  for (double w : omega) {
    out.S.push_back(f(w));
  }
  out.Gamma = Gamma;
  out.t = t;
  out.method = SpectrumMethod::closed_form;
  return out;
}

std::vector<Peak> find_peaks(const std::vector<double>& omega, const std::vector<double>& s) {
  if (omega.size() != s.size()) {
    throw std::invalid_argument("find_peaks: grid/value size mismatch");
  }
  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (!(s[i] > s[i - 1] && s[i] >= s[i + 1])) continue;
    const double den = s[i - 1] - 2.0 * s[i] + s[i + 1];
    double delta = 0.0;
    if (std::abs(den) > 1e-300) {
      delta = 0.5 * (s[i - 1] - s[i + 1]) / den;
    }
    const double step = 0.5 * (omega[i + 1] - omega[i - 1]);
    Peak p;
    p.omega = omega[i] + delta * step;
    p.height = s[i] - 0.25 * (s[i - 1] - s[i + 1]) * delta;
    p.index = static_cast<int>(i);
    peaks.push_back(p);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const Peak& a, const Peak& b) { return a.height > b.height; });
  return peaks;
}

}  // namespace jcsim
