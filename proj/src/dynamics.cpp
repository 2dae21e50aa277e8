#include "jcsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jcsim {

namespace {

constexpr double kTailTolerance = 1e-8;
constexpr int kMaxAutoCutoff = 4096;

// Poisson tail mass beyond the cutoff, 1 - sum_{m<N} e^{-nbar} nbar^m / m!.
double poisson_deficit(double nbar, int cutoff) {
  double term = std::exp(-nbar);
  double sum = 0.0;
  for (int m = 0; m < cutoff; ++m) {
    sum += term;
    term *= nbar / (m + 1);
  }
  return std::max(0.0, 1.0 - sum);
}

// Thermal tail mass is exactly (nbar/(1+nbar))^N.
double thermal_deficit(double nbar, int cutoff) {
  return std::pow(nbar / (1.0 + nbar), cutoff);
}

int auto_mixture_cutoff(double nbar, double (*deficit)(double, int)) {
  int cutoff = static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar) + 10.0));
  while (deficit(nbar, cutoff) >= kTailTolerance) {
    if (++cutoff > kMaxAutoCutoff) {
      throw std::runtime_error(
          "make_initial_state: no cutoff below " + std::to_string(kMaxAutoCutoff) +
          " captures the distribution tail");
    }
  }
  return cutoff;
}

Vector basis_vector(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v(index) = Complex{1.0, 0.0};
  return v;
}

// Coherent amplitudes c_m = e^{-|alpha|^2/2} alpha^m / sqrt(m!), evaluated by
// stable term recurrence; truncated without renormalizing.
Vector coherent_amplitudes(Complex alpha, int cutoff) {
  Vector v(cutoff);
  Complex term = std::exp(-0.5 * std::norm(alpha));
  for (int m = 0; m < cutoff; ++m) {
    v(m) = term;
    term *= alpha / std::sqrt(static_cast<double>(m + 1));
  }
  return v;
}

// Sequential two-pass modified Gram-Schmidt over the trajectory rows.  Returns
// the rows' coefficients in an orthonormal basis of their span; the Gram
// matrix (and hence the kernel) is preserved to rounding.  Deterministic:
// rows are visited in grid order.
Matrix compress_rows(const Matrix& traj) {
  const Eigen::Index nt = traj.rows();
  double max_norm = 0.0;
  for (Eigen::Index k = 0; k < nt; ++k) {
    max_norm = std::max(max_norm, traj.row(k).norm());
  }
  if (max_norm == 0.0) {
    return Matrix::Zero(nt, 1);
  }
  const double drop = 1e-12 * max_norm;

  std::vector<Vector> basis;
  Matrix coeff = Matrix::Zero(nt, std::min<Eigen::Index>(nt, traj.cols()));
  for (Eigen::Index k = 0; k < nt; ++k) {
    Vector r = traj.row(k).transpose();
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const Complex c = basis[b].adjoint() * r;
        coeff(k, static_cast<Eigen::Index>(b)) += c;
        r -= c * basis[b];
      }
    }
    const double rem = r.norm();
    if (rem > drop) {
      basis.push_back(r / rem);
      coeff(k, static_cast<Eigen::Index>(basis.size()) - 1) = rem;
    }
  }
  return coeff.leftCols(static_cast<Eigen::Index>(basis.size()));
}

}  // namespace

TimeGrid::TimeGrid(double t_final_, int samples_) : t_final(t_final_), samples(samples_) {
  if (!(t_final > 0.0)) {
    throw std::invalid_argument("TimeGrid: t_final must be positive");
  }
  if (samples < 2) {
    throw std::invalid_argument("TimeGrid: need at least 2 samples");
  }
}

double TimeGrid::step() const { return t_final / (samples - 1); }

std::vector<double> TimeGrid::values() const {
  std::vector<double> t(static_cast<std::size_t>(samples));
  const double h = step();
  for (int k = 0; k < samples; ++k) {
    t[static_cast<std::size_t>(k)] = h * k;
  }
  t.back() = t_final;  // endpoint exact regardless of rounding
  return t;
}

std::string state_name(StateKind kind) {
  switch (kind) {
    case StateKind::FockExcited: return "fock_excited";
    case StateKind::FockPair: return "fock_pair";
    case StateKind::CoherentExcited: return "coherent_excited";
    case StateKind::CoherentField: return "coherent_field";
    case StateKind::ThermalField: return "thermal_field";
    case StateKind::FockField: return "fock_field";
  }
  throw std::invalid_argument("state_name: unknown kind");
}

InitialState make_initial_state(const StateSpec& spec) {
  InitialState state;
  state.kind = spec.kind;
  state.field_only = (spec.kind == StateKind::CoherentField ||
                      spec.kind == StateKind::ThermalField ||
                      spec.kind == StateKind::FockField);

  const bool fock_kind =
      (spec.kind == StateKind::FockExcited || spec.kind == StateKind::FockPair ||
       spec.kind == StateKind::FockField);
  if (fock_kind && spec.n < 0) {
    throw std::invalid_argument("make_initial_state: Fock index must be >= 0");
  }
  if (spec.kind == StateKind::ThermalField && !(spec.nbar >= 0.0)) {
    throw std::invalid_argument("make_initial_state: nbar must be >= 0");
  }

  // Resolve the field cutoff.
  int cutoff = spec.fock_cutoff;
  if (cutoff == 0) {
    switch (spec.kind) {
      case StateKind::FockExcited:
      case StateKind::FockField:
        cutoff = spec.n + 8;
        break;
      case StateKind::FockPair:
        cutoff = spec.n + 9;
        break;
      case StateKind::CoherentExcited:
      case StateKind::CoherentField:
        cutoff = auto_mixture_cutoff(std::norm(spec.alpha), poisson_deficit);
        break;
      case StateKind::ThermalField:
        cutoff = spec.nbar == 0.0 ? 8 : auto_mixture_cutoff(spec.nbar, thermal_deficit);
        break;
    }
    cutoff = std::max(cutoff, 3);
  }
  if (cutoff < 3) {
    throw std::invalid_argument("make_initial_state: fock_cutoff must be >= 3");
  }
  state.fock_cutoff = cutoff;

  const auto require_level = [&](int n) {
    if (n >= cutoff) {
      throw std::invalid_argument("make_initial_state: Fock index " + std::to_string(n) +
                                  " needs fock_cutoff > " + std::to_string(n));
    }
  };

  switch (spec.kind) {
    case StateKind::FockExcited: {
      require_level(spec.n);
      const HilbertLayout layout(cutoff);
      state.components.push_back({1.0, basis_vector(layout.dim(), layout.index(spec.n, 1))});
      break;
    }
    case StateKind::FockPair: {
      require_level(spec.n + 1);
      const HilbertLayout layout(cutoff);
      state.components.push_back({1.0, basis_vector(layout.dim(), layout.index(spec.n + 1, 0))});
      break;
    }
    case StateKind::FockField: {
      require_level(spec.n);
      state.components.push_back({1.0, basis_vector(cutoff, spec.n)});
      break;
    }
    case StateKind::CoherentExcited:
    case StateKind::CoherentField: {
      state.truncation_deficit = poisson_deficit(std::norm(spec.alpha), cutoff);
      if (state.truncation_deficit >= kTailTolerance) {
        throw std::invalid_argument(
            "make_initial_state: fock_cutoff " + std::to_string(cutoff) +
            " truncates probability mass " + std::to_string(state.truncation_deficit));
      }
      const Vector field = coherent_amplitudes(spec.alpha, cutoff);
      if (spec.kind == StateKind::CoherentField) {
        state.components.push_back({1.0, field});
      } else {
        const HilbertLayout layout(cutoff);
        Vector v = Vector::Zero(layout.dim());
        for (int m = 0; m < cutoff; ++m) {
          v(layout.index(m, 1)) = field(m);
        }
        state.components.push_back({1.0, v});
      }
      break;
    }
    case StateKind::ThermalField: {
      state.truncation_deficit = thermal_deficit(spec.nbar, cutoff);
      if (state.truncation_deficit >= kTailTolerance) {
        throw std::invalid_argument(
            "make_initial_state: fock_cutoff " + std::to_string(cutoff) +
            " truncates probability mass " + std::to_string(state.truncation_deficit));
      }
      // P_n = nbar^n / (1+nbar)^{n+1}, kept verbatim after truncation.
      double weight = 1.0 / (1.0 + spec.nbar);
      const double ratio = spec.nbar / (1.0 + spec.nbar);
      for (int n = 0; n < cutoff; ++n) {
        state.components.push_back({weight, basis_vector(cutoff, n)});
        weight *= ratio;
      }
      break;
    }
  }
  return state;
}

EigenPropagator::EigenPropagator(const Matrix& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw std::invalid_argument("propagator: Hamiltonian must be square");
  }
  const double asym = max_abs(hamiltonian - hamiltonian.adjoint());
  const double scale = std::max(1.0, max_abs(hamiltonian));
  if (asym > 1e-12 * scale) {
    throw std::invalid_argument("propagator: Hamiltonian is not Hermitian (max asymmetry " +
                                std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("propagator: eigendecomposition failed");
  }
  evals_ = solver.eigenvalues();
  evecs_ = solver.eigenvectors();
}

Matrix EigenPropagator::evolution(double t) const {
  Vector phases(evals_.size());
  for (Eigen::Index k = 0; k < evals_.size(); ++k) {
    phases(k) = std::exp(Complex{0.0, -evals_(k) * t});
  }
  return evecs_ * phases.asDiagonal() * evecs_.adjoint();
}

Matrix propagator(const Matrix& hamiltonian, double t) {
  return EigenPropagator(hamiltonian).evolution(t);
}

Matrix CorrelationGrid::kernel() const {
  if (dense) {
    return *dense;
  }
  const Eigen::Index nt = grid.samples;
  if (nt > 4096) {
    throw std::runtime_error("kernel: refusing to materialize " + std::to_string(nt) +
                             "^2 entries; use kernel_entry or the Gram form");
  }
  if (components.empty()) {
    throw std::runtime_error("kernel: correlation holds no components");
  }
  Matrix g = Matrix::Zero(nt, nt);
  for (const CorrelationComponent& c : components) {
    g.noalias() += c.weight * (c.trajectory.conjugate() * c.trajectory.transpose());
  }
  return 0.5 * (g + Matrix(g.adjoint()));  // hermitize away rounding asymmetry
}

Complex CorrelationGrid::kernel_entry(Eigen::Index i, Eigen::Index j) const {
  if (dense) {
    return (*dense)(i, j);
  }
  Complex g{0.0, 0.0};
  for (const CorrelationComponent& c : components) {
    // Eigen's dot already conjugates the left factor.
    g += c.weight * c.trajectory.row(i).dot(c.trajectory.row(j));
  }
  return g;
}

CorrelationGrid two_time_correlation(const Matrix& hamiltonian, const Matrix& probe_op,
                                     const InitialState& state, const TimeGrid& grid,
                                     double frame_shift, const std::string& probe_name) {
  if (probe_op.rows() != hamiltonian.rows() || probe_op.cols() != hamiltonian.cols()) {
    throw std::invalid_argument("two_time_correlation: operator/Hamiltonian dimension mismatch");
  }
  if (state.components.empty()) {
    throw std::invalid_argument("two_time_correlation: state holds no components");
  }
  for (const StateComponent& c : state.components) {
    if (c.amplitudes.size() != hamiltonian.rows()) {
      throw std::invalid_argument("two_time_correlation: state/Hamiltonian dimension mismatch");
    }
  }

  const EigenPropagator prop(hamiltonian);
  const Eigen::Index dim = hamiltonian.rows();
  const Matrix probe_eig = prop.eigenvectors().adjoint() * probe_op * prop.eigenvectors();
  const std::vector<double> times = grid.values();
  const Eigen::Index nt = static_cast<Eigen::Index>(times.size());

  CorrelationGrid out;
  out.grid = grid;
  out.probe = probe_name;
  out.frame_shift = frame_shift;

  double bandwidth = 0.0;
  const Eigen::VectorXd& energy = prop.eigenvalues();
  for (const StateComponent& comp : state.components) {
    const Vector v0 = prop.to_eigenbasis(comp.amplitudes);

    // Oscillation support: row i of the trajectory carries frequencies
    // (E_j - E_i) - frame_shift wherever both the probe element and the state
    // amplitude are live.  Magnitude products make this cancellation-proof.
    double v0_max = 0.0, probe_max = 0.0;
    for (Eigen::Index j = 0; j < dim; ++j) v0_max = std::max(v0_max, std::abs(v0(j)));
    probe_max = max_abs(probe_eig);
    Eigen::VectorXd reach = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      double r = 0.0;
      for (Eigen::Index j = 0; j < dim; ++j) {
        r += std::abs(probe_eig(i, j)) * std::abs(v0(j));
      }
      reach(i) = r;
    }
    const double reach_tol = 1e-8 * reach.maxCoeff();
    const double v0_tol = 1e-8 * v0_max;
    const double probe_tol = 1e-12 * std::max(probe_max, 1e-300);
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (reach(i) < reach_tol) continue;
      for (Eigen::Index j = 0; j < dim; ++j) {
        if (std::abs(v0(j)) < v0_tol || std::abs(probe_eig(i, j)) < probe_tol) continue;
        bandwidth = std::max(bandwidth, std::abs((energy(j) - energy(i)) - frame_shift));
      }
    }

    // w(t) in the eigenbasis: e^{+iEt} o (B (e^{-iEt} o v0)), frame-shifted.
    Matrix traj(nt, dim);
    Vector rotated(dim), image(dim);
    for (Eigen::Index k = 0; k < nt; ++k) {
      const double t = times[static_cast<std::size_t>(k)];
      for (Eigen::Index j = 0; j < dim; ++j) {
        rotated(j) = std::exp(Complex{0.0, -energy(j) * t}) * v0(j);
      }
      image.noalias() = probe_eig * rotated;
      const Complex shift = std::exp(Complex{0.0, frame_shift * t});
      for (Eigen::Index i = 0; i < dim; ++i) {
        image(i) *= shift * std::exp(Complex{0.0, energy(i) * t});
      }
      traj.row(k) = image.transpose();
    }
    if (dim > 8) {
      traj = compress_rows(traj);
    }
    out.components.push_back({comp.weight, std::move(traj)});
  }
  out.max_frequency = bandwidth;

  if (nt <= 2048) {
    Matrix g = Matrix::Zero(nt, nt);
    for (const CorrelationComponent& c : out.components) {
      g.noalias() += c.weight * (c.trajectory.conjugate() * c.trajectory.transpose());
    }
    out.dense = 0.5 * (g + Matrix(g.adjoint()));
  }
  return out;
}

}  // namespace jcsim
