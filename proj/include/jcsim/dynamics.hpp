#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jcsim/algebra.hpp"

namespace jcsim {

// Uniform time grid on [0, t_final] with the endpoints included exactly.
struct TimeGrid {
  double t_final = 0.0;
  int samples = 0;

  TimeGrid() = default;
  TimeGrid(double t_final_, int samples_);

  double step() const;
  std::vector<double> values() const;
};

// Initial states: pure vectors or Fock-diagonal mixtures over the field.
enum class StateKind {
  FockExcited,      // |e,n> (coupled models)
  FockPair,         // |g,n+1>, the doublet partner of |e,n>
  CoherentExcited,  // |e,alpha>
  CoherentField,    // |alpha>, field only
  ThermalField,     // Fock-diagonal thermal mixture, field only
  FockField,        // |n>, field only
};

std::string state_name(StateKind kind);

struct StateSpec {
  StateKind kind = StateKind::FockExcited;
  int n = 0;
  Complex alpha{0.0, 0.0};
  double nbar = 0.0;
  int fock_cutoff = 0;  // 0 = choose automatically
};

struct StateComponent {
  double weight = 1.0;
  Vector amplitudes;
};

struct InitialState {
  StateKind kind = StateKind::FockExcited;
  bool field_only = false;
  int fock_cutoff = 0;
  std::vector<StateComponent> components;
  // Probability mass dropped by the Fock cutoff.  Weights are kept verbatim
  // (not renormalized) so they line up with closed-form weighted sums.
  double truncation_deficit = 0.0;
};

InitialState make_initial_state(const StateSpec& spec);

// Exact propagation through one spectral decomposition H = V diag(E) V^dag,
// reused for every requested time.
class EigenPropagator {
 public:
  explicit EigenPropagator(const Matrix& hamiltonian);

  int dim() const { return static_cast<int>(evals_.size()); }
  const Eigen::VectorXd& eigenvalues() const { return evals_; }
  const Matrix& eigenvectors() const { return evecs_; }

  Matrix evolution(double t) const;  // U(t) = V exp(-i E t) V^dag
  Vector to_eigenbasis(const Vector& lab) const { return evecs_.adjoint() * lab; }
  Vector to_lab(const Vector& eig) const { return evecs_ * eig; }

 private:
  Eigen::VectorXd evals_;
  Matrix evecs_;
};

Matrix propagator(const Matrix& hamiltonian, double t);

// Two-time correlation kernel G(t1,t2) held in Gram form: per mixture
// component a trajectory matrix whose row k is w(t_k)^T with
// w(t) = U^dag(t) O U(t) |psi0>, so that
//   G(t_i,t_j) = sum_c weight_c * conj(row_i) . row_j.
// Rows may be re-expressed in any orthonormal basis of their span without
// changing the kernel; the numeric engine uses that for rank compression.
struct CorrelationComponent {
  double weight = 1.0;
  Matrix trajectory;  // samples x width
};

struct CorrelationGrid {
  TimeGrid grid;
  std::string probe;  // descriptor of the operator O
  std::vector<CorrelationComponent> components;
  std::optional<Matrix> dense;  // materialized kernel, when small enough
  // Largest |oscillation frequency| present in the trajectories after the
  // frame shift; used by the spectrum module to police sampling density.
  double max_frequency = 0.0;
  // Reference frequency removed from the trajectories: stored rows carry
  // exp(+i frame_shift t_k) relative to the lab frame.
  double frame_shift = 0.0;

  Matrix kernel() const;
  Complex kernel_entry(Eigen::Index i, Eigen::Index j) const;
};

CorrelationGrid two_time_correlation(const Matrix& hamiltonian, const Matrix& probe_op,
                                     const InitialState& state, const TimeGrid& grid,
                                     double frame_shift = 0.0,
                                     const std::string& probe_name = "operator");

}  // namespace jcsim
