// Model Hamiltonians, dressed doublets, and coupling-sweep diagnostics.
#pragma once

#include <vector>

#include "jcsim/algebra.hpp"

namespace jcsim {

enum class ModelKind { JC, DJC, Rabi, DRabi, FieldOnly };

const char* model_name(ModelKind kind);

struct ModelParams {
  double omega_a = 1.0;   // atomic transition frequency
  double omega_c = 1.0;   // bare cavity frequency
  double Omega0 = 0.0;    // vacuum coupling
  DeformationSpec deformation;
};

// Full Hamiltonian on the truncated space (units hbar = 1).  Coupled kinds
// return a 2N x 2N matrix in the 2n+s packing; FieldOnly returns N x N.  The
// field term is (omega_c/2)(A^dag A + A A^dag) for every kind; JC and Rabi use
// the undeformed ladder regardless of params.deformation.
Matrix build_hamiltonian(ModelKind kind, const ModelParams& params,
                         const HilbertLayout& layout);

// ----- excitation doublets of the RWA models -----

// The RWA Hamiltonian is block diagonal over {|e,n>, |g,n+1>}.  With
// h11 = n f^2(n) + (n+1) f^2(n+1) + 1 and
// h22 = (n+1) f^2(n+1) + (n+2) f^2(n+2) - 1:
//   detuning  = (omega_a - omega_c) + omega_c (h11 - h22)/2,
//   rabi      = Omega0 sqrt(n+1) f(n+1),
//   phi       = sqrt(detuning^2 + rabi^2),
//   E0        = omega_c (h11 + h22)/4,   E_pm = E0 ± phi/2.
struct DressedDoublet {
  int n = 0;
  double E_plus = 0.0;
  double E_minus = 0.0;
  double mixing_angle = 0.0;  // atan2(rabi, detuning), in (0, pi) for rabi > 0
  double detuning = 0.0;
  double rabi = 0.0;
  double phi = 0.0;           // doublet splitting E_plus - E_minus
  double E0 = 0.0;
};

DressedDoublet doublet_block(const ModelParams& params, int n);

// Closed-form doublet detuning for the linear Kerr profile:
//   omega_a (1 - 2 omega_c chi / omega_a) - omega_c (1 + 2 chi n).
// Throws std::invalid_argument for any other deformation kind.
double effective_detuning(const ModelParams& params, int n);

// Cavity frequency (in omega_a units) that makes doublet m resonant for the
// linear Kerr profile: 1/(1 + 2 chi (m+1)).  Degenerate denominator -> error.
double selective_cavity_frequency(int m, double chi);

// Largest doublet index for which the RWA stays valid (linear Kerr profile).
// chi = 0 falls back to 4 (omega_c + omega_a)^2 / Omega0^2; the denominator
// pole 16 chi omega_c^2 = Omega0^2 is rejected.
double rwa_nmax(const ModelParams& params);

// ----- eigenvalue sweeps over the coupling -----

struct EigenSweep {
  std::vector<double> couplings;  // Omega0 grid
  Eigen::MatrixXd energies;       // k rows (ascending per column), one column per coupling
  int fock_cutoff = 0;            // cutoff that met the stability target
};

// k lowest eigenvalues per coupling.  JC/DJC use layout as given (their
// doublet blocks are exact under truncation); Rabi/DRabi double the cutoff
// until the k tracked eigenvalues move by less than 1e-8 relative.
EigenSweep eigen_sweep(ModelKind kind, const ModelParams& params,
                       const std::vector<double>& couplings,
                       const HilbertLayout& layout, int k);

}  // namespace jcsim
