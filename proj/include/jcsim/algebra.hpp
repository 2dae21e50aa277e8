// Operator algebra for f-deformed oscillators on a truncated Fock space.
#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace jcsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex I{0.0, 1.0};

// ----- deformation profiles -----

enum class DeformationKind {
  identity,
  linear_kerr,    // f^2(n) = 1 + chi n
  q_oscillator,   // f^2(n) = sinh(lambda n) / (n sinh lambda), f(0) = 1 by limit
  lamb_dicke,     // f(n) = exp(-eta^2/2) sum_l (-eta^2)^l / (l!(l+1)!) * n!/(n-l)!
  poschl_teller,  // f^2(n) = c (2s + 1 - n)
  transmon,       // f^2(n) = 1 + alpha (n - 1)/2
};

struct DeformationSpec {
  DeformationKind kind = DeformationKind::identity;
  double chi = 0.0;     // linear_kerr strength
  double lambda = 0.0;  // q_oscillator parameter
  double eta = 0.0;     // lamb_dicke parameter
  double c = 0.0;       // poschl_teller scale
  double s = 0.0;       // poschl_teller depth
  double alpha = 0.0;   // transmon anharmonicity

  static DeformationSpec Identity() { return {}; }
  static DeformationSpec LinearKerr(double chi) {
    DeformationSpec d;
    d.kind = DeformationKind::linear_kerr;
    d.chi = chi;
    return d;
  }
  static DeformationSpec QOscillator(double lambda) {
    DeformationSpec d;
    d.kind = DeformationKind::q_oscillator;
    d.lambda = lambda;
    return d;
  }
  static DeformationSpec LambDicke(double eta) {
    DeformationSpec d;
    d.kind = DeformationKind::lamb_dicke;
    d.eta = eta;
    return d;
  }
  static DeformationSpec PoschlTeller(double c, double s) {
    DeformationSpec d;
    d.kind = DeformationKind::poschl_teller;
    d.c = c;
    d.s = s;
    return d;
  }
  static DeformationSpec Transmon(double alpha) {
    DeformationSpec d;
    d.kind = DeformationKind::transmon;
    d.alpha = alpha;
    return d;
  }
};

const char* deformation_name(DeformationKind kind);

// f(n) for the given profile; throws std::invalid_argument when f^2(n) < 0
// or the profile parameters are out of range, std::out_of_range for n < 0.
double deformation_eval(const DeformationSpec& spec, int n);

// Eagerly evaluates f over [0, n_hi] so invalid profiles fail before any matrix
// is assembled.
void validate_deformation(const DeformationSpec& spec, int n_hi);

// ----- Hilbert-space layout -----

// Joint basis index = 2 n + s with s = 0 (ground) or 1 (excited): the qubit
// index varies fastest, so field operators enter as kron(F, I2) and qubit
// operators as kron(I_N, Q).
struct HilbertLayout {
  int fock_cutoff = 2;               // N Fock states 0 .. N-1
  static constexpr int qubit_dim = 2;

  explicit HilbertLayout(int fock_cutoff);
  int dim() const { return 2 * fock_cutoff; }
  int index(int n, int s) const;     // throws std::out_of_range
};

// ----- ladder operators -----

struct Ladder {
  Matrix a;      // a[k, k+1] = sqrt(k+1)
  Matrix a_dag;
  Matrix n_op;   // diag(0, 1, ..., N-1)
};

Ladder ladder_matrices(int fock_cutoff);

struct DeformedLadder {
  Matrix A;      // A = a f(n): A[k, k+1] = sqrt(k+1) f(k+1)
  Matrix A_dag;
};

DeformedLadder deformed_ladder(const DeformationSpec& spec, int fock_cutoff);

// ----- composition helpers -----

// Plain Kronecker product; the first argument is the outer (slow) factor.
Matrix tensor_product(const Matrix& x, const Matrix& y);

// X Y - Y X; throws std::invalid_argument on dimension mismatch.
Matrix commutator(const Matrix& x, const Matrix& y);

// Parity (-sigma_z) kron exp(i pi n): diagonal, entry +(-1)^n on |g,n> and
// -(-1)^n on |e,n>.
Matrix parity_operator(const HilbertLayout& layout);

// Qubit operators in the (g, e) basis ordering used by HilbertLayout.
Matrix qubit_sigma_z();
Matrix qubit_sigma_x();
Matrix qubit_sigma_plus();   // |e><g|
Matrix qubit_sigma_minus();  // |g><e|

// Largest absolute entry (convergence/diagnostic helper).
double max_abs(const Matrix& m);

}  // namespace jcsim
