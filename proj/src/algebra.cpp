// Deformation profiles, ladder matrices, and composition helpers.
#include "jcsim/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace jcsim {

const char* deformation_name(DeformationKind kind) {
  switch (kind) {
    case DeformationKind::identity: return "identity";
    case DeformationKind::linear_kerr: return "linear_kerr";
    case DeformationKind::q_oscillator: return "q_oscillator";
    case DeformationKind::lamb_dicke: return "lamb_dicke";
    case DeformationKind::poschl_teller: return "poschl_teller";
    case DeformationKind::transmon: return "transmon";
  }
  return "?";
}

namespace {

double sqrt_or_throw(double f_sq, int n, const char* profile) {
  if (f_sq < 0.0) {
    throw std::invalid_argument("deformation_eval: f^2(" + std::to_string(n) +
                                ") = " + std::to_string(f_sq) +
                                " is negative for profile " + profile);
  }
  return std::sqrt(f_sq);
}

double lamb_dicke_f(double eta, int n) {
  // f(n) = e^{-eta^2/2} sum_{l=0}^{n} (-eta^2)^l / (l!(l+1)!) * n!/(n-l)!
  // evaluated with the stable term ratio (-eta^2)(n-l+1)/(l(l+1)).
  const double x = eta * eta;
  double term = 1.0;
  double sum = 1.0;
  for (int l = 1; l <= n; ++l) {
    term *= -x * static_cast<double>(n - l + 1) /
            (static_cast<double>(l) * static_cast<double>(l + 1));
    sum += term;
  }
  return std::exp(-0.5 * x) * sum;
}

}  // namespace

double deformation_eval(const DeformationSpec& spec, int n) {
  if (n < 0) {
    throw std::out_of_range("deformation_eval: n must be >= 0, got " +
                            std::to_string(n));
  }
  switch (spec.kind) {
    case DeformationKind::identity:
      return 1.0;
    case DeformationKind::linear_kerr:
      return sqrt_or_throw(1.0 + spec.chi * n, n, "linear_kerr");
    case DeformationKind::q_oscillator: {
      if (spec.lambda == 0.0) {
        throw std::invalid_argument(
            "deformation_eval: q_oscillator needs lambda != 0 (identity is the "
            "lambda -> 0 limit)");
      }
      if (n == 0) return 1.0;  // removable singularity, n -> 0 limit
      const double f_sq =
          std::sinh(spec.lambda * n) / (n * std::sinh(spec.lambda));
      return sqrt_or_throw(f_sq, n, "q_oscillator");
    }
    case DeformationKind::lamb_dicke:
      return lamb_dicke_f(spec.eta, n);
    case DeformationKind::poschl_teller:
      return sqrt_or_throw(spec.c * (2.0 * spec.s + 1.0 - n), n,
                           "poschl_teller");
    case DeformationKind::transmon:
      return sqrt_or_throw(1.0 + spec.alpha * (n - 1) / 2.0, n, "transmon");
  }
  throw std::invalid_argument("deformation_eval: unknown profile");
}

void validate_deformation(const DeformationSpec& spec, int n_hi) {
  for (int n = 0; n <= n_hi; ++n) (void)deformation_eval(spec, n);
}

HilbertLayout::HilbertLayout(int fock_cutoff_) : fock_cutoff(fock_cutoff_) {
  if (fock_cutoff < 2) {
    throw std::invalid_argument("HilbertLayout: fock_cutoff must be >= 2, got " +
                                std::to_string(fock_cutoff));
  }
}

int HilbertLayout::index(int n, int s) const {
  if (n < 0 || n >= fock_cutoff || s < 0 || s > 1) {
    throw std::out_of_range("HilbertLayout::index: (n=" + std::to_string(n) +
                            ", s=" + std::to_string(s) + ") outside cutoff " +
                            std::to_string(fock_cutoff));
  }
  return 2 * n + s;
}

Ladder ladder_matrices(int fock_cutoff) {
  if (fock_cutoff < 2) {
    throw std::invalid_argument("ladder_matrices: fock_cutoff must be >= 2");
  }
  Ladder l;
  l.a = Matrix::Zero(fock_cutoff, fock_cutoff);
  l.n_op = Matrix::Zero(fock_cutoff, fock_cutoff);
  for (int k = 0; k + 1 < fock_cutoff; ++k) {
    l.a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
  }
  for (int k = 0; k < fock_cutoff; ++k) l.n_op(k, k) = k;
  l.a_dag = l.a.adjoint();
  return l;
}

DeformedLadder deformed_ladder(const DeformationSpec& spec, int fock_cutoff) {
  if (fock_cutoff < 2) {
    throw std::invalid_argument("deformed_ladder: fock_cutoff must be >= 2");
  }
  validate_deformation(spec, fock_cutoff - 1);
  DeformedLadder d;
  d.A = Matrix::Zero(fock_cutoff, fock_cutoff);
  for (int k = 0; k + 1 < fock_cutoff; ++k) {
    d.A(k, k + 1) =
        std::sqrt(static_cast<double>(k + 1)) * deformation_eval(spec, k + 1);
  }
  d.A_dag = d.A.adjoint();
  return d;
}

Matrix tensor_product(const Matrix& x, const Matrix& y) {
  return Eigen::kroneckerProduct(x, y);
}

Matrix commutator(const Matrix& x, const Matrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw std::invalid_argument(
        "commutator: operands must be square with matching dimension (" +
        std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " vs " +
        std::to_string(y.rows()) + "x" + std::to_string(y.cols()) + ")");
  }
  return x * y - y * x;
}

Matrix parity_operator(const HilbertLayout& layout) {
  Matrix p = Matrix::Zero(layout.dim(), layout.dim());
  for (int n = 0; n < layout.fock_cutoff; ++n) {
    const double field = (n % 2 == 0) ? 1.0 : -1.0;  // exp(i pi n)
    p(2 * n + 0, 2 * n + 0) = field;                 // ground row of -sigma_z
    p(2 * n + 1, 2 * n + 1) = -field;                // excited row
  }
  return p;
}

Matrix qubit_sigma_z() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

Matrix qubit_sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix qubit_sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;  // |e><g|
  return m;
}

Matrix qubit_sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;  // |g><e|
  return m;
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace jcsim
