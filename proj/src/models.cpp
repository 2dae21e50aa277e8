// Hamiltonian builders and doublet diagnostics.
#include "jcsim/models.hpp"

#include <cmath>
#include <stdexcept>

namespace jcsim {

const char* model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::JC: return "jc";
    case ModelKind::DJC: return "djc";
    case ModelKind::Rabi: return "rabi";
    case ModelKind::DRabi: return "drabi";
    case ModelKind::FieldOnly: return "field_only";
  }
  return "?";
}

namespace {

DeformationSpec effective_profile(ModelKind kind, const ModelParams& params) {
  // The undeformed kinds pin f = 1 so a stray profile cannot leak in.
  if (kind == ModelKind::JC || kind == ModelKind::Rabi) {
    return DeformationSpec::Identity();
  }
  return params.deformation;
}

}  // namespace

Matrix build_hamiltonian(ModelKind kind, const ModelParams& params,
                         const HilbertLayout& layout) {
  const int N = layout.fock_cutoff;
  if (N < 3) {
    throw std::invalid_argument(
        "build_hamiltonian: fock_cutoff must be >= 3, got " +
        std::to_string(N));
  }
  const DeformationSpec profile = effective_profile(kind, params);
  validate_deformation(profile, N);
  const DeformedLadder dl = deformed_ladder(profile, N);

  // Symmetric field term; exact Hermiticity by construction.
  Matrix h_field =
      0.5 * params.omega_c * (dl.A_dag * dl.A + dl.A * dl.A_dag);
  if (kind == ModelKind::FieldOnly) return h_field;

  const Matrix id_f = Matrix::Identity(N, N);
  const Matrix id_q = Matrix::Identity(2, 2);
  Matrix h = tensor_product(h_field, id_q) +
             0.5 * params.omega_a * tensor_product(id_f, qubit_sigma_z());
  Matrix half;
  if (kind == ModelKind::JC || kind == ModelKind::DJC) {
    half = (-I * 0.5 * params.Omega0) *
           tensor_product(dl.A, qubit_sigma_plus());
  } else {
    half = (-I * 0.5 * params.Omega0) *
           tensor_product(dl.A, qubit_sigma_x());
  }
  h += half + half.adjoint();
  return h;
}

DressedDoublet doublet_block(const ModelParams& params, int n) {
  if (n < 0) {
    throw std::out_of_range("doublet_block: n must be >= 0, got " +
                            std::to_string(n));
  }
  const DeformationSpec& p = params.deformation;
  const double f_n = deformation_eval(p, n);
  const double f_n1 = deformation_eval(p, n + 1);
  const double f_n2 = deformation_eval(p, n + 2);
  const double h11 = n * f_n * f_n + (n + 1) * f_n1 * f_n1 + 1.0;
  const double h22 = (n + 1) * f_n1 * f_n1 + (n + 2) * f_n2 * f_n2 - 1.0;

  DressedDoublet d;
  d.n = n;
  d.detuning = (params.omega_a - params.omega_c) +
               0.5 * params.omega_c * (h11 - h22);
  d.rabi = params.Omega0 * std::sqrt(static_cast<double>(n + 1)) * f_n1;
  d.phi = std::hypot(d.detuning, d.rabi);
  d.mixing_angle = std::atan2(d.rabi, d.detuning);
  d.E0 = 0.25 * params.omega_c * (h11 + h22);
  d.E_plus = d.E0 + 0.5 * d.phi;
  d.E_minus = d.E0 - 0.5 * d.phi;
  return d;
}

double effective_detuning(const ModelParams& params, int n) {
  if (params.deformation.kind != DeformationKind::linear_kerr) {
    throw std::invalid_argument(
        std::string("effective_detuning: closed form requires the linear_kerr "
                    "profile, got ") +
        deformation_name(params.deformation.kind));
  }
  if (n < 0) {
    throw std::out_of_range("effective_detuning: n must be >= 0");
  }
  const double chi = params.deformation.chi;
  return params.omega_a * (1.0 - 2.0 * params.omega_c * chi / params.omega_a) -
         params.omega_c * (1.0 + 2.0 * chi * n);
}

double selective_cavity_frequency(int m, double chi) {
  if (m < 0) {
    throw std::out_of_range("selective_cavity_frequency: m must be >= 0");
  }
  const double den = 1.0 + 2.0 * chi * (m + 1);
  if (std::abs(den) < 1e-12) {
    throw std::invalid_argument(
        "selective_cavity_frequency: degenerate denominator 1 + 2 chi (m+1) "
        "= " +
        std::to_string(den));
  }
  return 1.0 / den;
}

double rwa_nmax(const ModelParams& params) {
  if (params.deformation.kind != DeformationKind::linear_kerr) {
    throw std::invalid_argument(
        std::string("rwa_nmax: closed form requires the linear_kerr profile, "
                    "got ") +
        deformation_name(params.deformation.kind));
  }
  const double chi = params.deformation.chi;
  const double wa = params.omega_a;
  const double wc = params.omega_c;
  const double W0 = params.Omega0;
  if (chi < 0.0) {
    throw std::invalid_argument("rwa_nmax: chi must be >= 0");
  }
  if (W0 <= 0.0) {
    throw std::invalid_argument("rwa_nmax: Omega0 must be > 0");
  }
  if (chi == 0.0) {
    return 4.0 * (wc + wa) * (wc + wa) / (W0 * W0);
  }
  const double pole = 16.0 * chi * wc * wc - W0 * W0;
  if (std::abs(pole) < 1e-12) {
    throw std::invalid_argument(
        "rwa_nmax: denominator pole 16 chi omega_c^2 = Omega0^2");
  }
  const double den = 2.0 * chi * pole;
  const double first =
      ((4.0 * chi + 1.0) * W0 * W0 -
       16.0 * chi * wc * (wa + wc + 4.0 * chi * wc)) /
      den;
  const double radicand = W0 * W0 + 16.0 * chi * (wa * wa - wc * wc);
  if (radicand < 0.0) {
    throw std::invalid_argument("rwa_nmax: negative radicand " +
                                std::to_string(radicand));
  }
  const double second = W0 * std::sqrt(radicand) / den;
  return first - second;
}

EigenSweep eigen_sweep(ModelKind kind, const ModelParams& params,
                       const std::vector<double>& couplings,
                       const HilbertLayout& layout, int k) {
  if (kind == ModelKind::FieldOnly) {
    throw std::invalid_argument("eigen_sweep: FieldOnly has no coupling sweep");
  }
  if (k < 1) {
    throw std::invalid_argument("eigen_sweep: k must be >= 1");
  }
  if (couplings.empty()) {
    throw std::invalid_argument("eigen_sweep: empty coupling grid");
  }
  const bool adaptive = (kind == ModelKind::Rabi || kind == ModelKind::DRabi);

  EigenSweep sweep;
  sweep.couplings = couplings;
  sweep.energies.resize(k, static_cast<Eigen::Index>(couplings.size()));

  ModelParams p = params;
  int cutoff_used = layout.fock_cutoff;
  for (std::size_t j = 0; j < couplings.size(); ++j) {
    p.Omega0 = couplings[j];
    // k + 8 keeps the truncation-corrupted boundary block (n = N-2) well
    // above the k lowest levels for the couplings we sweep.
    int N = std::max(layout.fock_cutoff, k + 8);
    Eigen::VectorXd lowest;
    if (!adaptive) {
      if (2 * N < k) {
        throw std::invalid_argument("eigen_sweep: k exceeds layout dimension");
      }
      Eigen::SelfAdjointEigenSolver<Matrix> es(
          build_hamiltonian(kind, p, HilbertLayout(N)));
      lowest = es.eigenvalues().head(k);
    } else {
      // Counter-rotating terms spread support over Fock space: double the
      // cutoff until the tracked eigenvalues settle to 1e-8 relative.
      Eigen::VectorXd prev;
      for (;; N *= 2) {
        if (N > 4096) {
          throw std::runtime_error(
              "eigen_sweep: cutoff exceeded 4096 without stabilizing");
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(
            build_hamiltonian(kind, p, HilbertLayout(N)));
        Eigen::VectorXd cur = es.eigenvalues().head(k);
        if (prev.size() == k) {
          double worst = 0.0;
          for (int i = 0; i < k; ++i) {
            worst = std::max(worst, std::abs(cur[i] - prev[i]) /
                                        std::max(std::abs(cur[i]), 1e-6));
          }
          if (worst < 1e-8) {
            lowest = cur;
            break;
          }
        }
        prev = cur;
      }
    }
    cutoff_used = std::max(cutoff_used, N);
    sweep.energies.col(static_cast<Eigen::Index>(j)) = lowest;
  }
  sweep.fock_cutoff = cutoff_used;
  return sweep;
}

}  // namespace jcsim
