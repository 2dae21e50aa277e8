// Hamiltonian builders, dressed doublets, RWA diagnostics, eigen sweeps.
#include "jcsim/models.hpp"

#include <random>
#include <stdexcept>

#include "support.hpp"

using namespace jcsim;

namespace {

ModelParams kerr_params(double chi, double wa = 1.0, double wc = 1.0,
                        double W0 = 0.25) {
  ModelParams p;
  p.omega_a = wa;
  p.omega_c = wc;
  p.Omega0 = W0;
  p.deformation = DeformationSpec::LinearKerr(chi);
  return p;
}

Matrix excitation_number(int N) {
  const Ladder l = ladder_matrices(N);
  Matrix ee = Matrix::Zero(2, 2);
  ee(1, 1) = 1.0;  // sigma_+ sigma_- = |e><e|
  return tensor_product(l.n_op, Matrix::Identity(2, 2)) +
         tensor_product(Matrix::Identity(N, N), ee);
}

void field_only_diagonal() {
  // Linear Kerr field alone: E_n = omega_c (n + 1/2) + omega_c chi (n^2 + n + 1/2)
  const int N = 10;
  const double chi = 0.2, wc = 0.9;
  ModelParams p = kerr_params(chi, 1.0, wc, 0.0);
  const Matrix h = build_hamiltonian(ModelKind::FieldOnly, p, HilbertLayout(N));
  REQUIRE(h.rows() == N);
  double worst = 0.0;
  for (int n = 0; n < N - 1; ++n) {  // boundary row truncates f(N)
    const double expect = wc * (n + 0.5) + wc * chi * (n * n + n + 0.5);
    worst = std::max(worst, std::abs(h(n, n).real() - expect));
  }
  REQUIRE(worst <= 1e-13);
  REQUIRE(max_abs(h - Matrix(h.adjoint())) == 0.0);
  testkit::pass("field-only Kerr diagonal", worst);
}

void coupled_hamiltonian_structure() {
  const int N = 8;
  const HilbertLayout lay(N);
  const double chi = 0.05;
  ModelParams p = kerr_params(chi, 1.0, 1.0 / 1.3, 0.25);

  for (ModelKind kind :
       {ModelKind::JC, ModelKind::DJC, ModelKind::Rabi, ModelKind::DRabi}) {
    const Matrix h = build_hamiltonian(kind, p, lay);
    REQUIRE(h.rows() == 2 * N);
    REQUIRE(max_abs(h - Matrix(h.adjoint())) == 0.0);  // exact Hermiticity
  }

  // Bare energies at Omega0 = 0: |s,n> -> (omega_c/2)[n f^2(n)+(n+1) f^2(n+1)] ± omega_a/2
  ModelParams p0 = p;
  p0.Omega0 = 0.0;
  const Matrix h0 = build_hamiltonian(ModelKind::DJC, p0, lay);
  for (int n = 0; n + 1 < N; ++n) {
    const double f_n = deformation_eval(p.deformation, n);
    const double f_n1 = deformation_eval(p.deformation, n + 1);
    const double ef = 0.5 * p.omega_c * (n * f_n * f_n + (n + 1) * f_n1 * f_n1);
    REQUIRE_CLOSE(h0(2 * n, 2 * n).real(), ef - 0.5 * p.omega_a, 1e-14);
    REQUIRE_CLOSE(h0(2 * n + 1, 2 * n + 1).real(), ef + 0.5 * p.omega_a, 1e-14);
  }

  // RWA coupling element <e,n|H|g,n+1> = -i (Omega0/2) sqrt(n+1) f(n+1)
  const Matrix h = build_hamiltonian(ModelKind::DJC, p, lay);
  for (int n = 0; n + 1 < N; ++n) {
    const double mag =
        0.5 * p.Omega0 * std::sqrt(n + 1.0) * deformation_eval(p.deformation, n + 1);
    const Complex c = h(lay.index(n, 1), lay.index(n + 1, 0));
    REQUIRE_CLOSE(c.real(), 0.0, 1e-15);
    REQUIRE_CLOSE(c.imag(), -mag, 1e-14);
  }

  // JC ignores a configured profile; DJC at chi=0 matches JC entrywise.
  const Matrix hjc = build_hamiltonian(ModelKind::JC, p, lay);
  const Matrix hjc0 =
      build_hamiltonian(ModelKind::JC, kerr_params(0.0, 1.0, 1.0 / 1.3, 0.25), lay);
  REQUIRE(max_abs(hjc - hjc0) == 0.0);
  const Matrix hdjc0 =
      build_hamiltonian(ModelKind::DJC, kerr_params(0.0, 1.0, 1.0 / 1.3, 0.25), lay);
  REQUIRE(max_abs(hdjc0 - hjc0) <= 1e-15);
  testkit::pass("coupled Hamiltonian structure");
}

void conservation_laws() {
  const int N = 12;
  const HilbertLayout lay(N);
  ModelParams p = kerr_params(0.08, 1.0, 0.85, 0.3);
  const Matrix nexc = excitation_number(N);
  const Matrix pi = parity_operator(lay);
  const int interior = 2 * (N - 1);

  for (ModelKind kind : {ModelKind::JC, ModelKind::DJC}) {
    const Matrix c = commutator(build_hamiltonian(kind, p, lay), nexc);
    double worst = 0.0;
    for (int i = 0; i < interior; ++i)
      for (int j = 0; j < interior; ++j)
        worst = std::max(worst, std::abs(c(i, j)));
    REQUIRE(worst == 0.0);  // excitation conservation is structural
  }
  for (ModelKind kind :
       {ModelKind::JC, ModelKind::DJC, ModelKind::Rabi, ModelKind::DRabi}) {
    const Matrix c = commutator(build_hamiltonian(kind, p, lay), pi);
    double worst = 0.0;
    for (int i = 0; i < interior; ++i)
      for (int j = 0; j < interior; ++j)
        worst = std::max(worst, std::abs(c(i, j)));
    REQUIRE(worst == 0.0);  // parity commutes exactly
  }
  testkit::pass("excitation and parity conservation");
}

void doublet_identity_reduction() {
  // Undeformed doublet: E_pm = omega_c (n+1) ± (1/2) sqrt(D^2 + Omega0^2 (n+1)),
  // the symmetric field term shifting the pair by +omega_c/2.
  ModelParams p;
  p.omega_a = 1.0;
  p.omega_c = 1.0;
  p.Omega0 = 0.2;
  for (int n = 0; n <= 6; ++n) {
    const DressedDoublet d = doublet_block(p, n);
    const double omega_n = p.Omega0 * std::sqrt(n + 1.0);
    REQUIRE_CLOSE(d.E0, p.omega_c * (n + 1.0), 1e-14);
    REQUIRE_CLOSE(d.phi, omega_n, 1e-14);
    REQUIRE_CLOSE(d.E_plus, p.omega_c * (n + 1.0) + 0.5 * omega_n, 1e-14);
    REQUIRE_CLOSE(d.E_plus - d.E_minus, d.phi, 1e-15);
    REQUIRE_CLOSE(d.mixing_angle, M_PI / 2, 1e-14);  // resonant
    REQUIRE(d.E_plus >= d.E_minus);
  }
  testkit::pass("doublet identity reduction");
}

void doublet_vs_diagonalization() {
  // Dressed doublet energies against the diagonalized DJC spectrum.  The
  // truncation boundary corrupts the n = N-2 block (its |g,N-1> diagonal loses
  // the f^2(N) piece), so the cutoff keeps those artifacts above the window.
  ModelParams p = kerr_params(0.05, 1.0, 1.0 / 1.3, 0.25);
  const int N = 24;
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      build_hamiltonian(ModelKind::DJC, p, HilbertLayout(N)));
  std::vector<double> analytic;
  analytic.push_back(0.5 * p.omega_c *
                         std::pow(deformation_eval(p.deformation, 1), 2) -
                     0.5 * p.omega_a);  // decoupled |g,0>
  for (int n = 0; n <= 10; ++n) {
    const DressedDoublet d = doublet_block(p, n);
    analytic.push_back(d.E_plus);
    analytic.push_back(d.E_minus);
  }
  std::sort(analytic.begin(), analytic.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    worst = std::max(worst, std::abs(es.eigenvalues()[i] - analytic[i]) /
                                std::abs(analytic[i]));
  }
  REQUIRE(worst <= 1e-12);
  testkit::pass("doublet vs diagonalization", worst);
}

void doublet_chi_continuity() {
  const ModelParams tiny = kerr_params(1e-10, 1.0, 0.9, 0.25);
  ModelParams ident;
  ident.omega_a = 1.0;
  ident.omega_c = 0.9;
  ident.Omega0 = 0.25;
  for (int n = 0; n <= 5; ++n) {
    const DressedDoublet a = doublet_block(tiny, n);
    const DressedDoublet b = doublet_block(ident, n);
    REQUIRE_CLOSE(a.E_plus, b.E_plus, 1e-8);
    REQUIRE_CLOSE(a.E_minus, b.E_minus, 1e-8);
    REQUIRE_CLOSE(a.detuning, b.detuning, 1e-8);
    REQUIRE_CLOSE(a.rabi, b.rabi, 1e-8);
    REQUIRE_CLOSE(a.mixing_angle, b.mixing_angle, 1e-8);
  }
  testkit::pass("doublet chi -> 0 continuity");
}

void detuning_closed_form() {
  ModelParams p = kerr_params(0.05, 1.0, 1.0 / 1.3, 0.25);
  double worst = 0.0;
  for (int n = 0; n <= 12; ++n) {
    const double a = effective_detuning(p, n);
    const double b = doublet_block(p, n).detuning;
    worst = std::max(worst, std::abs(a - b));
  }
  REQUIRE(worst <= 1e-14);  // same quantity, different grouping

  // chi = 0 collapses to the bare detuning.
  REQUIRE_CLOSE(effective_detuning(kerr_params(0.0, 1.0, 0.8, 0.25), 7),
                0.2, 1e-15);
  // Selective choice with the rounded caption frequency: |Delta_{f,2}| < 1e-3.
  REQUIRE(std::abs(effective_detuning(kerr_params(0.05, 1.0, 0.7692, 0.25), 2)) <
          1e-3);
  // Exact resolver: Delta_{f,m} = 0 to machine precision.
  const double wc = selective_cavity_frequency(2, 0.05);
  REQUIRE(std::abs(effective_detuning(kerr_params(0.05, 1.0, wc, 0.25), 2)) <=
          1e-15);
  // Sign change across the selective doublet.
  REQUIRE(effective_detuning(kerr_params(0.05, 1.0, wc, 0.25), 1) > 0.0);
  REQUIRE(effective_detuning(kerr_params(0.05, 1.0, wc, 0.25), 3) < 0.0);

  ModelParams wrong = p;
  wrong.deformation = DeformationSpec::QOscillator(0.3);
  REQUIRE_THROWS(effective_detuning(wrong, 2), std::invalid_argument);
  testkit::pass("effective detuning closed form", worst);
}

void selective_frequency_values() {
  REQUIRE_REL(selective_cavity_frequency(2, 0.05), 1.0 / 1.3, 1e-15);
  REQUIRE_REL(selective_cavity_frequency(0, 0.125), 0.8, 1e-15);
  REQUIRE(selective_cavity_frequency(4, 0.0) == 1.0);
  REQUIRE_THROWS(selective_cavity_frequency(-1, 0.1), std::out_of_range);
  REQUIRE_THROWS(selective_cavity_frequency(1, -0.25), std::invalid_argument);
  testkit::pass("selective cavity frequency");
}

void rwa_bound_values() {
  // chi = 0 branch: 4 (omega_c + omega_a)^2 / Omega0^2 = 256 exactly here.
  REQUIRE_REL(rwa_nmax(kerr_params(0.0)), 256.0, 1e-12);
  // Frozen reference values (independent computation).
  REQUIRE_REL(rwa_nmax(kerr_params(1e-6)), 254.0655527815688, 1e-10);
  REQUIRE_REL(rwa_nmax(kerr_params(0.05, 1.0, 1.0 / 1.3, 0.25)),
              -30.773080306553926, 1e-12);
  // Pole: 16 chi omega_c^2 = Omega0^2.
  REQUIRE_THROWS(rwa_nmax(kerr_params(0.04, 1.0, 1.0, 0.8)),
                 std::invalid_argument);
  REQUIRE_THROWS(rwa_nmax(kerr_params(-0.01)), std::invalid_argument);
  ModelParams wrong = kerr_params(0.05);
  wrong.deformation = DeformationSpec::LambDicke(0.2);
  REQUIRE_THROWS(rwa_nmax(wrong), std::invalid_argument);
  testkit::pass("rwa validity bound");
}

void eigen_sweep_checks() {
  ModelParams p = kerr_params(0.05, 1.0, 1.0 / 1.3, 0.0);
  const HilbertLayout lay(16);
  const std::vector<double> grid = {0.0, 0.1, 0.25};

  // DJC columns match the dressed doublets at every coupling.
  const EigenSweep djc = eigen_sweep(ModelKind::DJC, p, grid, lay, 9);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    ModelParams pj = p;
    pj.Omega0 = grid[j];
    std::vector<double> analytic;
    analytic.push_back(0.5 * pj.omega_c *
                           std::pow(deformation_eval(pj.deformation, 1), 2) -
                       0.5 * pj.omega_a);
    for (int n = 0; n <= 4; ++n) {
      const DressedDoublet d = doublet_block(pj, n);
      analytic.push_back(d.E_plus);
      analytic.push_back(d.E_minus);
    }
    std::sort(analytic.begin(), analytic.end());
    for (int i = 0; i < 9; ++i) {
      REQUIRE_REL(djc.energies(i, static_cast<Eigen::Index>(j)), analytic[i],
                  1e-10);
    }
    // ascending order within each column
    for (int i = 0; i + 1 < 9; ++i) {
      REQUIRE(djc.energies(i, static_cast<Eigen::Index>(j)) <=
              djc.energies(i + 1, static_cast<Eigen::Index>(j)));
    }
  }

  // Adaptive Rabi sweep agrees with JC at vanishing coupling and stays finite.
  const EigenSweep jc = eigen_sweep(ModelKind::JC, p, {0.0}, lay, 9);
  const EigenSweep rabi = eigen_sweep(ModelKind::Rabi, p, {0.0}, lay, 9);
  for (int i = 0; i < 9; ++i) {
    REQUIRE_CLOSE(jc.energies(i, 0), rabi.energies(i, 0), 1e-10);
  }
  REQUIRE(rabi.fock_cutoff <= 4096);
  REQUIRE_THROWS(eigen_sweep(ModelKind::FieldOnly, p, grid, lay, 4),
                 std::invalid_argument);
  REQUIRE_THROWS(eigen_sweep(ModelKind::JC, p, {}, lay, 4),
                 std::invalid_argument);
  testkit::pass("eigen sweep contracts");
}

void parity_random_draws() {
  // Ten seeded draws across all four coupled kinds and all profiles; the
  // commutator with parity must vanish identically on the interior block.
  const int N = 16;
  const HilbertLayout lay(N);
  const Matrix pi = parity_operator(lay);
  const int interior = 2 * (N - 1);
  std::mt19937 rng(20260823);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const ModelKind kinds[] = {ModelKind::JC, ModelKind::DJC, ModelKind::Rabi,
                             ModelKind::DRabi};
  double worst = 0.0;
  for (int seed = 0; seed < 10; ++seed) {
    ModelParams p;
    p.omega_a = 0.5 + u(rng);
    p.omega_c = 0.5 + u(rng);
    p.Omega0 = 0.05 + 0.45 * u(rng);
    switch (seed % 5) {
      case 0: p.deformation = DeformationSpec::LinearKerr(0.3 * u(rng)); break;
      case 1: p.deformation = DeformationSpec::QOscillator(0.1 + u(rng)); break;
      case 2: p.deformation = DeformationSpec::LambDicke(0.5 * u(rng)); break;
      case 3:
        p.deformation = DeformationSpec::PoschlTeller(0.05 + 0.15 * u(rng),
                                                      8.0 + 4.0 * u(rng));
        break;
      case 4:
        p.deformation = DeformationSpec::Transmon(-0.08 * u(rng));
        break;
    }
    for (ModelKind kind : kinds) {
      const Matrix c = commutator(build_hamiltonian(kind, p, lay), pi);
      for (int i = 0; i < interior; ++i)
        for (int j = 0; j < interior; ++j)
          worst = std::max(worst, std::abs(c(i, j)));
    }
  }
  REQUIRE(worst == 0.0);
  testkit::pass("parity commutation over random draws", worst);
}

}  // namespace

int main() {
  field_only_diagonal();
  coupled_hamiltonian_structure();
  conservation_laws();
  doublet_identity_reduction();
  doublet_vs_diagonalization();
  doublet_chi_continuity();
  detuning_closed_form();
  selective_frequency_values();
  rwa_bound_values();
  eigen_sweep_checks();
  parity_random_draws();
  return testkit::done();
}
