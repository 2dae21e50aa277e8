#pragma once

#include "jcsim/algebra.hpp"
#include "jcsim/dynamics.hpp"
#include "jcsim/models.hpp"

namespace jcsim {

// Closed-form two-time correlation functions for the resonant standard model
// and the deformed doublet structure, transcribed term by term from their
// printed forms (no pre-simplification), plus low-rank trajectory realizations
// of the same kernels for the spectrum engine's Gram path.

// Atomic correlation of the resonant standard model from |e,n>:
//   e^{i omega_a (t1-t2)} cos(Omega_n t1/2) cos(Omega_{n-1}(t1-t2)/2)
//     cos(Omega_n t2/2),
// with Omega_n = Omega0 sqrt(n+1) and the convention Omega_{-1} = 0.
Complex atom_corr_jc(const ModelParams& params, int n, double t1, double t2);

// Field correlation of the resonant standard model from |e,n>: the four-cosine
// expression with prefactor e^{i omega_c (t1-t2)}/4 and Omega_± = Omega_n ±
// Omega_{n-1}.
Complex field_corr_jc(const ModelParams& params, int n, double t1, double t2);

// Kerr field correlation: sum_n P_n * n * e^{i omega_c (1 + 2 chi n)(t1-t2)}
// over the state's Fock weights.  Requires a field-only state and the
// linear Kerr profile.
Complex kerr_field_corr(const ModelParams& params, const InitialState& state,
                        double t1, double t2);

// Deformed atomic correlation from |e,n> for n >= 1: the three-bracket product
//   (1/8) e^{i(E_n - E_{n-1})(t1-t2)} e^{-i(phi_- t2 + phi_+ t1)/2}
//     [e^{i phi_n t1}(1+d_n) + (1-d_n)]
//     [(1+d_n) + e^{i phi_n t2}(1-d_n)]
//     [e^{i phi_{n-1}(t1-t2)}(1+d_{n-1}) + (1-d_{n-1})],
// d_k = Delta_{f,k}/phi_k, phi_± = phi_n ± phi_{n-1}; doublet quantities come
// from doublet_block, so any deformation profile is admitted.
Complex atom_corr_djc(const ModelParams& params, int n, double t1, double t2);

// Trajectory realizations: CorrelationGrid whose Gram kernel equals the
// corresponding closed form at every grid-point pair.
CorrelationGrid atom_corr_jc_grid(const ModelParams& params, int n, const TimeGrid& grid,
                                  double frame_shift = 0.0);
CorrelationGrid field_corr_jc_grid(const ModelParams& params, int n, const TimeGrid& grid,
                                   double frame_shift = 0.0);
CorrelationGrid kerr_corr_grid(const ModelParams& params, const InitialState& state,
                               const TimeGrid& grid, double frame_shift = 0.0);
// n >= 1 uses the doublet pair (n, n-1); n = 0 uses the vacuum-sector kernel
//   w(t) = e^{-i nu t}(cos(phi_0 t/2) - i d_0 sin(phi_0 t/2)),
//   nu = E_0^(0) - E_{|g,0>},
// whose long-time spectrum carries weights (1 -/+ d_0)^2 at nu ± phi_0/2.
CorrelationGrid atom_corr_djc_grid(const ModelParams& params, int n, const TimeGrid& grid,
                                   double frame_shift = 0.0);

// Half-angle identities used in the doublet bracket algebra:
//   2 sin^2(arctan(x)/2) = 1 - (1+x^2)^{-1/2}
//   2 cos^2(arctan(x)/2) = 1 + (1+x^2)^{-1/2}
double two_sin_sq_half_arctan(double x);
double two_cos_sq_half_arctan(double x);

}  // namespace jcsim
