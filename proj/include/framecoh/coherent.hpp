#pragma once

#include "framecoh/frame.hpp"

namespace framecoh {

// Index bookkeeping for odd dimension d = 2s+1 with labels -s..s. All arrays
// store label n at offset n+s; wrap() reduces any integer mod d back onto the
// symmetric range.
struct SymmetricIndexSpace {
  Index s;
  Index dim() const { return 2 * s + 1; }
  Index offset(Index n) const { return n + s; }
  Index wrap(Index n) const;
};

SymmetricIndexSpace symmetric_space(Index d);

struct DiscreteGaussian {
  double kappa;
  Eigen::VectorXd values;  // g(-s)..g(s)
};

// Periodized Gaussian g_kappa(n) = sum_m exp(-(kappa*pi/d)(n+m*d)^2).
DiscreteGaussian discrete_gaussian(Index d, double kappa);

// F(k,j) = exp(-2*pi*i*k*j/d)/sqrt(d) on the symmetric index range. Distinct
// from fourier_basis, which uses 0-based indices; the two are never mixed.
Matrix fourier_operator(const SymmetricIndexSpace& space);

// Normalized g_1; fixed point of the symmetric Fourier operator.
Vector vacuum_state(Index d);

// (D(j,k) psi)(n) = exp(-pi*i*k*j/d) exp(2*pi*i*k*n/d) psi(n-j), shift mod d.
Matrix displacement(const SymmetricIndexSpace& space, Index j, Index k);

// d^2 vectors |j,k> = D(j,k)|g>/sqrt(d), j outer and k inner, ascending from -s.
Frame coherent_frame(Index d);

struct FourierInvarianceReport {
  double coherence_rho;          // C(rho)
  double coherence_transformed;  // C(F^dagger rho F), computed directly
  double coherence_reindexed;    // same, predicted through F|j,k> = |k,-j>
  double invariance_gap;
  double second_check_gap;
  double reindex_residual;  // max_(j,k) ||F|j,k> - |k,-j>||
  bool pass;
};

FourierInvarianceReport fourier_invariance_check(Index d, const DensityOperator& rho);

}  // namespace framecoh
