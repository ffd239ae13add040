#pragma once

#include "framecoh/coherence.hpp"

namespace framecoh {

struct Povm {
  Index dim;
  std::vector<Matrix> effects;
};

// Validates: effects Hermitian, PSD within kPsdFloor, summing to identity
// within 1e-10 Frobenius.
Povm make_povm(Index dim, std::vector<Matrix> effects);

Povm frame_to_povm(const Frame& f);

// Recovers phi_j = sqrt(lambda_j) v_j from the top eigenpair of each rank-one
// effect; the global phase makes the largest-magnitude component real positive.
Frame povm_to_frame(const Povm& p);

struct NaimarkExtension {
  Frame original;                     // n vectors psi_j in C^d
  Frame basis;                        // orthonormal basis Psi_j of C^n
  std::vector<Vector> tail_vectors;   // bottom n-d components of each Psi_j
};

// Completes the rows of the synthesis matrix to an n x n unitary by
// Gram-Schmidt over canonical seed rows (pivot threshold 1e-8). The top d
// components of Psi_j equal psi_j exactly.
NaimarkExtension naimark_extend(const Frame& f);

struct ExtensionReport {
  double max_element_error;      // max |<psi_j|rho|psi_k> - <Psi_j|rho+0|Psi_k>|
  double max_probability_error;  // max |tr(rho E_j) - tr((rho+0) Pi_j)|
  double coherence_direct;
  double coherence_extended;
  double coherence_gap;
  bool pass;  // all of the above within 1e-12
};

ExtensionReport verify_extension(const NaimarkExtension& ext, const DensityOperator& rho);

std::vector<double> povm_probabilities(const Povm& p, const DensityOperator& rho);

DensityOperator post_measurement_state(const Povm& p, const DensityOperator& rho, Index j);

}  // namespace framecoh
