#pragma once

#include "framecoh/frame.hpp"

namespace framecoh {

struct CoherenceReport {
  double value;
  double prefactor;  // d/n for frames, 1 for bases
  Index dim;
  Index n;
  RealMatrix offdiag;  // |<phi_j|rho|phi_k>| with zero diagonal
};

struct ObservableSet {
  Index dim;
  std::vector<std::vector<Matrix>> operators;  // n x n grid of Hermitian matrices
};

CoherenceReport basis_coherence(const Frame& b, const DensityOperator& rho);
CoherenceReport frame_coherence(const Frame& f, const DensityOperator& rho);

// W_jj = |phi_j><phi_j|
// j > k: W_jk = (|phi_j><phi_k| + |phi_k><phi_j|) / 2
// j < k: W_jk = i (|phi_j><phi_k| - |phi_k><phi_j|) / 2
ObservableSet observables(const Frame& f);

// <W_kj> + i <W_jk> for j < k.
Complex matrix_element_from_means(double mean_kj, double mean_jk);

// Coherence reassembled from observable mean values; equals frame_coherence.
double coherence_from_means(const Frame& f, const DensityOperator& rho);

CoherenceReport composite_coherence(const Frame& fa, const Frame& fb,
                                    const DensityOperator& rho);

struct PropertiesReport {
  double min_value;        // least coherence encountered
  double convexity_slack;  // sum_m p_m C(rho_m) - C(sum_m p_m rho_m)
  double invariance_gap;   // max |C_{UF}(U rho U^dagger) - C_F(rho)|
  bool pass;
};

PropertiesReport coherence_properties_check(const Frame& f,
                                            const std::vector<DensityOperator>& states,
                                            const std::vector<double>& weights,
                                            const Matrix& u);

}  // namespace framecoh
