#pragma once

#include <vector>

#include "framecoh/linalg.hpp"

namespace framecoh {

struct TightnessReport {
  double residual;  // Frobenius norm of sum_k |phi_k><phi_k| - I
  bool tight;       // residual <= 1e-10 * dim
};

// Ordered family of vectors in C^d. Zero and repeated vectors are allowed;
// order is part of the identity. Tightness is measured at construction.
class Frame {
 public:
  Frame(Index dim, std::vector<Vector> vectors);

  Index dim() const { return dim_; }
  Index size() const { return static_cast<Index>(vecs_.size()); }
  const Vector& operator[](Index k) const { return vecs_[static_cast<size_t>(k)]; }
  const std::vector<Vector>& vectors() const { return vecs_; }

  // d x n matrix whose columns are the frame vectors.
  Matrix synthesis() const;

  const TightnessReport& tightness() const { return tightness_; }
  bool tight() const { return tightness_.tight; }
  void require_tight(const char* where) const;

 private:
  Index dim_;
  std::vector<Vector> vecs_;
  TightnessReport tightness_;
};

TightnessReport verify_tight(const Frame& f);

Frame canonical_basis(Index d);
Frame rotated_qubit_basis(double lambda);
Frame polygonal_frame(Index n);
Frame tetrahedral_frame();
Frame icosahedral_frame();
Frame fourier_basis(Index d);

// Concatenation of wa-scaled a-vectors then wb-scaled b-vectors. The result
// keeps whatever tightness it actually has; deliberately non-tight unions are
// constructible.
Frame scaled_union(const Frame& a, const Frame& b, double wa, double wb);

// scaled_union(a, b, sqrt(1-t), sqrt(t)) for orthonormal bases a, b.
Frame interpolate(const Frame& a, const Frame& b, double t);

// Concatenates an orthonormal family with a frame supported on the orthogonal
// complement; the result must resolve the identity.
Frame split_frame(const Frame& basis_part, const Frame& frame_part);
Frame split_frame(const Frame& basis_part);

Frame tensor_frame(const Frame& a, const Frame& b);
Frame apply_unitary(const Matrix& u, const Frame& f);

std::vector<Complex> analysis_coefficients(const Frame& f, const Vector& psi);
Vector synthesize(const Frame& f, const std::vector<Complex>& coeffs);

// P = I_n - T^dagger T, the projector onto the kernel of the synthesis map.
Matrix coefficient_kernel_projector(const Frame& f);

// n x n matrix <phi_j|A|phi_k>.
Matrix frame_matrix(const Frame& f, const Matrix& a);

bool is_orthonormal_basis(const Frame& f, double tol = 1e-10);

}  // namespace framecoh
