#pragma once

#include <random>
#include <vector>

#include "framecoh/coherence.hpp"
#include "framecoh/linalg.hpp"

namespace testutil {

using framecoh::Complex;
using framecoh::Frame;
using framecoh::Index;
using framecoh::Matrix;
using framecoh::Vector;

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Matrix random_matrix(std::mt19937_64& gen, Index rows, Index cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = Complex(dist(gen), dist(gen));
  return m;
}

inline Vector random_vector(std::mt19937_64& gen, Index d) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector v(d);
  for (Index i = 0; i < d; ++i) v[i] = Complex(dist(gen), dist(gen));
  return v;
}

inline Vector random_unit_vector(std::mt19937_64& gen, Index d) {
  Vector v = random_vector(gen, d);
  return v / v.norm();
}

inline framecoh::DensityOperator random_density(std::mt19937_64& gen, Index d) {
  const Matrix g = random_matrix(gen, d, d);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return framecoh::make_density((m + m.adjoint()) / 2.0);
}

inline Matrix random_unitary(std::mt19937_64& gen, Index d) {
  const Matrix g = random_matrix(gen, d, d);
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(d, d);
}

// Columns of (G G^dagger)^{-1/2} G form a tight frame for any full-rank G.
inline Frame random_tight_frame(std::mt19937_64& gen, Index d, Index n) {
  const Matrix g = random_matrix(gen, d, n);
  Eigen::SelfAdjointEigenSolver<Matrix> es(g * g.adjoint());
  const Matrix t = es.operatorInverseSqrt() * g;
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<size_t>(n));
  for (Index k = 0; k < n; ++k) vecs.push_back(t.col(k));
  return Frame(d, std::move(vecs));
}

inline Frame random_basis(std::mt19937_64& gen, Index d) {
  const Matrix u = random_unitary(gen, d);
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<size_t>(d));
  for (Index k = 0; k < d; ++k) vecs.push_back(u.col(k));
  return Frame(d, std::move(vecs));
}

}  // namespace testutil
