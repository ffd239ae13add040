#include "framecoh/linalg.hpp"

#include <cmath>
#include <string>

namespace framecoh {

namespace {

std::string num(double v) { return std::to_string(v); }

}  // namespace

DensityOperator make_density(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    fail(ErrorCode::DimMismatch,
         "density matrix must be square, got " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()));
  const double herm = hermitian_deviation(m);
  if (!(herm <= kHermitianTol))
    fail(ErrorCode::NotHermitian, "deviation " + num(herm));
  Matrix h = (m + m.adjoint()) / 2.0;
  const double tr_gap = std::abs(h.trace() - Complex(1.0, 0.0));
  if (!(tr_gap <= kTraceTol))
    fail(ErrorCode::TraceNotOne, "trace " + num(h.trace().real()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (!(min_eig >= kPsdFloor))
    fail(ErrorCode::NotPositive, "least eigenvalue " + num(min_eig));
  return DensityOperator(std::move(h));
}

DensityOperator spectral_mixture(const std::vector<double>& weights,
                                 const std::vector<Vector>& vectors) {
  if (weights.size() != vectors.size() || weights.empty())
    fail(ErrorCode::BadWeights, "need matching nonempty weight and vector lists");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) fail(ErrorCode::BadWeights, "negative weight " + num(w));
    sum += w;
  }
  if (!(std::abs(sum - 1.0) <= 1e-12))
    fail(ErrorCode::BadWeights, "weights sum to " + num(sum));
  const Index d = vectors.front().size();
  for (size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != d)
      fail(ErrorCode::DimMismatch, "vector " + std::to_string(j) + " has wrong length");
    for (size_t k = 0; k <= j; ++k) {
      const Complex g = vectors[k].dot(vectors[j]);
      const double target = (j == k) ? 1.0 : 0.0;
      if (!(std::abs(g - target) <= 1e-10))
        fail(ErrorCode::NotOrthonormal,
             "vectors " + std::to_string(k) + "," + std::to_string(j) + " overlap " +
                 num(std::abs(g)));
    }
  }
  Matrix m = Matrix::Zero(d, d);
  for (size_t j = 0; j < weights.size(); ++j)
    m += weights[j] * (vectors[j] * vectors[j].adjoint());
  return make_density(m);
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

Matrix direct_sum_zero(const DensityOperator& rho, Index extra) {
  if (extra < 0) fail(ErrorCode::BadParameter, "negative padding " + std::to_string(extra));
  const Index d = rho.dim();
  Matrix out = Matrix::Zero(d + extra, d + extra);
  out.topLeftCorner(d, d) = rho.matrix();
  return out;
}

double mean_value(const DensityOperator& rho, const Matrix& obs) {
  if (obs.rows() != rho.dim() || obs.cols() != rho.dim())
    fail(ErrorCode::DimMismatch, "observable does not match state dimension");
  const double herm = hermitian_deviation(obs);
  if (!(herm <= kHermitianTol))
    fail(ErrorCode::NotHermitian, "observable deviation " + num(herm));
  const Complex t = (rho.matrix() * obs).trace();
  if (!(std::abs(t.imag()) <= 1e-12))
    fail(ErrorCode::NotHermitian, "mean has imaginary part " + num(t.imag()));
  return t.real();
}

double hermitian_deviation(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimMismatch, "matrix must be square");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace framecoh
