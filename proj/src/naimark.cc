#include "framecoh/naimark.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace framecoh {

namespace {

Matrix positive_sqrt(const Matrix& e) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((e + e.adjoint()) / 2.0);
  Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * roots.asDiagonal().toDenseMatrix().cast<Complex>() *
         es.eigenvectors().adjoint();
}

}  // namespace

Povm make_povm(Index dim, std::vector<Matrix> effects) {
  if (dim < 1) fail(ErrorCode::BadParameter, "dimension must be positive");
  if (effects.empty()) fail(ErrorCode::BadCount, "need at least one effect");
  Matrix sum = Matrix::Zero(dim, dim);
  for (size_t j = 0; j < effects.size(); ++j) {
    const Matrix& e = effects[j];
    if (e.rows() != dim || e.cols() != dim)
      fail(ErrorCode::DimMismatch, "effect " + std::to_string(j) + " has wrong shape");
    if (!(hermitian_deviation(e) <= 1e-10))
      fail(ErrorCode::NotHermitian, "effect " + std::to_string(j));
    Eigen::SelfAdjointEigenSolver<Matrix> es((e + e.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    if (!(es.eigenvalues().minCoeff() >= kPsdFloor))
      fail(ErrorCode::NotPositive, "effect " + std::to_string(j) + " least eigenvalue " +
                                       std::to_string(es.eigenvalues().minCoeff()));
    sum += e;
  }
  const double gap = (sum - Matrix::Identity(dim, dim)).norm();
  if (!(gap <= 1e-10))
    fail(ErrorCode::NotTight, "effects sum misses identity by " + std::to_string(gap));
  return Povm{dim, std::move(effects)};
}

Povm frame_to_povm(const Frame& f) {
  f.require_tight("frame_to_povm");
  std::vector<Matrix> effects;
  effects.reserve(static_cast<size_t>(f.size()));
  for (const Vector& v : f.vectors()) effects.push_back(v * v.adjoint());
  return make_povm(f.dim(), std::move(effects));
}

Frame povm_to_frame(const Povm& p) {
  std::vector<Vector> vecs;
  vecs.reserve(p.effects.size());
  for (size_t j = 0; j < p.effects.size(); ++j) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((p.effects[j] + p.effects[j].adjoint()) / 2.0);
    const Index last = p.dim - 1;
    const double top = es.eigenvalues()[last];
    const double second = p.dim > 1 ? es.eigenvalues()[last - 1] : 0.0;
    if (!(second < 1e-10))
      fail(ErrorCode::NotRankOne, "effect " + std::to_string(j) + " has second eigenvalue " +
                                      std::to_string(second));
    if (top <= 1e-12) {
      vecs.push_back(Vector::Zero(p.dim));
      continue;
    }
    Vector v = es.eigenvectors().col(last);
    Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    v *= std::conj(v[pivot]) / std::abs(v[pivot]);
    vecs.push_back(std::sqrt(top) * v);
  }
  return Frame(p.dim, std::move(vecs));
}

NaimarkExtension naimark_extend(const Frame& f) {
  f.require_tight("naimark_extend");
  const Index d = f.dim();
  const Index n = f.size();
  const Matrix t = f.synthesis();

  std::vector<Vector> rows;
  rows.reserve(static_cast<size_t>(n));
  for (Index a = 0; a < d; ++a) rows.push_back(t.row(a).transpose());
  for (Index seed = 0; seed < n && static_cast<Index>(rows.size()) < n; ++seed) {
    Vector c = Vector::Zero(n);
    c[seed] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vector& r : rows) c -= r * r.dot(c);
    const double norm = c.norm();
    if (norm > 1e-8) rows.push_back(c / norm);
  }
  if (static_cast<Index>(rows.size()) != n)
    fail(ErrorCode::NotTight, "row completion failed");

  Matrix u(n, n);
  for (Index i = 0; i < n; ++i) u.row(i) = rows[static_cast<size_t>(i)].transpose();

  std::vector<Vector> basis_vecs;
  std::vector<Vector> tails;
  basis_vecs.reserve(static_cast<size_t>(n));
  tails.reserve(static_cast<size_t>(n));
  for (Index j = 0; j < n; ++j) {
    basis_vecs.push_back(u.col(j));
    tails.push_back(u.col(j).tail(n - d));
  }
  return NaimarkExtension{f, Frame(n, std::move(basis_vecs)), std::move(tails)};
}

ExtensionReport verify_extension(const NaimarkExtension& ext, const DensityOperator& rho) {
  const Index d = ext.original.dim();
  const Index n = ext.original.size();
  if (rho.dim() != d)
    fail(ErrorCode::DimMismatch, "state does not match the original frame dimension");

  const Matrix t = ext.original.synthesis();
  const Matrix small = t.adjoint() * rho.matrix() * t;
  const Matrix padded = direct_sum_zero(rho, n - d);
  const Matrix u = ext.basis.synthesis();
  const Matrix big = u.adjoint() * padded * u;

  ExtensionReport rep{};
  rep.max_element_error = (small - big).cwiseAbs().maxCoeff();
  rep.max_probability_error = (small.diagonal() - big.diagonal()).cwiseAbs().maxCoeff();
  rep.coherence_direct = frame_coherence(ext.original, rho).value;
  const double prefactor = static_cast<double>(d) / static_cast<double>(n);
  long double acc = 0.0L;
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) {
      if (j == k) continue;
      acc += std::abs(big(j, k));
    }
  rep.coherence_extended = static_cast<double>(static_cast<long double>(prefactor) * acc);
  rep.coherence_gap = std::abs(rep.coherence_extended - rep.coherence_direct);
  rep.pass = rep.max_element_error <= 1e-12 && rep.max_probability_error <= 1e-12 &&
             rep.coherence_gap <= 1e-12;
  return rep;
}

std::vector<double> povm_probabilities(const Povm& p, const DensityOperator& rho) {
  if (rho.dim() != p.dim) fail(ErrorCode::DimMismatch, "state does not match POVM dimension");
  std::vector<double> probs;
  probs.reserve(p.effects.size());
  for (size_t j = 0; j < p.effects.size(); ++j) {
    double v = (rho.matrix() * p.effects[j]).trace().real();
    if (v < -1e-12)
      fail(ErrorCode::NotPositive,
           "outcome " + std::to_string(j) + " probability " + std::to_string(v));
    probs.push_back(std::max(v, 0.0));
  }
  return probs;
}

DensityOperator post_measurement_state(const Povm& p, const DensityOperator& rho, Index j) {
  if (rho.dim() != p.dim) fail(ErrorCode::DimMismatch, "state does not match POVM dimension");
  if (j < 0 || j >= static_cast<Index>(p.effects.size()))
    fail(ErrorCode::IndexOutOfRange, "outcome index " + std::to_string(j));
  const Matrix& e = p.effects[static_cast<size_t>(j)];
  const double prob = (rho.matrix() * e).trace().real();
  if (!(prob > 1e-12))
    fail(ErrorCode::ZeroProbability,
         "outcome " + std::to_string(j) + " probability " + std::to_string(prob));
  const Matrix a = positive_sqrt(e);
  return make_density(a * rho.matrix() * a / prob);
}

}  // namespace framecoh
