#include "framecoh/frame.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace framecoh {

namespace {

constexpr double kPi = std::numbers::pi;

bool all_finite(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  return true;
}

TightnessReport measure_tightness(Index dim, const std::vector<Vector>& vecs) {
  Matrix s = -Matrix::Identity(dim, dim);
  for (const Vector& v : vecs) s += v * v.adjoint();
  const double residual = s.norm();
  return TightnessReport{residual, residual <= 1e-10 * static_cast<double>(dim)};
}

}  // namespace

Frame::Frame(Index dim, std::vector<Vector> vectors) : dim_(dim), vecs_(std::move(vectors)) {
  if (dim_ < 1) fail(ErrorCode::BadParameter, "dimension must be positive");
  if (vecs_.empty()) fail(ErrorCode::BadCount, "frame needs at least one vector");
  for (size_t k = 0; k < vecs_.size(); ++k) {
    if (vecs_[k].size() != dim_)
      fail(ErrorCode::DimMismatch,
           "vector " + std::to_string(k) + " has length " + std::to_string(vecs_[k].size()) +
               ", expected " + std::to_string(dim_));
    if (!all_finite(vecs_[k]))
      fail(ErrorCode::BadParameter, "vector " + std::to_string(k) + " has non-finite entries");
  }
  tightness_ = measure_tightness(dim_, vecs_);
}

Matrix Frame::synthesis() const {
  Matrix t(dim_, size());
  for (Index k = 0; k < size(); ++k) t.col(k) = vecs_[static_cast<size_t>(k)];
  return t;
}

void Frame::require_tight(const char* where) const {
  if (!tight())
    fail(ErrorCode::NotTight,
         std::string(where) + ": tightness residual " + std::to_string(tightness_.residual));
}

TightnessReport verify_tight(const Frame& f) { return f.tightness(); }

Frame canonical_basis(Index d) {
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<size_t>(d));
  for (Index k = 0; k < d; ++k) {
    Vector v = Vector::Zero(d);
    v[k] = 1.0;
    vecs.push_back(std::move(v));
  }
  return Frame(d, std::move(vecs));
}

Frame rotated_qubit_basis(double lambda) {
  const double c = std::cos(lambda);
  const double s = std::sin(lambda);
  Vector b1(2), b2(2);
  b1 << c, s;
  b2 << -s, c;
  return Frame(2, {b1, b2});
}

Frame polygonal_frame(Index n) {
  if (n < 3) fail(ErrorCode::BadCount, "polygonal frame needs n >= 3");
  const double r = std::sqrt(2.0 / static_cast<double>(n));
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<size_t>(n));
  for (Index k = 0; k < n; ++k) {
    const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    Vector v(2);
    v << r * std::cos(angle), r * std::sin(angle);
    vecs.push_back(std::move(v));
  }
  return Frame(2, std::move(vecs));
}

Frame tetrahedral_frame() {
  const double signs[4][3] = {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {-1, -1, -1}};
  std::vector<Vector> vecs;
  for (const auto& row : signs) {
    Vector v(3);
    v << 0.5 * row[0], 0.5 * row[1], 0.5 * row[2];
    vecs.push_back(std::move(v));
  }
  return Frame(3, std::move(vecs));
}

Frame icosahedral_frame() {
  const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
  const double eta = std::sqrt(5.0 + std::sqrt(5.0));
  const double rows[6][3] = {{1, tau, 0},  {-1, tau, 0}, {-tau, 0, 1},
                             {0, -1, tau}, {tau, 0, 1},  {0, 1, tau}};
  std::vector<Vector> vecs;
  for (const auto& row : rows) {
    Vector v(3);
    v << row[0] / eta, row[1] / eta, row[2] / eta;
    vecs.push_back(std::move(v));
  }
  return Frame(3, std::move(vecs));
}

Frame fourier_basis(Index d) {
  if (d < 1) fail(ErrorCode::BadParameter, "dimension must be positive");
  const double root = std::sqrt(static_cast<double>(d));
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<size_t>(d));
  for (Index k = 0; k < d; ++k) {
    Vector v(d);
    for (Index j = 0; j < d; ++j) {
      const double phase = 2.0 * kPi * static_cast<double>(j) * static_cast<double>(k) /
                           static_cast<double>(d);
      v[j] = std::polar(1.0 / root, phase);
    }
    vecs.push_back(std::move(v));
  }
  return Frame(d, std::move(vecs));
}

Frame scaled_union(const Frame& a, const Frame& b, double wa, double wb) {
  if (a.dim() != b.dim())
    fail(ErrorCode::DimMismatch, "union of frames with different dimensions");
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<size_t>(a.size() + b.size()));
  for (const Vector& v : a.vectors()) vecs.push_back(wa * v);
  for (const Vector& v : b.vectors()) vecs.push_back(wb * v);
  return Frame(a.dim(), std::move(vecs));
}

Frame interpolate(const Frame& a, const Frame& b, double t) {
  if (a.dim() != b.dim())
    fail(ErrorCode::DimMismatch, "interpolation endpoints have different dimensions");
  if (!(t >= 0.0 && t <= 1.0))
    fail(ErrorCode::BadParameter, "interpolation parameter outside [0,1]");
  if (!is_orthonormal_basis(a)) fail(ErrorCode::NotBasis, "first endpoint is not a basis");
  if (!is_orthonormal_basis(b)) fail(ErrorCode::NotBasis, "second endpoint is not a basis");
  return scaled_union(a, b, std::sqrt(1.0 - t), std::sqrt(t));
}

Frame split_frame(const Frame& basis_part, const Frame& frame_part) {
  if (basis_part.dim() != frame_part.dim())
    fail(ErrorCode::DimMismatch, "split parts have different dimensions");
  Frame out = scaled_union(basis_part, frame_part, 1.0, 1.0);
  out.require_tight("split_frame");
  return out;
}

Frame split_frame(const Frame& basis_part) {
  Frame out(basis_part.dim(), basis_part.vectors());
  out.require_tight("split_frame");
  return out;
}

Frame tensor_frame(const Frame& a, const Frame& b) {
  a.require_tight("tensor_frame (left factor)");
  b.require_tight("tensor_frame (right factor)");
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<size_t>(a.size() * b.size()));
  for (Index j = 0; j < a.size(); ++j)
    for (Index k = 0; k < b.size(); ++k) {
      Vector v(a.dim() * b.dim());
      for (Index r = 0; r < a.dim(); ++r)
        v.segment(r * b.dim(), b.dim()) = a[j][r] * b[k];
      vecs.push_back(std::move(v));
    }
  return Frame(a.dim() * b.dim(), std::move(vecs));
}

Frame apply_unitary(const Matrix& u, const Frame& f) {
  if (u.rows() != f.dim() || u.cols() != f.dim())
    fail(ErrorCode::DimMismatch, "unitary does not match frame dimension");
  const double gap = (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
  if (!(gap <= 1e-10))
    fail(ErrorCode::NotUnitary, "deviation from unitarity " + std::to_string(gap));
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<size_t>(f.size()));
  for (const Vector& v : f.vectors()) vecs.push_back(u * v);
  return Frame(f.dim(), std::move(vecs));
}

std::vector<Complex> analysis_coefficients(const Frame& f, const Vector& psi) {
  if (psi.size() != f.dim())
    fail(ErrorCode::DimMismatch, "vector does not match frame dimension");
  std::vector<Complex> coeffs;
  coeffs.reserve(static_cast<size_t>(f.size()));
  for (const Vector& v : f.vectors()) coeffs.push_back(v.dot(psi));
  return coeffs;
}

Vector synthesize(const Frame& f, const std::vector<Complex>& coeffs) {
  if (static_cast<Index>(coeffs.size()) != f.size())
    fail(ErrorCode::LengthMismatch,
         "expected " + std::to_string(f.size()) + " coefficients, got " +
             std::to_string(coeffs.size()));
  Vector out = Vector::Zero(f.dim());
  for (Index k = 0; k < f.size(); ++k) out += coeffs[static_cast<size_t>(k)] * f[k];
  return out;
}

Matrix coefficient_kernel_projector(const Frame& f) {
  f.require_tight("coefficient_kernel_projector");
  const Matrix t = f.synthesis();
  return Matrix::Identity(f.size(), f.size()) - t.adjoint() * t;
}

Matrix frame_matrix(const Frame& f, const Matrix& a) {
  if (a.rows() != f.dim() || a.cols() != f.dim())
    fail(ErrorCode::DimMismatch, "operator does not match frame dimension");
  const Matrix t = f.synthesis();
  return t.adjoint() * a * t;
}

bool is_orthonormal_basis(const Frame& f, double tol) {
  if (f.size() != f.dim()) return false;
  for (Index j = 0; j < f.size(); ++j)
    for (Index k = j; k < f.size(); ++k) {
      const Complex g = f[j].dot(f[k]);
      const double target = (j == k) ? 1.0 : 0.0;
      if (std::abs(g - target) > tol) return false;
    }
  return true;
}

}  // namespace framecoh
