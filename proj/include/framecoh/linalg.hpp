#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "framecoh/error.hpp"

namespace framecoh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;

// Validated quantum state: Hermitian, PSD (up to kPsdFloor), unit trace.
// Construct through make_density or spectral_mixture only.
class DensityOperator {
 public:
  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  friend DensityOperator make_density(const Matrix& m);
  explicit DensityOperator(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

DensityOperator make_density(const Matrix& m);

DensityOperator spectral_mixture(const std::vector<double>& weights,
                                 const std::vector<Vector>& vectors);

// Kronecker product.
Matrix tensor(const Matrix& a, const Matrix& b);

// rho padded with `extra` zero rows/columns (rho in the top-left block).
Matrix direct_sum_zero(const DensityOperator& rho, Index extra);

// tr(rho * obs) for a Hermitian observable.
double mean_value(const DensityOperator& rho, const Matrix& obs);

// max entrywise |m - m^dagger|.
double hermitian_deviation(const Matrix& m);

}  // namespace framecoh
