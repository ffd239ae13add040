#include <cmath>

#include "doctest.h"
#include "framecoh/linalg.hpp"
#include "test_util.hpp"

using namespace framecoh;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("make_density accepts valid states") {
  const DensityOperator rho = make_density(diag2(0.25, 0.75));
  CHECK(rho.dim() == 2);
  CHECK(rho.matrix()(0, 0).real() == 0.25);

  Matrix m(2, 2);
  m << 0.5, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.5;
  CHECK(make_density(m).dim() == 2);
}

TEST_CASE("make_density rejects invalid states") {
  CHECK_THROWS_AS(make_density(Matrix::Zero(2, 3)), Error);

  Matrix skew(2, 2);
  skew << 0.5, 0.3, -0.3, 0.5;
  CHECK_THROWS_WITH_AS(make_density(skew), doctest::Contains("NotHermitian"), Error);

  CHECK_THROWS_WITH_AS(make_density(diag2(0.6, 0.6)), doctest::Contains("TraceNotOne"),
                       Error);
  CHECK_THROWS_WITH_AS(make_density(diag2(1.5, -0.5)), doctest::Contains("NotPositive"),
                       Error);
}

TEST_CASE("make_density stores the hermitized matrix") {
  Matrix m(2, 2);
  m << 0.5, Complex(0.1, 0.2 + 5e-13), Complex(0.1, -0.2), 0.5;
  const DensityOperator rho = make_density(m);
  CHECK(hermitian_deviation(rho.matrix()) == 0.0);
}

TEST_CASE("spectral_mixture builds states from orthonormal vectors") {
  Vector e0 = Vector::Zero(2), e1 = Vector::Zero(2);
  e0[0] = 1.0;
  e1[1] = 1.0;
  const DensityOperator rho = spectral_mixture({0.25, 0.75}, {e0, e1});
  CHECK(std::abs(rho.matrix()(0, 0) - 0.25) == 0.0);
  CHECK(std::abs(rho.matrix()(1, 1) - 0.75) == 0.0);

  CHECK_THROWS_WITH_AS(spectral_mixture({0.5}, {e0, e1}), doctest::Contains("BadWeights"),
                       Error);
  CHECK_THROWS_WITH_AS(spectral_mixture({-0.1, 1.1}, {e0, e1}),
                       doctest::Contains("BadWeights"), Error);
  CHECK_THROWS_WITH_AS(spectral_mixture({0.3, 0.3}, {e0, e1}),
                       doctest::Contains("BadWeights"), Error);
  CHECK_THROWS_WITH_AS(spectral_mixture({0.5, 0.5}, {e0, e0}),
                       doctest::Contains("NotOrthonormal"), Error);
}

TEST_CASE("tensor is the Kronecker product and is associative") {
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix i3 = Matrix::Identity(3, 3);
  CHECK((tensor(i2, i3) - Matrix::Identity(6, 6)).norm() == 0.0);

  auto gen = testutil::rng(11);
  const Matrix a = testutil::random_matrix(gen, 2, 2);
  const Matrix b = testutil::random_matrix(gen, 3, 2);
  const Matrix c = testutil::random_matrix(gen, 2, 3);
  CHECK((tensor(tensor(a, b), c) - tensor(a, tensor(b, c))).cwiseAbs().maxCoeff() <= 1e-13);

  CHECK(tensor(a, c).rows() == 4);
  CHECK(tensor(a, c).cols() == 6);
}

TEST_CASE("direct_sum_zero pads with zeros") {
  auto gen = testutil::rng(12);
  const DensityOperator rho = testutil::random_density(gen, 2);

  const Matrix same = direct_sum_zero(rho, 0);
  CHECK((same - rho.matrix()).norm() == 0.0);

  const Matrix padded = direct_sum_zero(rho, 1);
  CHECK(padded.rows() == 3);
  CHECK((padded.topLeftCorner(2, 2) - rho.matrix()).norm() == 0.0);
  CHECK(padded.row(2).norm() == 0.0);
  CHECK(padded.col(2).norm() == 0.0);

  const Matrix wide = direct_sum_zero(make_density(diag2(0.5, 0.5)), 2);
  CHECK(wide.rows() == 4);
  CHECK(std::abs(wide.trace() - Complex(1.0)) == 0.0);
  CHECK(hermitian_deviation(wide) == 0.0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(wide, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() >= 0.0);

  CHECK_THROWS_AS(direct_sum_zero(rho, -1), Error);
}

TEST_CASE("mean_value is the real trace pairing") {
  const DensityOperator rho = make_density(diag2(0.25, 0.75));
  CHECK(mean_value(rho, diag2(1.0, 0.0)) == 0.25);

  auto gen = testutil::rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix g = testutil::random_matrix(gen, 3, 3);
    const Matrix w = (g + g.adjoint()) / 2.0;
    const DensityOperator state = testutil::random_density(gen, 3);
    const Complex tr = (state.matrix() * w).trace();
    CHECK(std::abs(tr.imag()) < 1e-12);
    CHECK(mean_value(state, w) == tr.real());
  }

  Matrix skew(2, 2);
  skew << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_WITH_AS(mean_value(rho, skew), doctest::Contains("NotHermitian"), Error);
  CHECK_THROWS_WITH_AS(mean_value(rho, Matrix::Identity(3, 3)),
                       doctest::Contains("DimMismatch"), Error);
}

TEST_CASE("hermitian_deviation measures the adjoint gap") {
  CHECK(hermitian_deviation(Matrix::Identity(3, 3)) == 0.0);
  Matrix m(2, 2);
  m << 0.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 0.0;
  CHECK(hermitian_deviation(m) == 2.0);
  CHECK_THROWS_AS(hermitian_deviation(Matrix::Zero(2, 3)), Error);
}
