#include <cmath>
#include <numbers>

#include "doctest.h"
#include "framecoh/catalog.hpp"
#include "framecoh/coherence.hpp"
#include "test_util.hpp"

using namespace framecoh;

namespace {

constexpr double kPi = std::numbers::pi;

DensityOperator qutrit136() { return builtin_state("qutrit136"); }

// Polygonal-frame coherence of the maximally mixed qubit, reduced by hand:
// matrix elements are cos(2*pi*(j-k)/n)/n, so the pair sum collapses to a
// single sum over index differences.
double mixed_polygon_oracle(Index n) {
  double sum = 0.0;
  for (Index r = 1; r < n; ++r)
    sum += std::abs(std::cos(2.0 * kPi * static_cast<double>(r) / static_cast<double>(n)));
  return 2.0 * sum / static_cast<double>(n);
}

// Same reduction for rho0 = diag(1,0): elements factor through the first
// component, leaving (4/n^2)((sum |cos|)^2 - sum cos^2).
double ground_polygon_oracle(Index n) {
  double s1 = 0.0, s2 = 0.0;
  for (Index k = 0; k < n; ++k) {
    const double c = std::cos(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
    s1 += std::abs(c);
    s2 += c * c;
  }
  return 4.0 / (static_cast<double>(n) * static_cast<double>(n)) * (s1 * s1 - s2);
}

}  // namespace

TEST_CASE("basis_coherence golden values") {
  CHECK(basis_coherence(canonical_basis(3), qutrit136()).value == 0.0);

  const double complementary = basis_coherence(fourier_basis(3), qutrit136()).value;
  CHECK(std::abs(complementary - 1.0 / std::sqrt(3.0)) < 1e-12);

  CHECK_THROWS_WITH_AS(basis_coherence(polygonal_frame(3), builtin_state("rho0")),
                       doctest::Contains("NotBasis"), Error);
}

TEST_CASE("rotated-basis coherence formulas") {
  for (double lambda : {0.0, kPi / 8.0, kPi / 4.0}) {
    const Frame b = rotated_qubit_basis(lambda);
    const double s = std::abs(std::sin(2.0 * lambda));
    const double c = std::abs(std::cos(2.0 * lambda));
    CHECK(std::abs(basis_coherence(b, builtin_state("rho0")).value - s) < 1e-12);
    CHECK(std::abs(basis_coherence(b, builtin_state("rho2")).value - 0.5 * s) < 1e-12);
    CHECK(std::abs(basis_coherence(b, builtin_state("rho3")).value - 0.5 * c) < 1e-12);
  }
}

TEST_CASE("frame_coherence golden values") {
  CHECK(std::abs(frame_coherence(tetrahedral_frame(), qutrit136()).value - 0.75) < 1e-12);

  const double r = 1.0 / std::sqrt(2.0);
  const Frame u = scaled_union(canonical_basis(3), fourier_basis(3), r, r);
  CHECK(std::abs(frame_coherence(u, qutrit136()).value - 1.0103629710818447) < 1e-12);

  CHECK(std::abs(frame_coherence(icosahedral_frame(), qutrit136()).value -
                 1.1356294569165755) < 1e-12);

  CHECK(std::abs(frame_coherence(polygonal_frame(3), builtin_state("rho0")).value -
                 10.0 / 9.0) < 1e-12);
  CHECK(std::abs(frame_coherence(polygonal_frame(4), builtin_state("rho1")).value - 0.5) <
        1e-12);
}

TEST_CASE("split frame leaves block-diagonal states incoherent") {
  const Frame f = builtin_frame("split3");
  for (double alpha : {0.0, 0.25, 0.3, 0.5, 1.0}) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = alpha;
    m(1, 1) = 1.0 - alpha;
    CHECK(frame_coherence(f, make_density(m)).value <= 1e-13);
  }
}

TEST_CASE("frame_coherence report invariants") {
  auto gen = testutil::rng(31);
  const Frame f = testutil::random_tight_frame(gen, 3, 7);
  const DensityOperator rho = testutil::random_density(gen, 3);
  const CoherenceReport rep = frame_coherence(f, rho);

  CHECK(rep.dim == 3);
  CHECK(rep.n == 7);
  CHECK(rep.prefactor == 3.0 / 7.0);
  CHECK(rep.offdiag.diagonal().norm() == 0.0);
  CHECK((rep.offdiag - rep.offdiag.transpose()).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(std::abs(rep.value - rep.prefactor * rep.offdiag.sum()) < 1e-12);

  CHECK_THROWS_WITH_AS(frame_coherence(Frame(2, {f[0].head(2)}), rho),
                       doctest::Contains("NotTight"), Error);
  CHECK_THROWS_WITH_AS(frame_coherence(f, builtin_state("rho0")),
                       doctest::Contains("DimMismatch"), Error);
}

TEST_CASE("frame_coherence reduces to basis_coherence on bases") {
  auto gen = testutil::rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const Frame b = testutil::random_basis(gen, 3);
    const DensityOperator rho = testutil::random_density(gen, 3);
    CHECK(std::abs(frame_coherence(b, rho).value - basis_coherence(b, rho).value) < 1e-13);
  }
}

TEST_CASE("observables structure") {
  const ObservableSet w = observables(canonical_basis(2));
  Matrix sigma_x(2, 2), minus_sigma_y(2, 2);
  sigma_x << 0, 1, 1, 0;
  minus_sigma_y << 0, Complex(0, 1), Complex(0, -1), 0;
  CHECK((w.operators[1][0] - sigma_x / 2.0).norm() == 0.0);
  CHECK((w.operators[0][1] - minus_sigma_y / 2.0).norm() == 0.0);
  CHECK((w.operators[0][0] - (Matrix(2, 2) << 1, 0, 0, 0).finished()).norm() == 0.0);

  auto gen = testutil::rng(33);
  const Frame f = testutil::random_tight_frame(gen, 2, 5);
  const ObservableSet wf = observables(f);
  for (Index j = 0; j < 5; ++j)
    for (Index k = 0; k < 5; ++k)
      CHECK(hermitian_deviation(
                wf.operators[static_cast<size_t>(j)][static_cast<size_t>(k)]) <= 1e-12);

  const Frame padded(2, {f[0], Vector::Zero(2), f[1]});
  const ObservableSet wp = observables(padded);
  CHECK(wp.operators[1][1].norm() == 0.0);
  CHECK(wp.operators[0][1].norm() == 0.0);
  CHECK(wp.operators[1][2].norm() == 0.0);
}

TEST_CASE("matrix elements reconstructed from observable means") {
  CHECK(matrix_element_from_means(0.3, -0.1) == Complex(0.3, -0.1));
  CHECK(std::abs(std::abs(matrix_element_from_means(0.3, -0.1)) - std::sqrt(0.10)) < 1e-15);

  auto gen = testutil::rng(34);
  for (int trial = 0; trial < 5; ++trial) {
    const Frame f = testutil::random_tight_frame(gen, 3, 5);
    const DensityOperator rho = testutil::random_density(gen, 3);
    const ObservableSet w = observables(f);
    const Matrix m = frame_matrix(f, rho.matrix());
    for (Index j = 0; j < 5; ++j)
      for (Index k = j + 1; k < 5; ++k) {
        const Complex rebuilt = matrix_element_from_means(
            mean_value(rho, w.operators[static_cast<size_t>(k)][static_cast<size_t>(j)]),
            mean_value(rho, w.operators[static_cast<size_t>(j)][static_cast<size_t>(k)]));
        CHECK(std::abs(rebuilt - m(j, k)) < 1e-12);
      }
  }

  const ObservableSet wb = observables(canonical_basis(2));
  const DensityOperator mixed = builtin_state("rho1");
  CHECK(std::abs(mean_value(mixed, wb.operators[1][0])) == 0.0);
  CHECK(std::abs(mean_value(mixed, wb.operators[0][1])) == 0.0);
}

TEST_CASE("coherence_from_means equals frame_coherence") {
  CHECK(std::abs(coherence_from_means(tetrahedral_frame(), qutrit136()) - 0.75) < 1e-11);
  CHECK(coherence_from_means(canonical_basis(3), qutrit136()) == 0.0);

  auto gen = testutil::rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 2 + static_cast<Index>(trial % 2);
    const Index n = d + 1 + static_cast<Index>(trial % 5);
    const Frame f = testutil::random_tight_frame(gen, d, n);
    const DensityOperator rho = testutil::random_density(gen, d);
    CHECK(std::abs(coherence_from_means(f, rho) - frame_coherence(f, rho).value) < 1e-11);
  }

  const DensityOperator qubit = builtin_state("rho2");
  CHECK(std::abs(coherence_from_means(polygonal_frame(5), qubit) -
                 frame_coherence(polygonal_frame(5), qubit).value) < 1e-11);

  CHECK_THROWS_WITH_AS(coherence_from_means(Frame(2, {Vector::Zero(2)}), qubit),
                       doctest::Contains("NotTight"), Error);
}

TEST_CASE("composite_coherence") {
  const Frame part = polygonal_frame(3);
  const DensityOperator bell = builtin_state("bell1");

  const double via_tensor = frame_coherence(tensor_frame(part, part), bell).value;
  const double composite = composite_coherence(part, part, bell).value;
  CHECK(composite == via_tensor);

  // Brute-force evaluation of the quadruple sum over frame labels.
  const Index n = 3;
  long double acc = 0.0L;
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k)
      for (Index m = 0; m < n; ++m)
        for (Index l = 0; l < n; ++l) {
          if (j == m && k == l) continue;
          Vector left(4), right(4);
          for (Index a = 0; a < 2; ++a)
            for (Index b = 0; b < 2; ++b) {
              left[2 * a + b] = part[j][a] * part[k][b];
              right[2 * a + b] = part[m][a] * part[l][b];
            }
          acc += std::abs(left.dot(bell.matrix() * right));
        }
  const double oracle = static_cast<double>(4.0L / static_cast<long double>(n * n) * acc);
  CHECK(std::abs(composite - oracle) < 1e-12);
  CHECK(std::abs(composite - 28.0 / 9.0) < 1e-12);

  // Reflecting one polygon label negates the relative angle, so the two
  // symmetric Bell states must agree for every n.
  for (Index size : {3, 4, 5, 8}) {
    const Frame p = polygonal_frame(size);
    CHECK(std::abs(composite_coherence(p, p, builtin_state("bell1")).value -
                   composite_coherence(p, p, builtin_state("bell2")).value) < 1e-11);
    CHECK(std::abs(composite_coherence(p, p, builtin_state("bell3")).value -
                   composite_coherence(p, p, builtin_state("bell4")).value) < 1e-11);
  }

  const CoherenceReport canonical_report =
      composite_coherence(canonical_basis(2), canonical_basis(2), bell);
  CHECK(std::abs(canonical_report.value - 1.0) < 1e-15);
  for (Index j = 0; j < 4; ++j)
    for (Index k = 0; k < 4; ++k) {
      const bool corner = (j == 0 && k == 3) || (j == 3 && k == 0);
      if (corner)
        CHECK(std::abs(canonical_report.offdiag(j, k) - 0.5) < 1e-15);
      else
        CHECK(canonical_report.offdiag(j, k) == 0.0);
    }

  CHECK_THROWS_WITH_AS(composite_coherence(part, part, builtin_state("rho0")),
                       doctest::Contains("DimMismatch"), Error);
}

TEST_CASE("interpolation endpoints and cross term") {
  auto gen = testutil::rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 2 + static_cast<Index>(trial % 2);
    const Frame a = testutil::random_basis(gen, d);
    const Frame b = testutil::random_basis(gen, d);
    const DensityOperator rho = testutil::random_density(gen, d);

    const double ca = basis_coherence(a, rho).value;
    const double cb = basis_coherence(b, rho).value;
    CHECK(std::abs(ca - 2.0 * frame_coherence(interpolate(a, b, 0.0), rho).value) < 1e-12);
    CHECK(std::abs(cb - 2.0 * frame_coherence(interpolate(a, b, 1.0), rho).value) < 1e-12);

    // Midpoint decomposition of the deformation coherence into the two basis
    // coherences plus a cross sum over all label pairs.
    const double t = 0.3;
    double cross = 0.0;
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        cross += std::abs(a[j].dot(rho.matrix() * b[k]));
    const double predicted =
        0.5 * ((1.0 - t) * ca + t * cb + 2.0 * std::sqrt(t * (1.0 - t)) * cross);
    CHECK(std::abs(frame_coherence(interpolate(a, b, t), rho).value - predicted) < 1e-12);
  }
}

TEST_CASE("coherence_properties_check") {
  auto gen = testutil::rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const Frame f = testutil::random_tight_frame(gen, 2, 4 + trial % 3);
    const std::vector<DensityOperator> states{testutil::random_density(gen, 2),
                                              testutil::random_density(gen, 2)};
    const Matrix u = testutil::random_unitary(gen, 2);
    const PropertiesReport rep = coherence_properties_check(f, states, {0.4, 0.6}, u);
    CHECK(rep.pass);
    CHECK(rep.min_value >= 0.0);
    CHECK(rep.convexity_slack >= -1e-11);
    CHECK(rep.invariance_gap < 1e-11);
  }

  const PropertiesReport single = coherence_properties_check(
      tetrahedral_frame(), {qutrit136()}, {1.0}, Matrix::Identity(3, 3));
  CHECK(single.pass);
  CHECK(std::abs(single.convexity_slack) < 1e-13);

  CHECK_THROWS_WITH_AS(
      coherence_properties_check(tetrahedral_frame(), {qutrit136()}, {0.5},
                                 Matrix::Identity(3, 3)),
      doctest::Contains("BadWeights"), Error);
}

TEST_CASE("large-n polygon trend") {
  for (const char* name : {"rho0", "rho1", "rho2", "rho3"}) {
    const DensityOperator rho = builtin_state(name);
    const double c200 = frame_coherence(polygonal_frame(200), rho).value;
    const double c400 = frame_coherence(polygonal_frame(400), rho).value;
    CHECK(std::abs(c200 - c400) < 1e-2);
  }

  const double mixed200 = frame_coherence(polygonal_frame(200), builtin_state("rho1")).value;
  CHECK(std::abs(mixed200 - mixed_polygon_oracle(200)) < 1e-12);
  CHECK(std::abs(mixed200 - 4.0 / kPi) < 0.011);

  const double ground200 = frame_coherence(polygonal_frame(200), builtin_state("rho0")).value;
  CHECK(std::abs(ground200 - ground_polygon_oracle(200)) < 1e-12);
  CHECK(std::abs(ground200 - 16.0 / (kPi * kPi)) < 0.02);
}
