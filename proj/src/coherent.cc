#include "framecoh/coherent.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "framecoh/coherence.hpp"

namespace framecoh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kThetaCap = 10000;

}  // namespace

Index SymmetricIndexSpace::wrap(Index n) const {
  const Index d = dim();
  Index r = (n + s) % d;
  if (r < 0) r += d;
  return r - s;
}

SymmetricIndexSpace symmetric_space(Index d) {
  if (d < 1 || d % 2 == 0)
    fail(ErrorCode::BadDimension, "need odd positive dimension, got " + std::to_string(d));
  return SymmetricIndexSpace{(d - 1) / 2};
}

DiscreteGaussian discrete_gaussian(Index d, double kappa) {
  const SymmetricIndexSpace space = symmetric_space(d);
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    fail(ErrorCode::BadKappa, "kappa must be positive and finite");
  const double rate = kappa * kPi / static_cast<double>(d);
  Eigen::VectorXd values(d);
  for (Index n = -space.s; n <= space.s; ++n) {
    const double nd = static_cast<double>(n);
    double acc = std::exp(-rate * nd * nd);
    long m = 1;
    for (;; ++m) {
      if (m > kThetaCap)
        fail(ErrorCode::NoConvergence, "theta series did not converge for kappa " +
                                           std::to_string(kappa));
      const double up = nd + static_cast<double>(m) * static_cast<double>(d);
      const double down = nd - static_cast<double>(m) * static_cast<double>(d);
      const double term = std::exp(-rate * up * up) + std::exp(-rate * down * down);
      acc += term;
      if (term < 1e-17 * acc) break;
    }
    values[space.offset(n)] = acc;
  }
  return DiscreteGaussian{kappa, std::move(values)};
}

Matrix fourier_operator(const SymmetricIndexSpace& space) {
  const Index d = space.dim();
  const double root = std::sqrt(static_cast<double>(d));
  Matrix f(d, d);
  for (Index k = -space.s; k <= space.s; ++k)
    for (Index j = -space.s; j <= space.s; ++j) {
      const double phase = -2.0 * kPi * static_cast<double>(k) * static_cast<double>(j) /
                           static_cast<double>(d);
      f(space.offset(k), space.offset(j)) = std::polar(1.0 / root, phase);
    }
  return f;
}

Vector vacuum_state(Index d) {
  const DiscreteGaussian g = discrete_gaussian(d, 1.0);
  Vector v = g.values.cast<Complex>();
  v /= v.norm();
  return v;
}

Matrix displacement(const SymmetricIndexSpace& space, Index j, Index k) {
  if (j < -space.s || j > space.s || k < -space.s || k > space.s)
    fail(ErrorCode::IndexOutOfRange, "displacement labels must lie in -s..s");
  const Index d = space.dim();
  const double base = -kPi * static_cast<double>(k) * static_cast<double>(j) /
                      static_cast<double>(d);
  Matrix out = Matrix::Zero(d, d);
  for (Index n = -space.s; n <= space.s; ++n) {
    const double phase = base + 2.0 * kPi * static_cast<double>(k) * static_cast<double>(n) /
                                    static_cast<double>(d);
    out(space.offset(n), space.offset(space.wrap(n - j))) = std::polar(1.0, phase);
  }
  return out;
}

Frame coherent_frame(Index d) {
  const SymmetricIndexSpace space = symmetric_space(d);
  const Vector g = vacuum_state(d);
  const double root = std::sqrt(static_cast<double>(d));
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<size_t>(d * d));
  for (Index j = -space.s; j <= space.s; ++j)
    for (Index k = -space.s; k <= space.s; ++k)
      vecs.push_back(displacement(space, j, k) * g / root);
  return Frame(d, std::move(vecs));
}

FourierInvarianceReport fourier_invariance_check(Index d, const DensityOperator& rho) {
  const SymmetricIndexSpace space = symmetric_space(d);
  if (rho.dim() != d)
    fail(ErrorCode::DimMismatch, "state dimension does not match the index space");
  const Matrix f = fourier_operator(space);
  const Frame frame = coherent_frame(d);
  const CoherenceReport direct = frame_coherence(frame, rho);
  const DensityOperator transformed = make_density(f.adjoint() * rho.matrix() * f);
  const CoherenceReport moved = frame_coherence(frame, transformed);

  // F maps |j,k> to |k,-j>, so <j,k|F^dagger rho F|j',k'> is an off-diagonal
  // element of rho at permuted labels; resumming the direct table through that
  // permutation reproduces the transformed coherence without touching F.
  auto flat = [&](Index j, Index k) { return space.offset(j) * d + space.offset(k); };
  std::vector<Index> sigma(static_cast<size_t>(d * d));
  double residual = 0.0;
  for (Index j = -space.s; j <= space.s; ++j)
    for (Index k = -space.s; k <= space.s; ++k) {
      const Index from = flat(j, k);
      const Index to = flat(space.wrap(k), space.wrap(-j));
      sigma[static_cast<size_t>(from)] = to;
      residual = std::max(residual, (f * frame[from] - frame[to]).norm());
    }
  long double acc = 0.0L;
  for (Index a = 0; a < d * d; ++a)
    for (Index b = 0; b < d * d; ++b) {
      if (a == b) continue;
      acc += direct.offdiag(sigma[static_cast<size_t>(a)], sigma[static_cast<size_t>(b)]);
    }
  const double reindexed =
      static_cast<double>(static_cast<long double>(direct.prefactor) * acc);

  FourierInvarianceReport rep{};
  rep.coherence_rho = direct.value;
  rep.coherence_transformed = moved.value;
  rep.coherence_reindexed = reindexed;
  rep.invariance_gap = std::abs(rep.coherence_transformed - rep.coherence_rho);
  rep.second_check_gap = std::abs(rep.coherence_reindexed - rep.coherence_rho);
  rep.reindex_residual = residual;
  rep.pass = rep.invariance_gap < 1e-11 && rep.second_check_gap < 1e-11 &&
             rep.reindex_residual < 1e-11;
  return rep;
}

}  // namespace framecoh
