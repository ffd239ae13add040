#include "framecoh/coherence.hpp"

#include <cmath>
#include <string>

namespace framecoh {

namespace {

// Shared core: off-diagonal magnitudes of <phi_j|rho|phi_k> and their sum,
// accumulated in extended precision in row order.
CoherenceReport report_from(const Frame& f, const DensityOperator& rho, double prefactor) {
  if (rho.dim() != f.dim())
    fail(ErrorCode::DimMismatch, "state dimension " + std::to_string(rho.dim()) +
                                     " does not match frame dimension " +
                                     std::to_string(f.dim()));
  const Matrix t = f.synthesis();
  const Matrix b = t.adjoint() * rho.matrix() * t;
  const Index n = f.size();
  RealMatrix offdiag = RealMatrix::Zero(n, n);
  long double acc = 0.0L;
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) {
      if (j == k) continue;
      const double mag = std::abs(b(j, k));
      offdiag(j, k) = mag;
      acc += mag;
    }
  const double value = static_cast<double>(static_cast<long double>(prefactor) * acc);
  return CoherenceReport{value, prefactor, f.dim(), n, std::move(offdiag)};
}

}  // namespace

CoherenceReport basis_coherence(const Frame& b, const DensityOperator& rho) {
  if (!is_orthonormal_basis(b)) fail(ErrorCode::NotBasis, "frame is not an orthonormal basis");
  return report_from(b, rho, 1.0);
}

CoherenceReport frame_coherence(const Frame& f, const DensityOperator& rho) {
  f.require_tight("frame_coherence");
  const double prefactor = static_cast<double>(f.dim()) / static_cast<double>(f.size());
  return report_from(f, rho, prefactor);
}

ObservableSet observables(const Frame& f) {
  const Index n = f.size();
  ObservableSet set;
  set.dim = f.dim();
  set.operators.assign(static_cast<size_t>(n), std::vector<Matrix>());
  const Complex half_i(0.0, 0.5);
  for (Index j = 0; j < n; ++j) {
    auto& row = set.operators[static_cast<size_t>(j)];
    row.reserve(static_cast<size_t>(n));
    for (Index k = 0; k < n; ++k) {
      const Matrix jk = f[j] * f[k].adjoint();
      if (j == k) {
        row.push_back(jk);
      } else if (j > k) {
        row.push_back((jk + jk.adjoint()) / 2.0);
      } else {
        row.push_back(half_i * (jk - jk.adjoint()));
      }
    }
  }
  return set;
}

Complex matrix_element_from_means(double mean_kj, double mean_jk) {
  return Complex(mean_kj, mean_jk);
}

double coherence_from_means(const Frame& f, const DensityOperator& rho) {
  f.require_tight("coherence_from_means");
  const ObservableSet w = observables(f);
  const Index n = f.size();
  long double acc = 0.0L;
  for (Index j = 0; j < n; ++j)
    for (Index k = j + 1; k < n; ++k) {
      const double mean_kj =
          mean_value(rho, w.operators[static_cast<size_t>(k)][static_cast<size_t>(j)]);
      const double mean_jk =
          mean_value(rho, w.operators[static_cast<size_t>(j)][static_cast<size_t>(k)]);
      acc += std::abs(matrix_element_from_means(mean_kj, mean_jk));
    }
  const long double prefactor =
      2.0L * static_cast<long double>(f.dim()) / static_cast<long double>(n);
  return static_cast<double>(prefactor * acc);
}

CoherenceReport composite_coherence(const Frame& fa, const Frame& fb,
                                    const DensityOperator& rho) {
  if (rho.dim() != fa.dim() * fb.dim())
    fail(ErrorCode::DimMismatch, "state does not live on the product space");
  return frame_coherence(tensor_frame(fa, fb), rho);
}

PropertiesReport coherence_properties_check(const Frame& f,
                                            const std::vector<DensityOperator>& states,
                                            const std::vector<double>& weights,
                                            const Matrix& u) {
  if (states.empty() || states.size() != weights.size())
    fail(ErrorCode::BadWeights, "need matching nonempty state and weight lists");
  double wsum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) fail(ErrorCode::BadWeights, "negative weight");
    wsum += w;
  }
  if (!(std::abs(wsum - 1.0) <= 1e-12)) fail(ErrorCode::BadWeights, "weights do not sum to 1");

  Matrix mix = Matrix::Zero(f.dim(), f.dim());
  for (size_t m = 0; m < states.size(); ++m) mix += weights[m] * states[m].matrix();
  const DensityOperator mixture = make_density(mix);

  const Frame uf = apply_unitary(u, f);
  PropertiesReport rep{};
  rep.min_value = frame_coherence(f, mixture).value;
  double weighted_sum = 0.0;
  double max_gap = 0.0;
  auto probe = [&](const DensityOperator& rho) {
    const double c = frame_coherence(f, rho).value;
    const DensityOperator rotated = make_density(u * rho.matrix() * u.adjoint());
    const double c_rot = frame_coherence(uf, rotated).value;
    max_gap = std::max(max_gap, std::abs(c_rot - c));
    rep.min_value = std::min(rep.min_value, c);
    return c;
  };
  for (size_t m = 0; m < states.size(); ++m) weighted_sum += weights[m] * probe(states[m]);
  const double mix_value = probe(mixture);
  rep.convexity_slack = weighted_sum - mix_value;
  rep.invariance_gap = max_gap;
  rep.pass = rep.min_value >= 0.0 && rep.convexity_slack >= -1e-11 && rep.invariance_gap < 1e-11;
  return rep;
}

}  // namespace framecoh
