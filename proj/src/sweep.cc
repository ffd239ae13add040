#include "framecoh/sweep.hpp"

#include <string>

#include "framecoh/catalog.hpp"
#include "framecoh/coherence.hpp"
#include "framecoh/io.hpp"

namespace framecoh {

namespace {

void check_range(int n_min, int n_max) {
  if (n_min < 3) fail(ErrorCode::BadCount, "polygon sweeps start at n = 3");
  if (n_max < n_min) fail(ErrorCode::BadParameter, "empty sweep range");
}

}  // namespace

void sweep_polygon(const DensityOperator& rho, int n_min, int n_max, std::ostream& out) {
  if (rho.dim() != 2) fail(ErrorCode::DimMismatch, "polygon sweep needs a qubit state");
  check_range(n_min, n_max);
  out << "n,coherence\n";
  for (int n = n_min; n <= n_max; ++n) {
    const double c = frame_coherence(polygonal_frame(n), rho).value;
    out << n << ',' << format_csv(c) << '\n';
  }
}

void sweep_composite(const DensityOperator& rho, int n_min, int n_max, std::ostream& out) {
  if (rho.dim() != 4) fail(ErrorCode::DimMismatch, "composite sweep needs a two-qubit state");
  check_range(n_min, n_max);
  out << "n,coherence\n";
  for (int n = n_min; n <= n_max; ++n) {
    const Frame part = polygonal_frame(n);
    const double c = composite_coherence(part, part, rho).value;
    out << n << ',' << format_csv(c) << '\n';
  }
}

void sweep_interpolate(const Frame& a, const Frame& b, const DensityOperator& rho,
                       int steps, std::ostream& out) {
  if (steps < 2) fail(ErrorCode::BadParameter, "need at least two interpolation steps");
  out << "t,coherence\n";
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    const double c = frame_coherence(interpolate(a, b, t), rho).value;
    out << format_csv(t) << ',' << format_csv(c) << '\n';
  }
}

void sweep_surface(const Frame& f, double theta, int steps, std::ostream& out) {
  if (f.dim() != 2) fail(ErrorCode::DimMismatch, "surface sweep needs a qubit frame");
  if (steps < 2) fail(ErrorCode::BadParameter, "need at least a 2x2 surface grid");
  out << "a,b,coherence\n";
  for (int i = 0; i < steps; ++i) {
    const double a = static_cast<double>(i) / static_cast<double>(steps - 1);
    for (int j = 0; j < steps; ++j) {
      const double b = -0.5 + static_cast<double>(j) / static_cast<double>(steps - 1);
      if (b * b > a * (1.0 - a) + 1e-15) continue;
      const double c = frame_coherence(f, qubit_state(a, b, theta)).value;
      out << format_csv(a) << ',' << format_csv(b) << ',' << format_csv(c) << '\n';
    }
  }
}

}  // namespace framecoh
