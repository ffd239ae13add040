#pragma once

#include <ostream>

#include "framecoh/frame.hpp"

namespace framecoh {

// CSV emitters; rows ascending, deterministic bytes for fixed inputs.

// header "n,coherence": C of polygonal_frame(n) for a qubit state.
void sweep_polygon(const DensityOperator& rho, int n_min, int n_max, std::ostream& out);

// header "n,coherence": C of polygonal(n) x polygonal(n) for a two-qubit state.
void sweep_composite(const DensityOperator& rho, int n_min, int n_max, std::ostream& out);

// header "t,coherence": C of interpolate(a, b, t) on a uniform t grid.
void sweep_interpolate(const Frame& a, const Frame& b, const DensityOperator& rho,
                       int steps, std::ostream& out);

// header "a,b,coherence": C of f over the qubit-state (a, b) domain at fixed
// theta; grid points outside |b| <= sqrt(a(1-a)) are skipped.
void sweep_surface(const Frame& f, double theta, int steps, std::ostream& out);

}  // namespace framecoh
