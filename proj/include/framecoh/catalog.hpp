#pragma once

#include <string>

#include "framecoh/coherence.hpp"
#include "framecoh/coherent.hpp"

namespace framecoh {

// Named states: rho0, rho1, rho2, rho3, qutrit136, bell1..bell4, and the
// parametric form "qubit:a,b,theta".
DensityOperator builtin_state(const std::string& name);

// Frame specifiers: canonical:D, fourier:D, polygon:N, triangle, tetra, ico,
// rotated:LAMBDA, coherent:D, split3, union:A+B.
Frame builtin_frame(const std::string& spec);

// [[a, b e^{i theta}], [b e^{-i theta}, 1-a]] with |b| <= sqrt(a(1-a)).
DensityOperator qubit_state(double a, double b, double theta);

// Builtin name first, then JSON file path.
DensityOperator resolve_state(const std::string& spec);
Frame resolve_frame(const std::string& spec);

}  // namespace framecoh
