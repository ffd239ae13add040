#pragma once

#include <string>

#include "framecoh/coherence.hpp"

namespace framecoh {

// State JSON: {"dim": d, "matrix": [[{"re": r, "im": i}, ...], ...]}
// Frame JSON: {"dim": d, "vectors": [[{"re": r, "im": i}, ...], ...]}
// Parsing rejects malformed documents (IoError) and invariant violations
// (the corresponding validation error).
DensityOperator parse_state_json(const std::string& text);
Frame parse_frame_json(const std::string& text);
std::string state_to_json(const DensityOperator& rho);
std::string frame_to_json(const Frame& f);

// {"value": v, "prefactor": p, "dim": d, "n": n}
std::string report_to_json(const CoherenceReport& r);

DensityOperator load_state_file(const std::string& path);
Frame load_frame_file(const std::string& path);

// 12 significant digits with trailing zeros kept; exact zero prints "0".
std::string format_value(double v);
// Shortest representation at up to 12 significant digits (CSV cells).
std::string format_csv(double v);

}  // namespace framecoh
