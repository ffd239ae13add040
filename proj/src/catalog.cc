#include "framecoh/catalog.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "framecoh/io.hpp"

namespace framecoh {

namespace {

long long parse_integer(const std::string& text, const std::string& what) {
  size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::BadParameter, what + ": cannot parse \"" + text + "\"");
  }
  if (pos != text.size())
    fail(ErrorCode::BadParameter, what + ": trailing characters in \"" + text + "\"");
  return value;
}

double parse_real(const std::string& text, const std::string& what) {
  size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    fail(ErrorCode::BadParameter, what + ": cannot parse \"" + text + "\"");
  }
  if (pos != text.size())
    fail(ErrorCode::BadParameter, what + ": trailing characters in \"" + text + "\"");
  return value;
}

DensityOperator pure_state(const Vector& v) { return make_density(v * v.adjoint()); }

DensityOperator bell_state(int which) {
  const double r = 1.0 / std::sqrt(2.0);
  Vector v = Vector::Zero(4);
  switch (which) {
    case 1: v[0] = r; v[3] = r; break;
    case 2: v[0] = r; v[3] = -r; break;
    case 3: v[1] = r; v[2] = r; break;
    default: v[1] = Complex(0.0, r); v[2] = Complex(0.0, -r); break;
  }
  return pure_state(v);
}

Frame split3_frame() {
  Vector e0 = Vector::Zero(3), e1 = Vector::Zero(3);
  e0[0] = 1.0;
  e1[1] = 1.0;
  Vector f0 = Vector::Zero(3), f1 = Vector::Zero(3);
  f0[2] = 0.5;
  f1[2] = std::sqrt(3.0) / 2.0;
  return split_frame(Frame(3, {e0, e1}), Frame(3, {f0, f1}));
}

std::vector<std::string> split_fields(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

DensityOperator qubit_state(double a, double b, double theta) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(theta))
    fail(ErrorCode::InvalidParameters, "qubit parameters must be finite");
  if (!(a >= 0.0 && a <= 1.0))
    fail(ErrorCode::InvalidParameters, "population a must lie in [0,1]");
  if (!(b * b <= a * (1.0 - a) + 1e-12))
    fail(ErrorCode::InvalidParameters, "need |b| <= sqrt(a(1-a))");
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b * std::polar(1.0, theta);
  m(1, 0) = b * std::polar(1.0, -theta);
  m(1, 1) = 1.0 - a;
  return make_density(m);
}

DensityOperator builtin_state(const std::string& name) {
  if (name == "rho0") return make_density((Matrix(2, 2) << 1, 0, 0, 0).finished());
  if (name == "rho1") return make_density((Matrix(2, 2) << 0.5, 0, 0, 0.5).finished());
  if (name == "rho2") return make_density((Matrix(2, 2) << 0.25, 0, 0, 0.75).finished());
  if (name == "rho3")
    return make_density((Matrix(2, 2) << 0.5, -0.25, -0.25, 0.5).finished());
  if (name == "qutrit136") {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = 1.0 / 6.0;
    m(1, 1) = 2.0 / 6.0;
    m(2, 2) = 3.0 / 6.0;
    return make_density(m);
  }
  if (name == "bell1") return bell_state(1);
  if (name == "bell2") return bell_state(2);
  if (name == "bell3") return bell_state(3);
  if (name == "bell4") return bell_state(4);
  if (name.rfind("qubit:", 0) == 0) {
    const auto parts = split_fields(name.substr(6), ',');
    if (parts.size() != 3)
      fail(ErrorCode::BadParameter, "qubit state needs \"qubit:a,b,theta\"");
    return qubit_state(parse_real(parts[0], "qubit a"), parse_real(parts[1], "qubit b"),
                       parse_real(parts[2], "qubit theta"));
  }
  fail(ErrorCode::UnknownName, "no builtin state named \"" + name + "\"");
}

Frame builtin_frame(const std::string& spec) {
  if (spec == "triangle") return polygonal_frame(3);
  if (spec == "tetra") return tetrahedral_frame();
  if (spec == "ico") return icosahedral_frame();
  if (spec == "split3") return split3_frame();
  if (spec.rfind("canonical:", 0) == 0)
    return canonical_basis(parse_integer(spec.substr(10), "canonical dimension"));
  if (spec.rfind("fourier:", 0) == 0)
    return fourier_basis(parse_integer(spec.substr(8), "fourier dimension"));
  if (spec.rfind("polygon:", 0) == 0)
    return polygonal_frame(parse_integer(spec.substr(8), "polygon count"));
  if (spec.rfind("rotated:", 0) == 0)
    return rotated_qubit_basis(parse_real(spec.substr(8), "rotation angle"));
  if (spec.rfind("coherent:", 0) == 0)
    return coherent_frame(parse_integer(spec.substr(9), "coherent dimension"));
  if (spec.rfind("union:", 0) == 0) {
    const std::string rest = spec.substr(6);
    const size_t plus = rest.find('+');
    if (plus == std::string::npos)
      fail(ErrorCode::BadParameter, "union spec needs \"union:A+B\"");
    const double w = 1.0 / std::sqrt(2.0);
    return scaled_union(builtin_frame(rest.substr(0, plus)),
                        builtin_frame(rest.substr(plus + 1)), w, w);
  }
  fail(ErrorCode::UnknownName, "no builtin frame matching \"" + spec + "\"");
}

DensityOperator resolve_state(const std::string& spec) {
  try {
    return builtin_state(spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownName) throw;
  }
  return load_state_file(spec);
}

Frame resolve_frame(const std::string& spec) {
  try {
    return builtin_frame(spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownName) throw;
  }
  return load_frame_file(spec);
}

}  // namespace framecoh
