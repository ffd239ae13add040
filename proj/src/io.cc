#include "framecoh/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace framecoh {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(ErrorCode::IoError, "malformed JSON document");
  return doc;
}

Index read_dim(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
    fail(ErrorCode::IoError, "document needs an integer \"dim\" field");
  const long long d = doc["dim"].get<long long>();
  if (d < 1 || d > 1 << 16) fail(ErrorCode::IoError, "\"dim\" out of range");
  return static_cast<Index>(d);
}

Complex read_entry(const json& e) {
  if (!e.is_object() || !e.contains("re") || !e.contains("im") || !e["re"].is_number() ||
      !e["im"].is_number())
    fail(ErrorCode::IoError, "entries must be objects {\"re\": x, \"im\": y}");
  return Complex(e["re"].get<double>(), e["im"].get<double>());
}

Vector read_vector(const json& row, const char* what) {
  if (!row.is_array()) fail(ErrorCode::IoError, std::string(what) + " rows must be arrays");
  Vector v(static_cast<Index>(row.size()));
  Index i = 0;
  for (const json& e : row) v[i++] = read_entry(e);
  return v;
}

json entry_json(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::IoError, "cannot read \"" + path + "\"");
  return buf.str();
}

}  // namespace

DensityOperator parse_state_json(const std::string& text) {
  const json doc = parse_document(text);
  const Index d = read_dim(doc);
  if (!doc.contains("matrix") || !doc["matrix"].is_array() ||
      static_cast<Index>(doc["matrix"].size()) != d)
    fail(ErrorCode::IoError, "state needs a \"matrix\" array with dim rows");
  Matrix m(d, d);
  Index r = 0;
  for (const json& row : doc["matrix"]) {
    const Vector v = read_vector(row, "matrix");
    if (v.size() != d) fail(ErrorCode::IoError, "matrix rows must have dim entries");
    m.row(r++) = v.transpose();
  }
  return make_density(m);
}

Frame parse_frame_json(const std::string& text) {
  const json doc = parse_document(text);
  const Index d = read_dim(doc);
  if (!doc.contains("vectors") || !doc["vectors"].is_array())
    fail(ErrorCode::IoError, "frame needs a \"vectors\" array");
  std::vector<Vector> vecs;
  vecs.reserve(doc["vectors"].size());
  for (const json& row : doc["vectors"]) vecs.push_back(read_vector(row, "vectors"));
  return Frame(d, std::move(vecs));
}

std::string state_to_json(const DensityOperator& rho) {
  json rows = json::array();
  for (Index r = 0; r < rho.dim(); ++r) {
    json row = json::array();
    for (Index c = 0; c < rho.dim(); ++c) row.push_back(entry_json(rho.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", rho.dim()}, {"matrix", std::move(rows)}}.dump();
}

std::string frame_to_json(const Frame& f) {
  json rows = json::array();
  for (Index k = 0; k < f.size(); ++k) {
    json row = json::array();
    for (Index i = 0; i < f.dim(); ++i) row.push_back(entry_json(f[k][i]));
    rows.push_back(std::move(row));
  }
  return json{{"dim", f.dim()}, {"vectors", std::move(rows)}}.dump();
}

std::string report_to_json(const CoherenceReport& r) {
  return json{{"value", r.value}, {"prefactor", r.prefactor}, {"dim", r.dim}, {"n", r.n}}
      .dump();
}

DensityOperator load_state_file(const std::string& path) {
  return parse_state_json(read_file(path));
}

Frame load_frame_file(const std::string& path) { return parse_frame_json(read_file(path)); }

std::string format_value(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", v);
  return buf;
}

std::string format_csv(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace framecoh
