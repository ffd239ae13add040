#include <clocale>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "framecoh/catalog.hpp"
#include "framecoh/io.hpp"
#include "framecoh/naimark.hpp"
#include "framecoh/sweep.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) framecoh::fail(framecoh::ErrorCode::IoError, "cannot open \"" + out_path + "\"");
  out << text;
  if (!out.good())
    framecoh::fail(framecoh::ErrorCode::IoError, "cannot write \"" + out_path + "\"");
}

int run_check(const std::string& frame_spec) {
  const framecoh::Frame f = framecoh::resolve_frame(frame_spec);
  const framecoh::TightnessReport r = verify_tight(f);
  std::cout << "residual: " << framecoh::format_csv(r.residual) << '\n'
            << "verdict: " << (r.tight ? "tight" : "not tight") << '\n';
  return r.tight ? 0 : 1;
}

int run_coherence(const std::string& frame_spec, const std::string& state_spec,
                  const std::string& format, const std::string& out_path) {
  const framecoh::Frame f = framecoh::resolve_frame(frame_spec);
  const framecoh::DensityOperator rho = framecoh::resolve_state(state_spec);
  const framecoh::CoherenceReport report = framecoh::is_orthonormal_basis(f)
                                               ? framecoh::basis_coherence(f, rho)
                                               : framecoh::frame_coherence(f, rho);
  if (format == "json")
    emit(framecoh::report_to_json(report) + "\n", out_path);
  else
    emit(framecoh::format_value(report.value) + "\n", out_path);
  return 0;
}

int run_naimark(const std::string& frame_spec, const std::string& state_spec) {
  const framecoh::Frame f = framecoh::resolve_frame(frame_spec);
  const framecoh::DensityOperator rho = framecoh::resolve_state(state_spec);
  const framecoh::NaimarkExtension ext = framecoh::naimark_extend(f);
  const framecoh::ExtensionReport rep = framecoh::verify_extension(ext, rho);
  std::cout << "extension: dim " << f.dim() << " -> " << f.size() << '\n'
            << "max element error: " << framecoh::format_csv(rep.max_element_error) << '\n'
            << "max probability error: " << framecoh::format_csv(rep.max_probability_error)
            << '\n'
            << "coherence direct: " << framecoh::format_csv(rep.coherence_direct) << '\n'
            << "coherence extended: " << framecoh::format_csv(rep.coherence_extended) << '\n'
            << "verdict: " << (rep.pass ? "ok" : "violated") << '\n';
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"finite tight frames and frame-dependent coherence"};
  app.require_subcommand(1);

  std::string frame_spec;
  std::string state_spec;
  std::string format = "text";
  std::string out_path;
  std::string family;
  std::vector<std::string> endpoint_specs;
  int n_min = 3;
  int n_max = -1;
  int steps = -1;
  double theta = 0.0;

  CLI::App* check = app.add_subcommand("check", "verify tightness of a frame");
  check->add_option("--frame", frame_spec, "frame specifier or JSON file")->required();

  CLI::App* coherence = app.add_subcommand("coherence", "coherence of a state in a frame");
  coherence->add_option("--frame", frame_spec, "frame specifier or JSON file")->required();
  coherence->add_option("--state", state_spec, "state name or JSON file")->required();
  coherence->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  coherence->add_option("--out", out_path, "write output to a file");

  CLI::App* sweep = app.add_subcommand("sweep", "emit CSV coherence sweeps");
  sweep->add_option("family", family, "polygon, composite, or surface")
      ->required()
      ->check(CLI::IsMember({"polygon", "composite", "surface"}));
  sweep->add_option("--state", state_spec, "state name or JSON file");
  sweep->add_option("--frame", frame_spec, "qubit frame for the surface family");
  sweep->add_option("--n-min", n_min, "first polygon size");
  sweep->add_option("--n-max", n_max, "last polygon size");
  sweep->add_option("--steps", steps, "surface grid points per axis");
  sweep->add_option("--theta", theta, "off-diagonal phase for the surface family");
  sweep->add_option("--out", out_path, "write CSV to a file");

  CLI::App* inter = app.add_subcommand("interpolate", "coherence along a basis deformation");
  inter->add_option("--frame", endpoint_specs, "endpoint basis (give exactly twice)")
      ->required()
      ->expected(1, 2);
  inter->add_option("--state", state_spec, "state name or JSON file")->required();
  inter->add_option("--steps", steps, "grid points on [0,1]");
  inter->add_option("--out", out_path, "write CSV to a file");

  CLI::App* naimark = app.add_subcommand("naimark", "verify the Naimark extension identities");
  naimark->add_option("--frame", frame_spec, "frame specifier or JSON file")->required();
  naimark->add_option("--state", state_spec, "state name or JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(frame_spec);
    if (coherence->parsed()) return run_coherence(frame_spec, state_spec, format, out_path);
    if (sweep->parsed()) {
      std::ostringstream csv;
      if (family == "surface") {
        if (frame_spec.empty()) frame_spec = "triangle";
        framecoh::sweep_surface(framecoh::resolve_frame(frame_spec), theta,
                                steps < 0 ? 51 : steps, csv);
      } else {
        if (state_spec.empty()) {
          std::cerr << "error: sweep " << family << " needs --state\n";
          return 2;
        }
        const framecoh::DensityOperator rho = framecoh::resolve_state(state_spec);
        const int last = n_max >= 0 ? n_max : (family == "polygon" ? 50 : 30);
        if (family == "polygon")
          framecoh::sweep_polygon(rho, n_min, last, csv);
        else
          framecoh::sweep_composite(rho, n_min, last, csv);
      }
      emit(csv.str(), out_path);
      return 0;
    }
    if (inter->parsed()) {
      if (endpoint_specs.size() != 2) {
        std::cerr << "error: interpolate needs --frame given exactly twice\n";
        return 2;
      }
      std::ostringstream csv;
      framecoh::sweep_interpolate(framecoh::resolve_frame(endpoint_specs[0]),
                                  framecoh::resolve_frame(endpoint_specs[1]),
                                  framecoh::resolve_state(state_spec),
                                  steps < 0 ? 101 : steps, csv);
      emit(csv.str(), out_path);
      return 0;
    }
    if (naimark->parsed()) return run_naimark(frame_spec, state_spec);
  } catch (const framecoh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
