#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "framecoh/catalog.hpp"
#include "framecoh/io.hpp"
#include "framecoh/naimark.hpp"

namespace py = pybind11;
using namespace framecoh;

PYBIND11_MODULE(_framecoh, m) {
  m.doc() = "finite tight frames and frame-dependent coherence";

  py::register_exception<Error>(m, "Error");

  py::class_<DensityOperator>(m, "DensityOperator")
      .def_property_readonly("dim", &DensityOperator::dim)
      .def_property_readonly("matrix", &DensityOperator::matrix)
      .def("__repr__", [](const DensityOperator& rho) {
        return "DensityOperator(dim=" + std::to_string(rho.dim()) + ")";
      });

  py::class_<TightnessReport>(m, "TightnessReport")
      .def_readonly("residual", &TightnessReport::residual)
      .def_readonly("tight", &TightnessReport::tight);

  py::class_<Frame>(m, "Frame")
      .def(py::init<Index, std::vector<Vector>>(), py::arg("dim"), py::arg("vectors"))
      .def_property_readonly("dim", &Frame::dim)
      .def_property_readonly("size", &Frame::size)
      .def_property_readonly("vectors", &Frame::vectors)
      .def_property_readonly("tight", &Frame::tight)
      .def_property_readonly("tightness", &Frame::tightness)
      .def("synthesis", &Frame::synthesis)
      .def("__len__", &Frame::size)
      .def("__getitem__",
           [](const Frame& f, Index k) {
             if (k < 0 || k >= f.size()) throw py::index_error();
             return f[k];
           })
      .def("__repr__", [](const Frame& f) {
        return "Frame(dim=" + std::to_string(f.dim()) + ", n=" + std::to_string(f.size()) +
               ")";
      });

  py::class_<CoherenceReport>(m, "CoherenceReport")
      .def_readonly("value", &CoherenceReport::value)
      .def_readonly("prefactor", &CoherenceReport::prefactor)
      .def_readonly("dim", &CoherenceReport::dim)
      .def_readonly("n", &CoherenceReport::n)
      .def_readonly("offdiag", &CoherenceReport::offdiag);

  py::class_<PropertiesReport>(m, "PropertiesReport")
      .def_readonly("min_value", &PropertiesReport::min_value)
      .def_readonly("convexity_slack", &PropertiesReport::convexity_slack)
      .def_readonly("invariance_gap", &PropertiesReport::invariance_gap)
      .def_readonly("pass_", &PropertiesReport::pass);

  py::class_<SymmetricIndexSpace>(m, "SymmetricIndexSpace")
      .def_readonly("s", &SymmetricIndexSpace::s)
      .def_property_readonly("dim", &SymmetricIndexSpace::dim)
      .def("offset", &SymmetricIndexSpace::offset)
      .def("wrap", &SymmetricIndexSpace::wrap);

  py::class_<DiscreteGaussian>(m, "DiscreteGaussian")
      .def_readonly("kappa", &DiscreteGaussian::kappa)
      .def_readonly("values", &DiscreteGaussian::values);

  py::class_<FourierInvarianceReport>(m, "FourierInvarianceReport")
      .def_readonly("coherence_rho", &FourierInvarianceReport::coherence_rho)
      .def_readonly("coherence_transformed", &FourierInvarianceReport::coherence_transformed)
      .def_readonly("coherence_reindexed", &FourierInvarianceReport::coherence_reindexed)
      .def_readonly("invariance_gap", &FourierInvarianceReport::invariance_gap)
      .def_readonly("second_check_gap", &FourierInvarianceReport::second_check_gap)
      .def_readonly("reindex_residual", &FourierInvarianceReport::reindex_residual)
      .def_readonly("pass_", &FourierInvarianceReport::pass);

  py::class_<Povm>(m, "Povm")
      .def_readonly("dim", &Povm::dim)
      .def_readonly("effects", &Povm::effects);

  py::class_<NaimarkExtension>(m, "NaimarkExtension")
      .def_readonly("original", &NaimarkExtension::original)
      .def_readonly("basis", &NaimarkExtension::basis)
      .def_readonly("tail_vectors", &NaimarkExtension::tail_vectors);

  py::class_<ExtensionReport>(m, "ExtensionReport")
      .def_readonly("max_element_error", &ExtensionReport::max_element_error)
      .def_readonly("max_probability_error", &ExtensionReport::max_probability_error)
      .def_readonly("coherence_direct", &ExtensionReport::coherence_direct)
      .def_readonly("coherence_extended", &ExtensionReport::coherence_extended)
      .def_readonly("coherence_gap", &ExtensionReport::coherence_gap)
      .def_readonly("pass_", &ExtensionReport::pass);

  m.def("make_density", &make_density, py::arg("matrix"));
  m.def("spectral_mixture", &spectral_mixture, py::arg("weights"), py::arg("vectors"));
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def("direct_sum_zero", &direct_sum_zero, py::arg("rho"), py::arg("extra"));
  m.def("mean_value", &mean_value, py::arg("rho"), py::arg("obs"));
  m.def("hermitian_deviation", &hermitian_deviation, py::arg("m"));

  m.def("verify_tight", &verify_tight, py::arg("f"));
  m.def("canonical_basis", &canonical_basis, py::arg("d"));
  m.def("rotated_qubit_basis", &rotated_qubit_basis, py::arg("lam"));
  m.def("polygonal_frame", &polygonal_frame, py::arg("n"));
  m.def("tetrahedral_frame", &tetrahedral_frame);
  m.def("icosahedral_frame", &icosahedral_frame);
  m.def("fourier_basis", &fourier_basis, py::arg("d"));
  m.def("scaled_union", &scaled_union, py::arg("a"), py::arg("b"), py::arg("wa"),
        py::arg("wb"));
  m.def("interpolate", &interpolate, py::arg("a"), py::arg("b"), py::arg("t"));
  m.def("split_frame",
        py::overload_cast<const Frame&, const Frame&>(&split_frame), py::arg("basis_part"),
        py::arg("frame_part"));
  m.def("tensor_frame", &tensor_frame, py::arg("a"), py::arg("b"));
  m.def("apply_unitary", &apply_unitary, py::arg("u"), py::arg("f"));
  m.def("analysis_coefficients", &analysis_coefficients, py::arg("f"), py::arg("psi"));
  m.def("synthesize", &synthesize, py::arg("f"), py::arg("coeffs"));
  m.def("coefficient_kernel_projector", &coefficient_kernel_projector, py::arg("f"));
  m.def("frame_matrix", &frame_matrix, py::arg("f"), py::arg("a"));
  m.def("is_orthonormal_basis", &is_orthonormal_basis, py::arg("f"),
        py::arg("tol") = 1e-10);

  m.def("basis_coherence", &basis_coherence, py::arg("b"), py::arg("rho"));
  m.def("frame_coherence", &frame_coherence, py::arg("f"), py::arg("rho"));
  m.def("coherence_from_means", &coherence_from_means, py::arg("f"), py::arg("rho"));
  m.def("composite_coherence", &composite_coherence, py::arg("fa"), py::arg("fb"),
        py::arg("rho"));
  m.def("coherence_properties_check", &coherence_properties_check, py::arg("f"),
        py::arg("states"), py::arg("weights"), py::arg("u"));

  m.def("symmetric_space", &symmetric_space, py::arg("d"));
  m.def("discrete_gaussian", &discrete_gaussian, py::arg("d"), py::arg("kappa"));
  m.def("fourier_operator", &fourier_operator, py::arg("space"));
  m.def("vacuum_state", &vacuum_state, py::arg("d"));
  m.def("displacement", &displacement, py::arg("space"), py::arg("j"), py::arg("k"));
  m.def("coherent_frame", &coherent_frame, py::arg("d"));
  m.def("fourier_invariance_check", &fourier_invariance_check, py::arg("d"), py::arg("rho"));

  m.def("make_povm", &make_povm, py::arg("dim"), py::arg("effects"));
  m.def("frame_to_povm", &frame_to_povm, py::arg("f"));
  m.def("povm_to_frame", &povm_to_frame, py::arg("p"));
  m.def("naimark_extend", &naimark_extend, py::arg("f"));
  m.def("verify_extension", &verify_extension, py::arg("ext"), py::arg("rho"));
  m.def("povm_probabilities", &povm_probabilities, py::arg("p"), py::arg("rho"));
  m.def("post_measurement_state", &post_measurement_state, py::arg("p"), py::arg("rho"),
        py::arg("j"));

  m.def("builtin_state", &builtin_state, py::arg("name"));
  m.def("builtin_frame", &builtin_frame, py::arg("spec"));
  m.def("qubit_state", &qubit_state, py::arg("a"), py::arg("b"), py::arg("theta"));
  m.def("resolve_state", &resolve_state, py::arg("spec"));
  m.def("resolve_frame", &resolve_frame, py::arg("spec"));

  m.def("parse_state_json", &parse_state_json, py::arg("text"));
  m.def("parse_frame_json", &parse_frame_json, py::arg("text"));
  m.def("state_to_json", &state_to_json, py::arg("rho"));
  m.def("frame_to_json", &frame_to_json, py::arg("f"));
  m.def("report_to_json", &report_to_json, py::arg("report"));
  m.def("load_state_file", &load_state_file, py::arg("path"));
  m.def("load_frame_file", &load_frame_file, py::arg("path"));
  m.def("format_value", &format_value, py::arg("v"));
}
