#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jjline/band_structure.hpp"
#include "jjline/cavity.hpp"
#include "jjline/errors.hpp"
#include "jjline/harmonics.hpp"
#include "jjline/scattering.hpp"
#include "jjline/transfer_matrix.hpp"

namespace py = pybind11;
using namespace jjline;

namespace {

std::string spec_repr(const JunctionSpec& s) {
    std::ostringstream os;
    os << "JunctionSpec(z=" << s.z << ", gamma=" << s.gamma
       << ", n_junctions=" << s.n_junctions << ")";
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Microwave photon scattering on Josephson-junction "
              "transmission lines";
    m.attr("__version__") = "0.1.0";

    py::register_exception<singular_matrix_error>(
        m, "SingularMatrixError", PyExc_RuntimeError);
    py::register_exception<tuning_singularity_error>(
        m, "TuningSingularityError", PyExc_RuntimeError);
    py::register_exception<total_reflection_error>(
        m, "TotalReflectionError", PyExc_RuntimeError);
    py::register_exception<unresolved_doublet_error>(
        m, "UnresolvedDoubletError", PyExc_RuntimeError);
    py::register_exception<infinite_q_error>(
        m, "InfiniteQError", PyExc_RuntimeError);

    // ---- scattering --------------------------------------------------
    py::class_<JunctionSpec>(m, "JunctionSpec")
        .def(py::init([](double z, double gamma, int n_junctions) {
                 return JunctionSpec{z, gamma, n_junctions};
             }),
             py::arg("z") = 1.0, py::arg("gamma") = 0.0,
             py::arg("n_junctions") = 1)
        .def_readwrite("z", &JunctionSpec::z)
        .def_readwrite("gamma", &JunctionSpec::gamma)
        .def_readwrite("n_junctions", &JunctionSpec::n_junctions)
        .def("__repr__", &spec_repr);

    py::class_<ReflectionTransmission>(m, "ReflectionTransmission")
        .def_readonly("r", &ReflectionTransmission::r)
        .def_readonly("t", &ReflectionTransmission::t);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("omega", &Spectrum::omega)
        .def_readonly("values", &Spectrum::values);

    py::class_<SquidResult>(m, "SquidResult")
        .def_readonly("spec", &SquidResult::spec)
        .def_readonly("omega_p", &SquidResult::omega_p)
        .def_readonly("l_j", &SquidResult::l_j);

    m.def("validate", &validate, py::arg("spec"));
    m.def("scatter", &scatter, py::arg("spec"), py::arg("omega"));
    m.def("leakage_fraction", &leakage_fraction, py::arg("spec"),
          py::arg("omega"));
    m.def("average_power", &average_power, py::arg("spec"), py::arg("omega"),
          py::arg("a_phi"), py::arg("z0"));
    m.def("squid_spec", &squid_spec, py::arg("critical_current"),
          py::arg("capacitance"), py::arg("line_l0"), py::arg("line_c0"),
          py::arg("flux_ratio"), py::arg("resistance"));
    m.def("scatter_spectrum", &scatter_spectrum, py::arg("spec"),
          py::arg("grid"));

    // ---- transfer matrices -------------------------------------------
    py::class_<TransferMatrix>(m, "TransferMatrix")
        .def(py::init<>())
        .def_readwrite("m00", &TransferMatrix::m00)
        .def_readwrite("m01", &TransferMatrix::m01)
        .def_readwrite("m10", &TransferMatrix::m10)
        .def_readwrite("m11", &TransferMatrix::m11)
        .def("__mul__",
             [](const TransferMatrix& a, const TransferMatrix& b) {
                 return a * b;
             });

    py::class_<Junction>(m, "Junction")
        .def(py::init([](const JunctionSpec& spec) {
                 return Junction{spec};
             }),
             py::arg("spec"))
        .def_readwrite("spec", &Junction::spec);

    py::class_<Gap>(m, "Gap")
        .def(py::init([](double d) { return Gap{d}; }), py::arg("d"))
        .def_readwrite("d", &Gap::d);

    m.def("det", &det, py::arg("t"));
    m.def("junction_matrix", &junction_matrix, py::arg("spec"),
          py::arg("omega"));
    m.def("propagation_matrix", &propagation_matrix, py::arg("d"),
          py::arg("omega"));
    m.def("cascade", &cascade, py::arg("mats"));
    m.def("scattering_from_matrix", &scattering_from_matrix, py::arg("t"));
    m.def("chain_matrix", &chain_matrix, py::arg("chain"), py::arg("omega"));

    // ---- cavities -----------------------------------------------------
    py::enum_<ScanAxis>(m, "ScanAxis")
        .value("frequency", ScanAxis::frequency)
        .value("length", ScanAxis::length);

    py::class_<ResonanceSet>(m, "ResonanceSet")
        .def_readonly("roots", &ResonanceSet::roots)
        .def_readonly("axis", &ResonanceSet::axis);

    py::class_<CouplingResult>(m, "CouplingResult")
        .def_readonly("omega_minus", &CouplingResult::omega_minus)
        .def_readonly("omega_plus", &CouplingResult::omega_plus)
        .def_readonly("g", &CouplingResult::g)
        .def_readonly("omega0", &CouplingResult::omega0);

    m.def("cavity_resonances_in_frequency", &cavity_resonances_in_frequency,
          py::arg("z"), py::arg("d"), py::arg("lo"), py::arg("hi"));
    m.def("cavity_resonances_in_length", &cavity_resonances_in_length,
          py::arg("z"), py::arg("omega"), py::arg("lo"), py::arg("hi"));
    m.def("quality_factor", &quality_factor, py::arg("omega"), py::arg("d"),
          py::arg("r_mirror"));
    m.def("coupled_cavity_coupling", &coupled_cavity_coupling, py::arg("z"),
          py::arg("z_in"), py::arg("d"), py::arg("gamma"), py::arg("lo"),
          py::arg("hi"), py::arg("points") = 16384);

    // ---- band structure -----------------------------------------------
    py::class_<BandPoint>(m, "BandPoint")
        .def_readonly("k", &BandPoint::k)
        .def_readonly("omega", &BandPoint::omega);

    py::class_<Band>(m, "Band")
        .def_readonly("omega_min", &Band::omega_min)
        .def_readonly("omega_max", &Band::omega_max)
        .def_readonly("points", &Band::points);

    py::class_<BandDiagram>(m, "BandDiagram")
        .def_readonly("bands", &BandDiagram::bands)
        .def_readonly("gaps", &BandDiagram::gaps);

    m.def("bloch_rhs", &bloch_rhs, py::arg("z"), py::arg("d"),
          py::arg("omega"));
    m.def("allowed_bands", &allowed_bands, py::arg("z"), py::arg("d"),
          py::arg("lo"), py::arg("hi"), py::arg("resolution") = 8192);
    m.def("dispersion_at", &dispersion_at, py::arg("z"), py::arg("d"),
          py::arg("k"), py::arg("band_index"));
    m.def("tight_binding_coupling", &tight_binding_coupling,
          py::arg("diagram"), py::arg("band_index"));

    // ---- driven junction ------------------------------------------------
    py::class_<DrivePoint>(m, "DrivePoint")
        .def(py::init([](double omega, double amplitude, double z) {
                 return DrivePoint{omega, amplitude, z};
             }),
             py::arg("omega") = 1.0, py::arg("amplitude") = 0.0,
             py::arg("z") = 1.0)
        .def_readwrite("omega", &DrivePoint::omega)
        .def_readwrite("amplitude", &DrivePoint::amplitude)
        .def_readwrite("z", &DrivePoint::z);

    py::class_<HarmonicResponse>(m, "HarmonicResponse")
        .def_readonly("r1", &HarmonicResponse::r1)
        .def_readonly("r3", &HarmonicResponse::r3)
        .def_readonly("r5", &HarmonicResponse::r5)
        .def_readonly("t1", &HarmonicResponse::t1)
        .def_readonly("t3", &HarmonicResponse::t3)
        .def_readonly("t5", &HarmonicResponse::t5)
        .def_readonly("converged", &HarmonicResponse::converged)
        .def_readonly("residual", &HarmonicResponse::residual)
        .def_readonly("amplitude_warning",
                      &HarmonicResponse::amplitude_warning);

    py::class_<DiagnosticResponse>(m, "DiagnosticResponse")
        .def_readonly("harmonics", &DiagnosticResponse::harmonics)
        .def_readonly("r", &DiagnosticResponse::r)
        .def_readonly("converged", &DiagnosticResponse::converged)
        .def_readonly("residual", &DiagnosticResponse::residual);

    py::class_<HarmonicMap>(m, "HarmonicMap")
        .def_readonly("omega", &HarmonicMap::omega)
        .def_readonly("amplitude", &HarmonicMap::amplitude)
        .def_readonly("r1_sq", &HarmonicMap::r1_sq)
        .def_readonly("r3_sq", &HarmonicMap::r3_sq)
        .def_readonly("r5_sq", &HarmonicMap::r5_sq)
        .def_readonly("converged", &HarmonicMap::converged);

    py::class_<PhotonEstimate>(m, "PhotonEstimate")
        .def_readonly("photons", &PhotonEstimate::photons)
        .def_readonly("sub_single_photon",
                      &PhotonEstimate::sub_single_photon);

    m.def("harmonic_balance", &harmonic_balance, py::arg("point"));
    m.def("harmonic_balance_diagnostic", &harmonic_balance_diagnostic,
          py::arg("point"), py::arg("even_seed") = 1e-3);
    m.def("pendulum_period", &pendulum_period, py::arg("abar"));
    m.def("pendulum_period_quadrature", &pendulum_period_quadrature,
          py::arg("abar"));
    m.def("resonance_shift", &resonance_shift, py::arg("abar"));
    m.def("harmonic_map", &harmonic_map, py::arg("z"), py::arg("omega_grid"),
          py::arg("amplitude_grid"));
    m.def("photon_number_estimate", &photon_number_estimate, py::arg("abar"),
          py::arg("impedance_ohms"), py::arg("n_junctions"));
}
