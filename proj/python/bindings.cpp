// Python bindings for the core operations.  Vectors accept any 3-sequence
// through an implicit conversion; domain errors surface as
// photonic_kondo.Error carrying the C++ message.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "photonic_kondo/bloch.hpp"
#include "photonic_kondo/correlators.hpp"
#include "photonic_kondo/errors.hpp"
#include "photonic_kondo/linear_ode.hpp"
#include "photonic_kondo/model.hpp"
#include "photonic_kondo/photon_stats.hpp"
#include "photonic_kondo/spectra.hpp"
#include "photonic_kondo/validation.hpp"

namespace py = pybind11;
using namespace pkondo;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spin dynamics, emission spectra and photon statistics of a chirally "
              "driven two-level emitter";

    py::register_exception<Error>(m, "Error");

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def(py::init([](const py::sequence& s) {
            if (py::len(s) != 3) throw py::value_error("Vec3 needs exactly three components");
            return Vec3{s[0].cast<double>(), s[1].cast<double>(), s[2].cast<double>()};
        }))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("__iter__",
             [](const Vec3& v) {
                 return py::iter(py::make_tuple(v.x, v.y, v.z));
             })
        .def("__repr__", [](const Vec3& v) {
            return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                   std::to_string(v.z) + ")";
        });
    py::implicitly_convertible<py::sequence, Vec3>();

    m.def("dot", [](const Vec3& a, const Vec3& b) { return dot(a, b); });
    m.def("cross", [](const Vec3& a, const Vec3& b) { return cross(a, b); });
    m.def("norm", [](const Vec3& a) { return norm(a); });

    py::class_<EmitterSpec>(m, "EmitterSpec")
        .def(py::init([](double g_plus, double g_minus, double transition_freq, double detuning) {
                 return EmitterSpec{g_plus, g_minus, transition_freq, detuning};
             }),
             py::arg("g_plus"), py::arg("g_minus"), py::arg("transition_freq"),
             py::arg("detuning") = 0.0)
        .def_readwrite("g_plus", &EmitterSpec::g_plus)
        .def_readwrite("g_minus", &EmitterSpec::g_minus)
        .def_readwrite("transition_freq", &EmitterSpec::transition_freq)
        .def_readwrite("detuning", &EmitterSpec::detuning);

    py::class_<KondoCouplings>(m, "KondoCouplings")
        .def_readonly("isotropic", &KondoCouplings::isotropic)
        .def_readonly("parallel", &KondoCouplings::parallel)
        .def_readonly("perpendicular", &KondoCouplings::perpendicular)
        .def_readonly("anisotropic", &KondoCouplings::anisotropic);

    py::class_<KondoParams>(m, "KondoParams")
        .def(py::init([](double exchange, double photon_density, double detuning,
                         double carrier) {
                 return KondoParams{exchange, photon_density, detuning, carrier};
             }),
             py::arg("exchange"), py::arg("photon_density"), py::arg("detuning") = 0.0,
             py::arg("carrier") = 100.0)
        .def_readwrite("exchange", &KondoParams::exchange)
        .def_readwrite("photon_density", &KondoParams::photon_density)
        .def_readwrite("detuning", &KondoParams::detuning)
        .def_readwrite("carrier", &KondoParams::carrier);

    py::class_<JonesPolarization>(m, "JonesPolarization")
        .def(py::init([](Complex alpha_plus, Complex alpha_minus, double length) {
                 return JonesPolarization{alpha_plus, alpha_minus, length};
             }),
             py::arg("alpha_plus"), py::arg("alpha_minus"), py::arg("length") = 1.0)
        .def_readwrite("alpha_plus", &JonesPolarization::alpha_plus)
        .def_readwrite("alpha_minus", &JonesPolarization::alpha_minus)
        .def_readwrite("length", &JonesPolarization::length);

    py::class_<JonesState>(m, "JonesState")
        .def_readonly("photon_density", &JonesState::photon_density)
        .def_readonly("spin_density", &JonesState::spin_density)
        .def_readonly("axis", &JonesState::axis);

    py::class_<DrivenConfig>(m, "DrivenConfig")
        .def_readonly("params", &DrivenConfig::params)
        .def_readonly("n_cl", &DrivenConfig::n_cl)
        .def_readonly("phi", &DrivenConfig::phi)
        .def_readonly("lamb_shift", &DrivenConfig::lamb_shift)
        .def_readonly("h_eff", &DrivenConfig::h_eff)
        .def_readonly("omega", &DrivenConfig::omega)
        .def_readonly("gamma", &DrivenConfig::gamma)
        .def_readonly("n_h", &DrivenConfig::n_h)
        .def_readonly("lambda_ratio", &DrivenConfig::lambda_ratio)
        .def_readonly("psi", &DrivenConfig::psi)
        .def_readonly("degenerate_axis", &DrivenConfig::degenerate_axis);

    py::class_<BlochTrajectory>(m, "BlochTrajectory")
        .def_readonly("times", &BlochTrajectory::times)
        .def_readonly("states", &BlochTrajectory::states)
        .def_readonly("purities", &BlochTrajectory::purities);

    py::class_<UnresolvedCorrelators>(m, "UnresolvedCorrelators")
        .def_readonly("tau", &UnresolvedCorrelators::tau)
        .def_readonly("dot", &UnresolvedCorrelators::dot)
        .def_readonly("cross_cl", &UnresolvedCorrelators::cross_cl)
        .def_readonly("cross_h", &UnresolvedCorrelators::cross_h)
        .def_readonly("cl_h", &UnresolvedCorrelators::cl_h)
        .def_readonly("hh", &UnresolvedCorrelators::hh)
        .def_readonly("v_h", &UnresolvedCorrelators::v_h);

    py::class_<ResolvedCorrelators>(m, "ResolvedCorrelators")
        .def_readonly("tau", &ResolvedCorrelators::tau)
        .def_readonly("cl_cl", &ResolvedCorrelators::cl_cl)
        .def_readonly("h_cl", &ResolvedCorrelators::h_cl)
        .def_readonly("cl_v", &ResolvedCorrelators::cl_v)
        .def_readonly("v_cl", &ResolvedCorrelators::v_cl)
        .def_readonly("v_v", &ResolvedCorrelators::v_v)
        .def_readonly("h_v", &ResolvedCorrelators::h_v);

    py::class_<AbcCoefficients>(m, "AbcCoefficients")
        .def_readonly("tau", &AbcCoefficients::tau)
        .def_readonly("a", &AbcCoefficients::a)
        .def_readonly("b", &AbcCoefficients::b)
        .def_readonly("c", &AbcCoefficients::c);

    py::class_<SpectrumUnresolved>(m, "SpectrumUnresolved")
        .def_readonly("nu", &SpectrumUnresolved::nu)
        .def_readonly("inelastic", &SpectrumUnresolved::inelastic)
        .def_readonly("elastic_weight", &SpectrumUnresolved::elastic_weight);

    py::class_<SpectrumResolved>(m, "SpectrumResolved")
        .def_readonly("detector", &SpectrumResolved::detector)
        .def_readonly("base", &SpectrumResolved::base)
        .def_readonly("vector_part", &SpectrumResolved::vector_part)
        .def_readonly("resolved", &SpectrumResolved::resolved)
        .def_readonly("elastic_vector_weight", &SpectrumResolved::elastic_vector_weight);

    py::class_<OutgoingField>(m, "OutgoingField")
        .def_readonly("s_q", &OutgoingField::s_q)
        .def_readonly("theta_deg", &OutgoingField::theta_deg);

    py::class_<PowerReport>(m, "PowerReport")
        .def_readonly("total", &PowerReport::total)
        .def_readonly("inelastic", &PowerReport::inelastic)
        .def_readonly("numeric", &PowerReport::numeric)
        .def_readonly("elastic_weight", &PowerReport::elastic_weight)
        .def_readonly("inelastic_flux", &PowerReport::inelastic_flux)
        .def_readonly("tail_fraction", &PowerReport::tail_fraction);

    py::class_<KVector>(m, "KVector")
        .def_readonly("tau", &KVector::tau)
        .def_readonly("value", &KVector::value)
        .def_readonly("source_norm", &KVector::source_norm);

    py::class_<GCombination>(m, "GCombination")
        .def_readonly("tau", &GCombination::tau)
        .def_readonly("nm", &GCombination::nm)
        .def_readonly("n0", &GCombination::n0)
        .def_readonly("zero_m", &GCombination::zero_m)
        .def_readonly("zero_zero", &GCombination::zero_zero);

    py::class_<G2Curve>(m, "G2Curve")
        .def_readonly("n", &G2Curve::n)
        .def_readonly("m", &G2Curve::m)
        .def_readonly("taus", &G2Curve::taus)
        .def_readonly("values", &G2Curve::values);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("max_deviation", &CheckResult::max_deviation)
        .def_readonly("tolerance", &CheckResult::tolerance)
        .def_readonly("detail", &CheckResult::detail)
        .def_readonly("seconds", &CheckResult::seconds)
        .def_readonly("seconds_limit", &CheckResult::seconds_limit);

    m.def("derive_kondo_coupling", &derive_kondo_coupling, py::arg("emitter"));
    m.def("params_from_emitter", &params_from_emitter, py::arg("emitter"),
          py::arg("photon_density"), py::arg("carrier"));
    m.def("scattering_phase", &scattering_phase, py::arg("exchange"));
    m.def("jones_from_amplitudes", &jones_from_amplitudes, py::arg("polarization"));
    m.def("polarization_for", &polarization_for, py::arg("axis"), py::arg("photon_density"),
          py::arg("length") = 1.0);
    m.def("build_driven_config", &build_driven_config, py::arg("params"), py::arg("n_cl"));

    m.def("bloch_evolve", &bloch_evolve, py::arg("config"), py::arg("s0"), py::arg("t"));
    m.def("stationary_bloch", &stationary_bloch, py::arg("config"));
    m.def("purity", &purity, py::arg("s"));
    m.def("stationary_purity", &stationary_purity, py::arg("config"));
    m.def("stationary_purity_deficit", &stationary_purity_deficit, py::arg("config"));
    m.def("evolve_trajectory", &evolve_trajectory, py::arg("config"), py::arg("s0"),
          py::arg("t_max"), py::arg("n_samples"));

    m.def("unresolved_correlators", &unresolved_correlators, py::arg("config"), py::arg("tau"));
    m.def("resolved_correlators", &resolved_correlators, py::arg("config"), py::arg("tau"));
    m.def("abc_coefficients", &abc_coefficients, py::arg("config"), py::arg("tau"));
    m.def("abc_stationary", &abc_stationary, py::arg("config"));

    m.def("c0_elastic", &c0_elastic, py::arg("config"));
    m.def("elastic_outgoing", &elastic_outgoing, py::arg("config"));
    m.def("c0_inelastic", &c0_inelastic, py::arg("config"), py::arg("tau"));
    m.def("spectrum_unresolved", &spectrum_unresolved, py::arg("config"), py::arg("nu_grid"));
    m.def("spectrum_resolved", &spectrum_resolved, py::arg("config"), py::arg("n_d"),
          py::arg("nu_grid"));
    m.def("outgoing_field", &outgoing_field, py::arg("config"), py::arg("polarization"));
    m.def("power_accounting", &power_accounting, py::arg("config"), py::arg("nu_grid"));
    m.def("uniform_grid", &uniform_grid, py::arg("lo"), py::arg("hi"), py::arg("n"));

    m.def("cs_zero", &cs_zero, py::arg("config"));
    m.def("k_initial", py::overload_cast<const DrivenConfig&, const Vec3&>(&k_initial),
          py::arg("config"), py::arg("m"));
    m.def("k_initial", py::overload_cast<const DrivenConfig&>(&k_initial), py::arg("config"));
    m.def("k_evolve", &k_evolve, py::arg("config"), py::arg("k0"), py::arg("tau"));
    m.def("g_combinations", &g_combinations, py::arg("config"), py::arg("n"), py::arg("m"),
          py::arg("tau"));
    m.def("g2", &g2, py::arg("config"), py::arg("n"), py::arg("m"), py::arg("tau"));
    m.def("g2_from_combinations", &g2_from_combinations, py::arg("config"), py::arg("n"),
          py::arg("m"), py::arg("tau"));
    m.def("g2_curve", &g2_curve, py::arg("config"), py::arg("n"), py::arg("m"),
          py::arg("tau_max"), py::arg("n_samples"));

    m.def("run_all_checks", &run_all_checks, py::arg("fast") = false,
          py::call_guard<py::gil_scoped_release>());
}
