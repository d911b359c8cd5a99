// Python bindings for the core library.  Phasors cross the boundary as
// python complex numbers; callables (forcing profiles, fields under test)
// as ordinary python functions.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "wavemask/analytic.hpp"
#include "wavemask/core.hpp"
#include "wavemask/duhamel.hpp"
#include "wavemask/kernel_superposition.hpp"
#include "wavemask/masking.hpp"
#include "wavemask/region_optimizer.hpp"
#include "wavemask/scenario.hpp"

namespace py = pybind11;
using namespace wavemask;

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Steady-state wave fields of compact sources, destructive-interference "
      "masking designs, worst-case phase optimization and kernel-expansion "
      "fits";

  py::register_exception<SingularEvaluationError>(mod,
                                                  "SingularEvaluationError");
  py::register_exception<GeometryError>(mod, "GeometryError",
                                        PyExc_ValueError);
  py::register_exception<UnsupportedSourceError>(mod, "UnsupportedSourceError",
                                                 PyExc_ValueError);
  py::register_exception<UndefinedMetricError>(mod, "UndefinedMetricError");
  py::register_exception<ConfigError>(mod, "ConfigError", PyExc_ValueError);

  mod.attr("PI") = pi;
  mod.attr("MIN_RADIUS") = min_radius;
  mod.attr("GAUSSIAN_EFFECTIVE_SUPPORT") = gaussian_effective_support;

  py::class_<Vec3>(mod, "Vec3")
      .def(py::init<>())
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"),
           py::arg("z"))
      .def_readwrite("x", &Vec3::x)
      .def_readwrite("y", &Vec3::y)
      .def_readwrite("z", &Vec3::z)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const Vec3& v) {
        return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) +
               ", " + std::to_string(v.z) + ")";
      });

  mod.def("dot", &dot);
  mod.def("cross", &cross);
  mod.def("norm", &norm);
  mod.def("distance", &distance);
  mod.def("normalized", &normalized);

  mod.def("amplitude", &amplitude, py::arg("u"));
  mod.def("phase", &phase, py::arg("u"));
  mod.def("canonical_phase", &canonical_phase, py::arg("phi"));
  mod.def("phasor_of_sinusoid", &phasor_of_sinusoid, py::arg("amplitude"),
          py::arg("phase"));
  mod.def("time_signal", &time_signal, py::arg("u"), py::arg("omega"),
          py::arg("t"));
  mod.def("sinc", &sinc, py::arg("x"));

  py::class_<Medium>(mod, "Medium")
      .def(py::init<double, double>(), py::arg("c"), py::arg("omega"))
      .def_readonly("c", &Medium::c)
      .def_readonly("omega", &Medium::omega);
  mod.def("wavelength", &wavelength);
  mod.def("wavenumber", &wavenumber);

  py::enum_<SourceKind>(mod, "SourceKind")
      .value("gaussian", SourceKind::gaussian)
      .value("truncated_sinc", SourceKind::truncated_sinc)
      .value("point_delta", SourceKind::point_delta)
      .value("spherical_shell", SourceKind::spherical_shell);

  py::class_<SourceSpec>(mod, "SourceSpec")
      .def(py::init<>())
      .def_readwrite("kind", &SourceSpec::kind)
      .def_readwrite("center", &SourceSpec::center)
      .def_readwrite("amplitude", &SourceSpec::amplitude)
      .def_readwrite("scale", &SourceSpec::scale)
      .def_readwrite("phase", &SourceSpec::phase);
  mod.def("gaussian_source", &gaussian_source, py::arg("center"),
          py::arg("amplitude"), py::arg("scale"), py::arg("phase") = 0.0);
  mod.def("truncated_sinc_source", &truncated_sinc_source, py::arg("center"),
          py::arg("amplitude"), py::arg("scale"), py::arg("phase") = 0.0);
  mod.def("point_source", &point_source, py::arg("center"),
          py::arg("amplitude"), py::arg("phase") = 0.0);
  mod.def("shell_source", &shell_source, py::arg("center"),
          py::arg("amplitude"), py::arg("radius"), py::arg("phase") = 0.0);

  py::class_<PointForce>(mod, "PointForce")
      .def(py::init<>())
      .def(py::init([](const Vec3& location, double amplitude, double phase) {
             return PointForce{location, amplitude, phase};
           }),
           py::arg("location"), py::arg("amplitude"), py::arg("phase") = 0.0)
      .def_readwrite("location", &PointForce::location)
      .def_readwrite("amplitude", &PointForce::amplitude)
      .def_readwrite("phase", &PointForce::phase);

  py::class_<TargetRegion>(mod, "TargetRegion")
      .def(py::init<const Vec3&, double, int, int, const Vec3&>(),
           py::arg("center"), py::arg("radius"), py::arg("n_radial") = 61,
           py::arg("n_azimuthal") = 33, py::arg("axis_origin") = Vec3{})
      .def_readonly("center", &TargetRegion::center)
      .def_readonly("radius", &TargetRegion::radius)
      .def_readonly("n_radial", &TargetRegion::n_radial)
      .def_readonly("n_azimuthal", &TargetRegion::n_azimuthal)
      .def("frame", &TargetRegion::frame)
      .def("sample_points", &TargetRegion::sample_points);

  // closed-form fields
  mod.def("qss_coeff_sinc", &qss_coeff_sinc, py::arg("d"), py::arg("lam"),
          py::arg("c"));
  mod.def("qss_coeff_gaussian", &qss_coeff_gaussian, py::arg("d"),
          py::arg("lam"), py::arg("c"));
  mod.def("qss_coeff_shell", &qss_coeff_shell, py::arg("r0"), py::arg("lam"),
          py::arg("c"));
  mod.def(
      "qss_contains",
      [](double core_radius, double r, double t, const Medium& m) {
        return qss_contains(QssRegion{core_radius}, r, t, m);
      },
      py::arg("core_radius"), py::arg("r"), py::arg("t"), py::arg("m"));
  mod.def("point_force_phasor", &point_force_phasor, py::arg("force"),
          py::arg("x"), py::arg("m"));
  mod.def("gaussian_source_phasor", &gaussian_source_phasor, py::arg("source"),
          py::arg("x"), py::arg("m"));
  mod.def("source_phasor", &source_phasor, py::arg("source"), py::arg("x"),
          py::arg("m"));
  mod.def("exact_field_sinc", &exact_field_sinc, py::arg("r"), py::arg("t"),
          py::arg("d"), py::arg("m"));
  mod.def("fd_wave_residual", &fd_wave_residual, py::arg("u"), py::arg("r"),
          py::arg("t"), py::arg("h"), py::arg("m"));

  // superposition-integral reference solver
  py::class_<GSpline>(mod, "GSpline")
      .def_static("build", &GSpline::build, py::arg("sigma"),
                  py::arg("support_radius"), py::arg("panels") = 2000)
      .def("__call__", &GSpline::operator(), py::arg("s"))
      .def_property_readonly("support_radius", &GSpline::support_radius)
      .def_property_readonly("panels", &GSpline::panels);
  mod.def("compute_u", &compute_u, py::arg("r"), py::arg("T"), py::arg("m"),
          py::arg("g"), py::arg("f"), py::arg("h_u"));

  // masking designs
  py::class_<MaskingConfig>(mod, "MaskingConfig")
      .def(py::init<>())
      .def_readwrite("source", &MaskingConfig::source)
      .def_readwrite("forces", &MaskingConfig::forces)
      .def_readwrite("exclusion_radius", &MaskingConfig::exclusion_radius)
      .def_readwrite("sensor_center", &MaskingConfig::sensor_center)
      .def_readwrite("sensor_radius", &MaskingConfig::sensor_radius)
      .def("validate", &MaskingConfig::validate);
  mod.def("shell_mask", &shell_mask, py::arg("source"), py::arg("k"),
          py::arg("m"));
  mod.def("one_force_mask", &one_force_mask, py::arg("source"), py::arg("x_d"),
          py::arg("x_m"), py::arg("m"), py::arg("eps_min") = 0.0);
  mod.def("optimal_one_force", &optimal_one_force, py::arg("source"),
          py::arg("x_d"), py::arg("eps_s"), py::arg("sign"), py::arg("m"));
  py::class_<TwoForceDesign>(mod, "TwoForceDesign")
      .def(py::init<>())
      .def_readwrite("force1", &TwoForceDesign::force1)
      .def_readwrite("force2", &TwoForceDesign::force2)
      .def_readonly("gamma", &TwoForceDesign::gamma)
      .def_readonly("beta_s", &TwoForceDesign::beta_s);
  mod.def("optimal_two_force", &optimal_two_force, py::arg("source"),
          py::arg("x_d"), py::arg("eps_s"), py::arg("m"));
  mod.def("one_force_config", &one_force_config, py::arg("source"),
          py::arg("x_d"), py::arg("eps_s"), py::arg("eps_d"), py::arg("sign"),
          py::arg("m"));
  mod.def("two_force_config", &two_force_config, py::arg("source"),
          py::arg("x_d"), py::arg("eps_s"), py::arg("eps_d"), py::arg("m"));
  mod.def("total_phasor", &total_phasor, py::arg("config"), py::arg("x"),
          py::arg("m"));
  mod.def("normalized_residual", &normalized_residual, py::arg("config"),
          py::arg("x"), py::arg("m"));

  // worst-case phase optimization
  py::class_<OptimizerSettings>(mod, "OptimizerSettings")
      .def(py::init<>())
      .def_readwrite("max_iters", &OptimizerSettings::max_iters)
      .def_readwrite("f_tol", &OptimizerSettings::f_tol)
      .def_readwrite("x_tol", &OptimizerSettings::x_tol)
      .def_readwrite("start_offset", &OptimizerSettings::start_offset)
      .def_readwrite("init_step", &OptimizerSettings::init_step);
  py::class_<OptimizationProblem>(mod, "OptimizationProblem")
      .def_readonly("source", &OptimizationProblem::source)
      .def_readonly("medium", &OptimizationProblem::medium)
      .def_readonly("x_d", &OptimizationProblem::x_d)
      .def_readonly("eps_s", &OptimizationProblem::eps_s)
      .def_readonly("region", &OptimizationProblem::region)
      .def_readonly("design", &OptimizationProblem::design)
      .def_readonly("settings", &OptimizationProblem::settings);
  mod.def("make_two_force_problem", &make_two_force_problem, py::arg("source"),
          py::arg("m"), py::arg("x_d"), py::arg("eps_s"), py::arg("r_d"),
          py::arg("n_radial") = 61, py::arg("n_azimuthal") = 33,
          py::arg("settings") = OptimizerSettings{});
  mod.def("e_max", &e_max, py::arg("problem"), py::arg("phi1"),
          py::arg("phi2"));
  py::class_<PhaseOptimum>(mod, "PhaseOptimum")
      .def_readonly("phi1", &PhaseOptimum::phi1)
      .def_readonly("phi2", &PhaseOptimum::phi2)
      .def_readonly("e_value", &PhaseOptimum::e_value)
      .def_readonly("iterations", &PhaseOptimum::iterations)
      .def_readonly("converged", &PhaseOptimum::converged);
  mod.def("optimize_phases", &optimize_phases, py::arg("problem"));
  py::class_<ImprovementRow>(mod, "ImprovementRow")
      .def_readonly("r_d", &ImprovementRow::r_d)
      .def_readonly("e_opt0", &ImprovementRow::e_opt0)
      .def_readonly("e_optrd", &ImprovementRow::e_optrd)
      .def_readonly("ratio", &ImprovementRow::ratio)
      .def_readonly("dphi1", &ImprovementRow::dphi1)
      .def_readonly("dphi2", &ImprovementRow::dphi2);
  mod.def(
      "improvement_curve",
      [](const SourceSpec& source, const Medium& m, const Vec3& x_d,
         double eps_s, const std::vector<double>& r_d_values, int n_radial,
         int n_azimuthal, OptimizerSettings settings) {
        return improvement_curve(source, m, x_d, eps_s, r_d_values, n_radial,
                                 n_azimuthal, settings);
      },
      py::arg("source"), py::arg("m"), py::arg("x_d"), py::arg("eps_s"),
      py::arg("r_d_values"), py::arg("n_radial") = 61,
      py::arg("n_azimuthal") = 33, py::arg("settings") = OptimizerSettings{});

  // kernel expansions
  py::enum_<KernelShape>(mod, "KernelShape")
      .value("gaussian", KernelShape::gaussian)
      .value("truncated_sinc", KernelShape::truncated_sinc);
  mod.def("kernel_profile", &kernel_profile, py::arg("shape"), py::arg("s"));
  mod.def("normalization_constant",
          py::overload_cast<KernelShape>(&normalization_constant),
          py::arg("shape"));
  mod.def("normalization_constant",
          py::overload_cast<const std::function<double(double)>&, double,
                            double>(&normalization_constant),
          py::arg("h"), py::arg("support_radius"), py::arg("tol") = 1e-12);
  py::class_<KernelBasis>(mod, "KernelBasis")
      .def(py::init<>())
      .def_readwrite("shape", &KernelBasis::shape)
      .def_readwrite("width", &KernelBasis::width)
      .def_readwrite("centers", &KernelBasis::centers);
  mod.def("basis_value", &basis_value, py::arg("basis"), py::arg("j"),
          py::arg("x"));
  mod.def("lattice_centers", &lattice_centers, py::arg("spacing"),
          py::arg("half_extent"));
  py::class_<FitReport>(mod, "FitReport")
      .def_readonly("relative_residual", &FitReport::relative_residual)
      .def_readonly("ridge", &FitReport::ridge)
      .def_readonly("ill_conditioned", &FitReport::ill_conditioned);
  py::class_<KernelExpansion>(mod, "KernelExpansion")
      .def(py::init<>())
      .def_readwrite("basis", &KernelExpansion::basis)
      .def_readwrite("coefficients", &KernelExpansion::coefficients)
      .def_readonly("fit", &KernelExpansion::fit);
  mod.def(
      "fit_coefficients",
      [](const KernelBasis& basis, const std::vector<Vec3>& points,
         const std::vector<double>& values, double ridge) {
        return fit_coefficients(basis, points, values, ridge);
      },
      py::arg("basis"), py::arg("points"), py::arg("values"),
      py::arg("ridge") = -1.0);
  mod.def("synthesize_phasor", &synthesize_phasor, py::arg("expansion"),
          py::arg("x"), py::arg("m"));

  // scenario configuration
  py::class_<ScenarioConfig> scenario(mod, "ScenarioConfig");
  py::class_<ScenarioConfig::MediumConfig>(scenario, "MediumConfig")
      .def_readwrite("c", &ScenarioConfig::MediumConfig::c)
      .def_readwrite("frequency", &ScenarioConfig::MediumConfig::frequency);
  py::class_<ScenarioConfig::SourceConfig>(scenario, "SourceConfig")
      .def_readwrite("a_s", &ScenarioConfig::SourceConfig::a_s)
      .def_readwrite("d", &ScenarioConfig::SourceConfig::d);
  py::class_<ScenarioConfig::GeometryConfig>(scenario, "GeometryConfig")
      .def_readwrite("x_d", &ScenarioConfig::GeometryConfig::x_d)
      .def_readwrite("eps_s", &ScenarioConfig::GeometryConfig::eps_s)
      .def_readwrite("eps_d", &ScenarioConfig::GeometryConfig::eps_d);
  py::class_<ScenarioConfig::SamplingConfig>(scenario, "SamplingConfig")
      .def_readwrite("n_radial", &ScenarioConfig::SamplingConfig::n_radial)
      .def_readwrite("n_azimuthal",
                     &ScenarioConfig::SamplingConfig::n_azimuthal);
  py::class_<ScenarioConfig::OptimizeConfig>(scenario, "OptimizeConfig")
      .def_readwrite("r_d", &ScenarioConfig::OptimizeConfig::r_d)
      .def_readwrite("max_iters", &ScenarioConfig::OptimizeConfig::max_iters)
      .def_readwrite("f_tol", &ScenarioConfig::OptimizeConfig::f_tol);
  scenario.def(py::init<>())
      .def_readwrite("medium", &ScenarioConfig::medium)
      .def_readwrite("source", &ScenarioConfig::source)
      .def_readwrite("geometry", &ScenarioConfig::geometry)
      .def_readwrite("sampling", &ScenarioConfig::sampling)
      .def_readwrite("optimize", &ScenarioConfig::optimize)
      .def("make_medium", &ScenarioConfig::make_medium)
      .def("make_source", &ScenarioConfig::make_source)
      .def_static("from_file", &ScenarioConfig::from_file, py::arg("path"))
      .def_static(
          "from_json_string",
          [](const std::string& text) {
            nlohmann::json parsed;
            try {
              parsed = nlohmann::json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
              throw ConfigError(std::string{"invalid JSON: "} + e.what());
            }
            return ScenarioConfig::from_json(parsed);
          },
          py::arg("text"))
      .def("to_json_string",
           [](const ScenarioConfig& cfg) { return cfg.to_json().dump(2); });

  mod.def("csv_number", &csv_number, py::arg("v"));
}
