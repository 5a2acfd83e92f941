// Python bindings for the library surface: parameters, field evaluation,
// equilibria, stability, propagation and the sweep helpers.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "librate/io.hpp"

namespace py = pybind11;
using namespace librate;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Equilibria, stability and Jacobi-constant tools for the planar "
      "restricted three-body problem with a radiating primary, an oblate "
      "secondary and Poynting-Robertson drag";
  m.attr("__version__") = "0.1.0";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DegenerateInput>(m, "DegenerateInput", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<CollisionError>(m, "CollisionError", base.ptr());
  py::register_exception<SeriesInvalid>(m, "SeriesInvalid", base.ptr());

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init([](double mu, double q1, double a2, double cd) {
             SystemParams p;
             p.mu = mu;
             p.q1 = q1;
             p.a2 = a2;
             p.cd = cd;
             return p;
           }),
           py::arg("mu") = 3.0e-5, py::arg("q1") = 1.0, py::arg("a2") = 0.0,
           py::arg("cd") = 299792458.0)
      .def_readwrite("mu", &SystemParams::mu)
      .def_readwrite("q1", &SystemParams::q1)
      .def_readwrite("a2", &SystemParams::a2)
      .def_readwrite("cd", &SystemParams::cd)
      .def("__repr__", [](const SystemParams& p) {
        return "SystemParams(mu=" + fmt12(p.mu) + ", q1=" + fmt12(p.q1) +
               ", a2=" + fmt12(p.a2) + ", cd=" + fmt12(p.cd) + ")";
      });

  py::class_<DerivedParams>(m, "DerivedParams")
      .def_readonly("n", &DerivedParams::n)
      .def_readonly("w1", &DerivedParams::w1)
      .def_readonly("delta", &DerivedParams::delta);

  py::class_<Distances>(m, "Distances")
      .def_readonly("r1", &Distances::r1)
      .def_readonly("r2", &Distances::r2);

  py::class_<Gradient>(m, "Gradient")
      .def_readonly("ux", &Gradient::ux)
      .def_readonly("uy", &Gradient::uy);

  py::class_<Accel>(m, "Accel")
      .def_readonly("ax", &Accel::ax)
      .def_readonly("ay", &Accel::ay);

  py::enum_<Provenance>(m, "Provenance")
      .value("AnalyticEstimate", Provenance::AnalyticEstimate)
      .value("Refined", Provenance::Refined);

  py::enum_<CollinearForm>(m, "CollinearForm")
      .value("Closed", CollinearForm::Closed)
      .value("FromRadius", CollinearForm::FromRadius);

  py::enum_<TriangularForm>(m, "TriangularForm")
      .value("Perturbed", TriangularForm::Perturbed)
      .value("NoDrag", TriangularForm::NoDrag)
      .value("Series", TriangularForm::Series);

  py::class_<EquilibriumPoint>(m, "EquilibriumPoint")
      .def(py::init<>())
      .def_readwrite("label", &EquilibriumPoint::label)
      .def_readwrite("x", &EquilibriumPoint::x)
      .def_readwrite("y", &EquilibriumPoint::y)
      .def_readwrite("residual", &EquilibriumPoint::residual)
      .def_readwrite("provenance", &EquilibriumPoint::provenance)
      .def_readwrite("converged", &EquilibriumPoint::converged)
      .def_readwrite("iterations", &EquilibriumPoint::iterations)
      .def("__repr__", [](const EquilibriumPoint& pt) {
        return "EquilibriumPoint(" + pt.label + ", x=" + fmt12(pt.x) +
               ", y=" + fmt12(pt.y) + ", residual=" + fmt12(pt.residual) +
               ")";
      });

  py::class_<TriangularExpansion>(m, "TriangularExpansion")
      .def_readonly("x0", &TriangularExpansion::x0)
      .def_readonly("y0", &TriangularExpansion::y0)
      .def_readonly("eps1", &TriangularExpansion::eps1)
      .def_readonly("eps2", &TriangularExpansion::eps2)
      .def_readonly("gamma", &TriangularExpansion::gamma)
      .def_readonly("eps", &TriangularExpansion::eps);

  py::class_<CharCoeffs>(m, "CharCoeffs")
      .def_readonly("a", &CharCoeffs::a)
      .def_readonly("b", &CharCoeffs::b)
      .def_readonly("c", &CharCoeffs::c)
      .def_readonly("d", &CharCoeffs::d)
      .def_readonly("e_aux", &CharCoeffs::e_aux)
      .def_readonly("f_aux", &CharCoeffs::f_aux)
      .def_readonly("g_aux", &CharCoeffs::g_aux);

  py::enum_<RootMethod>(m, "RootMethod")
      .value("NoDrag", RootMethod::NoDrag)
      .value("FerrariSeries", RootMethod::FerrariSeries)
      .value("Oracle", RootMethod::Oracle);

  py::enum_<Classification>(m, "Classification")
      .value("Stable", Classification::Stable)
      .value("Unstable", Classification::Unstable)
      .value("Marginal", Classification::Marginal);

  py::enum_<SolveMethod>(m, "SolveMethod")
      .value("Auto", SolveMethod::Auto)
      .value("NoDrag", SolveMethod::NoDrag)
      .value("Ferrari", SolveMethod::Ferrari)
      .value("Oracle", SolveMethod::Oracle);

  py::class_<StabilityReport>(m, "StabilityReport")
      .def_readonly("roots", &StabilityReport::roots)
      .def_readonly("method", &StabilityReport::method)
      .def_readonly("classification", &StabilityReport::classification)
      .def_readonly("max_residual", &StabilityReport::max_residual);

  py::class_<CriticalMass>(m, "CriticalMass")
      .def_readonly("k", &CriticalMass::k)
      .def_readonly("K", &CriticalMass::K)
      .def_readonly("mu_k", &CriticalMass::mu_k)
      .def_readonly("omega1", &CriticalMass::omega1)
      .def_readonly("omega2", &CriticalMass::omega2);

  py::class_<TrajectorySample>(m, "TrajectorySample")
      .def_readonly("t", &TrajectorySample::t)
      .def_readonly("state", &TrajectorySample::s)
      .def_readonly("c", &TrajectorySample::c);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("samples", &Trajectory::samples)
      .def_readonly("step", &Trajectory::step)
      .def_readonly("params", &Trajectory::params)
      .def_readonly("aborted", &Trajectory::aborted);

  py::class_<VariationalEigs>(m, "VariationalEigs")
      .def_readonly("eigenvalues", &VariationalEigs::eigenvalues)
      .def_readonly("fd_disagreement", &VariationalEigs::fd_disagreement)
      .def_readonly("reliable", &VariationalEigs::reliable);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](double x_min, double x_max, double y_min, double y_max,
                       int nx, int ny) {
             GridSpec g;
             g.x_min = x_min;
             g.x_max = x_max;
             g.y_min = y_min;
             g.y_max = y_max;
             g.nx = nx;
             g.ny = ny;
             return g;
           }),
           py::arg("x_min") = -1.5, py::arg("x_max") = 1.5,
           py::arg("y_min") = -1.5, py::arg("y_max") = 1.5,
           py::arg("nx") = 601, py::arg("ny") = 601)
      .def_readwrite("x_min", &GridSpec::x_min)
      .def_readwrite("x_max", &GridSpec::x_max)
      .def_readwrite("y_min", &GridSpec::y_min)
      .def_readwrite("y_max", &GridSpec::y_max)
      .def_readwrite("nx", &GridSpec::nx)
      .def_readwrite("ny", &GridSpec::ny);

  py::class_<GridResult>(m, "GridResult")
      .def_readonly("spec", &GridResult::spec)
      .def_readonly("values", &GridResult::values);

  py::class_<CurvePoint>(m, "CurvePoint")
      .def_readonly("param", &CurvePoint::param)
      .def_readonly("values", &CurvePoint::values);

  py::class_<Curve>(m, "Curve")
      .def_readonly("label", &Curve::label)
      .def_readonly("columns", &Curve::columns)
      .def_readonly("points", &Curve::points);

  m.def("derive", &derive, py::arg("params"),
        "Validate the parameters and return (n, w1, delta)");
  m.def("distances", &distances, py::arg("params"), py::arg("x"), py::arg("y"),
        py::arg("floor") = kCollisionFloor);
  m.def("force_function", &force_function, py::arg("params"), py::arg("state"),
        py::arg("floor") = kCollisionFloor,
        "Rotating-frame force function U");
  m.def("grad", &grad, py::arg("params"), py::arg("state"),
        py::arg("floor") = kCollisionFloor,
        "Ux, Uy with the velocity-dependent drag bracket");
  m.def("grad_at_rest", &grad_at_rest, py::arg("params"), py::arg("x"),
        py::arg("y"), py::arg("floor") = kCollisionFloor,
        "Ux, Uy at zero velocity; zeros are equilibria");
  m.def("accel", &accel, py::arg("params"), py::arg("state"),
        py::arg("floor") = kCollisionFloor);
  m.def("jacobi", &jacobi, py::arg("params"), py::arg("state"),
        py::arg("floor") = kCollisionFloor,
        "Jacobi constant C = 2U - v^2; conserved when w1 = 0");

  m.def("triangular_expansion", &triangular_expansion, py::arg("params"),
        py::arg("south") = false);
  m.def("collinear_estimates", &collinear_estimates, py::arg("params"),
        py::arg("form") = CollinearForm::Closed, py::arg("y_seed") = 0.0,
        "Analytic estimates of L1, L2, L3");
  m.def("triangular_estimates", &triangular_estimates, py::arg("params"),
        py::arg("form") = TriangularForm::Perturbed,
        "Analytic estimates of L4 and L5");
  m.def("refine", &refine, py::arg("params"), py::arg("seed"),
        py::arg("tol") = 1e-12, py::arg("max_iter") = 50,
        "Newton refinement of one equilibrium seed");
  m.def("find_all", &find_all, py::arg("params"),
        "All five equilibria, refined, in order L1..L5");
  m.def("region_label", &region_label, py::arg("params"), py::arg("x"),
        py::arg("y"));

  m.def("char_coeffs", &char_coeffs, py::arg("params"), py::arg("point"),
        "Coefficients of the characteristic quartic at an equilibrium");
  m.def("roots_no_drag", &roots_no_drag, py::arg("coeffs"));
  m.def("roots_ferrari", &roots_ferrari, py::arg("coeffs"));
  m.def("roots_oracle", &roots_oracle, py::arg("coeffs"));
  m.def("classify_point", &classify_point, py::arg("params"), py::arg("point"),
        py::arg("method") = SolveMethod::Auto, py::arg("re_tol") = 1e-9,
        "Characteristic roots and stability classification at a point");
  m.def("critical_mass", &critical_mass, py::arg("k"), py::arg("q1"),
        py::arg("a2"),
        "Critical mass ratio of the resonance omega1 = k omega2");
  m.def("critical_mass_series", &critical_mass_series, py::arg("k"),
        py::arg("a2"), py::arg("eps"));
  m.def("routh_boundary", &routh_boundary, py::arg("q1"), py::arg("a2"),
        "Stability boundary in mu by bisection");

  m.def("step_rk4", &step_rk4, py::arg("params"), py::arg("state"),
        py::arg("h"));
  m.def("integrate", &integrate, py::arg("params"), py::arg("state"),
        py::arg("t_end"), py::arg("h") = 1e-3, py::arg("record_every") = 100,
        "Fixed-step propagation recording every record_every-th step");
  m.def("variational_eigs", &variational_eigs, py::arg("params"),
        py::arg("point"),
        "Eigenvalues of the differenced variational matrix at a point");

  m.def("zvc_grid", &zvc_grid, py::arg("params"), py::arg("spec"),
        "Jacobi constant at rest over a grid");
  m.def("c4_curves", &c4_curves, py::arg("params"), py::arg("a2_list"),
        py::arg("q1_grid"));
  m.def("equilibrium_locus", &equilibrium_locus, py::arg("params"),
        py::arg("q1_grid"));
  m.def("stability_region", &stability_region, py::arg("params"),
        py::arg("q1_grid"), py::arg("a2_list"), py::arg("k_list"));
  m.def("linspace", &linspace, py::arg("lo"), py::arg("hi"), py::arg("count"));
}
