#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "igq/acceptance.hpp"
#include "igq/chaos.hpp"
#include "igq/cli.hpp"
#include "igq/complexity.hpp"
#include "igq/curvature.hpp"
#include "igq/geodesics.hpp"
#include "igq/models.hpp"
#include "igq/oracle.hpp"
#include "igq/scattering.hpp"

namespace py = pybind11;
using namespace igq;

namespace {

ModelParams mp(double r) { return ModelParams{r}; }

InitialConditions make_ic(double p0, double sigma0, double tau0, double R0) { return {p0, sigma0, tau0, R0}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Information geometry of colliding Gaussian wave packets";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<scattering::BoundViolation>(m, "BoundViolation", domain.ptr());
    py::register_exception<RegimeError>(m, "RegimeError", PyExc_ArithmeticError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<InitialConditions>(m, "InitialConditions")
        .def(py::init(&make_ic), py::arg("p0") = 1.0, py::arg("sigma0") = 0.1, py::arg("tau0") = 1.0,
             py::arg("R0") = 10.0)
        .def_readwrite("p0", &InitialConditions::p0)
        .def_readwrite("sigma0", &InitialConditions::sigma0)
        .def_readwrite("tau0", &InitialConditions::tau0)
        .def_readwrite("R0", &InitialConditions::R0);

    py::class_<ScatteringConfig>(m, "ScatteringConfig")
        .def(py::init([](double k0, double sigma_k0, double R0, double L, double a_s, double mass, double hbar) {
                 return ScatteringConfig{k0, sigma_k0, R0, L, a_s, mass, hbar};
             }),
             py::arg("k0") = 1.0, py::arg("sigma_k0") = 0.1, py::arg("R0") = 10.0, py::arg("L") = 0.1,
             py::arg("a_s") = 0.0, py::arg("reduced_mass") = 0.5, py::arg("hbar") = 1.0)
        .def_readwrite("k0", &ScatteringConfig::k0)
        .def_readwrite("sigma_k0", &ScatteringConfig::sigma_k0)
        .def_readwrite("R0", &ScatteringConfig::R0)
        .def_readwrite("L", &ScatteringConfig::L)
        .def_readwrite("a_s", &ScatteringConfig::a_s)
        .def_readwrite("reduced_mass", &ScatteringConfig::reduced_mass)
        .def_readwrite("hbar", &ScatteringConfig::hbar);

    // models
    m.def("pdf_corr3", [](double mu1, double mu2, double sigma, double r, double x, double y) {
        return models::pdf_corr3({mu1, mu2, sigma}, mp(r), x, y);
    }, py::arg("mu1"), py::arg("mu2"), py::arg("sigma"), py::arg("r"), py::arg("x"), py::arg("y"));
    m.def("metric_corr3", [](double sigma, double r) { return models::metric_corr3(sigma, mp(r)); },
          py::arg("sigma"), py::arg("r") = 0.0);
    m.def("metric_noncorr3", &models::metric_noncorr3, py::arg("sigma"));
    m.def("metric_corr4", [](double sx, double sy, double r) { return models::metric_corr4(sx, sy, mp(r)); },
          py::arg("sigma_x"), py::arg("sigma_y"), py::arg("r") = 0.0);
    m.def("micro_correlation", &models::micro_correlation, py::arg("cov"), py::arg("sigma"));

    // curvature
    m.def("scalar_curvature", [](double r) { return curvature::scalar_curvature(mp(r)); }, py::arg("r") = 0.0);
    m.def("sectional", [](double sigma, double r, const Vec3& u, const Vec3& v) {
        return curvature::sectional(sigma, mp(r), u, v);
    }, py::arg("sigma"), py::arg("r"), py::arg("u"), py::arg("v"));
    m.def("sectional_sum", [](double sigma, double r) { return curvature::sectional_sum(sigma, mp(r)); },
          py::arg("sigma"), py::arg("r") = 0.0);
    m.def("weyl_max_abs", [](double sigma, double r) { return curvature::weyl(sigma, mp(r)).max_abs(); },
          py::arg("sigma"), py::arg("r") = 0.0);
    m.def("curvature_fd_scalar", [](double sigma, double r) { return oracle::curvature_fd(sigma, mp(r)).scalar; },
          py::arg("sigma"), py::arg("r") = 0.0);

    // geodesics and chaos
    m.def("amplitude_A0", &geodesics::amplitude_A0, py::arg("ic"));
    m.def("joined_path", [](double tau, double r, const InitialConditions& ic) {
        const auto s = geodesics::joined_path(tau, mp(r), ic);
        return py::make_tuple(s.mu1, s.mu2, s.sigma);
    }, py::arg("tau"), py::arg("r"), py::arg("ic"));
    m.def("jlc_coefficient", &chaos::jlc_coefficient, py::arg("A0"));
    m.def("lyapunov_exponent", &chaos::lyapunov_exponent, py::arg("A0"));
    m.def("jacobi_intensity", &chaos::jacobi_intensity, py::arg("tau"), py::arg("omega0"), py::arg("A0"));

    // complexity
    m.def("igc", [](double tau, double r, const InitialConditions& ic) {
        return complexity::igc_closed(tau, mp(r), ic);
    }, py::arg("tau"), py::arg("r"), py::arg("ic"));
    m.def("ige", [](double tau, double r, const InitialConditions& ic) {
        return complexity::ige_closed(tau, mp(r), ic);
    }, py::arg("tau"), py::arg("r"), py::arg("ic"));
    m.def("igc_numeric", [](double tau, double r, const InitialConditions& ic) {
        return oracle::igc_numeric(tau, mp(r), ic);
    }, py::arg("tau"), py::arg("r"), py::arg("ic"));
    m.def("igc_ratio", [](double r) { return complexity::igc_ratio(mp(r)); }, py::arg("r"));

    // scattering
    m.def("r_qm", [](const ScatteringConfig& c) { return scattering::r_qm(c); }, py::arg("cfg"));
    m.def("purity", [](const ScatteringConfig& c) { return scattering::purity_series(c); }, py::arg("cfg"));
    m.def("purity_bruteforce", [](const ScatteringConfig& c) { return oracle::purity_bruteforce(c); },
          py::arg("cfg"));
    m.def("phase_shift", &scattering::phase_shift_exact, py::arg("cfg"), py::arg("r"));
    m.def("cross_section", &scattering::cross_section, py::arg("cfg"), py::arg("r"));
    m.def("prolongation", [](const InitialConditions& ic, double r) {
        const auto p = scattering::prolongation(ic, r);
        py::dict d;
        d["delta"] = p.delta;
        d["delta_approx"] = p.delta_approx;
        d["tau_star"] = p.tau_star;
        d["eta_delta"] = p.eta_delta;
        d["r_bound"] = p.r_bound;
        d["relative_gap"] = p.relative_gap;
        return d;
    }, py::arg("ic"), py::arg("r"));

    // acceptance and CLI
    m.def("run_acceptance", [](std::vector<std::string> only) {
        acceptance::SuiteOptions opt;
        opt.only.insert(only.begin(), only.end());
        py::list out;
        for (const auto& c : acceptance::run(opt)) {
            py::dict d;
            d["id"] = c.id;
            d["name"] = c.name;
            d["group"] = c.group;
            d["pass"] = c.pass;
            d["residual"] = c.residual;
            d["tolerance"] = c.tolerance;
            d["seconds"] = c.seconds;
            d["detail"] = c.detail;
            out.append(d);
        }
        return out;
    }, py::arg("only") = std::vector<std::string>{});
    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command-line tool in process; returns (exit_code, stdout, stderr).");
}
