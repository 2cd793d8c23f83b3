#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "igq/types.hpp"

// Independent numeric engines used to check the closed forms. Nothing in here
// calls the closed-form operation it is meant to validate.
namespace igq::oracle {

enum class Scheme { GaussHermite, GaussLegendre, Adaptive };

struct QuadratureSpec {
    Scheme scheme = Scheme::GaussHermite;
    int order = 40;
    double cutoff = 8.0;  // half-width in spreads for truncated schemes
    double tolerance = 1e-12;
};

enum class OdeMethod { Rk4, Rk45Adaptive };

struct OdeSpec {
    OdeMethod method = OdeMethod::Rk45Adaptive;
    double tolerance = 1e-10;  // adaptive abs/rel tolerance
    double step = 1e-3;        // fixed RK4 step
};

struct Rule {
    std::vector<double> x, w;
};
// Golub-Welsch nodes: Hermite for weight e^{-t^2}, Legendre on [-1, 1].
Rule gauss_hermite(int n);
Rule gauss_legendre(int n);

enum class Model { Corr3, NonCorr3, Corr4 };

// Expectation of score products by quadrature. Corr3 and NonCorr3 return the
// upper-left 3x3 block; Corr4 uses index order (mu_x, sigma_x, mu_y, sigma_y).
Eigen::MatrixXd fisher_metric_numeric(Model model, const Macrostate4& state, ModelParams p,
                                      const QuadratureSpec& spec = {});

struct PathSample {
    double tau;
    Vec3 theta;
};
struct GeodesicRun {
    std::vector<PathSample> samples;
    double max_rel_error = 0.0;  // against the closed-form correlated path
    double round_trip_error = 0.0;
};
// Integrates the geodesic equations from the closed-form state at tau_span[0].
// With round_trip, integrates back to the start and reports the mismatch.
GeodesicRun geodesic_integrate(ModelParams p, const InitialConditions& ic, std::vector<double> taus,
                               const OdeSpec& spec = {}, bool round_trip = false);

struct CurvatureBundle {
    Christoffel gamma;
    Tensor4 riemann;  // lowered, R_abcd
    Metric3 ricci;
    double scalar = 0.0;
    Tensor4 weyl;
    double richardson_gap = 0.0;  // relative change of riemann when the step doubles
};
// Finite differences on metric_corr3 only: Christoffels from metric
// derivatives, Riemann from Christoffel derivatives, 5-point central stencils.
CurvatureBundle curvature_fd(double sigma, ModelParams p, double step = 1e-3);
double sectional_fd(const CurvatureBundle& b, const Metric3& g, const Vec3& u, const Vec3& v);

struct JacobiRun {
    std::vector<double> tau;
    std::vector<double> intensity;
    double max_orthogonality = 0.0;  // max |g(J, v)| / (|J| |v|) along the run
    double fitted_rate = 0.0;        // slope of ln J over the last ten units of A0 tau
};
// Vector JLC equation along the closed-form geodesic from J(0) = 0,
// DJ/dtau(0) = omega0 * (unit vector orthogonal to the velocity).
JacobiRun jacobi_integrate(ModelParams p, const InitialConditions& ic, std::vector<double> taus,
                           double omega0 = 1.0, const OdeSpec& spec = {});
// Scalar form J'' + Q J = 0 from (0, omega0).
std::vector<double> jacobi_scalar_integrate(double omega0, double A0, const std::vector<double>& taus,
                                            const OdeSpec& spec = {});

double purity_bruteforce(const ScatteringConfig& cfg, const QuadratureSpec& spec = {Scheme::GaussLegendre, 64, 8.0});
// 2D tensor-product integral of exp(-K^2/(4s^2) - k~^2/s^2) |1 + varrho|^2 in (K, k~).
double normalization_numeric(const ScatteringConfig& cfg, const QuadratureSpec& spec = {});

double igc_numeric(double tau, ModelParams p, const InitialConditions& ic, const QuadratureSpec& spec = {Scheme::Adaptive});

struct ReductionResult {
    bool applicable = true;
    double integral_6d = 0.0;
    double integral_2d = 0.0;
    double residual = 0.0;
};
// Per-axis spreads of particle 1; any anisotropy makes the check inapplicable.
ReductionResult dimensional_reduction_check(const ScatteringConfig& cfg, const QuadratureSpec& spec = {},
                                            std::optional<Vec3> spreads = std::nullopt);

// Line integral of f(x) with a Gaussian-like bump at center of width spread.
double integrate_line(const std::function<double(double)>& f, double center, double spread,
                      const QuadratureSpec& spec);

}  // namespace igq::oracle
