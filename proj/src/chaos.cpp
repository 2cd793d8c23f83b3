#include "igq/chaos.hpp"

#include <cmath>
#include <sstream>

#include "igq/curvature.hpp"
#include "igq/geodesics.hpp"

namespace igq::chaos {

namespace {
void check_A0(double A0) { check_sigma(A0, "A0"); }
}  // namespace

double jlc_coefficient(double A0) {
    check_A0(A0);
    constexpr double n = curvature::kDim;
    const double R = curvature::scalar_curvature(ModelParams{0.0});
    return R * (4.0 * A0 * A0) / (n * (n - 1.0));
}

double velocity_norm_squared(ModelParams p, const InitialConditions& ic, double tau) {
    check_r(p.r);
    (void)tau;  // constant along the path
    const double A0 = geodesics::amplitude_A0(ic);
    return 4.0 * A0 * A0;
}

double jacobi_intensity(double tau, double omega0, double A0) {
    check_A0(A0);
    return omega0 / A0 * std::sinh(A0 * tau);
}

double jacobi_intensity_rate(double tau, double omega0, double A0) {
    check_A0(A0);
    return omega0 * std::cosh(A0 * tau);
}

double lyapunov_exponent(double A0) {
    check_A0(A0);
    return 2.0 * std::sqrt(-jlc_coefficient(A0));
}

namespace {

// (1/tau) ln[(J^2 + J'^2)/(J(0)^2 + J'(0)^2)]. J(0) = 0, so the denominator is omega0^2.
double finite_rate(double omega0, double A0, double tau) {
    const double x = A0 * tau;
    if (x < 300.0) {
        const double J = jacobi_intensity(tau, omega0, A0);
        const double dJ = jacobi_intensity_rate(tau, omega0, A0);
        return std::log((J * J + dJ * dJ) / (omega0 * omega0)) / tau;
    }
    // same quantity with the growth factored out
    const double e = std::exp(-2.0 * x);
    const double s = (1.0 - e) * (1.0 - e) / (A0 * A0) + (1.0 + e) * (1.0 + e);
    return (2.0 * x + std::log(s / 4.0)) / tau;
}

}  // namespace

LyapunovEstimate lyapunov_estimate(double omega0, double A0, double tau_max, Warnings* w) {
    check_A0(A0);
    check_sigma(tau_max, "tau_max");
    if (omega0 == 0.0) throw DomainError("lyapunov_estimate: omega0 must be nonzero");
    if (A0 * tau_max < 5.0) {
        std::ostringstream os;
        os << "A0*tau_max = " << A0 * tau_max << " < 5; Lyapunov estimate is not asymptotic";
        warn(w, os.str());
    }
    LyapunovEstimate est;
    est.finite = finite_rate(omega0, A0, tau_max);
    est.extrapolated = 2.0 * est.finite - finite_rate(omega0, A0, 0.5 * tau_max);
    return est;
}

}  // namespace igq::chaos
