#include "igq/geodesics.hpp"

#include <cmath>
#include <sstream>

namespace igq::geodesics {

void validate(const InitialConditions& ic) {
    check_sigma(ic.p0, "p0");
    check_sigma(ic.sigma0, "sigma0");
    check_sigma(ic.tau0, "tau0");
    check_sigma(ic.R0, "R0");
    // well-localized packets; the boundary value 0.1 itself is admitted
    if (ic.sigma0 / ic.p0 > 0.1) {
        std::ostringstream os;
        os << "sigma0/p0 = " << ic.sigma0 / ic.p0 << " exceeds 0.1";
        throw DomainError(os.str());
    }
}

double amplitude_A0(const InitialConditions& ic) {
    validate(ic);
    return std::asinh(ic.p0 / (std::sqrt(2.0) * ic.sigma0)) / ic.tau0;
}

double amplitude_A0_series(const InitialConditions& ic) {
    validate(ic);
    const double e2 = std::pow(ic.sigma0 / ic.p0, 2);
    return (std::log(std::sqrt(2.0) * ic.p0 / ic.sigma0) + 0.5 * e2 - 0.375 * e2 * e2) / ic.tau0;
}

namespace {

double phase(double tau, double A0) {
    const double x = A0 * tau;
    if (std::abs(x) > kMaxPhase) {
        std::ostringstream os;
        os << "|A0 tau| = " << std::abs(x) << " saturates (limit " << kMaxPhase << ")";
        throw RegimeError(os.str());
    }
    return x;
}

// mu amplitude sqrt(p0^2 + 2 sigma0^2) and sigma peak sqrt(p0^2/2 + sigma0^2)
double mu_amp(const InitialConditions& ic) { return std::sqrt(ic.p0 * ic.p0 + 2.0 * ic.sigma0 * ic.sigma0); }
double sig_amp(const InitialConditions& ic) { return std::sqrt(0.5 * ic.p0 * ic.p0 + ic.sigma0 * ic.sigma0); }

}  // namespace

Macrostate3 geodesic_corr(double tau, ModelParams p, const InitialConditions& ic) {
    check_r(p.r);
    const double A0 = amplitude_A0(ic);
    const double x = phase(tau, A0);
    const double a = std::sqrt(1.0 - p.r) * mu_amp(ic);
    const double mu1 = -a * std::tanh(x);
    return {mu1, -mu1, sig_amp(ic) / std::cosh(x)};
}

Macrostate3 geodesic_noncorr(double tau, const InitialConditions& ic) {
    return geodesic_corr(tau, ModelParams{0.0}, ic);
}

Macrostate3 joined_path(double tau, ModelParams p, const InitialConditions& ic) {
    return tau < 0.0 ? geodesic_noncorr(tau, ic) : geodesic_corr(tau, p, ic);
}

Vec3 velocity_corr(double tau, ModelParams p, const InitialConditions& ic) {
    check_r(p.r);
    const double A0 = amplitude_A0(ic);
    const double x = phase(tau, A0);
    const double a = std::sqrt(1.0 - p.r) * mu_amp(ic);
    const double sech = 1.0 / std::cosh(x);
    const double dmu1 = -a * A0 * sech * sech;
    return {dmu1, -dmu1, -sig_amp(ic) * A0 * sech * std::tanh(x)};
}

RiccatiConstants riccati_constants(ModelParams p, const InitialConditions& ic) {
    check_r(p.r);
    const double A0 = amplitude_A0(ic);
    const double s = sig_amp(ic);
    RiccatiConstants k;
    // -E/C = s^2 and sqrt(-CE/2) = A0, with C < 0 < E
    k.C = -std::sqrt(2.0) * A0 / s;
    k.E = -k.C * s * s;
    // same sigma profile on the correlated chart: E_r/C_r = E/C, gamma = A0
    k.C_r = -std::sqrt(2.0 * (1.0 - p.r)) * A0 / s;
    k.E_r = -k.C_r * s * s;
    k.gamma = std::sqrt(k.C_r * k.E_r / (2.0 * (p.r - 1.0)));
    k.delta = 1.0;
    k.p0_prime = std::sqrt(1.0 - p.r) * ic.p0;
    k.sigma0_prime = ic.sigma0;
    return k;
}

Macrostate3 geodesic_from_constants(double tau, double C, double E, ModelParams p) {
    check_r(p.r);
    if (!(C < 0.0 && E > 0.0)) throw DomainError("Riccati constants need C < 0 < E");
    const double r = p.r;
    const double g = std::sqrt(C * E / (2.0 * (r - 1.0)));
    const double amp = std::sqrt(2.0 * E * (r - 1.0) / C);
    const double x = phase(tau, g);
    const double mu1 = -amp * std::tanh(x);
    return {mu1, -mu1, std::sqrt(-E / C) / std::cosh(x)};
}

Vec3 geodesic_acceleration(const Vec3& th, const Vec3& d, ModelParams p) {
    check_r(p.r);
    const double s = th[2];
    check_sigma(s);
    const double r = p.r;
    const double q = 1.0 - r * r;
    Vec3 acc;
    acc[0] = 2.0 / s * d[0] * d[2];
    acc[1] = 2.0 / s * d[1] * d[2];
    acc[2] = d[2] * d[2] / s - (d[0] * d[0] + d[1] * d[1]) / (4.0 * s * q) + r * d[0] * d[1] / (2.0 * s * q);
    return acc;
}

double geodesic_residual(ModelParams p, const InitialConditions& ic, std::span<const double> tau_grid,
                         const Path& path) {
    if (tau_grid.size() < 5) throw DomainError("geodesic_residual needs at least 5 grid points");
    const double h = 1e-3 / amplitude_A0(ic);
    double worst = 0.0;
    for (double t : tau_grid) {
        const Vec3 fm2 = path(t - 2 * h), fm1 = path(t - h), f0 = path(t), fp1 = path(t + h), fp2 = path(t + 2 * h);
        const Vec3 d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        const Vec3 d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
        worst = std::max(worst, (d2 - geodesic_acceleration(f0, d1, p)).norm());
    }
    return worst;
}

double geodesic_residual(ModelParams p, const InitialConditions& ic, std::span<const double> tau_grid) {
    return geodesic_residual(p, ic, tau_grid, [&](double t) {
        const Macrostate3 m = geodesic_corr(t, p, ic);
        return Vec3(m.mu1, m.mu2, m.sigma);
    });
}

double momentum_difference(double tau, ModelParams p, const InitialConditions& ic) {
    if (tau < 0.0) throw DomainError("momentum_difference: the correlated form needs tau >= 0");
    return geodesic_corr(tau, p, ic).mu2;
}

}  // namespace igq::geodesics
