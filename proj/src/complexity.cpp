#include "igq/complexity.hpp"

#include <cmath>
#include <sstream>

#include "igq/chaos.hpp"
#include "igq/geodesics.hpp"

namespace igq::complexity {

double fisher_density(double sigma, ModelParams p) {
    check_sigma(sigma);
    check_r(p.r);
    return 2.0 / (std::sqrt(1.0 - p.r * p.r) * sigma * sigma * sigma);
}

double igc_ratio(ModelParams p) {
    check_r(p.r);
    return std::sqrt((1.0 - p.r) / (1.0 + p.r));
}

namespace {

double lambda_of(const InitialConditions& ic) { return chaos::lyapunov_exponent(geodesics::amplitude_A0(ic)); }

// [-3/4 lambda + sinh(lambda tau)/(4 tau) + tanh(lambda tau/2)/tau]
double bracket(double lam, double tau) {
    check_sigma(tau, "tau");
    const double x = lam * tau;
    if (x > kMaxLambdaTau) {
        std::ostringstream os;
        os << "lambda*tau = " << x << " exceeds the overflow guard " << kMaxLambdaTau;
        throw RegimeError(os.str());
    }
    if (x < 0.2) {
        // the three terms cancel through x^2; use the Taylor series instead
        const double x2 = x * x;
        const double poly = 1.0 / 160.0 +
                            x2 * (-1.0 / 2688.0 + x2 * (1.0 / 23040.0 + x2 * (-23.0 / 5322240.0 + x2 * 331.0 / 754790400.0)));
        return lam * x2 * x2 * poly;
    }
    return -0.75 * lam + 0.25 * std::sinh(x) / tau + std::tanh(0.5 * x) / tau;
}

}  // namespace

double igc_closed(double tau, ModelParams p, const InitialConditions& ic) {
    const double lam = lambda_of(ic);
    return 8.0 * igc_ratio(p) / lam * bracket(lam, tau);
}

double igc_literal(double tau, ModelParams p, const InitialConditions& ic) {
    const double lam = lambda_of(ic);
    return 4.0 * igc_ratio(p) / lam * bracket(lam, tau);
}

double ige_closed(double tau, ModelParams p, const InitialConditions& ic, Warnings* w) {
    check_sigma(tau, "tau");
    const double x = lambda_of(ic) * tau;
    if (x < 5.0) {
        std::ostringstream os;
        os << "lambda*tau = " << x << " < 5; IGE asymptotic form is inaccurate";
        warn(w, os.str());
    }
    return x - std::log(x) + std::log(igc_ratio(p));
}

double r_from_complexities(double v_noncorr, double v_corr) {
    check_sigma(v_noncorr, "v_noncorr");
    check_sigma(v_corr, "v_corr");
    if (v_corr > v_noncorr) throw DomainError("r_from_complexities: v_corr > v_noncorr implies r < 0");
    const double a = v_noncorr * v_noncorr, b = v_corr * v_corr;
    return (a - b) / (a + b);
}

double purity_from_complexity(double r, double eta_c) {
    check_r(r);
    check_sigma(eta_c, "eta_c");
    const double P = 1.0 - eta_c * r;
    if (P < 0.0) throw RegimeError("purity_from_complexity: eta_c*r > 1 leaves the perturbative regime");
    return P;
}

ComplexityReport report(double tau, ModelParams p, const InitialConditions& ic, Warnings* w) {
    ComplexityReport rep;
    rep.igc = igc_closed(tau, p, ic);
    rep.ige = ige_closed(tau, p, ic, w);
    rep.tau = tau;
    rep.params = p;
    rep.lambda_tau = lambda_of(ic) * tau;
    rep.igc_ratio = rep.igc / igc_closed(tau, {0.0}, ic);
    rep.ige_gap = rep.ige - ige_closed(tau, {0.0}, ic);
    return rep;
}

}  // namespace igq::complexity
