#pragma once

#include "igq/types.hpp"

// Information geometric complexity (IGC) and entropy (IGE) along the geodesic flow.
namespace igq::complexity {

// lambda tau beyond this overflows sinh.
inline constexpr double kMaxLambdaTau = 700.0;

double fisher_density(double sigma, ModelParams p);

// Published closed form: (8c/lambda)[-3/4 lambda + sinh(lambda tau)/(4 tau) + tanh(lambda tau/2)/tau],
// c = sqrt((1-r)/(1+r)), lambda = 2 A0.
double igc_closed(double tau, ModelParams p, const InitialConditions& ic);
// Exact time average of the box volume as literally defined. Same bracket, prefactor 4c/lambda.
double igc_literal(double tau, ModelParams p, const InitialConditions& ic);

// lambda tau - ln(lambda tau) + ln(c); warns when lambda tau < 5.
double ige_closed(double tau, ModelParams p, const InitialConditions& ic, Warnings* w = nullptr);

double igc_ratio(ModelParams p);
double r_from_complexities(double v_noncorr, double v_corr);
double purity_from_complexity(double r, double eta_c);

struct ComplexityReport {
    double igc = 0.0;
    double ige = 0.0;
    double tau = 0.0;
    ModelParams params;
    double lambda_tau = 0.0;
    double igc_ratio = 1.0;  // igc / igc at r = 0, same horizon
    double ige_gap = 0.0;    // ige - ige at r = 0
};
ComplexityReport report(double tau, ModelParams p, const InitialConditions& ic, Warnings* w = nullptr);

}  // namespace igq::complexity
