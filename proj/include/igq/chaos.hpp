#pragma once

#include "igq/types.hpp"

// Jacobi-Levi-Civita reduction on the constant-curvature manifold and the
// resulting Lyapunov indicator.
namespace igq::chaos {

// Q = R |v|^2 / (n (n-1)); equals -A0^2.
double jlc_coefficient(double A0);
double velocity_norm_squared(ModelParams p, const InitialConditions& ic, double tau);
double jacobi_intensity(double tau, double omega0, double A0);
double jacobi_intensity_rate(double tau, double omega0, double A0);
double lyapunov_exponent(double A0);

struct LyapunovEstimate {
    double finite = 0.0;        // (1/tau) ln[(J^2 + J'^2) / (J(0)^2 + J'(0)^2)] at tau_max
    double extrapolated = 0.0;  // 2 l(tau_max) - l(tau_max/2), cancels the 1/tau bias
    double value() const { return extrapolated; }
};
// Warns when A0 tau_max < 5.
LyapunovEstimate lyapunov_estimate(double omega0, double A0, double tau_max, Warnings* w = nullptr);

}  // namespace igq::chaos
