#pragma once

#include <functional>
#include <span>

#include "igq/types.hpp"

// Closed-form geodesics of the 3D manifold. The uncorrelated branch runs for
// tau < 0 (before the collision) and the correlated branch for tau >= 0.
namespace igq::geodesics {

// |A0 tau| beyond this saturates cosh.
inline constexpr double kMaxPhase = 700.0;

void validate(const InitialConditions& ic);

double amplitude_A0(const InitialConditions& ic);
// Small sigma0/p0 expansion, kept as a cross-check only.
double amplitude_A0_series(const InitialConditions& ic);

Macrostate3 geodesic_noncorr(double tau, const InitialConditions& ic);
Macrostate3 geodesic_corr(double tau, ModelParams p, const InitialConditions& ic);
Macrostate3 joined_path(double tau, ModelParams p, const InitialConditions& ic);

// d/dtau of the closed-form correlated path.
Vec3 velocity_corr(double tau, ModelParams p, const InitialConditions& ic);

struct RiccatiConstants {
    double C = 0.0, E = 0.0;
    double C_r = 0.0, E_r = 0.0;
    double gamma = 0.0;
    double delta = 1.0;
    double p0_prime = 0.0;      // momentum the correlated branch would assign at -tau0
    double sigma0_prime = 0.0;  // matching spread, equal to sigma0
};
RiccatiConstants riccati_constants(ModelParams p, const InitialConditions& ic);
// Geodesic rebuilt from (C_r, E_r) alone.
Macrostate3 geodesic_from_constants(double tau, double C, double E, ModelParams p);

// Second derivative implied by the geodesic equations at (theta, theta').
Vec3 geodesic_acceleration(const Vec3& theta, const Vec3& dtheta, ModelParams p);

// Max norm of the geodesic equations on a path, derivatives by a 5-point stencil
// with step 1e-3/A0. The default path is the closed-form correlated branch.
using Path = std::function<Vec3(double)>;
double geodesic_residual(ModelParams p, const InitialConditions& ic, std::span<const double> tau_grid);
double geodesic_residual(ModelParams p, const InitialConditions& ic, std::span<const double> tau_grid,
                         const Path& path);

double momentum_difference(double tau, ModelParams p, const InitialConditions& ic);

}  // namespace igq::geodesics
