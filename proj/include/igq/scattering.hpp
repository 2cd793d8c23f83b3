#pragma once

#include <complex>

#include "igq/types.hpp"

// Quantum side of the correspondence: post-collision densities, purity,
// s-wave phase shift of a repulsive square well, and the prolongation.
//
// The scattering amplitude is the constant f = -a_s throughout.
namespace igq::scattering {

void validate(const ScatteringConfig& cfg, Warnings* w = nullptr);

double density_pre(const ScatteringConfig& cfg, double k1, double k2);
double density_post(const ScatteringConfig& cfg, double r_qm, double k1, double k2);

std::complex<double> varrho(const ScatteringConfig& cfg, double k);
double varrho_real_approx(const ScatteringConfig& cfg, double k);  // 4 R0 k^2 f
double varrho_abs2_approx(const ScatteringConfig& cfg, double k);  // 16 (k0^2 + s^4 R0^2) k^4 f^2 / s^4

double r_qm(const ScatteringConfig& cfg, Warnings* w = nullptr);
// Integral of e^{-k^2/s^2} k^n over the line.
double gaussian_moment(int n, double sigma);
double normalization_integral(const ScatteringConfig& cfg);

double purity_series(const ScatteringConfig& cfg, Warnings* w = nullptr);
double purity_cross_section(const ScatteringConfig& cfg, double sigma_cs, Warnings* w = nullptr);

double relative_energy(const ScatteringConfig& cfg);  // hbar^2 k0^2 / (2 mu)
double phase_shift_exact(const ScatteringConfig& cfg, double r);
// Second-order expansion of tan(theta0) in r and k0 L.
double phase_shift_series_tan(const ScatteringConfig& cfg, double r, Warnings* w = nullptr);
// Leading term theta0 = -r (k0 L)^3 / 3.
double phase_shift_series(const ScatteringConfig& cfg, double r, Warnings* w = nullptr);
double phase_shift_from_potential(double V, const ScatteringConfig& cfg);
double square_well_matching(const ScatteringConfig& cfg, double V);

double potential_from_r(double r, const ScatteringConfig& cfg);
double cross_section(const ScatteringConfig& cfg, double r);
// Sigma = 4 pi a_s^2 for the constant amplitude.
double cross_section_from_length(double a_s);
double purity_from_r(const ScatteringConfig& cfg, double r);
double potential_density(const ScatteringConfig& cfg);

double r_from_potential(const ScatteringConfig& cfg, double V);
double r_from_cross_section(const ScatteringConfig& cfg, double sigma_cs);
double r_from_purity(const ScatteringConfig& cfg, double purity);

// eta_C of the complexity-purity link, (8/3) k0^2 (2 k0^2 + s^2) R0 L^3.
double eta_complexity(const ScatteringConfig& cfg);

struct ProlongationReport {
    double delta = 0.0;         // exact, tau_star - tau0
    double delta_approx = 0.0;  // from the linearized exponential
    double tau_star = 0.0;
    double eta_delta = 0.0;
    double r_bound = 0.0;
    double relative_gap = 0.0;  // |delta_approx - delta| / delta, zero at r = 0
};

struct BoundViolation : DomainError {
    double r_bound;
    BoundViolation(const std::string& msg, double rb) : DomainError(msg), r_bound(rb) {}
};

ProlongationReport prolongation(const InitialConditions& ic, double r);
// Small sigma0/p0 expansion of 2/eta_delta.
double r_bound_series(const InitialConditions& ic);

}  // namespace igq::scattering
