#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace igq {

// Precondition failure on a physical input (sigma <= 0, r outside [0,1), ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Input is legal but outside the regime where an approximation holds.
struct RegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric oracle failed its own self-consistency check.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Optional sink for non-fatal regime warnings.
using Warnings = std::vector<std::string>;

inline void warn(Warnings* w, std::string msg) {
    if (w) w->push_back(std::move(msg));
}

// Largest admissible micro-correlation; metric entries blow up as r -> 1.
inline constexpr double kRMax = 1.0 - 1e-9;

struct Macrostate3 {
    double mu1 = 0.0;
    double mu2 = 0.0;
    double sigma = 1.0;
};

struct Macrostate4 {
    double mu_x = 0.0;
    double mu_y = 0.0;
    double sigma_x = 1.0;
    double sigma_y = 1.0;
};

struct ModelParams {
    double r = 0.0;
};

struct InitialConditions {
    double p0 = 1.0;
    double sigma0 = 0.1;
    double tau0 = 1.0;
    double R0 = 10.0;
};

struct ScatteringConfig {
    double k0 = 1.0;
    double sigma_k0 = 0.1;
    double R0 = 10.0;
    double L = 0.1;
    double a_s = 0.0;
    double reduced_mass = 0.5;
    double hbar = 1.0;
};

using Metric3 = Eigen::Matrix3d;
using Metric4 = Eigen::Matrix4d;
using Vec3 = Eigen::Vector3d;

// Gamma^a_bc, dense.
struct Christoffel {
    std::array<double, 27> v{};
    double& operator()(int a, int b, int c) { return v[9 * a + 3 * b + c]; }
    double operator()(int a, int b, int c) const { return v[9 * a + 3 * b + c]; }
};

// Rank-4 tensor on the 3D manifold, dense.
struct Tensor4 {
    std::array<double, 81> v{};
    double& operator()(int a, int b, int c, int d) { return v[27 * a + 9 * b + 3 * c + d]; }
    double operator()(int a, int b, int c, int d) const { return v[27 * a + 9 * b + 3 * c + d]; }
    double max_abs() const;
};

void check_sigma(double sigma, const char* what = "sigma");
void check_r(double r);

}  // namespace igq
