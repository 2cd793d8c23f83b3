#pragma once

#include <array>
#include <optional>

#include "igq/types.hpp"

// Connection and curvature of the 3D correlated manifold, closed form.
//
// Riemann convention: R^a_bcd = d_c G^a_bd - d_d G^a_bc + G^a_fc G^f_bd - G^a_fd G^f_bc,
// lowered on the first index with the exact metric.
namespace igq::curvature {

inline constexpr int kDim = 3;

Christoffel christoffel(double sigma, ModelParams p);
// d_d Gamma^a_bc for d = 0..2; only the sigma slot is nonzero.
std::array<Christoffel, 3> christoffel_derivative(double sigma, ModelParams p);

Metric3 inverse_metric(double sigma, ModelParams p);

Tensor4 riemann(double sigma, ModelParams p);
Metric3 ricci(double sigma, ModelParams p);
double scalar_curvature(ModelParams p);

// Sum of K(e_i, e_j) over ordered coordinate pairs i != j.
double sectional_sum(double sigma, ModelParams p);
double sectional(double sigma, ModelParams p, const Vec3& u, const Vec3& v);

// W_abcd = R_abcd - (R_bd g_ac - R_bc g_ad)/(n-1), from any (R, Ric, g).
Tensor4 weyl_from(const Tensor4& riem, const Metric3& ric, const Metric3& g);
Tensor4 weyl(double sigma, ModelParams p);

struct SymmetryReport {
    double ricci_residual = 0.0;    // max |R_ab - (R/n) g_ab|
    double riemann_residual = 0.0;  // max |R_abcd - R/(n(n-1)) (g_bd g_ac - g_bc g_ad)|
    double trace_residual = 0.0;    // |delta^a_a - n|
};
// scalar_override replaces R in the identities (negative controls).
SymmetryReport maximal_symmetry_check(double sigma, ModelParams p,
                                      std::optional<double> scalar_override = std::nullopt);

// Algebraic symmetries of a lowered Riemann tensor; returns the worst violation.
double riemann_symmetry_residual(const Tensor4& riem);

}  // namespace igq::curvature
