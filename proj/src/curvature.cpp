#include "igq/curvature.hpp"

#include <cmath>

#include "igq/models.hpp"

namespace igq::curvature {

Christoffel christoffel(double sigma, ModelParams p) {
    check_sigma(sigma);
    check_r(p.r);
    const double r = p.r;
    Christoffel G;
    G(0, 0, 2) = G(0, 2, 0) = -1.0 / sigma;
    G(1, 1, 2) = G(1, 2, 1) = -1.0 / sigma;
    G(2, 2, 2) = -1.0 / sigma;
    G(2, 0, 0) = 1.0 / (4.0 * sigma * (1.0 - r * r));
    G(2, 1, 1) = 1.0 / (4.0 * sigma * (1.0 - r * r));
    G(2, 0, 1) = G(2, 1, 0) = r / (4.0 * sigma * (r * r - 1.0));
    return G;
}

std::array<Christoffel, 3> christoffel_derivative(double sigma, ModelParams p) {
    // every symbol scales as 1/sigma
    Christoffel G = christoffel(sigma, p);
    std::array<Christoffel, 3> dG{};
    for (int i = 0; i < 27; ++i) dG[2].v[i] = -G.v[i] / sigma;
    return dG;
}

Metric3 inverse_metric(double sigma, ModelParams p) {
    check_sigma(sigma);
    check_r(p.r);
    const double s2 = sigma * sigma;
    Metric3 gi;
    gi << s2, p.r * s2, 0.0,
        p.r * s2, s2, 0.0,
        0.0, 0.0, s2 / 4.0;
    return gi;
}

namespace {

// Fill R_abcd and all images under the antisymmetries and pair symmetry.
void put(Tensor4& R, int a, int b, int c, int d, double x) {
    R(a, b, c, d) = x;
    R(b, a, c, d) = -x;
    R(a, b, d, c) = -x;
    R(b, a, d, c) = x;
    R(c, d, a, b) = x;
    R(d, c, a, b) = -x;
    R(c, d, b, a) = -x;
    R(d, c, b, a) = x;
}

}  // namespace

Tensor4 riemann(double sigma, ModelParams p) {
    check_sigma(sigma);
    check_r(p.r);
    const double r = p.r;
    const double s4 = std::pow(sigma, 4);
    const double den = s4 * (r * r - 1.0);
    Tensor4 R;
    put(R, 0, 1, 0, 1, 1.0 / (4.0 * den));
    put(R, 0, 2, 0, 2, 1.0 / den);
    put(R, 0, 2, 1, 2, -r / den);
    put(R, 1, 2, 1, 2, 1.0 / den);
    return R;
}

Metric3 ricci(double sigma, ModelParams p) {
    check_sigma(sigma);
    check_r(p.r);
    const double r = p.r;
    const double den = 2.0 * sigma * sigma * (r * r - 1.0);
    Metric3 Ric = Metric3::Zero();
    Ric(0, 0) = 1.0 / den;
    Ric(1, 1) = 1.0 / den;
    Ric(0, 1) = Ric(1, 0) = -r / den;
    Ric(2, 2) = -2.0 / (sigma * sigma);
    return Ric;
}

double scalar_curvature(ModelParams p) {
    check_r(p.r);
    return -1.5;
}

double sectional(double sigma, ModelParams p, const Vec3& u, const Vec3& v) {
    const Tensor4 R = riemann(sigma, p);
    const Metric3 g = models::metric_corr3(sigma, p);
    double num = 0.0, den = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    const double w = u[a] * v[b] * u[c] * v[d];
                    num += R(a, b, c, d) * w;
                    den += (g(a, c) * g(b, d) - g(a, d) * g(b, c)) * w;
                }
    // den is the squared area of the plane; compare against |u|^2 |v|^2
    const double scale = u.dot(g * u) * v.dot(g * v);
    if (!(std::abs(den) > 1e-12 * scale)) throw DomainError("sectional: u and v span a degenerate plane");
    return num / den;
}

double sectional_sum(double sigma, ModelParams p) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) s += sectional(sigma, p, Vec3::Unit(i), Vec3::Unit(j));
    return s;
}

Tensor4 weyl_from(const Tensor4& riem, const Metric3& ric, const Metric3& g) {
    constexpr double n = kDim;
    Tensor4 W;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    W(a, b, c, d) = riem(a, b, c, d) - (ric(b, d) * g(a, c) - ric(b, c) * g(a, d)) / (n - 1.0);
    return W;
}

Tensor4 weyl(double sigma, ModelParams p) {
    return weyl_from(riemann(sigma, p), ricci(sigma, p), models::metric_corr3(sigma, p));
}

SymmetryReport maximal_symmetry_check(double sigma, ModelParams p, std::optional<double> scalar_override) {
    constexpr double n = kDim;
    const double Rs = scalar_override.value_or(scalar_curvature(p));
    const Metric3 g = models::metric_corr3(sigma, p);
    const Metric3 Ric = ricci(sigma, p);
    const Tensor4 R = riemann(sigma, p);
    SymmetryReport rep;
    rep.ricci_residual = (Ric - (Rs / n) * g).cwiseAbs().maxCoeff();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    const double rhs = Rs / (n * (n - 1.0)) * (g(b, d) * g(a, c) - g(b, c) * g(a, d));
                    rep.riemann_residual = std::max(rep.riemann_residual, std::abs(R(a, b, c, d) - rhs));
                }
    rep.trace_residual = std::abs((inverse_metric(sigma, p) * g).trace() - n);
    return rep;
}

double riemann_symmetry_residual(const Tensor4& R) {
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    const double x = R(a, b, c, d);
                    worst = std::max({worst, std::abs(x + R(b, a, c, d)), std::abs(x + R(a, b, d, c)),
                                      std::abs(x - R(c, d, a, b)),
                                      std::abs(x + R(a, c, d, b) + R(a, d, b, c))});
                }
    return worst;
}

}  // namespace igq::curvature
