#include <cmath>
#include <sstream>

#include "igq/curvature.hpp"
#include "igq/models.hpp"
#include "igq/oracle.hpp"

namespace igq::oracle {

namespace {

template <class F>
auto d5(F f, const Vec3& x, int axis, double h) {
    Vec3 e = Vec3::Zero();
    e[axis] = h;
    return (f(x - 2.0 * e) - 8.0 * f(x - e) + 8.0 * f(x + e) - f(x + 2.0 * e)) * (1.0 / (12.0 * h));
}

struct Fd {
    ModelParams p;
    Vec3 h;  // per-coordinate step

    Metric3 g(const Vec3& x) const { return models::metric_corr3(x[2], p); }

    // Gamma^a_bc = 1/2 g^ad (d_b g_dc + d_c g_db - d_d g_bc), packed as 27-vectors
    Eigen::Matrix<double, 27, 1> gamma(const Vec3& x) const {
        std::array<Metric3, 3> dg;
        for (int d = 0; d < 3; ++d) dg[d] = d5([this](const Vec3& y) { return g(y); }, x, d, h[d]);
        const Metric3 gi = g(x).inverse();
        Eigen::Matrix<double, 27, 1> G;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    double s = 0.0;
                    for (int d = 0; d < 3; ++d) s += gi(a, d) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
                    G[9 * a + 3 * b + c] = 0.5 * s;
                }
        return G;
    }

    Tensor4 riemann(const Vec3& x) const {
        std::array<Eigen::Matrix<double, 27, 1>, 3> dG;
        for (int d = 0; d < 3; ++d) dG[d] = d5([this](const Vec3& y) { return gamma(y); }, x, d, h[d]);
        const auto G = gamma(x);
        auto Gm = [&](int a, int b, int c) { return G[9 * a + 3 * b + c]; };
        auto dGm = [&](int d, int a, int b, int c) { return dG[d][9 * a + 3 * b + c]; };
        Tensor4 Rup;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d) {
                        double s = dGm(c, a, b, d) - dGm(d, a, b, c);
                        for (int f = 0; f < 3; ++f) s += Gm(a, f, c) * Gm(f, b, d) - Gm(a, f, d) * Gm(f, b, c);
                        Rup(a, b, c, d) = s;
                    }
        const Metric3 gx = g(x);
        Tensor4 R;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d) {
                        double s = 0.0;
                        for (int e = 0; e < 3; ++e) s += gx(a, e) * Rup(e, b, c, d);
                        R(a, b, c, d) = s;
                    }
        return R;
    }
};

}  // namespace

CurvatureBundle curvature_fd(double sigma, ModelParams p, double step) {
    check_sigma(sigma);
    check_r(p.r);
    if (!(step > 0.0 && step < 0.05)) throw DomainError("curvature_fd: relative step must lie in (0, 0.05)");
    const Vec3 x(0.0, 0.0, sigma);
    // steps scale with the coordinate magnitude, floored at sigma for the mu axes
    const Fd fd{p, Vec3(step * sigma, step * sigma, step * sigma)};
    const Fd coarse{p, 2.0 * fd.h};

    CurvatureBundle b;
    const auto G = fd.gamma(x);
    for (int i = 0; i < 27; ++i) b.gamma.v[i] = G[i];
    b.riemann = fd.riemann(x);

    const Tensor4 Rc = coarse.riemann(x);
    double diff = 0.0;
    for (int i = 0; i < 81; ++i) diff = std::max(diff, std::abs(Rc.v[i] - b.riemann.v[i]));
    b.richardson_gap = diff / b.riemann.max_abs();
    if (b.richardson_gap > 1e-4) {
        std::ostringstream os;
        os << "curvature_fd: step " << step << " and its double disagree by " << b.richardson_gap;
        throw ConvergenceError(os.str());
    }

    const Metric3 g = fd.g(x);
    const Metric3 gi = g.inverse();
    b.ricci.setZero();
    for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c)
            for (int bb = 0; bb < 3; ++bb)
                for (int d = 0; d < 3; ++d) b.ricci(a, c) += gi(bb, d) * b.riemann(a, bb, c, d);
    b.scalar = (gi.array() * b.ricci.array()).sum();
    b.weyl = curvature::weyl_from(b.riemann, b.ricci, g);
    return b;
}

double sectional_fd(const CurvatureBundle& b, const Metric3& g, const Vec3& u, const Vec3& v) {
    double num = 0.0, den = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int bb = 0; bb < 3; ++bb)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    const double w = u[a] * v[bb] * u[c] * v[d];
                    num += b.riemann(a, bb, c, d) * w;
                    den += (g(a, c) * g(bb, d) - g(a, d) * g(bb, c)) * w;
                }
    return num / den;
}

}  // namespace igq::oracle
