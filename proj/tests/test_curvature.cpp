#include <gtest/gtest.h>

#include <random>

#include "igq/curvature.hpp"
#include "igq/models.hpp"
#include "igq/oracle.hpp"

using namespace igq;

namespace {
const double kSigmas[] = {0.1, 0.5, 1.0, 3.0, 10.0};
const double kRs[] = {0.0, 0.3, 0.5, 0.7, 0.9};
}  // namespace

TEST(Christoffel, Values) {
    const auto G = curvature::christoffel(1, {0.0});
    EXPECT_DOUBLE_EQ(G(2, 0, 0), 0.25);
    EXPECT_DOUBLE_EQ(G(0, 0, 2), -1.0);
    EXPECT_DOUBLE_EQ(G(2, 0, 1), 0.0);
    EXPECT_NEAR(curvature::christoffel(2, {0.5})(2, 0, 1), -1.0 / 12, 1e-15);
}

TEST(Christoffel, LowerSymmetry) {
    const auto G = curvature::christoffel(0.7, {0.4});
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) EXPECT_EQ(G(a, b, c), G(a, c, b));
}

TEST(Christoffel, MatchesFiniteDifference) {
    for (double s : kSigmas)
        for (double r : kRs) {
            const auto G = curvature::christoffel(s, {r});
            const auto b = oracle::curvature_fd(s, {r});
            for (int i = 0; i < 27; ++i) EXPECT_NEAR(G.v[i], b.gamma.v[i], 1e-6 * std::max(1.0, 1 / s));
        }
}

TEST(Riemann, Values) {
    EXPECT_NEAR(curvature::riemann(1, {0.0})(0, 1, 0, 1), -0.25, 1e-15);
    EXPECT_NEAR(curvature::riemann(1, {0.5})(0, 2, 1, 2), 2.0 / 3, 1e-15);
}

TEST(Riemann, MatchesFiniteDifference) {
    for (double s : kSigmas)
        for (double r : kRs) {
            const auto R = curvature::riemann(s, {r});
            const auto b = oracle::curvature_fd(s, {r});
            // relative to the tensor scale, which spans 1e-4 .. 5e4 over the grid
            for (int i = 0; i < 81; ++i) EXPECT_NEAR(R.v[i], b.riemann.v[i], 1e-5 * R.max_abs()) << s << " " << r;
            EXPECT_LT(b.richardson_gap, 1e-6);
        }
}

TEST(Riemann, AlgebraicSymmetries) {
    for (double s : kSigmas)
        for (double r : kRs) {
            const auto R = curvature::riemann(s, {r});
            EXPECT_LE(curvature::riemann_symmetry_residual(R), 1e-12 * R.max_abs());
        }
}

TEST(Ricci, ValuesAndContraction) {
    const Metric3 a = curvature::ricci(1, {0.0});
    EXPECT_DOUBLE_EQ(a(0, 0), -0.5);
    EXPECT_DOUBLE_EQ(a(2, 2), -2.0);
    EXPECT_NEAR(curvature::ricci(1, {0.5})(0, 1), 1.0 / 3, 1e-15);
    for (double s : kSigmas)
        for (double r : kRs) {
            const auto R = curvature::riemann(s, {r});
            const Metric3 gi = curvature::inverse_metric(s, {r});
            const Metric3 ric = curvature::ricci(s, {r});
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k) {
                    double c = 0;
                    for (int b = 0; b < 3; ++b)
                        for (int d = 0; d < 3; ++d) c += gi(b, d) * R(i, b, k, d);
                    EXPECT_NEAR(c, ric(i, k), 1e-10 * ric.cwiseAbs().maxCoeff());
                }
        }
}

TEST(Scalar, ConstantAndContraction) {
    EXPECT_EQ(curvature::scalar_curvature({0.0}), -1.5);
    EXPECT_EQ(curvature::scalar_curvature({0.5}), -1.5);
    for (double s : kSigmas)
        for (double r : kRs) {
            const double R = (curvature::inverse_metric(s, {r}).array() * curvature::ricci(s, {r}).array()).sum();
            EXPECT_NEAR(R, -1.5, 1e-12);
            EXPECT_NEAR(curvature::sectional_sum(s, {r}), -1.5, 1e-12);
        }
    EXPECT_THROW(curvature::scalar_curvature({1.0}), DomainError);
}

TEST(Sectional, CoordinatePlanes) {
    const Vec3 e1 = Vec3::UnitX(), e2 = Vec3::UnitY(), e3 = Vec3::UnitZ();
    EXPECT_NEAR(curvature::sectional(1, {0.0}, e1, e2), -0.25, 1e-15);
    EXPECT_NEAR(curvature::sectional(2, {0.5}, e1, e3), -0.25, 1e-15);
    EXPECT_THROW(curvature::sectional(1, {0.2}, e1, 2 * e1), DomainError);
}

TEST(Sectional, RandomPlanes) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1, 1), ls(std::log(0.1), std::log(10)), ur(0, 0.95);
    for (int k = 0; k < 100; ++k) {
        const double s = std::exp(ls(rng)), r = ur(rng);
        const Vec3 a(u(rng), u(rng), u(rng)), b(u(rng), u(rng), u(rng));
        EXPECT_NEAR(curvature::sectional(s, {r}, a, b), -0.25, 1e-10);
    }
}

TEST(Weyl, Vanishes) {
    EXPECT_LE(curvature::weyl(1, {0.0}).max_abs(), 1e-12);
    EXPECT_LE(curvature::weyl(3, {0.7}).max_abs(), 1e-12);
    for (double s : kSigmas)
        for (double r : kRs) EXPECT_LT(oracle::curvature_fd(s, {r}).weyl.max_abs(), 1e-5);
}

TEST(MaximalSymmetry, Residuals) {
    const auto a = curvature::maximal_symmetry_check(1, {0.0});
    EXPECT_EQ(a.ricci_residual, 0.0);
    EXPECT_EQ(a.riemann_residual, 0.0);
    EXPECT_EQ(a.trace_residual, 0.0);
    const auto b = curvature::maximal_symmetry_check(2, {0.5});
    EXPECT_LT(std::max({b.ricci_residual, b.riemann_residual, b.trace_residual}), 1e-12);
    const auto bad = curvature::maximal_symmetry_check(2, {0.5}, -1.4);
    EXPECT_GT(bad.ricci_residual, 1e-3);
    EXPECT_GT(bad.riemann_residual, 1e-3);
}

TEST(FiniteDifference, RejectsBadStep) {
    EXPECT_THROW(oracle::curvature_fd(1, {0.3}, 0.5), DomainError);
    EXPECT_THROW(oracle::curvature_fd(1, {0.3}, 1e-9), ConvergenceError);
}
