#include <gtest/gtest.h>

#include <cmath>

#include "igq/chaos.hpp"
#include "igq/curvature.hpp"
#include "igq/geodesics.hpp"
#include "igq/oracle.hpp"

using namespace igq;

namespace {
const InitialConditions kIc{1.0, 0.1, 1.0, 10.0};
}

TEST(Jlc, Coefficient) {
    EXPECT_NEAR(chaos::jlc_coefficient(1.0), -1.0, 1e-15);
    const double A0 = geodesics::amplitude_A0(kIc);
    EXPECT_NEAR(chaos::jlc_coefficient(A0), -7.044361438653984, 1e-12);
    const double assembled = curvature::scalar_curvature({0.3}) * chaos::velocity_norm_squared({0.3}, kIc, 0.4) / 6;
    EXPECT_NEAR(assembled, -A0 * A0, 1e-12);
    EXPECT_THROW(chaos::jlc_coefficient(0.0), DomainError);
}

TEST(Jlc, VelocityNorm) {
    for (double r : {0.0, 0.5})
        for (double t : {-1.0, 0.0, 2.0})
            EXPECT_NEAR(chaos::velocity_norm_squared({r}, kIc, t), 28.177445754615937, 1e-12);
}

TEST(Jacobi, Intensity) {
    EXPECT_EQ(chaos::jacobi_intensity(0, 1, 1), 0.0);
    EXPECT_NEAR(chaos::jacobi_intensity(1, 1, 1), 1.1752011936438014, 1e-15);
    // J'' = A0^2 J with the analytic second derivative
    const double A0 = 1.7, w = 0.8;
    for (double t : {0.1, 1.0, 3.0}) {
        const double d2 = w * A0 * std::sinh(A0 * t);
        EXPECT_NEAR(d2 + chaos::jlc_coefficient(A0) * chaos::jacobi_intensity(t, w, A0), 0.0, 1e-9 * d2);
        EXPECT_NEAR(chaos::jacobi_intensity_rate(t, w, A0), w * std::cosh(A0 * t), 1e-12);
    }
}

TEST(Jacobi, ScalarOde) {
    const double A0 = geodesics::amplitude_A0(kIc);
    std::vector<double> taus;
    for (int i = 0; i <= 50; ++i) taus.push_back(5.0 / A0 * i / 50);
    const auto J = oracle::jacobi_scalar_integrate(1.0, A0, taus);
    for (std::size_t i = 1; i < taus.size(); ++i) {
        const double e = chaos::jacobi_intensity(taus[i], 1.0, A0);
        EXPECT_NEAR(J[i] / e, 1.0, 1e-8);
    }
}

TEST(Jacobi, VectorOdeMatchesClosedForm) {
    const double A0 = geodesics::amplitude_A0(kIc);
    std::vector<double> taus;
    for (int i = 0; i <= 45; ++i) taus.push_back(0.5 / A0 + 4.5 / A0 * i / 45);
    taus.insert(taus.begin(), 0.0);
    for (double r : {0.0, 0.5}) {
        const auto run = oracle::jacobi_integrate({r}, kIc, taus);
        for (std::size_t i = 1; i < taus.size(); ++i)
            EXPECT_NEAR(run.intensity[i] / chaos::jacobi_intensity(taus[i], 1.0, A0), 1.0, 1e-5);
        EXPECT_LT(run.max_orthogonality, 1e-8);
    }
}


TEST(Jacobi, FittedRateRIndependent) {
    const double A0 = geodesics::amplitude_A0(kIc);
    std::vector<double> taus;
    for (int i = 0; i <= 400; ++i) taus.push_back(20.0 / A0 * i / 400);
    const double a = oracle::jacobi_integrate({0.0}, kIc, taus).fitted_rate;
    const double b = oracle::jacobi_integrate({0.5}, kIc, taus).fitted_rate;
    EXPECT_NEAR(a / A0, 1.0, 1e-3);
    EXPECT_NEAR(a / b, 1.0, 1e-6);
}

TEST(Lyapunov, Exponent) {
    EXPECT_EQ(chaos::lyapunov_exponent(1.0), 2.0);
    EXPECT_NEAR(chaos::lyapunov_exponent(geodesics::amplitude_A0(kIc)), 5.308243189099001, 1e-12);
}

TEST(Lyapunov, Estimate) {
    Warnings w;
    const auto e20 = chaos::lyapunov_estimate(1.0, 1.0, 20.0, &w);
    EXPECT_TRUE(w.empty());
    EXPECT_NEAR(e20.value(), 2.0, 0.01);
    // the raw finite-horizon value carries a ln(2)/tau bias
    EXPECT_NEAR(e20.finite, 2.0 - std::log(2.0) / 20, 1e-6);
    const auto e40 = chaos::lyapunov_estimate(1.0, 1.0, 40.0);
    EXPECT_LT(std::abs(e40.finite - 2), std::abs(e20.finite - 2));
    EXPECT_NEAR(chaos::lyapunov_estimate(3.5, 1.0, 20.0).value(), e20.value(), 1e-12);
    EXPECT_NEAR(chaos::lyapunov_estimate(1.0, 1.0, 2000.0).value(), 2.0, 1e-12);
}

TEST(Lyapunov, ExtrapolatedErrorDecays) {
    const double A0 = 2.0;
    double prev = 1.0;
    for (double k : {10.0, 20.0, 40.0}) {
        const double err = std::abs(chaos::lyapunov_estimate(1.0, A0, k / A0).value() - 2 * A0);
        EXPECT_LT(err, prev);
        prev = err;
    }
}

TEST(Lyapunov, Guards) {
    Warnings w;
    chaos::lyapunov_estimate(1.0, 1.0, 2.0, &w);
    EXPECT_EQ(w.size(), 1u);
    EXPECT_THROW(chaos::lyapunov_estimate(0.0, 1.0, 20.0), DomainError);
    EXPECT_THROW(chaos::lyapunov_estimate(1.0, -1.0, 20.0), DomainError);
}
