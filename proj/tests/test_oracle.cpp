#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "igq/models.hpp"
#include "igq/oracle.hpp"
#include "igq/scattering.hpp"

using namespace igq;

TEST(Rules, HermiteAndLegendre) {
    const auto h = oracle::gauss_hermite(20);
    double w = 0, m2 = 0;
    for (std::size_t i = 0; i < h.x.size(); ++i) {
        w += h.w[i];
        m2 += h.w[i] * h.x[i] * h.x[i];
    }
    EXPECT_NEAR(w, std::sqrt(std::numbers::pi), 1e-14);
    EXPECT_NEAR(m2, std::sqrt(std::numbers::pi) / 2, 1e-14);
    const auto l = oracle::gauss_legendre(10);
    double s = 0, x4 = 0;
    for (std::size_t i = 0; i < l.x.size(); ++i) {
        s += l.w[i];
        x4 += l.w[i] * std::pow(l.x[i], 4);
    }
    EXPECT_NEAR(s, 2.0, 1e-14);
    EXPECT_NEAR(x4, 0.4, 1e-14);
    EXPECT_THROW(oracle::gauss_hermite(0), DomainError);
}

TEST(FisherNumeric, Corr3) {
    const auto a = oracle::fisher_metric_numeric(oracle::Model::Corr3, {0, 0, 1, 1}, {0.0});
    EXPECT_LT((a - Eigen::Matrix3d(Eigen::Vector3d(1, 1, 4).asDiagonal())).cwiseAbs().maxCoeff(), 1e-7);
    const auto b = oracle::fisher_metric_numeric(oracle::Model::Corr3, {0.5, -0.5, 2, 2}, {0.5});
    EXPECT_LT((b - models::metric_corr3(2, {0.5})).cwiseAbs().maxCoeff(), 1e-6);
    const auto c = oracle::fisher_metric_numeric(oracle::Model::NonCorr3, {0, 0, 2, 2}, {0.0});
    EXPECT_LT((c - models::metric_noncorr3(2)).cwiseAbs().maxCoeff(), 1e-7);
}

TEST(FisherNumeric, Corr4) {
    const auto g = oracle::fisher_metric_numeric(oracle::Model::Corr4, {0.1, 0.2, 1, 2}, {0.3});
    EXPECT_EQ(g.rows(), 4);
    EXPECT_LT((g - models::metric_corr4(1, 2, {0.3})).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(FisherNumeric, LegendreAndAdaptiveSchemes) {
    const oracle::QuadratureSpec gl{oracle::Scheme::GaussLegendre, 64, 10.0, 1e-10};
    const auto g = oracle::fisher_metric_numeric(oracle::Model::Corr3, {0, 0, 1.5, 1.5}, {0.4}, gl);
    EXPECT_LT((g - models::metric_corr3(1.5, {0.4})).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(FisherNumeric, RejectsCoarseOrder) {
    EXPECT_THROW(oracle::fisher_metric_numeric(oracle::Model::Corr3, {0, 0, 1, 1}, {0.0}, {oracle::Scheme::GaussHermite, 4}),
                 DomainError);
}

TEST(FisherNumeric, DetectsFault) {
    models::testing::set_metric_fault(1e-3);
    const auto g = oracle::fisher_metric_numeric(oracle::Model::Corr3, {0, 0, 1, 1}, {0.2});
    EXPECT_GT((g - models::metric_corr3(1, {0.2})).cwiseAbs().maxCoeff(), 5e-4);
    models::testing::set_metric_fault(0.0);
}

TEST(Purity, BruteForceProductState) {
    ScatteringConfig c;
    c.sigma_k0 = 0.1;
    EXPECT_NEAR(oracle::purity_bruteforce(c), 1.0, 1e-10);
}

// Purity is stationary at product states, so an O(a_s) change in the wave
// function moves it only at O(a_s^2). The deficit scales by 4 under halving.
TEST(Purity, BruteForceDeficitIsQuadratic) {
    ScatteringConfig c;
    c.sigma_k0 = 0.1;
    c.a_s = 1e-4;
    const double d1 = 1 - oracle::purity_bruteforce(c);
    c.a_s = 5e-5;
    const double d2 = 1 - oracle::purity_bruteforce(c);
    EXPECT_GT(d1, 0.0);
    EXPECT_NEAR(d1 / d2, 4.0, 0.05);
}

TEST(Purity, BruteForceVersusSeries) {
    ScatteringConfig c;
    c.sigma_k0 = 0.1;
    c.a_s = 1e-5;
    const double brute = oracle::purity_bruteforce(c);
    // the closed-form series sits 1.6e-3 below; the brute-force value carries no linear term
    EXPECT_GT(brute - scattering::purity_series(c), 1.5e-3);
    c.a_s = 5e-6;
    EXPECT_NEAR((oracle::purity_bruteforce(c) - scattering::purity_series(c)) / (brute - scattering::purity_series({1, 0.1, 10, 0.1, 1e-5})),
                0.5, 0.01);
}

TEST(Reduction, Cases) {
    ScatteringConfig a;
    a.sigma_k0 = 0.1;
    EXPECT_LT(oracle::dimensional_reduction_check(a).residual, 1e-9);
    ScatteringConfig b;
    b.k0 = 0;
    b.sigma_k0 = 1;
    const auto rb = oracle::dimensional_reduction_check(b);
    EXPECT_TRUE(rb.applicable);
    EXPECT_LT(rb.residual, 1e-9);
    EXPECT_NEAR(rb.integral_6d, 1.0, 1e-12);
    EXPECT_FALSE(oracle::dimensional_reduction_check(a, {}, Vec3(0.1, 0.2, 0.1)).applicable);
}

TEST(IntegrateLine, Schemes) {
    auto f = [](double x) { return std::exp(-(x - 1) * (x - 1) / 0.02); };
    const double exact = std::sqrt(0.02 * std::numbers::pi);
    for (auto s : {oracle::Scheme::GaussHermite, oracle::Scheme::GaussLegendre, oracle::Scheme::Adaptive})
        EXPECT_NEAR(oracle::integrate_line(f, 1, 0.1, {s, 64, 10, 1e-12}) / exact, 1.0, 1e-10);
}
