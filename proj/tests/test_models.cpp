#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "igq/models.hpp"
#include "igq/oracle.hpp"

using namespace igq;
using std::numbers::pi;

namespace {

double integrate_plane(const std::function<double(double, double)>& f, double cx, double cy, double sx, double sy) {
    const auto rule = oracle::gauss_legendre(96);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i)
        for (std::size_t j = 0; j < rule.x.size(); ++j)
            s += rule.w[i] * rule.w[j] * f(cx + 8 * sx * rule.x[i], cy + 8 * sy * rule.x[j]);
    return s * 64 * sx * sy;
}

}  // namespace

TEST(Pdf, Corr3PeakValues) {
    EXPECT_NEAR(models::pdf_corr3({0, 0, 1}, {0.0}, 0, 0), 1 / (2 * pi), 1e-15);
    EXPECT_NEAR(models::pdf_corr3({0, 0, 1}, {0.5}, 0, 0), 0.1837762984739307, 1e-15);
}

TEST(Pdf, Corr3Normalized) {
    for (double r : {0.0, 0.5, 0.9}) {
        const Macrostate3 s{0.4, -1.0, 0.7};
        const double n = integrate_plane([&](double x, double y) { return models::pdf_corr3(s, {r}, x, y); },
                                         s.mu1, s.mu2, s.sigma, s.sigma);
        EXPECT_NEAR(n, 1.0, 1e-10) << "r=" << r;
    }
}

TEST(Pdf, Corr3MarginalIsNormal) {
    const Macrostate3 s{0.0, 0.0, 1.3};
    const auto rule = oracle::gauss_legendre(96);
    for (double x : {-1.0, 0.0, 2.0}) {
        double m = 0.0;
        for (std::size_t j = 0; j < rule.x.size(); ++j)
            m += rule.w[j] * models::pdf_corr3(s, {0.6}, x, 8 * s.sigma * rule.x[j]);
        m *= 8 * s.sigma;
        const double expect = std::exp(-x * x / (2 * s.sigma * s.sigma)) / std::sqrt(2 * pi * s.sigma * s.sigma);
        EXPECT_NEAR(m, expect, 1e-12);
    }
}

TEST(Pdf, NonCorrEqualsCorrAtZero) {
    const Macrostate3 s{1, -1, 1};
    for (double x : {-2.0, 0.3, 1.0})
        EXPECT_EQ(models::pdf_noncorr3(s, x, -x), models::pdf_corr3(s, {0.0}, x, -x));
    EXPECT_NEAR(models::pdf_noncorr3(s, 1, -1), 1 / (2 * pi), 1e-15);
    EXPECT_NEAR(models::pdf_noncorr3({0, 0, 2}, 2, 0), 0.024133088157513477, 1e-15);
}

TEST(Pdf, Corr4) {
    const Macrostate4 eq{0.2, -0.3, 1.5, 1.5};
    for (double x : {-1.0, 0.5})
        EXPECT_NEAR(models::pdf_corr4(eq, {0.4}, x, 2 * x), models::pdf_corr3({0.2, -0.3, 1.5}, {0.4}, x, 2 * x), 1e-16);
    const Macrostate4 s{0.2, -0.3, 0.5, 2.0};
    EXPECT_NEAR(models::pdf_corr4(s, {0.3}, 0.2, -0.3), 1 / (2 * pi * 0.5 * 2.0 * std::sqrt(1 - 0.09)), 1e-15);
    const double n = integrate_plane([&](double x, double y) { return models::pdf_corr4(s, {0.3}, x, y); }, s.mu_x,
                                     s.mu_y, s.sigma_x, s.sigma_y);
    EXPECT_NEAR(n, 1.0, 1e-10);
}

TEST(Pdf, RejectsBadInputs) {
    EXPECT_THROW(models::pdf_corr3({0, 0, 1}, {1.0}, 0, 0), DomainError);
    EXPECT_THROW(models::pdf_corr3({0, 0, 1}, {-0.1}, 0, 0), DomainError);
    EXPECT_THROW(models::pdf_corr3({0, 0, 0}, {0.0}, 0, 0), DomainError);
    EXPECT_THROW(models::pdf_noncorr3({0, 0, -1}, 0, 0), DomainError);
    EXPECT_THROW(models::pdf_corr4({0, 0, 1, 0}, {0.0}, 0, 0), DomainError);
}

TEST(Metric, Corr3Values) {
    const Metric3 g = models::metric_corr3(1, {0.0});
    EXPECT_TRUE(g.isApprox(Eigen::Vector3d(1, 1, 4).asDiagonal().toDenseMatrix()));
    const Metric3 h = models::metric_corr3(2, {0.5});
    EXPECT_NEAR(h(0, 0), 1.0 / 3, 1e-15);
    EXPECT_NEAR(h(0, 1), -1.0 / 6, 1e-15);
    EXPECT_NEAR(h(2, 2), 1.0, 1e-15);
}

TEST(Metric, NonCorr) {
    EXPECT_EQ(models::metric_noncorr3(2), Metric3(Eigen::Vector3d(0.25, 0.25, 1).asDiagonal()));
    for (double s : {0.1, 1.0, 7.0}) EXPECT_EQ(models::metric_corr3(s, {0.0}), models::metric_noncorr3(s));
    EXPECT_THROW(models::metric_noncorr3(0), DomainError);
}

TEST(Metric, Corr4Values) {
    const Metric4 g = models::metric_corr4(1, 1, {0.0});
    EXPECT_TRUE(g.isApprox(Eigen::Vector4d(1, 2, 1, 2).asDiagonal().toDenseMatrix()));
    const Metric4 h = models::metric_corr4(1, 2, {0.5});
    EXPECT_NEAR(h(0, 2), -1.0 / 3, 1e-15);
    EXPECT_EQ(h(0, 2), h(2, 0));
}

TEST(Metric, PositiveDefiniteAndDeterminant) {
    for (double s : {0.1, 0.5, 1.0, 3.0, 10.0})
        for (double r : {0.0, 0.2, 0.5, 0.9, 0.99}) {
            const Metric3 g = models::metric_corr3(s, {r});
            EXPECT_TRUE(g.isApprox(g.transpose()));
            EXPECT_GT(Eigen::SelfAdjointEigenSolver<Metric3>(g).eigenvalues().minCoeff(), 0.0);
            const double det = 4 / ((1 - r * r) * std::pow(s, 6));
            EXPECT_NEAR(g.determinant() / det, 1.0, 1e-12);
            const Metric4 g4 = models::metric_corr4(s, 2 * s, {r});
            EXPECT_GT(Eigen::SelfAdjointEigenSolver<Metric4>(g4).eigenvalues().minCoeff(), 0.0);
        }
}

TEST(Metric, RejectsRNearOne) {
    EXPECT_THROW(models::metric_corr3(1, {1.0 - 1e-12}), DomainError);
    EXPECT_NO_THROW(models::metric_corr3(1, {1.0 - 1e-8}));
}

TEST(Split, ZeroAndValues) {
    EXPECT_TRUE(models::metric_split(1, {0.0}).h.isZero());
    const auto s = models::metric_split(1, {0.01});
    EXPECT_NEAR(s.h(0, 1), -0.01, 1e-16);
    EXPECT_NEAR(s.h(0, 0), 1e-4, 1e-18);
    EXPECT_EQ(s.g0, models::metric_noncorr3(1));
    EXPECT_THROW(models::metric_split(1, {0.2}), RegimeError);
    EXPECT_NO_THROW(models::metric_split(1, {0.2}, 0.3));
}

TEST(Split, ThirdOrderRemainder) {
    std::vector<double> c;
    for (double r : {0.01, 0.02, 0.04}) {
        const auto s = models::metric_split(1, {r});
        const double err = (models::metric_corr3(1, {r}) - s.g0 - s.h).cwiseAbs().maxCoeff();
        c.push_back(err / (r * r * r));
    }
    EXPECT_NEAR(c[1] / c[0], 1.0, 0.01);
    EXPECT_NEAR(c[2] / c[0], 1.0, 0.01);
}

TEST(MicroCorrelation, Definition) {
    EXPECT_EQ(models::micro_correlation(0, 1), 0.0);
    EXPECT_EQ(models::micro_correlation(0.5, 1), 0.5);
    EXPECT_THROW(models::micro_correlation(1.0, 1), DomainError);
    EXPECT_THROW(models::micro_correlation(0.1, 0), DomainError);
}

TEST(MicroCorrelation, SampledCovariance) {
    // draw from pdf_corr3 with r = 0.3 via its Cholesky factor
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> n01;
    const double r = 0.3, sigma = 1.7;
    const int N = 1'000'000;
    double sx = 0, sy = 0, sxy = 0;
    for (int i = 0; i < N; ++i) {
        const double a = n01(rng), b = n01(rng);
        const double x = sigma * a, y = sigma * (r * a + std::sqrt(1 - r * r) * b);
        sx += x;
        sy += y;
        sxy += x * y;
    }
    const double cov = sxy / N - (sx / N) * (sy / N);
    EXPECT_NEAR(models::micro_correlation(cov, sigma), 0.3, 0.005);
}
