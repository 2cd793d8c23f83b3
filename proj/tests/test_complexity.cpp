#include <gtest/gtest.h>

#include <cmath>

#include "igq/chaos.hpp"
#include "igq/complexity.hpp"
#include "igq/geodesics.hpp"
#include "igq/models.hpp"
#include "igq/oracle.hpp"
#include "igq/scattering.hpp"

using namespace igq;

namespace {
const InitialConditions kIc{1.0, 0.1, 1.0, 10.0};
const double kLambda = 5.308243189099001;
}  // namespace

TEST(FisherDensity, Values) {
    EXPECT_DOUBLE_EQ(complexity::fisher_density(1, {0.0}), 2.0);
    EXPECT_NEAR(complexity::fisher_density(1, {0.6}), 2.5, 1e-15);
    for (double s : {0.2, 1.0, 4.0})
        for (double r : {0.0, 0.5, 0.9}) {
            const double d = std::sqrt(models::metric_corr3(s, {r}).determinant());
            EXPECT_NEAR(complexity::fisher_density(s, {r}) / d, 1.0, 1e-12);
        }
    EXPECT_THROW(complexity::fisher_density(-1, {0.0}), DomainError);
}

TEST(Igc, SmallTauLimit) {
    for (double lt : {1e-3, 1e-2, 0.1, 0.19, 0.21}) {
        const double v = complexity::igc_closed(lt / kLambda, {0.3}, kIc);
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, 1e-3 * lt);
    }
    EXPECT_LT(complexity::igc_closed(1e-6, {0.0}, kIc), 1e-20);
}

TEST(Igc, SeriesBranchIsContinuous) {
    const double below = complexity::igc_closed((0.2 - 1e-9) / kLambda, {0.0}, kIc);
    const double above = complexity::igc_closed((0.2 + 1e-9) / kLambda, {0.0}, kIc);
    EXPECT_NEAR(below / above, 1.0, 1e-6);
}

TEST(Igc, RatioExact) {
    for (double r : {0.1, 0.5, 0.9})
        for (double lt : {0.5, 3.0, 50.0}) {
            const double t = lt / kLambda;
            EXPECT_NEAR(complexity::igc_closed(t, {r}, kIc) / complexity::igc_closed(t, {0.0}, kIc),
                        std::sqrt((1 - r) / (1 + r)), 1e-12);
        }
    EXPECT_EQ(complexity::igc_ratio({0.0}), 1.0);
    EXPECT_NEAR(complexity::igc_ratio({0.5}), 0.5773502691896258, 1e-15);
    double prev = 2;
    for (int i = 0; i <= 99; ++i) {
        const double q = complexity::igc_ratio({0.01 * i});
        EXPECT_LT(q, prev);
        prev = q;
    }
}

TEST(Igc, IncreasingBeyondUnitLambdaTau) {
    double prev = 0;
    for (double lt = 1; lt <= 60; lt += 0.5) {
        const double v = complexity::igc_closed(lt / kLambda, {0.2}, kIc);
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(Igc, OverflowGuard) {
    EXPECT_THROW(complexity::igc_closed(800 / kLambda, {0.0}, kIc), RegimeError);
    EXPECT_THROW(complexity::igc_closed(0.0, {0.0}, kIc), DomainError);
}

// The literal time average of the statistical volume; the printed closed form is twice this.
TEST(Igc, NumericMatchesLiteralAverage) {
    for (double lt : {0.05, 1.0, 5.0, 10.0, 19.9})
        for (double r : {0.0, 0.3, 0.7}) {
            const double t = lt / kLambda;
            const double num = oracle::igc_numeric(t, {r}, kIc);
            EXPECT_NEAR(num / complexity::igc_literal(t, {r}, kIc), 1.0, 1e-9);
            EXPECT_NEAR(complexity::igc_closed(t, {r}, kIc) / num, 2.0, 1e-9);
        }
    EXPECT_THROW(oracle::igc_numeric(25 / kLambda, {0.0}, kIc), RegimeError);
    EXPECT_LT(oracle::igc_numeric(1e-4, {0.0}, kIc), 1e-12);
}

TEST(Ige, Values) {
    Warnings w;
    EXPECT_NEAR(complexity::ige_closed(10 / kLambda, {0.0}, kIc, &w), 7.697414907005954, 1e-12);
    EXPECT_TRUE(w.empty());
    for (double lt : {5.0, 10.0, 40.0}) {
        const double t = lt / kLambda;
        EXPECT_NEAR(complexity::ige_closed(t, {0.5}, kIc) - complexity::ige_closed(t, {0.0}, kIc), -0.5493061443340548,
                    1e-12);
    }
    complexity::ige_closed(1 / kLambda, {0.0}, kIc, &w);
    EXPECT_EQ(w.size(), 1u);
}

TEST(Ige, AsymptoticConsistency) {
    // ln IGC - IGE -> 0 for the printed closed form; the literal average sits ln 2 lower
    for (double lt : {20.0, 40.0}) {
        const double t = lt / kLambda;
        const double gap = std::log(complexity::igc_closed(t, {0.3}, kIc)) - complexity::ige_closed(t, {0.3}, kIc);
        EXPECT_LT(std::abs(gap), 2.5 / lt);
        const double lit = std::log(complexity::igc_literal(t, {0.3}, kIc)) - complexity::ige_closed(t, {0.3}, kIc);
        EXPECT_NEAR(lit - gap, -std::log(2.0), 1e-12);
    }
    const double g20 = std::log(complexity::igc_closed(20 / kLambda, {0.0}, kIc)) - complexity::ige_closed(20 / kLambda, {0.0}, kIc);
    const double g40 = std::log(complexity::igc_closed(40 / kLambda, {0.0}, kIc)) - complexity::ige_closed(40 / kLambda, {0.0}, kIc);
    EXPECT_LT(std::abs(g40), std::abs(g20));
}

TEST(Inversion, FromComplexities) {
    EXPECT_EQ(complexity::r_from_complexities(1, 1), 0.0);
    EXPECT_NEAR(complexity::r_from_complexities(1, std::sqrt(1.0 / 3)), 0.5, 1e-15);
    for (double r : {0.0, 1e-6, 0.01, 0.3, 0.9}) {
        EXPECT_NEAR(complexity::r_from_complexities(1, complexity::igc_ratio({r})), r, 1e-12);
        const double t = 3 / kLambda;
        EXPECT_NEAR(complexity::r_from_complexities(complexity::igc_closed(t, {0.0}, kIc),
                                                    complexity::igc_closed(t, {r}, kIc)),
                    r, 1e-10);
    }
    EXPECT_THROW(complexity::r_from_complexities(1, 2), DomainError);
}

TEST(Purity, FromComplexity) {
    EXPECT_EQ(complexity::purity_from_complexity(0, 5), 1.0);
    EXPECT_NEAR(complexity::purity_from_complexity(1e-3, 100), 0.9, 1e-15);
    EXPECT_THROW(complexity::purity_from_complexity(0.5, 3), RegimeError);
    ScatteringConfig cfg;
    cfg.sigma_k0 = 0.1;
    const double eta = scattering::eta_complexity(cfg);
    EXPECT_NEAR(eta, 8.0 / 3 * 2.01 * 10 * 1e-3, 1e-15);
    EXPECT_NEAR(complexity::purity_from_complexity(0.01, eta), scattering::purity_from_r(cfg, 0.01), 1e-15);
}

TEST(Report, CarriesHorizon) {
    Warnings w;
    const auto rep = complexity::report(8 / kLambda, {0.4}, kIc, &w);
    EXPECT_EQ(rep.tau, 8 / kLambda);
    EXPECT_EQ(rep.params.r, 0.4);
    EXPECT_EQ(rep.igc, complexity::igc_closed(8 / kLambda, {0.4}, kIc));
    EXPECT_EQ(rep.ige, complexity::ige_closed(8 / kLambda, {0.4}, kIc));
}
