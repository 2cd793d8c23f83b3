#pragma once

#include <utility>

#include "igq/types.hpp"

// Gaussian families on momentum space and their closed-form Fisher-Rao metrics.
//
// 3D manifold coordinates are (mu1, mu2, sigma). The 4D correlated metric uses
// index order (mu_x, sigma_x, mu_y, sigma_y).
namespace igq::models {

double pdf_corr3(const Macrostate3& s, ModelParams p, double x, double y);
double pdf_noncorr3(const Macrostate3& s, double x, double y);
double pdf_corr4(const Macrostate4& s, ModelParams p, double x, double y);

Metric3 metric_corr3(double sigma, ModelParams p);
Metric3 metric_noncorr3(double sigma);
Metric4 metric_corr4(double sigma_x, double sigma_y, ModelParams p);

// g0 is the uncorrelated metric, h the O(r) + O(r^2) perturbation.
struct MetricSplit {
    Metric3 g0;
    Metric3 h;
};
inline constexpr double kSplitRMax = 0.1;
MetricSplit metric_split(double sigma, ModelParams p, double r_max = kSplitRMax);

double micro_correlation(double cov, double sigma);

// Test hook: adds a fixed offset to g_00 of metric_corr3. Zero in normal use.
namespace testing {
void set_metric_fault(double offset);
double metric_fault();
}  // namespace testing

}  // namespace igq::models
