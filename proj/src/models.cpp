#include "igq/models.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>

namespace igq::models {

using std::numbers::pi;

double pdf_corr4(const Macrostate4& s, ModelParams p, double x, double y) {
    check_sigma(s.sigma_x, "sigma_x");
    check_sigma(s.sigma_y, "sigma_y");
    check_r(p.r);
    const double r = p.r;
    const double one_r2 = 1.0 - r * r;
    const double u = (x - s.mu_x) / s.sigma_x;
    const double v = (y - s.mu_y) / s.sigma_y;
    const double q = (u * u - 2.0 * r * u * v + v * v) / one_r2;
    return std::exp(-0.5 * q) / (2.0 * pi * s.sigma_x * s.sigma_y * std::sqrt(one_r2));
}

double pdf_corr3(const Macrostate3& s, ModelParams p, double x, double y) {
    return pdf_corr4({s.mu1, s.mu2, s.sigma, s.sigma}, p, x, y);
}

double pdf_noncorr3(const Macrostate3& s, double x, double y) {
    return pdf_corr3(s, ModelParams{0.0}, x, y);
}

Metric3 metric_corr3(double sigma, ModelParams p) {
    check_sigma(sigma);
    check_r(p.r);
    const double r = p.r;
    const double s2 = sigma * sigma;
    const double d = 1.0 / ((1.0 - r * r) * s2);
    Metric3 g;
    g << d, -r * d, 0.0,
        -r * d, d, 0.0,
        0.0, 0.0, 4.0 / s2;
    g(0, 0) += testing::metric_fault();
    return g;
}

Metric3 metric_noncorr3(double sigma) { return metric_corr3(sigma, ModelParams{0.0}); }

Metric4 metric_corr4(double sigma_x, double sigma_y, ModelParams p) {
    check_sigma(sigma_x, "sigma_x");
    check_sigma(sigma_y, "sigma_y");
    check_r(p.r);
    const double r = p.r;
    const double one_r2 = 1.0 - r * r;
    const double sx2 = sigma_x * sigma_x, sy2 = sigma_y * sigma_y, sxy = sigma_x * sigma_y;
    Metric4 g = Metric4::Zero();
    // index order (mu_x, sigma_x, mu_y, sigma_y)
    g(0, 0) = 1.0 / (sx2 * one_r2);
    g(1, 1) = (2.0 - r * r) / (sx2 * one_r2);
    g(2, 2) = 1.0 / (sy2 * one_r2);
    g(3, 3) = (2.0 - r * r) / (sy2 * one_r2);
    g(0, 2) = g(2, 0) = -r / (sxy * one_r2);
    g(1, 3) = g(3, 1) = -r * r / (sxy * one_r2);
    return g;
}

MetricSplit metric_split(double sigma, ModelParams p, double r_max) {
    check_sigma(sigma);
    check_r(p.r);
    if (p.r > r_max) {
        std::ostringstream os;
        os << "metric_split needs r <= " << r_max << " for the second-order truncation, got " << p.r;
        throw RegimeError(os.str());
    }
    const double r = p.r;
    const double s2 = sigma * sigma;
    MetricSplit out{metric_noncorr3(sigma), Metric3::Zero()};
    out.h(0, 0) = out.h(1, 1) = r * r / s2;
    out.h(0, 1) = out.h(1, 0) = -r / s2;
    return out;
}

double micro_correlation(double cov, double sigma) {
    check_sigma(sigma);
    const double r = cov / (sigma * sigma);
    if (!(std::abs(r) < 1.0)) {
        std::ostringstream os;
        os << "cov/sigma^2 = " << r << " is not a valid correlation coefficient";
        throw DomainError(os.str());
    }
    return r;
}

namespace testing {
namespace {
std::atomic<double> g_fault{0.0};
}
void set_metric_fault(double offset) { g_fault.store(offset); }
double metric_fault() { return g_fault.load(); }
}  // namespace testing

}  // namespace igq::models
