#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "igq/geodesics.hpp"
#include "igq/models.hpp"
#include "igq/oracle.hpp"

namespace igq::oracle {

using std::numbers::pi;

namespace {

// Symmetric tridiagonal Jacobi matrix with zero diagonal -> nodes and weights.
Rule golub_welsch(int n, double mu0, const std::function<double(int)>& offdiag) {
    if (n < 1) throw DomainError("quadrature order must be positive");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = offdiag(k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        r.x[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        r.w[i] = mu0 * v0 * v0;
    }
    return r;
}

void check_spec(const QuadratureSpec& spec) {
    if (spec.order < 8) throw DomainError("quadrature order must be at least 8");
    if (spec.scheme != Scheme::GaussHermite && spec.cutoff < 8.0)
        throw DomainError("truncated quadrature needs a cutoff of at least 8 spreads");
    if (!(spec.tolerance > 0.0)) throw DomainError("quadrature tolerance must be positive");
}

}  // namespace

Rule gauss_hermite(int n) {
    return golub_welsch(n, std::sqrt(pi), [](int k) { return std::sqrt(0.5 * k); });
}

Rule gauss_legendre(int n) {
    return golub_welsch(n, 2.0, [](int k) { return k / std::sqrt(4.0 * k * k - 1.0); });
}

double integrate_line(const std::function<double(double)>& f, double c, double s, const QuadratureSpec& spec) {
    check_spec(spec);
    switch (spec.scheme) {
        case Scheme::GaussHermite: {
            const Rule g = gauss_hermite(spec.order);
            double acc = 0.0;
            for (size_t i = 0; i < g.x.size(); ++i)
                acc += g.w[i] * std::exp(g.x[i] * g.x[i]) * f(c + std::sqrt(2.0) * s * g.x[i]);
            return acc * std::sqrt(2.0) * s;
        }
        case Scheme::GaussLegendre: {
            const Rule g = gauss_legendre(spec.order);
            const double h = spec.cutoff * s;
            double acc = 0.0;
            for (size_t i = 0; i < g.x.size(); ++i) acc += g.w[i] * f(c + h * g.x[i]);
            return acc * h;
        }
        case Scheme::Adaptive:
            return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                f, c - spec.cutoff * s, c + spec.cutoff * s, 15, spec.tolerance);
    }
    return 0.0;
}

namespace {

// Score vector (d ln P / d theta) of the bivariate normal at (x, y).
Eigen::VectorXd score(Model m, const Macrostate4& s, double r, double x, double y) {
    const double q = 1.0 - r * r;
    if (m == Model::Corr4) {
        const double u = (x - s.mu_x) / s.sigma_x, v = (y - s.mu_y) / s.sigma_y;
        Eigen::VectorXd d(4);
        d(0) = (u - r * v) / (q * s.sigma_x);
        d(1) = -1.0 / s.sigma_x + (u * u - r * u * v) / (q * s.sigma_x);
        d(2) = (v - r * u) / (q * s.sigma_y);
        d(3) = -1.0 / s.sigma_y + (v * v - r * u * v) / (q * s.sigma_y);
        return d;
    }
    const double sg = s.sigma_x;
    const double u = x - s.mu_x, v = y - s.mu_y;
    Eigen::VectorXd d(3);
    d(0) = (u - r * v) / (q * sg * sg);
    d(1) = (v - r * u) / (q * sg * sg);
    d(2) = -2.0 / sg + (u * u - 2.0 * r * u * v + v * v) / (q * sg * sg * sg);
    return d;
}

Eigen::MatrixXd fisher_at_order(Model m, const Macrostate4& s, double r, const QuadratureSpec& spec, int order) {
    const int dim = m == Model::Corr4 ? 4 : 3;
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(dim, dim);
    const double sx = s.sigma_x, sy = m == Model::Corr4 ? s.sigma_y : s.sigma_x;
    if (spec.scheme == Scheme::GaussHermite) {
        // x = mean + sqrt(2) L t with L the Cholesky factor of the covariance
        const Rule g = gauss_hermite(order);
        const double l11 = sx, l21 = r * sy, l22 = sy * std::sqrt(1.0 - r * r);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) {
                const double t1 = std::sqrt(2.0) * g.x[i], t2 = std::sqrt(2.0) * g.x[j];
                const double x = s.mu_x + l11 * t1, y = s.mu_y + l21 * t1 + l22 * t2;
                const Eigen::VectorXd d = score(m, s, r, x, y);
                G.noalias() += (g.w[i] * g.w[j] / pi) * d * d.transpose();
            }
        return G;
    }
    // truncated box around the mean, density weighted explicitly
    const Rule g = gauss_legendre(order);
    const double hx = spec.cutoff * sx, hy = spec.cutoff * sy;
    const Macrostate4 st{s.mu_x, s.mu_y, sx, sy};
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            const double x = s.mu_x + hx * g.x[i], y = s.mu_y + hy * g.x[j];
            const double P = models::pdf_corr4(st, ModelParams{r}, x, y);
            const Eigen::VectorXd d = score(m, s, r, x, y);
            G.noalias() += (g.w[i] * g.w[j] * hx * hy * P) * d * d.transpose();
        }
    return G;
}

}  // namespace

Eigen::MatrixXd fisher_metric_numeric(Model m, const Macrostate4& state, ModelParams p, const QuadratureSpec& spec) {
    check_spec(spec);
    check_r(p.r);
    check_sigma(state.sigma_x, "sigma_x");
    if (m == Model::Corr4) check_sigma(state.sigma_y, "sigma_y");
    const double r = m == Model::NonCorr3 ? 0.0 : p.r;
    const Eigen::MatrixXd a = fisher_at_order(m, state, r, spec, spec.order);
    const Eigen::MatrixXd b = fisher_at_order(m, state, r, spec, 2 * spec.order);
    const double gap = (a - b).cwiseAbs().maxCoeff() / a.cwiseAbs().maxCoeff();
    if (gap > 10.0 * std::max(spec.tolerance, 1e-10)) {
        std::ostringstream os;
        os << "fisher_metric_numeric: doubling the order moved the result by " << gap;
        throw ConvergenceError(os.str());
    }
    return b;
}

namespace {

// psi(k1, k2) at t = 0 with f = -a_s, up to normalization.
std::complex<double> psi(const ScatteringConfig& c, double k1, double k2) {
    using namespace std::complex_literals;
    const double K = k1 + k2, k = 0.5 * (k1 - k2);
    const double s2 = c.sigma_k0 * c.sigma_k0;
    const double kt = k - c.k0;
    const std::complex<double> rho = 4.0i * (c.k0 - 1.0i * s2 * c.R0) * (k * k * (-c.a_s)) / s2;
    return std::exp(-(K * K + 4.0 * kt * kt) / (8.0 * s2)) * (1.0 + rho) * std::exp(-1.0i * kt * c.R0);
}

struct PurityEval {
    double purity;
    double norm;
};

PurityEval purity_at(const ScatteringConfig& c, int n, double cutoff) {
    const Rule g = gauss_legendre(n);
    const double h = cutoff * c.sigma_k0;
    Eigen::MatrixXcd M(n, n);
    double norm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double k1 = c.k0 + h * g.x[i], k2 = -c.k0 + h * g.x[j];
            const std::complex<double> v = psi(c, k1, k2) * std::sqrt(g.w[i] * g.w[j] * h * h);
            M(i, j) = v;
            norm += std::norm(v);
        }
    M /= std::sqrt(norm);
    // reduced density matrix of particle 1 on the weighted grid; purity = sum |rho|^2,
    // the same tensor-product sum as the fourfold integral
    const Eigen::MatrixXcd rho = M * M.adjoint();
    return {rho.squaredNorm(), norm};
}

}  // namespace

double purity_bruteforce(const ScatteringConfig& c, const QuadratureSpec& spec) {
    check_spec(spec);
    check_sigma(c.sigma_k0, "sigma_k0");
    check_sigma(c.k0, "k0");
    const PurityEval a = purity_at(c, spec.order, spec.cutoff);
    const PurityEval b = purity_at(c, spec.order + 16, spec.cutoff);
    const double drift = std::abs(a.norm - b.norm) / b.norm;
    if (drift > 1e-6) {
        std::ostringstream os;
        os << "purity_bruteforce: normalization drifts by " << drift << " under refinement";
        throw ConvergenceError(os.str());
    }
    return a.purity;
}

double normalization_numeric(const ScatteringConfig& c, const QuadratureSpec& spec) {
    using namespace std::complex_literals;
    const double s = c.sigma_k0, s2 = s * s;
    auto inner = [&](double kt) {
        const double k = kt + c.k0;
        const std::complex<double> rho = 4.0i * (c.k0 - 1.0i * s2 * c.R0) * (k * k * (-c.a_s)) / s2;
        return std::exp(-kt * kt / s2) * std::norm(1.0 + rho);
    };
    // the integrand factorizes in (K, k~)
    const double IK = integrate_line([&](double K) { return std::exp(-K * K / (4.0 * s2)); }, 0.0, std::sqrt(2.0) * s, spec);
    const double Ik = integrate_line(inner, 0.0, s / std::sqrt(2.0), spec);
    return IK * Ik;
}

double igc_numeric(double tau, ModelParams p, const InitialConditions& ic, const QuadratureSpec& spec) {
    check_r(p.r);
    check_sigma(tau, "tau");
    const double A0 = geodesics::amplitude_A0(ic);
    if (2.0 * A0 * tau > 20.0) throw RegimeError("igc_numeric: lambda*tau > 20 exceeds the overflow guard");
    using boost::math::quadrature::gauss_kronrod;
    const double tol = std::min(spec.tolerance, 1e-10);
    const Macrostate3 start = geodesics::geodesic_corr(0.0, p, ic);
    auto root_g = [&](double s) { return std::sqrt(models::metric_corr3(s, p).determinant()); };
    // sigma integral in u = ln sigma, where sqrt(g) sigma is a plain exponential;
    // a fixed Legendre rule avoids the adaptive error floor on short intervals
    static const Rule gl = gauss_legendre(64);
    auto sigma_integral = [&](double lo, double hi) {
        const double a = std::log(lo), b = std::log(hi), h = 0.5 * (b - a), m = 0.5 * (a + b);
        double acc = 0.0;
        for (size_t i = 0; i < gl.x.size(); ++i) {
            const double s = std::exp(m + h * gl.x[i]);
            acc += gl.w[i] * root_g(s) * s;
        }
        return acc * h;
    };
    auto volume = [&](double t) {
        if (t <= 0.0) return 0.0;
        const Macrostate3 th = geodesics::geodesic_corr(t, p, ic);
        const double box = std::abs((th.mu1 - start.mu1) * (th.mu2 - start.mu2));
        return box * sigma_integral(th.sigma, start.sigma);
    };
    return gauss_kronrod<double, 31>::integrate(volume, 0.0, tau, 10, tol) / tau;
}

ReductionResult dimensional_reduction_check(const ScatteringConfig& c, const QuadratureSpec& spec, std::optional<Vec3> spreads) {
    check_sigma(c.sigma_k0, "sigma_k0");
    ReductionResult res;
    const Vec3 sp = spreads.value_or(Vec3::Constant(c.sigma_k0));
    if (sp[0] != sp[1] || sp[1] != sp[2] || sp[0] != c.sigma_k0) {
        res.applicable = false;
        return res;
    }
    const double s = c.sigma_k0;
    auto density_1d = [s](double center) {
        return [s, center](double k) {
            return std::exp(-(k - center) * (k - center) / (2.0 * s * s)) / std::sqrt(2.0 * pi * s * s);
        };
    };
    // particle 1 centered at (0, 0, k0), particle 2 at (0, 0, -k0)
    const std::array<double, 6> centers{0.0, 0.0, c.k0, 0.0, 0.0, -c.k0};
    res.integral_6d = 1.0;
    for (double ctr : centers) res.integral_6d *= integrate_line(density_1d(ctr), ctr, s, spec);

    // reduced two-variable form: |psi1(k1)|^2 |psi2(k2)|^2 on a tensor grid
    const auto f1 = density_1d(c.k0), f2 = density_1d(-c.k0);
    res.integral_2d = integrate_line([&](double k1) {
        return f1(k1) * integrate_line(f2, -c.k0, s, spec);
    }, c.k0, s, spec);
    res.residual = std::abs(res.integral_6d - res.integral_2d) / std::abs(res.integral_2d);
    return res;
}

}  // namespace igq::oracle
