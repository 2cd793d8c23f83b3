#include "igq/scattering.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "igq/geodesics.hpp"
#include "igq/models.hpp"

namespace igq::scattering {

using std::numbers::pi;

void validate(const ScatteringConfig& c, Warnings* w) {
    check_sigma(c.k0, "k0");
    check_sigma(c.sigma_k0, "sigma_k0");
    check_sigma(c.R0, "R0");
    check_sigma(c.L, "L");
    check_sigma(c.reduced_mass, "reduced_mass");
    check_sigma(c.hbar, "hbar");
    if (!(c.a_s >= 0.0)) throw DomainError("only the repulsive case a_s >= 0 is supported");
    if (c.k0 * c.L >= 0.3) warn(w, "k0*L >= 0.3: outside the low-energy s-wave regime");
    if (c.sigma_k0 / c.k0 > 0.1) warn(w, "sigma_k0/k0 > 0.1: wave packets are not well localized");
}

double density_pre(const ScatteringConfig& c, double k1, double k2) {
    validate(c);
    const double s2 = c.sigma_k0 * c.sigma_k0;
    const double g1 = std::exp(-(k1 - c.k0) * (k1 - c.k0) / (2.0 * s2));
    const double g2 = std::exp(-(k2 + c.k0) * (k2 + c.k0) / (2.0 * s2));
    return g1 * g2 / (2.0 * pi * s2);
}

double density_post(const ScatteringConfig& c, double rq, double k1, double k2) {
    validate(c);
    if (rq >= 0.3) {
        std::ostringstream os;
        os << "r_qm = " << rq << " >= 0.3: the correlated-Gaussian replacement is not valid";
        throw RegimeError(os.str());
    }
    return models::pdf_corr3({c.k0, -c.k0, c.sigma_k0}, ModelParams{rq}, k1, k2);
}

std::complex<double> varrho(const ScatteringConfig& c, double k) {
    validate(c);
    using namespace std::complex_literals;
    const double s2 = c.sigma_k0 * c.sigma_k0;
    const double f = -c.a_s;
    return 4.0i * (c.k0 - 1.0i * s2 * c.R0) * (k * k * f) / s2;
}

double varrho_real_approx(const ScatteringConfig& c, double k) {
    validate(c);
    return 4.0 * c.R0 * k * k * (-c.a_s);
}

double varrho_abs2_approx(const ScatteringConfig& c, double k) {
    validate(c);
    const double s4 = std::pow(c.sigma_k0, 4);
    return 16.0 * (c.k0 * c.k0 + s4 * c.R0 * c.R0) * std::pow(k, 4) * c.a_s * c.a_s / s4;
}

namespace {
double spread_factor(const ScatteringConfig& c) { return 2.0 * c.k0 * c.k0 + c.sigma_k0 * c.sigma_k0; }
}  // namespace

double r_qm(const ScatteringConfig& c, Warnings* w) {
    validate(c);
    const double v = std::sqrt(8.0 * spread_factor(c) * c.R0 * c.a_s);
    if (v >= 0.3) warn(w, "r_qm >= 0.3: perturbative identification is unreliable");
    return v;
}

double gaussian_moment(int n, double sigma) {
    check_sigma(sigma);
    if (n < 0) throw DomainError("gaussian_moment: n must be nonnegative");
    if (n % 2) return 0.0;
    const int m = n / 2;
    double dfact = 1.0;  // (2m-1)!!
    for (int j = 2 * m - 1; j > 1; j -= 2) dfact *= j;
    return dfact * std::sqrt(pi) * sigma * std::pow(0.5 * sigma * sigma, m);
}

double normalization_integral(const ScatteringConfig& c) {
    validate(c);
    const double s = c.sigma_k0, k0 = c.k0;
    const double A0 = -c.a_s, B0 = c.a_s * c.a_s;
    const double M0 = gaussian_moment(0, s), M2 = gaussian_moment(2, s), M4 = gaussian_moment(4, s);
    // K integral of exp(-K^2/(4 s^2)), then the k~ moments of 1 + 2 Re(rho) + |rho|^2
    const double IK = gaussian_moment(0, 2.0 * s);
    const double lin = 8.0 * c.R0 * A0 * (M2 + k0 * k0 * M0);
    const double quad = 16.0 * (k0 * k0 + std::pow(s, 4) * c.R0 * c.R0) / std::pow(s, 4) * B0 *
                        (M4 + 6.0 * k0 * k0 * M2 + std::pow(k0, 4) * M0);
    return IK * (M0 + lin + quad);
}

namespace {
double checked_purity(double correction, Warnings* w) {
    if (correction >= 1.0) throw RegimeError("purity correction >= 1: first-order formula is meaningless");
    if (correction >= 0.2) warn(w, "purity correction >= 0.2: outside the first-order regime");
    return 1.0 - correction;
}
}  // namespace

double purity_series(const ScatteringConfig& c, Warnings* w) {
    validate(c);
    return checked_purity(8.0 * spread_factor(c) * c.R0 * c.a_s, w);
}

double purity_cross_section(const ScatteringConfig& c, double sigma_cs, Warnings* w) {
    validate(c);
    if (sigma_cs < 0.0) throw DomainError("cross section must be nonnegative");
    return checked_purity(4.0 * spread_factor(c) * c.R0 * std::sqrt(sigma_cs) / std::sqrt(pi), w);
}

double relative_energy(const ScatteringConfig& c) {
    validate(c);
    return c.hbar * c.hbar * c.k0 * c.k0 / (2.0 * c.reduced_mass);
}

double phase_shift_exact(const ScatteringConfig& c, double r) {
    validate(c);
    check_r(r);
    const double k0 = c.k0, kr = std::sqrt(1.0 - r) * k0, L = c.L;
    const double t0 = std::tan(k0 * L), tr = std::tan(kr * L);
    const double num = k0 * tr - kr * t0;
    const double den = kr + k0 * t0 * tr;
    if (std::abs(den) < 1e-12) throw DomainError("phase_shift_exact: resonance, denominator vanishes");
    return std::atan(num / den);
}

namespace {
void series_regime(const ScatteringConfig& c, double r, Warnings* w) {
    if (c.k0 * c.L >= 0.3 || r >= 0.3) warn(w, "phase-shift series used outside k0 L < 0.3, r < 0.3");
}
}  // namespace

double phase_shift_series_tan(const ScatteringConfig& c, double r, Warnings* w) {
    validate(c);
    check_r(r);
    series_regime(c, r, w);
    const double x = c.k0 * c.L;
    const double x3 = x * x * x, x5 = x3 * x * x;
    return (-x3 / 3.0 + x5 / 15.0) * r + (2.0 * x5 / 15.0) * r * r;
}

double phase_shift_series(const ScatteringConfig& c, double r, Warnings* w) {
    validate(c);
    check_r(r);
    series_regime(c, r, w);
    return -r * std::pow(c.k0 * c.L, 3) / 3.0;
}

double phase_shift_from_potential(double V, const ScatteringConfig& c) {
    validate(c);
    if (V < 0.0) throw DomainError("only repulsive potentials V >= 0 are supported");
    return -2.0 * c.reduced_mass * V * c.k0 * std::pow(c.L, 3) / (3.0 * c.hbar * c.hbar);
}

double square_well_matching(const ScatteringConfig& c, double V) {
    validate(c);
    if (V < 0.0) throw DomainError("only repulsive potentials V >= 0 are supported");
    const double E = relative_energy(c);
    if (!(E > V)) throw DomainError("square_well_matching: E <= V (evanescent interior) is not supported");
    const double kin = std::sqrt(2.0 * c.reduced_mass * (E - V)) / c.hbar;
    const double kout = std::sqrt(2.0 * c.reduced_mass * E) / c.hbar;
    const double L = c.L;
    // k_in cot(k_in L) = k_out cot(k_out L + theta), cleared of poles
    auto F = [&](double th) {
        return kout * std::cos(kout * L + th) * std::sin(kin * L) - kin * std::cos(kin * L) * std::sin(kout * L + th);
    };
    if (F(0.0) == 0.0) return 0.0;
    // roots repeat every pi; bracket the branch continuous with theta = 0
    double lo = -0.5 * pi, hi = 0.5 * pi;
    if (F(lo) == 0.0) return lo;
    boost::uintmax_t iters = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(52);
    auto [a, b] = boost::math::tools::toms748_solve(F, lo, hi, tol, iters);
    return 0.5 * (a + b);
}

double potential_from_r(double r, const ScatteringConfig& c) {
    check_r(r);
    return r * relative_energy(c);
}

double cross_section(const ScatteringConfig& c, double r) {
    validate(c);
    check_r(r);
    return 4.0 * pi * r * r * std::pow(c.k0, 4) * std::pow(c.L, 6) / 9.0;
}

double cross_section_from_length(double a_s) {
    if (a_s < 0.0) throw DomainError("cross_section_from_length: a_s must be nonnegative");
    return 4.0 * pi * a_s * a_s;
}

double eta_complexity(const ScatteringConfig& c) {
    validate(c);
    return 8.0 * c.k0 * c.k0 * spread_factor(c) * c.R0 * std::pow(c.L, 3) / 3.0;
}

double purity_from_r(const ScatteringConfig& c, double r) {
    check_r(r);
    return checked_purity(eta_complexity(c) * r, nullptr);
}

double potential_density(const ScatteringConfig& c) {
    validate(c);
    return 4.0 * c.hbar * c.hbar * std::pow(c.k0, 4) * spread_factor(c) * c.R0 / (3.0 * c.reduced_mass);
}

double r_from_potential(const ScatteringConfig& c, double V) {
    if (V < 0.0) throw DomainError("r_from_potential: V must be nonnegative");
    return V / relative_energy(c);
}

double r_from_cross_section(const ScatteringConfig& c, double sigma_cs) {
    validate(c);
    if (sigma_cs < 0.0) throw DomainError("r_from_cross_section: cross section must be nonnegative");
    return 3.0 * std::sqrt(sigma_cs) / (2.0 * std::sqrt(pi) * c.k0 * c.k0 * std::pow(c.L, 3));
}

double r_from_purity(const ScatteringConfig& c, double purity) {
    if (purity > 1.0) throw DomainError("r_from_purity: purity cannot exceed 1");
    return (1.0 - purity) / eta_complexity(c);
}

ProlongationReport prolongation(const InitialConditions& ic, double r) {
    check_r(r);
    const double A0 = geodesics::amplitude_A0(ic);
    const double x = A0 * ic.tau0;
    ProlongationReport rep;
    rep.eta_delta = 0.5 * std::exp(2.0 * x);
    rep.r_bound = 2.0 / rep.eta_delta;
    if (r >= rep.r_bound) {
        std::ostringstream os;
        os << "r = " << r << " violates the prolongation bound r < " << rep.r_bound;
        throw BoundViolation(os.str(), rep.r_bound);
    }
    rep.tau_star = ic.tau0;
    if (r == 0.0) return rep;

    // (1-r)^{-1/2} - 1 and 1 - sqrt(1-r) without cancellation
    const double inv_sqrt_m1 = std::expm1(-0.5 * std::log1p(-r));
    const double one_m_sqrt = -std::expm1(0.5 * std::log1p(-r));

    const double arg = 1.0 - inv_sqrt_m1 * rep.eta_delta;
    // tanh(A0 tau*) = t = tanh(x)/sqrt(1-r); 1 - t = ((1 - tanh x) - (1 - sqrt(1-r)))/sqrt(1-r)
    const double one_m_t = (2.0 / (std::exp(2.0 * x) + 1.0) - one_m_sqrt) / std::sqrt(1.0 - r);
    if (!(arg > 0.0) || !(one_m_t > 0.0)) {
        std::ostringstream os;
        os << "r = " << r << " admits no prolongation: tanh(A0 tau*) would reach 1";
        throw BoundViolation(os.str(), rep.r_bound);
    }
    rep.delta_approx = -std::log(arg) / (2.0 * A0);
    const double t = 1.0 - one_m_t;
    rep.tau_star = 0.5 * std::log((1.0 + t) / one_m_t) / A0;
    rep.delta = rep.tau_star - ic.tau0;
    rep.relative_gap = std::abs(rep.delta_approx - rep.delta) / rep.delta;
    return rep;
}

double r_bound_series(const InitialConditions& ic) {
    geodesics::validate(ic);
    const double e2 = std::pow(ic.sigma0 / ic.p0, 2);
    return 2.0 * e2 * std::exp(-e2 + 0.75 * e2 * e2);
}

}  // namespace igq::scattering
