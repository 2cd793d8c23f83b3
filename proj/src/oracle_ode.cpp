#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "igq/curvature.hpp"
#include "igq/geodesics.hpp"
#include "igq/models.hpp"
#include "igq/oracle.hpp"

namespace igq::oracle {

namespace odeint = boost::numeric::odeint;
using State6 = std::array<double, 6>;

namespace {

template <class System, class Observer>
void run(const OdeSpec& spec, System sys, State6& x, const std::vector<double>& taus, Observer obs) {
    if (taus.size() < 2) throw DomainError("ODE oracle needs at least two output times");
    const double dir = taus.back() > taus.front() ? 1.0 : -1.0;
    if (spec.method == OdeMethod::Rk4) {
        odeint::integrate_times(odeint::runge_kutta4<State6>(), sys, x, taus.begin(), taus.end(), dir * spec.step, obs);
    } else {
        auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State6>>(spec.tolerance, spec.tolerance);
        odeint::integrate_times(stepper, sys, x, taus.begin(), taus.end(), dir * 1e-3, obs);
    }
}

Vec3 head(const State6& s) { return {s[0], s[1], s[2]}; }
Vec3 tail(const State6& s) { return {s[3], s[4], s[5]}; }

Vec3 closed_form(double t, ModelParams p, const InitialConditions& ic) {
    const Macrostate3 m = geodesics::geodesic_corr(t, p, ic);
    return {m.mu1, m.mu2, m.sigma};
}

}  // namespace

GeodesicRun geodesic_integrate(ModelParams p, const InitialConditions& ic, std::vector<double> taus, const OdeSpec& spec,
                               bool round_trip) {
    check_r(p.r);
    auto sys = [&](const State6& s, State6& ds, double) {
        if (!(s[2] > 0.0)) throw DomainError("geodesic_integrate: sigma left the domain");
        const Vec3 acc = geodesics::geodesic_acceleration(head(s), tail(s), p);
        for (int i = 0; i < 3; ++i) {
            ds[i] = s[3 + i];
            ds[3 + i] = acc[i];
        }
    };
    const Vec3 th0 = closed_form(taus.front(), p, ic);
    const Vec3 v0 = geodesics::velocity_corr(taus.front(), p, ic);
    State6 x{th0[0], th0[1], th0[2], v0[0], v0[1], v0[2]};

    GeodesicRun out;
    run(spec, sys, x, taus, [&](const State6& s, double t) {
        const Vec3 cf = closed_form(t, p, ic);
        out.samples.push_back({t, head(s)});
        out.max_rel_error = std::max(out.max_rel_error, (head(s) - cf).norm() / cf.norm());
    });
    if (round_trip) {
        std::vector<double> back(taus.rbegin(), taus.rend());
        State6 y = x;
        run(spec, sys, y, back, [](const State6&, double) {});
        out.round_trip_error = (head(y) - th0).norm() / th0.norm();
    }
    return out;
}

JacobiRun jacobi_integrate(ModelParams p, const InitialConditions& ic, std::vector<double> taus, double omega0,
                           const OdeSpec& spec) {
    check_r(p.r);
    const double A0 = geodesics::amplitude_A0(ic);

    struct Frame {
        Vec3 th, v, a;
        Christoffel G;
        std::array<Christoffel, 3> dG;
        Tensor4 Rup;  // R^a_bcd
        Metric3 g;
    };
    auto frame = [&](double t) {
        Frame f;
        f.th = closed_form(t, p, ic);
        f.v = geodesics::velocity_corr(t, p, ic);
        f.a = geodesics::geodesic_acceleration(f.th, f.v, p);
        f.G = curvature::christoffel(f.th[2], p);
        f.dG = curvature::christoffel_derivative(f.th[2], p);
        f.g = models::metric_corr3(f.th[2], p);
        const Metric3 gi = curvature::inverse_metric(f.th[2], p);
        const Tensor4 R = curvature::riemann(f.th[2], p);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d) {
                        double s = 0.0;
                        for (int e = 0; e < 3; ++e) s += gi(a, e) * R(e, b, c, d);
                        f.Rup(a, b, c, d) = s;
                    }
        return f;
    };

    // D^2J^a = J''^a + 2 G^a_bc J'^b v^c + G^a_bc J^b a^c + d_d G^a_bc v^d v^c J^b
    //          + G^a_bc G^b_df v^f v^c J^d, and D^2J^a + R^a_bcd v^b J^c v^d = 0.
    auto sys = [&](const State6& s, State6& ds, double t) {
        const Frame f = frame(t);
        const Vec3 J = head(s), dJ = tail(s);
        for (int a = 0; a < 3; ++a) {
            double rhs = 0.0;
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    rhs -= 2.0 * f.G(a, b, c) * dJ[b] * f.v[c];
                    rhs -= f.G(a, b, c) * J[b] * f.a[c];
                    for (int d = 0; d < 3; ++d) {
                        rhs -= f.dG[d](a, b, c) * f.v[d] * f.v[c] * J[b];
                        rhs -= f.Rup(a, b, c, d) * f.v[b] * J[c] * f.v[d];
                        for (int e = 0; e < 3; ++e) rhs -= f.G(a, b, c) * f.G(b, d, e) * f.v[e] * f.v[c] * J[d];
                    }
                }
            ds[a] = dJ[a];
            ds[3 + a] = rhs;
        }
    };

    // initial direction: a generic vector with its velocity component removed
    const Frame f0 = frame(taus.front());
    Vec3 e(1.0, 0.3, 1.0);
    e -= (e.dot(f0.g * f0.v) / f0.v.dot(f0.g * f0.v)) * f0.v;
    e /= std::sqrt(e.dot(f0.g * e));
    State6 x{0.0, 0.0, 0.0, omega0 * e[0], omega0 * e[1], omega0 * e[2]};

    JacobiRun out;
    run(spec, sys, x, taus, [&](const State6& s, double t) {
        const Frame f = frame(t);
        const Vec3 J = head(s);
        const double nJ = std::sqrt(J.dot(f.g * J));
        out.tau.push_back(t);
        out.intensity.push_back(nJ);
        if (nJ > 0.0) {
            const double nv = std::sqrt(f.v.dot(f.g * f.v));
            out.max_orthogonality = std::max(out.max_orthogonality, std::abs(J.dot(f.g * f.v)) / (nJ * nv));
        }
    });

    // least-squares slope of ln J over the last ten units of A0 tau
    const double t_lo = out.tau.back() - 10.0 / A0;
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < out.tau.size(); ++i) {
        if (out.tau[i] < t_lo || out.intensity[i] <= 0.0) continue;
        const double X = out.tau[i], Y = std::log(out.intensity[i]);
        n += 1;
        sx += X;
        sy += Y;
        sxx += X * X;
        sxy += X * Y;
    }
    if (n >= 2) out.fitted_rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

std::vector<double> jacobi_scalar_integrate(double omega0, double A0, const std::vector<double>& taus, const OdeSpec& spec) {
    check_sigma(A0, "A0");
    const double Q = -A0 * A0;
    auto sys = [Q](const State6& s, State6& ds, double) {
        ds = {s[1], -Q * s[0], 0.0, 0.0, 0.0, 0.0};
    };
    State6 x{0.0, omega0, 0.0, 0.0, 0.0, 0.0};
    std::vector<double> out;
    run(spec, sys, x, taus, [&](const State6& s, double) { out.push_back(s[0]); });
    return out;
}

}  // namespace igq::oracle
