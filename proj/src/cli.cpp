#include "igq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "igq/acceptance.hpp"
#include "igq/chaos.hpp"
#include "igq/complexity.hpp"
#include "igq/curvature.hpp"
#include "igq/geodesics.hpp"
#include "igq/models.hpp"
#include "igq/oracle.hpp"
#include "igq/scattering.hpp"

namespace igq::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Fixed 17-digit floats so identical runs give identical bytes.
void emit(const Json& j, std::ostream& os, int depth = 0) {
    const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) os << ",\n";
                first = false;
                os << pad << Json(k).dump() << ": ";
                emit(v, os, depth + 1);
            }
            os << "\n" << close << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // short numeric rows stay on one line
            const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
            os << (flat ? "[" : "[\n");
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << (flat ? ", " : ",\n");
                if (!flat) os << pad;
                emit(j[i], os, depth + 1);
            }
            if (!flat) os << "\n" << close;
            os << "]";
            return;
        }
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            os << (std::isfinite(x) ? num(x) : "null");
            return;
        }
        default:
            os << j.dump();
    }
}

Json number_or_null(std::optional<double> x) { return x ? Json(*x) : Json(nullptr); }

// Table: header + rows of optional numbers (missing values print empty / null).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;
    std::vector<std::string> flags;  // per-row note, empty when fine
};

struct Result {
    Json doc = Json::object();
    std::optional<Table> table;
    std::vector<std::pair<std::string, Json>> scalars;  // csv form of a report
    int exit_code = 0;
};

void write_csv(const Result& r, std::ostream& os) {
    if (r.table) {
        const Table& t = *r.table;
        const bool with_flags = std::any_of(t.flags.begin(), t.flags.end(), [](const std::string& f) { return !f.empty(); });
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
        if (with_flags) os << ",flag";
        os << "\n";
        for (std::size_t k = 0; k < t.rows.size(); ++k) {
            for (std::size_t i = 0; i < t.rows[k].size(); ++i) os << (i ? "," : "") << (t.rows[k][i] ? num(*t.rows[k][i]) : "");
            if (with_flags) os << "," << t.flags[k];
            os << "\n";
        }
        return;
    }
    os << "quantity,value\n";
    for (const auto& [k, v] : r.scalars) {
        os << k << ",";
        if (v.is_number_float())
            os << num(v.get<double>());
        else if (v.is_null())
            os << "";
        else if (v.is_string())
            os << v.get<std::string>();
        else
            os << v.dump();
        os << "\n";
    }
}

void attach_table(Result& r) {
    if (!r.table) return;
    Json rows = Json::array();
    const Table& t = *r.table;
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        Json row = Json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = number_or_null(t.rows[k][i]);
        if (!t.flags[k].empty()) row["flag"] = t.flags[k];
        rows.push_back(row);
    }
    r.doc["rows"] = rows;
}

// Scalars go both into the JSON document and the csv key/value listing.
void put(Result& r, const std::string& key, Json v) {
    r.scalars.emplace_back(key, v);
    r.doc[key] = std::move(v);
}

std::vector<double> parse_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("--") + what + ": cannot parse '" + item + "' as a number");
        }
    }
    if (out.empty()) throw UsageError(std::string("--") + what + " is empty");
    return out;
}

std::vector<double> linspace(double a, double b, int steps) {
    if (steps < 1) throw UsageError("--steps must be at least 1");
    std::vector<double> v;
    for (int i = 0; i <= steps; ++i) v.push_back(a + (b - a) * i / steps);
    return v;
}

void require_monotone(const std::vector<double>& g, const char* what) {
    for (std::size_t i = 1; i < g.size(); ++i)
        if (!(g[i] > g[i - 1])) throw UsageError(std::string(what) + " grid must be strictly increasing");
}

// Turns a JSON config object into "--key value" tokens.
std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError("config file " + path + " is not valid JSON: " + e.what());
    }
    if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
    std::vector<std::string> tok;
    for (const auto& [k, v] : cfg.items()) {
        const std::string flag = "--" + k;
        if (v.is_boolean()) {
            if (v.get<bool>()) tok.push_back(flag);
        } else if (v.is_number()) {
            tok.push_back(flag);
            tok.push_back(num(v.get<double>()));
        } else if (v.is_string()) {
            tok.push_back(flag);
            tok.push_back(v.get<std::string>());
        } else if (v.is_array()) {
            std::string joined;
            for (const auto& e : v) {
                if (!joined.empty()) joined += ",";
                joined += e.is_number() ? num(e.get<double>()) : e.get<std::string>();
            }
            tok.push_back(flag);
            tok.push_back(joined);
        } else {
            throw UsageError("config key '" + k + "' has an unsupported value");
        }
    }
    return tok;
}

struct Common {
    std::string format = "json";
    std::string out;
    std::string config;
    double hbar = 1.0;
};

struct IcArgs {
    double p0 = 1.0, sigma0 = 0.1, tau0 = 1.0, R0 = 10.0;
    InitialConditions ic() const { return {p0, sigma0, tau0, R0}; }
};

void add_ic(CLI::App* c, IcArgs& a) {
    c->add_option("--p0", a.p0, "initial momentum")->capture_default_str();
    c->add_option("--sigma0", a.sigma0, "initial momentum spread")->capture_default_str();
    c->add_option("--tau0", a.tau0, "reference affine time")->capture_default_str();
    c->add_option("--R0", a.R0, "initial separation")->capture_default_str();
}

Json ic_json(const InitialConditions& ic) {
    return Json{{"p0", ic.p0}, {"sigma0", ic.sigma0}, {"tau0", ic.tau0}, {"R0", ic.R0}};
}

Json matrix_json(const Eigen::MatrixXd& m) {
    Json a = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        a.push_back(row);
    }
    return a;
}

// --- commands ----------------------------------------------------------------

struct MetricArgs {
    std::string model = "corr3";
    double sigma = 1.0, sigma_x = 1.0, sigma_y = 1.0, r = 0.0;
};

Result cmd_metric(const MetricArgs& a, Warnings&) {
    Result res;
    Eigen::MatrixXd g;
    if (a.model == "corr3")
        g = models::metric_corr3(a.sigma, {a.r});
    else if (a.model == "noncorr3")
        g = models::metric_noncorr3(a.sigma);
    else if (a.model == "corr4")
        g = models::metric_corr4(a.sigma_x, a.sigma_y, {a.r});
    else
        throw UsageError("--model must be corr3, noncorr3 or corr4");
    res.doc["command"] = "metric";
    res.doc["model"] = a.model;
    if (a.model == "corr4") {
        res.doc["sigma_x"] = a.sigma_x;
        res.doc["sigma_y"] = a.sigma_y;
        res.doc["index_order"] = Json::array({"mu_x", "sigma_x", "mu_y", "sigma_y"});
    } else {
        res.doc["sigma"] = a.sigma;
        res.doc["index_order"] = Json::array({"mu1", "mu2", "sigma"});
    }
    res.doc["r"] = a.model == "noncorr3" ? 0.0 : a.r;
    res.doc["metric"] = matrix_json(g);
    for (int i = 0; i < g.rows(); ++i)
        for (int j = i; j < g.cols(); ++j) res.scalars.emplace_back("g" + std::to_string(i) + std::to_string(j), g(i, j));
    const double det = g.determinant();
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues();
    put(res, "determinant", det);
    Json e = Json::array();
    for (int i = 0; i < ev.size(); ++i) {
        e.push_back(ev(i));
        res.scalars.emplace_back("eigenvalue" + std::to_string(i), ev(i));
    }
    res.doc["eigenvalues"] = e;
    return res;
}

struct CurvatureArgs {
    double sigma = 1.0, r = 0.0;
    bool fd = false;
};

Result cmd_curvature(const CurvatureArgs& a, Warnings&) {
    Result res;
    const ModelParams p{a.r};
    res.doc["command"] = "curvature";
    res.doc["sigma"] = a.sigma;
    res.doc["r"] = a.r;
    put(res, "scalar", curvature::scalar_curvature(p));
    const Vec3 e[3] = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            put(res, "sectional_" + std::to_string(i) + std::to_string(j), curvature::sectional(a.sigma, p, e[i], e[j]));
    put(res, "sectional_sum", curvature::sectional_sum(a.sigma, p));
    put(res, "weyl_max_abs", curvature::weyl(a.sigma, p).max_abs());
    const auto sym = curvature::maximal_symmetry_check(a.sigma, p);
    put(res, "ricci_residual", sym.ricci_residual);
    put(res, "riemann_residual", sym.riemann_residual);
    put(res, "trace_residual", sym.trace_residual);
    put(res, "riemann_symmetry_residual", curvature::riemann_symmetry_residual(curvature::riemann(a.sigma, p)));
    if (a.fd) {
        const auto b = oracle::curvature_fd(a.sigma, p);
        put(res, "fd_scalar", b.scalar);
        put(res, "fd_weyl_max_abs", b.weyl.max_abs());
        put(res, "fd_richardson_gap", b.richardson_gap);
    }
    return res;
}

struct GridArgs {
    std::optional<double> tau_min, tau_max;
    int steps = 40;
    std::string taus;  // explicit list overrides the range
};

void add_grid(CLI::App* c, GridArgs& g) {
    c->add_option("--tau-min", g.tau_min, "first grid point");
    c->add_option("--tau-max", g.tau_max, "last grid point");
    c->add_option("--steps", g.steps, "grid intervals")->capture_default_str();
    c->add_option("--taus", g.taus, "explicit comma-separated grid");
}

std::vector<double> grid_of(const GridArgs& g, double lo, double hi) {
    std::vector<double> t = g.taus.empty() ? linspace(g.tau_min.value_or(lo), g.tau_max.value_or(hi), g.steps)
                                           : parse_list(g.taus, "taus");
    require_monotone(t, "tau");
    return t;
}

struct GeodesicArgs {
    IcArgs ic;
    GridArgs grid;
    double r = 0.0;
};

Result cmd_geodesic(const GeodesicArgs& a, Warnings&) {
    Result res;
    const InitialConditions ic = a.ic.ic();
    geodesics::validate(ic);
    check_r(a.r);
    std::vector<double> t = grid_of(a.grid, -2.0 * ic.tau0, 2.0 * ic.tau0);
    // the junction appears exactly once
    if (t.front() <= 0.0 && t.back() >= 0.0 && std::find(t.begin(), t.end(), 0.0) == t.end())
        t.insert(std::upper_bound(t.begin(), t.end(), 0.0), 0.0);
    Table tab{{"tau", "mu1", "mu2", "sigma"}, {}, {}};
    for (double s : t) {
        const auto m = geodesics::joined_path(s, {a.r}, ic);
        tab.rows.push_back({s, m.mu1, m.mu2, m.sigma});
        tab.flags.emplace_back();
    }
    res.doc["command"] = "geodesic";
    res.doc["r"] = a.r;
    res.doc["initial_conditions"] = ic_json(ic);
    res.doc["A0"] = geodesics::amplitude_A0(ic);
    res.table = std::move(tab);
    return res;
}

struct JacobiArgs {
    IcArgs ic;
    GridArgs grid;
    double omega0 = 1.0, r = 0.0;
    bool numeric = false;
};

Result cmd_jacobi(const JacobiArgs& a, Warnings& w) {
    Result res;
    const InitialConditions ic = a.ic.ic();
    const double A0 = geodesics::amplitude_A0(ic);
    const std::vector<double> t = grid_of(a.grid, 0.0, 20.0 / A0);
    if (t.front() < 0.0) throw UsageError("jacobi grid must start at tau >= 0");
    Table tab{{"tau", "intensity", "rate"}, {}, {}};
    std::optional<oracle::JacobiRun> run;
    if (a.numeric) {
        std::vector<double> ot = t;
        if (ot.front() != 0.0) ot.insert(ot.begin(), 0.0);
        run = oracle::jacobi_integrate({a.r}, ic, ot, a.omega0);
        tab.columns.push_back("intensity_numeric");
    }
    const std::size_t shift = run && t.front() != 0.0 ? 1 : 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<std::optional<double>> row{t[i], chaos::jacobi_intensity(t[i], a.omega0, A0),
                                               chaos::jacobi_intensity_rate(t[i], a.omega0, A0)};
        if (run) row.push_back(run->intensity[i + shift]);
        tab.rows.push_back(row);
        tab.flags.emplace_back();
    }
    const auto est = chaos::lyapunov_estimate(a.omega0, A0, t.back() > 0 ? t.back() : 20.0 / A0, &w);
    res.doc["command"] = "jacobi";
    res.doc["initial_conditions"] = ic_json(ic);
    res.doc["A0"] = A0;
    res.doc["Q"] = chaos::jlc_coefficient(A0);
    res.doc["lyapunov_exponent"] = chaos::lyapunov_exponent(A0);
    res.doc["lyapunov_finite"] = est.finite;
    res.doc["lyapunov_extrapolated"] = est.extrapolated;
    if (run) {
        res.doc["numeric_fitted_rate"] = run->fitted_rate;
        res.doc["numeric_max_orthogonality"] = run->max_orthogonality;
    }
    res.table = std::move(tab);
    return res;
}

struct ComplexityArgs {
    IcArgs ic;
    GridArgs grid;
    std::string r = "0,0.3,0.7";
};

Result cmd_complexity(const ComplexityArgs& a, Warnings& w) {
    Result res;
    const InitialConditions ic = a.ic.ic();
    const double lam = chaos::lyapunov_exponent(geodesics::amplitude_A0(ic));
    const std::vector<double> t = grid_of(a.grid, 1.0 / lam, 10.0 / lam);
    if (t.front() <= 0.0) throw UsageError("complexity grid must be positive");
    const std::vector<double> rs = parse_list(a.r, "r");
    for (double r : rs) check_r(r);
    Table tab{{"tau", "lambda_tau", "r", "igc", "ige", "igc_ratio", "ige_gap"}, {}, {}};
    bool truncated = false;
    for (double s : t) {
        if (lam * s > complexity::kMaxLambdaTau) {
            truncated = true;
            continue;
        }
        for (double r : rs) {
            const auto rep = complexity::report(s, {r}, ic, &w);
            tab.rows.push_back({s, rep.lambda_tau, r, rep.igc, rep.ige, rep.igc_ratio, rep.ige_gap});
            tab.flags.emplace_back();
        }
    }
    if (truncated) warn(&w, "grid truncated at lambda*tau = 700 (overflow guard)");
    res.doc["command"] = "complexity";
    res.doc["initial_conditions"] = ic_json(ic);
    res.doc["lambda"] = lam;
    res.table = std::move(tab);
    return res;
}

struct ScatterArgs {
    IcArgs ic;
    double L = 0.1, a_s = 0.0, mass = 0.5;
};

// Regime trouble in one field becomes a warning and a null, not a failure.
std::optional<double> soft(Warnings& w, const char* what, const std::function<double()>& f) {
    try {
        return f();
    } catch (const RegimeError& e) {
        warn(&w, std::string(what) + ": " + e.what());
    } catch (const scattering::BoundViolation& e) {
        warn(&w, std::string(what) + ": " + e.what());
    }
    return std::nullopt;
}

Result cmd_scatter(const ScatterArgs& a, double hbar, Warnings& w) {
    Result res;
    if (!(hbar > 0.0)) throw DomainError("--hbar must be positive");
    const InitialConditions ic = a.ic.ic();
    geodesics::validate(ic);
    ScatteringConfig cfg;
    cfg.k0 = ic.p0 / hbar;
    cfg.sigma_k0 = ic.sigma0 / hbar;
    cfg.R0 = ic.R0;
    cfg.L = a.L;
    cfg.a_s = a.a_s;
    cfg.reduced_mass = a.mass;
    cfg.hbar = hbar;
    scattering::validate(cfg, &w);

    res.doc["command"] = "scatter";
    res.doc["config"] = Json{{"k0", cfg.k0},     {"sigma_k0", cfg.sigma_k0}, {"R0", cfg.R0}, {"L", cfg.L},
                             {"a_s", cfg.a_s},   {"reduced_mass", cfg.reduced_mass},          {"hbar", cfg.hbar}};
    const double sigma_cs = scattering::cross_section_from_length(cfg.a_s);
    const double r = scattering::r_from_cross_section(cfg, sigma_cs);
    const auto rq = soft(w, "r_qm", [&] { return scattering::r_qm(cfg, &w); });
    const auto theta = soft(w, "phase_shift", [&] { return scattering::phase_shift_exact(cfg, r); });
    const auto theta_series = soft(w, "phase_shift_series", [&] { return scattering::phase_shift_series(cfg, r, &w); });
    const double V = scattering::potential_from_r(r, cfg);
    const auto purity = soft(w, "purity", [&] { return scattering::purity_series(cfg, &w); });
    const auto purity_cs = soft(w, "purity_cross_section", [&] { return scattering::purity_cross_section(cfg, sigma_cs); });
    const auto purity_r = soft(w, "purity_from_r", [&] { return scattering::purity_from_r(cfg, r); });
    std::optional<scattering::ProlongationReport> pro;
    const double r_bound = scattering::prolongation(ic, 0.0).r_bound;
    try {
        pro = scattering::prolongation(ic, r);
    } catch (const scattering::BoundViolation& e) {
        warn(&w, std::string("prolongation: ") + e.what());
    }

    put(res, "r", r);
    put(res, "r_qm", number_or_null(rq));
    put(res, "theta0", number_or_null(theta));
    put(res, "theta0_series", number_or_null(theta_series));
    put(res, "cross_section", sigma_cs);
    put(res, "potential", V);
    put(res, "purity", number_or_null(purity));
    put(res, "delta", pro ? Json(pro->delta) : Json(nullptr));
    put(res, "delta_approx", pro ? Json(pro->delta_approx) : Json(nullptr));
    put(res, "r_bound", r_bound);

    // inline round trips; a failure is reported, the exit code stays 0
    Json checks = Json::array();
    auto check = [&](const char* name, std::optional<double> a1, std::optional<double> b1) {
        if (!a1 || !b1) return;
        const double resid = std::abs(*a1 - *b1);
        const bool ok = resid <= 1e-12 * std::max(1.0, std::abs(*b1));
        if (!ok) warn(&w, std::string("round trip ") + name + " off by " + num(resid));
        checks.push_back(Json{{"name", name}, {"residual", resid}, {"pass", ok}});
        res.scalars.emplace_back(std::string("check_") + name, ok ? "pass" : "fail");
    };
    check("r_from_potential", scattering::r_from_potential(cfg, V), r);
    check("r_from_purity", purity_r ? std::optional<double>(scattering::r_from_purity(cfg, *purity_r)) : std::nullopt, r);
    check("purity_cross_section", purity_cs, purity);
    check("purity_from_r", purity_r, purity);
    res.doc["checks"] = checks;
    return res;
}

struct ProlongationArgs {
    IcArgs ic;
    std::string r;
    int steps = 20;
    double r_max_fraction = 0.95;
};

Result cmd_prolongation(const ProlongationArgs& a, Warnings& w) {
    Result res;
    const InitialConditions ic = a.ic.ic();
    const double rb = scattering::prolongation(ic, 0.0).r_bound;
    std::vector<double> rs = a.r.empty() ? linspace(0.0, a.r_max_fraction * rb, a.steps) : parse_list(a.r, "r");
    require_monotone(rs, "r");
    Table tab{{"r", "delta_approx", "delta_exact", "relative_gap"}, {}, {}};
    for (double r : rs) {
        try {
            const auto rep = scattering::prolongation(ic, r);
            tab.rows.push_back({r, rep.delta_approx, rep.delta, rep.relative_gap});
            tab.flags.emplace_back();
        } catch (const scattering::BoundViolation& e) {
            tab.rows.push_back({r, std::nullopt, std::nullopt, std::nullopt});
            tab.flags.emplace_back("beyond_bound");
            warn(&w, e.what());
        }
    }
    res.doc["command"] = "prolongation";
    res.doc["initial_conditions"] = ic_json(ic);
    res.doc["r_bound"] = rb;
    res.doc["eta_delta"] = scattering::prolongation(ic, 0.0).eta_delta;
    res.table = std::move(tab);
    return res;
}

struct VerifyArgs {
    std::string only;
    std::vector<std::string> tol;
    double fault = 0.0;
};

Result cmd_verify(const VerifyArgs& a, Warnings&) {
    acceptance::SuiteOptions opt;
    if (!a.only.empty()) {
        std::stringstream ss(a.only);
        std::string item;
        while (std::getline(ss, item, ',')) opt.only.insert(item);
        std::set<std::string> known;
        for (const auto& c : acceptance::criteria()) {
            known.insert(c.group);
            known.insert(std::to_string(c.id));
        }
        for (const auto& s : opt.only)
            if (!known.count(s)) throw UsageError("--only: unknown suite '" + s + "'");
    }
    for (const auto& t : a.tol) {
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw UsageError("--tol expects ID=VALUE");
        try {
            opt.tolerance_override[std::stoi(t.substr(0, eq))] = std::stod(t.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("--tol expects ID=VALUE, got '" + t + "'");
        }
    }
    opt.metric_fault = a.fault;
    const auto results = acceptance::run(opt);

    Result res;
    res.doc["command"] = "verify";
    res.doc["passed"] = acceptance::all_passed(results);
    Json checks = Json::array();
    Table tab{{"id", "pass", "residual", "tolerance", "seconds"}, {}, {}};
    for (const auto& c : results) {
        Json m = Json::object();
        for (const auto& [k, v] : c.metrics) m[k] = v;
        checks.push_back(Json{{"id", c.id},
                              {"name", c.name},
                              {"group", c.group},
                              {"pass", c.pass},
                              {"residual", c.residual},
                              {"tolerance", c.tolerance},
                              {"seconds", c.seconds},
                              {"time_limit", c.time_limit},
                              {"detail", c.detail},
                              {"metrics", m}});
        tab.rows.push_back({double(c.id), c.pass ? 1.0 : 0.0, c.residual, c.tolerance, c.seconds});
        tab.flags.push_back(c.group);
    }
    res.doc["checks"] = checks;
    res.table = std::move(tab);
    res.exit_code = acceptance::all_passed(results) ? 0 : 1;
    return res;
}

}  // namespace

int run(const std::vector<std::string>& input, std::ostream& out, std::ostream& err) {
    CLI::App app{"Information geometry of colliding Gaussian wave packets", "igq"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", common.out, "output path (default standard output)");
    app.add_option("--config", common.config, "JSON file of flag values; flags on the command line win");
    app.add_option("--hbar", common.hbar, "reduced Planck constant for momentum input")->capture_default_str();

    MetricArgs ma;
    auto* metric = app.add_subcommand("metric", "Fisher-Rao metric, determinant and eigenvalues");
    metric->add_option("--model", ma.model, "corr3, noncorr3 or corr4")->capture_default_str();
    metric->add_option("--sigma", ma.sigma)->capture_default_str();
    metric->add_option("--sigma-x", ma.sigma_x)->capture_default_str();
    metric->add_option("--sigma-y", ma.sigma_y)->capture_default_str();
    metric->add_option("--r", ma.r, "micro-correlation")->capture_default_str();

    CurvatureArgs ca;
    auto* curv = app.add_subcommand("curvature", "curvature invariants of the 3D manifold");
    curv->add_option("--sigma", ca.sigma)->capture_default_str();
    curv->add_option("--r", ca.r)->capture_default_str();
    curv->add_flag("--fd", ca.fd, "also assemble tensors by finite differences");

    GeodesicArgs ga;
    auto* geo = app.add_subcommand("geodesic", "joined geodesic table tau,mu1,mu2,sigma");
    add_ic(geo, ga.ic);
    add_grid(geo, ga.grid);
    geo->add_option("--r", ga.r)->capture_default_str();

    JacobiArgs ja;
    auto* jac = app.add_subcommand("jacobi", "Jacobi field intensity and Lyapunov exponent");
    add_ic(jac, ja.ic);
    add_grid(jac, ja.grid);
    jac->add_option("--omega0", ja.omega0)->capture_default_str();
    jac->add_option("--r", ja.r)->capture_default_str();
    jac->add_flag("--numeric", ja.numeric, "integrate the vector equation alongside");

    ComplexityArgs xa;
    auto* cpx = app.add_subcommand("complexity", "IGC and IGE over a tau grid and r list");
    add_ic(cpx, xa.ic);
    add_grid(cpx, xa.grid);
    cpx->add_option("--r", xa.r, "comma-separated r values")->capture_default_str();

    ScatterArgs sa;
    auto* sc = app.add_subcommand("scatter", "quantum scattering report");
    add_ic(sc, sa.ic);
    sc->add_option("--L", sa.L, "potential range")->capture_default_str();
    sc->add_option("--a-s", sa.a_s, "s-wave scattering length")->capture_default_str();
    sc->add_option("--mass", sa.mass, "reduced mass")->capture_default_str();

    ProlongationArgs pa;
    auto* pro = app.add_subcommand("prolongation", "prolongation sweep over r");
    add_ic(pro, pa.ic);
    pro->add_option("--r", pa.r, "comma-separated r values (default: sweep below r_bound)");
    pro->add_option("--steps", pa.steps)->capture_default_str();
    pro->add_option("--r-max-fraction", pa.r_max_fraction, "sweep end as a fraction of r_bound")->capture_default_str();

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "oracle-versus-closed-form suite");
    ver->add_option("--only", va.only, "comma-separated groups or criterion ids");
    ver->add_option("--tol", va.tol, "ID=VALUE headline tolerance override")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    ver->add_option("--inject-fault", va.fault, "offset added to g_00 (negative control)")->group("");

    std::vector<std::string> args = input;
    Warnings w;
    Result res;
    try {
        // config values go right after the subcommand so later flags override them
        for (std::size_t i = 0; i < args.size(); ++i) {
            std::string path;
            if (args[i] == "--config" && i + 1 < args.size())
                path = args[i + 1];
            else if (args[i].rfind("--config=", 0) == 0)
                path = args[i].substr(9);
            if (path.empty()) continue;
            const auto tok = config_tokens(path);
            const auto sub = std::find_if(args.begin(), args.end(), [&](const std::string& s) { return app.get_subcommand_no_throw(s) != nullptr; });
            args.insert(sub == args.end() ? args.end() : sub + 1, tok.begin(), tok.end());
            break;
        }
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);

        if (*metric)
            res = cmd_metric(ma, w);
        else if (*curv)
            res = cmd_curvature(ca, w);
        else if (*geo)
            res = cmd_geodesic(ga, w);
        else if (*jac)
            res = cmd_jacobi(ja, w);
        else if (*cpx)
            res = cmd_complexity(xa, w);
        else if (*sc)
            res = cmd_scatter(sa, common.hbar, w);
        else if (*pro)
            res = cmd_prolongation(pa, w);
        else if (*ver)
            res = cmd_verify(va, w);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RegimeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    // repeated regime warnings from a sweep are reported once
    Warnings unique;
    for (const auto& s : w)
        if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);
    for (const auto& s : unique) err << "warning: " << s << "\n";
    attach_table(res);
    res.doc["warnings"] = unique;

    std::ofstream file;
    if (!common.out.empty()) {
        file.open(common.out);
        if (!file) {
            err << "error: cannot write " << common.out << "\n";
            return 2;
        }
    }
    std::ostream& os = common.out.empty() ? out : file;
    if (common.format == "csv") {
        write_csv(res, os);
    } else {
        emit(res.doc, os);
        os << "\n";
    }
    return res.exit_code;
}

}  // namespace igq::cli
