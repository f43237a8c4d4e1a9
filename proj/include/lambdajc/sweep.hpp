#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lambdajc/coherent.hpp"
#include "lambdajc/model.hpp"
#include "lambdajc/observables.hpp"
#include "lambdajc/oracle.hpp"
#include "lambdajc/phase_entropy.hpp"
#include "lambdajc/state.hpp"

namespace lambdajc {

// ---------------------------------------------------------------------------
// Figure presets.  One family of six configurations shared by all indicator
// figures: {a,b,c} x {up,down}.  up = constant coupling (f = 1), down =
// intensity-dependent coupling (f = 1/sqrt(n)).  a: no Kerr, resonant;
// b: deformed Kerr chi = 0.4 lambda (g = 1/sqrt(n)), resonant; c: deformed
// Kerr plus detuning delta2 = delta3 = detuning (default 5 lambda; the source
// figures never print their value, so it stays a parameter).
//
// All presets use lambda1 = lambda2 = 1, |alpha|^2 = 10 per mode, n_max = 40,
// and pin omega1 = 0, Omega1 = Omega2 = 0, omega2 = delta2, omega3 = delta3,
// so the free phases are branch-constant and every indicator evolves on the
// scaled-time axis tau = lambda t.
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"a-up", "a-down", "b-up",
                                                   "b-down", "c-up", "c-down"};
    return names;
}

// Accepts canonical names ("a-down") and figure-prefixed aliases
// ("fig1a-down", "fig-3a-down"): the configurations are figure-independent.
inline std::string canonical_preset_name(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s.starts_with("fig")) {
        std::size_t i = 3;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        s.erase(0, i);
    }
    return s;
}

inline ModelConfig make_preset(std::string_view name, double detuning = 5.0) {
    const std::string key = canonical_preset_name(name);
    const auto dash = key.find('-');
    if (dash == std::string::npos)
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    const std::string family = key.substr(0, dash);
    const std::string side = key.substr(dash + 1);
    if ((family != "a" && family != "b" && family != "c") ||
        (side != "up" && side != "down"))
        throw ConfigError("unknown preset '" + std::string(name) + "'");

    ModelConfig cfg;
    cfg.lambda1 = cfg.lambda2 = 1.0;
    cfg.alpha1 = cfg.alpha2 = std::sqrt(10.0);
    cfg.n_max = 40;
    cfg.f1 = cfg.f2 =
        side == "down" ? Nonlinearity::harmonious() : Nonlinearity::unit();
    if (family == "a") {
        cfg.chi = 0.0;
        cfg.g1 = cfg.g2 = Nonlinearity::unit();
    } else {
        cfg.chi = 0.4;
        cfg.g1 = cfg.g2 = Nonlinearity::harmonious();
    }
    if (family == "c") {
        cfg.omega2 = detuning;  // delta2 = omega2 with omega1 = Omega1 = 0
        cfg.omega3 = detuning;
    }
    return cfg;
}

// Reduced scale used by the oracle cross-check: n_max = 15, |alpha|^2 = 4.
// The raw coherent tail at this truncation is ~5e-6, hence the relaxed
// trunc_tol (weights are renormalized downstream either way).
inline ModelConfig reduced_scale(ModelConfig cfg) {
    cfg.n_max = 15;
    cfg.alpha1 = cfg.alpha1 == complexd{} ? complexd{} : complexd{2.0, 0.0};
    cfg.alpha2 = cfg.alpha2 == complexd{} ? complexd{} : complexd{2.0, 0.0};
    cfg.trunc_tol = 1e-4;
    return cfg;
}

// ---------------------------------------------------------------------------
// Sweep specification and execution
// ---------------------------------------------------------------------------

struct SweepSpec {
    std::string preset;  // informational; config holds the parameters
    ModelConfig config;
    double tau_start = 0.0;
    double tau_end = 50.0;
    int tau_steps = 500;  // number of samples, both endpoints included
    std::string out_path;
    bool verify = false;
    int m_pts = 128;
    double theta0 = -std::numbers::pi;

    void validate() const {
        config.validate();
        if (!(tau_start >= 0.0) || !(tau_end > tau_start))
            throw ConfigError("require tau_end > tau_start >= 0");
        if (tau_steps < 2) throw ConfigError("tau_steps must be at least 2");
        if (m_pts < 2) throw ConfigError("m_pts must be at least 2");
    }
};

struct SweepRow {
    double tau = 0;
    double s_theta = 0, s_n = 0, r_n = 0, r_theta = 0;
    std::optional<double> q1, q2, i0;
    double s_x1 = 0, s_x2 = 0, s_y1 = 0, s_y2 = 0;
    double n1_mean = 0, n2_mean = 0;
    double norm_err = 0;
};

inline SweepRow compute_row(const ModelConfig& cfg, const BlockTable& table,
                            const CoherentWeights& weights, double tau,
                            double theta0, int m_pts) {
    const double t = tau / cfg.lambda1;  // scaled time tau = lambda1 * t
    const JointState state = assemble_state(cfg, table, weights, t);
    const MomentSet mom = moments(state);
    const PhaseGrid grid = phase_distribution(state, theta0, m_pts);
    const EntropyRecord ent = entropies(state, grid);
    const TwoModeSqueezing tm = two_mode_squeezing(mom);
    const SumSqueezing ss = sum_squeezing(mom);

    SweepRow row;
    row.tau = tau;
    row.s_theta = ent.s_theta;
    row.s_n = ent.s_n;
    row.r_n = ent.r_n;
    row.r_theta = ent.r_theta;
    row.q1 = mandel_q(mom, 1);
    row.q2 = mandel_q(mom, 2);
    row.i0 = csi_parameter(mom);
    row.s_x1 = tm.s_x1;
    row.s_x2 = tm.s_x2;
    row.s_y1 = ss.s_y1;
    row.s_y2 = ss.s_y2;
    row.n1_mean = mom.n1;
    row.n2_mean = mom.n2;
    row.norm_err = std::abs(state.norm_sq() - 1.0);
    return row;
}

inline std::vector<SweepRow> compute_sweep(const SweepSpec& spec) {
    spec.validate();
    const BlockTable table = BlockTable::build(spec.config);
    const CoherentWeights weights = CoherentWeights::from_config(spec.config);
    std::vector<SweepRow> rows;
    rows.reserve(spec.tau_steps);
    const double step = (spec.tau_end - spec.tau_start) / (spec.tau_steps - 1);
    for (int i = 0; i < spec.tau_steps; ++i) {
        const double tau = spec.tau_start + i * step;
        rows.push_back(compute_row(spec.config, table, weights, tau, spec.theta0,
                                   spec.m_pts));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// CSV output: fixed column order, shortest round-trip decimals, one row per
// tau sample.  Byte-identical for identical specs.
// ---------------------------------------------------------------------------

inline constexpr std::string_view kCsvHeader =
    "tau,S_theta,S_n,R_n,R_theta,Q1,Q2,I0,S_X1,S_X2,S_Y1,S_Y2,n1_mean,n2_mean,norm_err";

namespace detail {
inline void append_double(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}
inline void append_optional(std::string& out, const std::optional<double>& v) {
    if (v) append_double(out, *v);
    else out += "nan";
}
}  // namespace detail

inline void write_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    std::string line;
    os << kCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        line.clear();
        detail::append_double(line, r.tau);
        for (const double v : {r.s_theta, r.s_n, r.r_n, r.r_theta}) {
            line += ',';
            detail::append_double(line, v);
        }
        for (const auto& v : {r.q1, r.q2, r.i0}) {
            line += ',';
            detail::append_optional(line, v);
        }
        for (const double v : {r.s_x1, r.s_x2, r.s_y1, r.s_y2, r.n1_mean,
                               r.n2_mean, r.norm_err}) {
            line += ',';
            detail::append_double(line, v);
        }
        os << line << '\n';
    }
}

// Reduced-scale oracle comparison: max-norm deviation between the closed form
// and the RK4 state over tau = 1..tau_end.  Used by --verify and the tests.
inline double verify_against_oracle(const ModelConfig& cfg, double tau_end = 10.0,
                                    double dt = 1e-3) {
    const BlockTable table = BlockTable::build(cfg);
    const CoherentWeights weights = CoherentWeights::from_config(cfg);
    SchroedingerIntegrator integ(cfg, dt / cfg.lambda1);
    double worst = 0.0;
    for (int k = 1; k <= static_cast<int>(tau_end); ++k) {
        const double t = k / cfg.lambda1;
        integ.advance_to(t);
        const JointState closed = assemble_state(cfg, table, weights, t);
        worst = std::max(worst, max_norm_deviation(closed, integ.state()));
    }
    return worst;
}

inline void run_sweep(const SweepSpec& spec) {
    spec.validate();
    if (spec.verify) {
        const double dev = verify_against_oracle(reduced_scale(spec.config));
        if (!(dev < 1e-6))
            throw StepSizeError("oracle verification failed: max-norm deviation " +
                                std::to_string(dev));
    }
    const std::vector<SweepRow> rows = compute_sweep(spec);
    std::ofstream os(spec.out_path, std::ios::binary);
    if (!os) throw IoError("cannot open output file '" + spec.out_path + "'");
    write_csv(rows, os);
    if (!os) throw IoError("write failed for '" + spec.out_path + "'");
}

// Phase-distribution snapshot at a single tau, as CSV rows (theta1, theta2, P).
inline PhaseGrid phase_snapshot(const SweepSpec& spec, double tau) {
    spec.config.validate();
    const JointState state = assemble_state(spec.config, tau / spec.config.lambda1);
    return phase_distribution(state, spec.theta0, spec.m_pts);
}

inline void dump_phase_snapshot(const SweepSpec& spec, double tau) {
    const PhaseGrid grid = phase_snapshot(spec, tau);
    std::ofstream os(spec.out_path, std::ios::binary);
    if (!os) throw IoError("cannot open output file '" + spec.out_path + "'");
    os << "theta1,theta2,P\n";
    std::string line;
    for (int i1 = 0; i1 < grid.m_pts; ++i1) {
        for (int i2 = 0; i2 < grid.m_pts; ++i2) {
            line.clear();
            const double h = 2.0 * std::numbers::pi / grid.m_pts;
            detail::append_double(line, grid.theta0 + i1 * h);
            line += ',';
            detail::append_double(line, grid.theta0 + i2 * h);
            line += ',';
            detail::append_double(line, grid.values[static_cast<std::size_t>(i1) * grid.m_pts + i2]);
            os << line << '\n';
        }
    }
    if (!os) throw IoError("write failed for '" + spec.out_path + "'");
}

// ---------------------------------------------------------------------------
// Flat key=value configuration files ('#' comments, one key per line).
// Model keys: lambda1 lambda2 chi omega1 omega2 omega3 Omega1 Omega2
//             f1 f2 g1 g2 (unit | harmonious | comma-separated table)
//             n_max alpha1_re alpha1_im alpha2_re alpha2_im
//             include_free_phases trunc_tol
// Optional sweep keys: tau_start tau_end tau_steps m_pts theta0 out
// CLI flags override file values.
// ---------------------------------------------------------------------------

struct FileConfig {
    ModelConfig model;
    std::optional<double> tau_start, tau_end, theta0;
    std::optional<int> tau_steps, m_pts;
    std::optional<std::string> out;
};

namespace detail {

inline std::string trim(std::string_view sv) {
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    std::size_t b = 0, e = sv.size();
    while (b < e && is_space(sv[b])) ++b;
    while (e > b && is_space(sv[e - 1])) --e;
    return std::string(sv.substr(b, e - b));
}

inline double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number '" + value + "' for key '" + key + "'");
    }
}

inline Nonlinearity parse_nonlinearity(const std::string& key, const std::string& value) {
    if (value == "unit") return Nonlinearity::unit();
    if (value == "harmonious") return Nonlinearity::harmonious();
    std::vector<double> table;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        table.push_back(parse_double(key, trim(item)));
    if (table.empty())
        throw ConfigError("empty nonlinearity table for key '" + key + "'");
    return Nonlinearity::custom(std::move(table));
}

}  // namespace detail

inline FileConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot read config file '" + path + "'");
    FileConfig fc;
    std::map<std::string, std::string> kv;
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected key=value");
        kv[detail::trim(line.substr(0, eq))] = detail::trim(line.substr(eq + 1));
    }

    double a1re = 0, a1im = 0, a2re = 0, a2im = 0;
    for (const auto& [key, value] : kv) {
        if (key == "lambda1") fc.model.lambda1 = detail::parse_double(key, value);
        else if (key == "lambda2") fc.model.lambda2 = detail::parse_double(key, value);
        else if (key == "chi") fc.model.chi = detail::parse_double(key, value);
        else if (key == "omega1") fc.model.omega1 = detail::parse_double(key, value);
        else if (key == "omega2") fc.model.omega2 = detail::parse_double(key, value);
        else if (key == "omega3") fc.model.omega3 = detail::parse_double(key, value);
        else if (key == "Omega1") fc.model.Omega1 = detail::parse_double(key, value);
        else if (key == "Omega2") fc.model.Omega2 = detail::parse_double(key, value);
        else if (key == "f1") fc.model.f1 = detail::parse_nonlinearity(key, value);
        else if (key == "f2") fc.model.f2 = detail::parse_nonlinearity(key, value);
        else if (key == "g1") fc.model.g1 = detail::parse_nonlinearity(key, value);
        else if (key == "g2") fc.model.g2 = detail::parse_nonlinearity(key, value);
        else if (key == "n_max") fc.model.n_max = static_cast<int>(detail::parse_double(key, value));
        else if (key == "alpha1_re") a1re = detail::parse_double(key, value);
        else if (key == "alpha1_im") a1im = detail::parse_double(key, value);
        else if (key == "alpha2_re") a2re = detail::parse_double(key, value);
        else if (key == "alpha2_im") a2im = detail::parse_double(key, value);
        else if (key == "include_free_phases")
            fc.model.include_free_phases = detail::parse_double(key, value) != 0.0;
        else if (key == "trunc_tol") fc.model.trunc_tol = detail::parse_double(key, value);
        else if (key == "tau_start") fc.tau_start = detail::parse_double(key, value);
        else if (key == "tau_end") fc.tau_end = detail::parse_double(key, value);
        else if (key == "tau_steps") fc.tau_steps = static_cast<int>(detail::parse_double(key, value));
        else if (key == "m_pts") fc.m_pts = static_cast<int>(detail::parse_double(key, value));
        else if (key == "theta0") fc.theta0 = detail::parse_double(key, value);
        else if (key == "out") fc.out = value;
        else throw ConfigError("unknown config key '" + key + "'");
    }
    fc.model.alpha1 = complexd{a1re, a1im};
    fc.model.alpha2 = complexd{a2re, a2im};
    return fc;
}

}  // namespace lambdajc
