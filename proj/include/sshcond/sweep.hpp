#ifndef SSHCOND_SWEEP_HPP
#define SSHCOND_SWEEP_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sshcond/asymptotics.hpp"
#include "sshcond/bounds.hpp"
#include "sshcond/model.hpp"
#include "sshcond/oracle.hpp"
#include "sshcond/presets.hpp"
#include "sshcond/types.hpp"

namespace sshcond {

struct SweepConfig {
    ModelParams params;
    double omega_min = 0.0;
    double omega_max = 3.0;
    int n_points = 1500;
    bool zero_temperature = false;  // force beta = infinity in the quadrature
    QuadratureSpec quad;
    std::string csv_path;
    std::string json_path;

    void validate() const {
        params.validate();
        quad.validate();
        if (!(omega_min < omega_max))
            throw std::invalid_argument("SweepConfig: omega_min < omega_max required");
        if (n_points < 2) throw std::invalid_argument("SweepConfig: n_points >= 2 required");
    }
};

/// Per-omega quadrature and asymptotic conductivities. rel_deviation is
/// normalized by the sweep max of |sigma_quad| once all rows exist.
inline std::vector<ConductivitySample> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    ModelParams p = cfg.params;
    if (cfg.zero_temperature) p.beta = beta_infinity;
    std::vector<ConductivitySample> rows;
    rows.reserve(cfg.n_points);
    const double step = (cfg.omega_max - cfg.omega_min) / (cfg.n_points - 1);
    for (int i = 0; i < cfg.n_points; ++i) {
        const double omega = cfg.omega_min + step * i;
        ConductivitySample s;
        s.omega = omega;
        const QuadResult q = oracle::sigma_interband_bz(p, omega, cfg.quad);
        s.sigma_quad = q.value;
        s.quad_error_estimate = q.error_estimate;
        s.quad_converged = q.converged;
        s.sigma_asym = asym::sigma_zero_temperature(p, omega);
        rows.push_back(s);
    }
    double norm = 0.0;
    for (const auto& s : rows) norm = std::max(norm, std::abs(s.sigma_quad));
    for (auto& s : rows)
        s.rel_deviation = norm > 0.0 ? std::abs(s.sigma_asym - s.sigma_quad) / norm : 0.0;
    return rows;
}

namespace detail {

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

}  // namespace detail

inline constexpr const char* csv_header =
    "omega,re_sigma_quad,im_sigma_quad,re_sigma_asym,im_sigma_asym,rel_deviation,quad_flag";

/// CSV emission with a fixed 17-significant-digit scientific format so a
/// given config always produces byte-identical output.
inline std::string to_csv(const std::vector<ConductivitySample>& rows) {
    std::string out = csv_header;
    out += '\n';
    for (const auto& s : rows) {
        out += detail::fmt17(s.omega);
        out += ',';
        out += detail::fmt17(std::real(s.sigma_quad));
        out += ',';
        out += detail::fmt17(std::imag(s.sigma_quad));
        out += ',';
        out += detail::fmt17(std::real(s.sigma_asym));
        out += ',';
        out += detail::fmt17(std::imag(s.sigma_asym));
        out += ',';
        out += detail::fmt17(s.rel_deviation);
        out += ',';
        out += s.quad_converged ? '0' : '1';
        out += '\n';
    }
    return out;
}

struct Peak {
    double omega = 0.0;
    double value = 0.0;
};

/// Strict local maxima of y(omega) above frac * max(y).
inline std::vector<Peak> find_peaks(const std::vector<double>& omega,
                                    const std::vector<double>& y, double frac = 0.01) {
    std::vector<Peak> peaks;
    double top = 0.0;
    for (double v : y) top = std::max(top, v);
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
        if (y[i] > y[i - 1] && y[i] > y[i + 1] && y[i] >= frac * top)
            peaks.push_back({omega[i], y[i]});
    return peaks;
}

struct FigureSummary {
    std::string preset;
    ModelParams params;
    double eps1 = 0.0;
    double eps3 = 0.0;
    double max_rel_deviation = 0.0;
    std::vector<Peak> peaks_quad;
    std::vector<Peak> peaks_asym;
    bounds::RegimeReport regime;
    bool all_converged = true;
};

struct FigureData {
    std::vector<ConductivitySample> rows;
    FigureSummary summary;
};

inline FigureData reproduce_figure(FigureId id, int n_points = 1500,
                                   const QuadratureSpec& quad = {}) {
    SweepConfig cfg;
    cfg.params = figure_preset(id);
    cfg.n_points = n_points;
    cfg.quad = quad;
    FigureData out;
    out.rows = run_sweep(cfg);

    std::vector<double> omegas, re_quad, re_asym;
    for (const auto& s : out.rows) {
        omegas.push_back(s.omega);
        re_quad.push_back(std::real(s.sigma_quad));
        re_asym.push_back(std::real(s.sigma_asym));
        out.summary.max_rel_deviation =
            std::max(out.summary.max_rel_deviation, s.rel_deviation);
        out.summary.all_converged = out.summary.all_converged && s.quad_converged;
    }
    out.summary.preset = to_string(id);
    out.summary.params = cfg.params;
    const EpsilonTriple e = epsilon_params(cfg.params, 0.0);
    out.summary.eps1 = e.eps1;
    out.summary.eps3 = e.eps3;
    out.summary.peaks_quad = find_peaks(omegas, re_quad);
    out.summary.peaks_asym = find_peaks(omegas, re_asym);
    out.summary.regime = bounds::regime_diagnostics(cfg.params);
    return out;
}

inline nlohmann::ordered_json summary_to_json(const FigureSummary& s) {
    nlohmann::ordered_json j;
    j["preset"] = s.preset;
    j["params"] = {{"g0", s.params.g0},
                   {"g1", s.params.g1},
                   {"a", s.params.a},
                   {"tau_inv", s.params.tau_inv},
                   {"beta", s.params.beta},
                   {"mu", s.params.mu}};
    j["eps1"] = s.eps1;
    j["eps3"] = s.eps3;
    j["max_rel_deviation"] = s.max_rel_deviation;
    auto peaks = nlohmann::ordered_json::array();
    for (const auto& p : s.peaks_quad)
        peaks.push_back({{"source", "quadrature"}, {"omega", p.omega}, {"value", p.value}});
    for (const auto& p : s.peaks_asym)
        peaks.push_back({{"source", "asymptotics"}, {"omega", p.omega}, {"value", p.value}});
    j["peaks"] = peaks;
    j["regime"] = {{"eps1", s.regime.eps1},
                   {"eps3_sqrt_eps1", s.regime.eps3_sqrt_eps1},
                   {"bound_value", s.regime.bound_value},
                   {"regime_ok", s.regime.regime_ok},
                   {"notes", s.regime.notes}};
    j["all_converged"] = s.all_converged;
    return j;
}

namespace detail {

inline void apply_config_kv(SweepConfig& cfg, const std::string& section,
                            const std::string& key, const std::string& value) {
    const double x = std::strtod(value.c_str(), nullptr);
    if (section == "params" || section.empty()) {
        if (key == "g0") { cfg.params.g0 = x; return; }
        if (key == "g1") { cfg.params.g1 = x; return; }
        if (key == "a") { cfg.params.a = x; return; }
        if (key == "tau_inv") { cfg.params.tau_inv = x; return; }
        if (key == "beta") {
            cfg.params.beta = (value == "inf") ? beta_infinity : x;
            return;
        }
    }
    if (section == "sweep" || section.empty()) {
        if (key == "omega_min") { cfg.omega_min = x; return; }
        if (key == "omega_max") { cfg.omega_max = x; return; }
        if (key == "n_points") { cfg.n_points = static_cast<int>(x); return; }
        if (key == "beta_mode") {
            cfg.zero_temperature = (value == "zero_temperature");
            return;
        }
    }
    if (section == "quad" || section.empty()) {
        if (key == "rel_tol") { cfg.quad.rel_tol = x; return; }
        if (key == "abs_tol") { cfg.quad.abs_tol = x; return; }
        if (key == "max_subdivisions") {
            cfg.quad.max_subdivisions = static_cast<int>(x);
            return;
        }
    }
    if (section == "outputs" || section.empty()) {
        if (key == "csv_path") { cfg.csv_path = value; return; }
        if (key == "json_path") { cfg.json_path = value; return; }
    }
    throw std::invalid_argument("config: unknown key '" + key + "' in section [" + section +
                                "]");
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Sweep configuration from either JSON or sectioned key=value text.
inline SweepConfig parse_config(const std::string& text) {
    SweepConfig cfg;
    const std::string t = detail::trim(text);
    if (!t.empty() && t.front() == '{') {
        const auto j = nlohmann::json::parse(t);
        if (j.contains("params")) {
            const auto& p = j["params"];
            if (p.contains("g0")) cfg.params.g0 = p["g0"];
            if (p.contains("g1")) cfg.params.g1 = p["g1"];
            if (p.contains("a")) cfg.params.a = p["a"];
            if (p.contains("tau_inv")) cfg.params.tau_inv = p["tau_inv"];
            if (p.contains("beta")) {
                if (p["beta"].is_string())
                    cfg.params.beta = beta_infinity;
                else
                    cfg.params.beta = p["beta"];
            }
        }
        if (j.contains("omega_min")) cfg.omega_min = j["omega_min"];
        if (j.contains("omega_max")) cfg.omega_max = j["omega_max"];
        if (j.contains("n_points")) cfg.n_points = j["n_points"];
        if (j.contains("beta_mode")) cfg.zero_temperature = j["beta_mode"] == "zero_temperature";
        if (j.contains("quad")) {
            const auto& q = j["quad"];
            if (q.contains("rel_tol")) cfg.quad.rel_tol = q["rel_tol"];
            if (q.contains("abs_tol")) cfg.quad.abs_tol = q["abs_tol"];
            if (q.contains("max_subdivisions")) cfg.quad.max_subdivisions = q["max_subdivisions"];
        }
        if (j.contains("outputs")) {
            const auto& o = j["outputs"];
            if (o.contains("csv_path")) cfg.csv_path = o["csv_path"];
            if (o.contains("json_path")) cfg.json_path = o["json_path"];
        }
        return cfg;
    }
    std::istringstream in(t);
    std::string line, section;
    while (std::getline(in, line)) {
        line = detail::trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = detail::trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got '" + line + "'");
        detail::apply_config_kv(cfg, section, detail::trim(line.substr(0, eq)),
                                detail::trim(line.substr(eq + 1)));
    }
    return cfg;
}

inline SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace sshcond

#endif
