// Command-line front end: frequency sweeps, figure-preset reproduction,
// validation suite, and Mellin-transform spot checks.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sshcond/mellin.hpp"
#include "sshcond/sweep.hpp"
#include "sshcond/validate.hpp"

namespace {

bool use_color() {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    return true;
}

std::string pass_tag(bool ok) {
    if (!use_color()) return ok ? "[PASS]" : "[FAIL]";
    return ok ? "\033[32m[PASS]\033[0m" : "\033[31m[FAIL]\033[0m";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

sshcond::cplx parse_cplx(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return {std::strtod(s.c_str(), nullptr), 0.0};
    return {std::strtod(s.substr(0, comma).c_str(), nullptr),
            std::strtod(s.substr(comma + 1).c_str(), nullptr)};
}

int run_sweep_cmd(const std::string& config_path, bool strict) {
    sshcond::SweepConfig cfg = sshcond::load_config(config_path);
    cfg.validate();
    const auto rows = sshcond::run_sweep(cfg);
    bool all_ok = true;
    for (const auto& r : rows) all_ok = all_ok && r.quad_converged;
    const std::string csv = sshcond::to_csv(rows);
    if (!cfg.csv_path.empty())
        write_file(cfg.csv_path, csv);
    else
        std::cout << csv;
    if (!cfg.json_path.empty()) {
        nlohmann::ordered_json j;
        j["n_points"] = cfg.n_points;
        j["omega_min"] = cfg.omega_min;
        j["omega_max"] = cfg.omega_max;
        double maxdev = 0.0;
        for (const auto& r : rows) maxdev = std::max(maxdev, r.rel_deviation);
        j["max_rel_deviation"] = maxdev;
        j["all_converged"] = all_ok;
        write_file(cfg.json_path, j.dump(2) + "\n");
    }
    if (strict && !all_ok) {
        std::cerr << "quadrature failed to converge on at least one row\n";
        return 3;
    }
    return 0;
}

int run_figure_cmd(const std::string& name, const std::string& outdir, int points) {
    const sshcond::FigureId id = sshcond::figure_id_from_string(name);
    const sshcond::FigureData data = sshcond::reproduce_figure(id, points);
    const auto j = sshcond::summary_to_json(data.summary);
    if (!outdir.empty()) {
        std::filesystem::create_directories(outdir);
        write_file(outdir + "/" + name + ".csv", sshcond::to_csv(data.rows));
        write_file(outdir + "/" + name + "_summary.json", j.dump(2) + "\n");
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_validate_cmd(const std::string& scope) {
    const auto results = sshcond::validate::run_scope(scope);
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << pass_tag(r.pass) << " " << r.name;
        if (r.threshold > 0.0 || r.measured > 0.0)
            std::cout << "  (measured " << r.measured << ", threshold " << r.threshold << ")";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
        all_ok = all_ok && r.pass;
    }
    std::cout << (all_ok ? "validation passed" : "validation FAILED") << " for scope '" << scope
              << "'\n";
    return all_ok ? 0 : 2;
}

int run_mellin_check_cmd(const std::string& lam, const std::string& nu, const std::string& th,
                         bool numeric) {
    sshcond::mellin::MellinPoint p{parse_cplx(lam), parse_cplx(nu), parse_cplx(th)};
    std::cout << "in_region_D: " << (sshcond::mellin::in_region_d(p) ? "true" : "false") << "\n";
    if (!sshcond::mellin::in_region_d(p)) return 2;
    const sshcond::cplx closed = sshcond::mellin::transform_closed(p);
    std::cout << "transform_closed: " << std::real(closed) << (std::imag(closed) < 0 ? " - " : " + ")
              << std::abs(std::imag(closed)) << "i\n";
    const double dev = sshcond::mellin::assembly_deviation(p);
    std::cout << pass_tag(dev <= 1e-11) << " assembly deviation " << dev << " (threshold 1e-11)\n";
    bool ok = dev <= 1e-11;
    if (numeric) {
        const auto plan = sshcond::mellin::default_plan(p);
        const auto fwd = sshcond::mellin::forward_numeric(p, plan);
        const double rel = std::abs(fwd.value - closed) / std::abs(closed);
        std::cout << pass_tag(rel <= 1e-3) << " numeric forward transform deviation " << rel
                  << " (threshold 1e-3)\n";
        ok = ok && rel <= 1e-3;
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interband conductivity of the dimerized two-band chain"};
    app.require_subcommand(1);

    std::string config_path;
    bool strict = false;
    auto* sweep = app.add_subcommand("sweep", "run a frequency sweep from a config file");
    sweep->add_option("--config", config_path, "config file (key=value sections or JSON)")
        ->required();
    sweep->add_flag("--strict", strict, "exit 3 if any quadrature fails to converge");

    std::string figure_name, outdir;
    int points = 1500;
    auto* figure = app.add_subcommand("figure", "reproduce a bundled parameter preset");
    figure->add_option("name", figure_name, "fig2|fig3|fig4|fig5")->required();
    figure->add_option("--out", outdir, "directory for CSV and summary JSON");
    figure->add_option("--points", points, "sweep resolution (default 1500)");

    std::string scope = "all";
    auto* validate = app.add_subcommand("validate", "run the module invariant suites");
    validate->add_option("--scope", scope, "specfun|mellin|oracle|asymptotics|bounds|all");

    std::string lam = "-0.1,0", nu = "0.2,0", th = "1.35,0";
    bool numeric = false;
    auto* mc = app.add_subcommand("mellin-check", "evaluate the closed transform at a point");
    mc->add_option("--lambda", lam, "re,im")->required();
    mc->add_option("--nu", nu, "re,im")->required();
    mc->add_option("--theta", th, "re,im")->required();
    mc->add_flag("--numeric", numeric, "also run the numeric forward transform (slow)");

    try {
        app.parse(argc, argv);
        if (sweep->parsed()) return run_sweep_cmd(config_path, strict);
        if (figure->parsed()) return run_figure_cmd(figure_name, outdir, points);
        if (validate->parsed()) return run_validate_cmd(scope);
        if (mc->parsed()) return run_mellin_check_cmd(lam, nu, th, numeric);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
