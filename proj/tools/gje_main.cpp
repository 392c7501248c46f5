#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gje/artifacts.hpp"
#include "gje/oracle.hpp"
#include "gje/runconfig.hpp"
#include "json.hpp"

namespace {

using namespace gje;

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 2;
constexpr int kExitInvalidConfig = 3;
constexpr int kExitNumericalFailure = 4;

Eigen::VectorXd read_psi(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("psi: cannot open " + path);
    std::vector<double> vals;
    double v;
    while (in >> v) vals.push_back(v);
    if ((int)vals.size() != n)
        throw std::invalid_argument("psi: expected " + std::to_string(n) + " values, got " +
                                    std::to_string(vals.size()));
    return Eigen::Map<Eigen::VectorXd>(vals.data(), n);
}

int load_and_validate(const std::string& config_path, RunConfig& cfg, Problem& p) {
    try {
        cfg = load_run_config(config_path);
        std::vector<std::string> bad = validate_config(cfg);
        if (!bad.empty()) {
            for (const std::string& m : bad) std::cerr << "invalid config: " << m << "\n";
            return kExitInvalidConfig;
        }
        p = build_problem(cfg);
    } catch (const std::exception& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kExitInvalidConfig;
    }
    return kExitOk;
}

int cmd_validate(const std::string& config_path) {
    RunConfig cfg;
    try {
        cfg = load_run_config(config_path);
    } catch (const std::exception& e) {
        std::cout << e.what() << "\n";
        return kExitInvalidConfig;
    }
    std::vector<std::string> bad = validate_config(cfg);
    for (const std::string& m : bad) std::cout << m << "\n";
    if (!bad.empty()) return kExitInvalidConfig;
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_solve(const std::string& config_path) {
    RunConfig cfg;
    Problem p;
    if (int rc = load_and_validate(config_path, cfg, p)) return rc;

    SolveResult r;
    try {
        r = solve(p, cfg.solver);
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    }

    try {
        write_report(p, r, cfg.outputs.report);
        if (!cfg.outputs.csv.empty()) write_residual_csv(r, cfg.outputs.csv);
        if (!cfg.outputs.svg.empty()) {
            MassResult mr = compute_mass(p, r.psi);
            render_svg(mr.diagram, p.sites, p.domain.rect, cfg.outputs.svg);
        }
        if (!cfg.outputs.mesh.empty())
            export_surface(p.gen, p.sites, to_raw(p.gen, r.psi), p.domain.rect,
                           cfg.outputs.mesh_resolution, cfg.outputs.mesh);
    } catch (const std::exception& e) {
        std::cerr << "output failure: " << e.what() << "\n";
        return 1;
    }

    std::cout << "status " << to_string(r.status) << ", iterations " << r.iterations
              << ", res_l2 " << r.residual_l2 << ", res_l1 " << r.residual_l1 << "\n";
    switch (r.status) {
        case SolveStatus::Converged:
            return kExitOk;
        case SolveStatus::MaxIterations:
            return kExitNotConverged;
        default:
            return kExitNumericalFailure;
    }
}

int cmd_diagram(const std::string& config_path, const std::string& psi_path) {
    RunConfig cfg;
    Problem p;
    if (int rc = load_and_validate(config_path, cfg, p)) return rc;

    Eigen::VectorXd psi;
    try {
        psi = read_psi(psi_path, (int)p.sites.size());
    } catch (const std::exception& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kExitInvalidConfig;
    }

    std::string out = cfg.outputs.svg.empty() ? "diagram.svg" : cfg.outputs.svg;
    try {
        MassResult mr = compute_mass(p, psi);
        render_svg(mr.diagram, p.sites, p.domain.rect, out);
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    }
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& config_path, const std::string& psi_path, long long mc_n,
               unsigned long long seed, int grid_r) {
    RunConfig cfg;
    Problem p;
    if (int rc = load_and_validate(config_path, cfg, p)) return rc;

    Eigen::VectorXd psi;
    try {
        psi = read_psi(psi_path, (int)p.sites.size());
    } catch (const std::exception& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kExitInvalidConfig;
    }

    nlohmann::ordered_json j;
    try {
        if (grid_r > 0) {
            SampleConfig sc;
            sc.grid_resolution = grid_r;
            Eigen::VectorXd est = grid_mass(p.gen, p.domain, p.sites, psi, sc);
            j["method"] = "grid";
            j["resolution"] = grid_r;
            j["estimate"] = std::vector<double>(est.data(), est.data() + est.size());
        } else {
            SampleConfig sc;
            sc.n_samples = mc_n;
            sc.seed = seed;
            McMassResult mc = mc_mass(p.gen, p.domain, p.sites, psi, sc);
            j["method"] = "mc";
            j["n_samples"] = mc_n;
            j["seed"] = seed;
            j["estimate"] =
                std::vector<double>(mc.estimate.data(), mc.estimate.data() + mc.estimate.size());
            j["std_error"] = std::vector<double>(mc.std_error.data(),
                                                 mc.std_error.data() + mc.std_error.size());
        }
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-discrete generated Jacobian equation solver"};
    app.require_subcommand(1);

    std::string config_path, psi_path;
    long long mc_n = 1000000;
    unsigned long long seed = 0;
    int grid_r = 0;

    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve the configured problem");
    solve_cmd->add_option("config", config_path, "JSON config file")->required();

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check a config for rule violations");
    validate_cmd->add_option("config", config_path, "JSON config file")->required();

    CLI::App* diagram_cmd =
        app.add_subcommand("diagram", "Render the diagram for a given potential");
    diagram_cmd->add_option("config", config_path, "JSON config file")->required();
    diagram_cmd
        ->add_option("--psi", psi_path, "potential in solver coordinates, one value per line")
        ->required();

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "Estimate cell masses by sampling or grid quadrature");
    oracle_cmd->add_option("config", config_path, "JSON config file")->required();
    oracle_cmd
        ->add_option("--psi", psi_path, "potential in solver coordinates, one value per line")
        ->required();
    CLI::Option* mc_opt = oracle_cmd->add_option("--mc", mc_n, "Monte-Carlo sample count");
    oracle_cmd->add_option("--seed", seed, "Monte-Carlo seed");
    CLI::Option* grid_opt =
        oracle_cmd->add_option("--grid", grid_r, "grid resolution (points per axis)");
    mc_opt->excludes(grid_opt);
    grid_opt->excludes(mc_opt);

    CLI11_PARSE(app, argc, argv);

    if (solve_cmd->parsed()) return cmd_solve(config_path);
    if (validate_cmd->parsed()) return cmd_validate(config_path);
    if (diagram_cmd->parsed()) return cmd_diagram(config_path, psi_path);
    if (oracle_cmd->parsed()) return cmd_oracle(config_path, psi_path, mc_n, seed, grid_r);
    return 1;
}
