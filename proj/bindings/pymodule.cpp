#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "gje/newton.hpp"
#include "gje/oracle.hpp"
#include "gje/runconfig.hpp"

namespace py = pybind11;
using namespace gje;

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return {v.data(), v.data() + v.size()};
}

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), (Eigen::Index)v.size());
}

Problem problem_from_text(const std::string& text) {
    RunConfig cfg = parse_run_config(text);
    std::vector<std::string> bad = validate_config(cfg);
    if (!bad.empty()) throw std::invalid_argument(bad.front());
    return build_problem(cfg);
}

Eigen::VectorXd checked_psi(const Problem& p, const std::vector<double>& psi) {
    if (psi.size() != p.sites.size())
        throw std::invalid_argument("psi length does not match the site count");
    return to_eigen(psi);
}

}  // namespace

PYBIND11_MODULE(gjesolve, m) {
    m.doc() = "Damped Newton solver for semi-discrete generated Jacobian equations";

    m.def(
        "solve_config",
        [](const std::string& config_text) {
            RunConfig cfg = parse_run_config(config_text);
            std::vector<std::string> bad = validate_config(cfg);
            if (!bad.empty()) throw std::invalid_argument(bad.front());
            Problem p = build_problem(cfg);
            SolveResult r = solve(p, cfg.solver);
            py::dict d;
            d["status"] = std::string(to_string(r.status));
            d["iterations"] = r.iterations;
            d["res_l2"] = r.residual_l2;
            d["res_l1"] = r.residual_l1;
            d["wall_ms"] = r.wall_ms;
            d["fallback_used"] = r.fallback_used;
            d["psi"] = to_std(r.psi);
            d["psi_raw"] = to_raw(p.gen, r.psi);
            d["tau_history"] = r.tau_history;
            d["res_history"] = r.res_history;
            return d;
        },
        py::arg("config_text"),
        "Solve the problem described by a JSON configuration string.");

    m.def(
        "validate_config",
        [](const std::string& config_text) {
            return validate_config(parse_run_config(config_text));
        },
        py::arg("config_text"),
        "Return the list of rule violations for a JSON configuration string.");

    m.def(
        "cell_masses",
        [](const std::string& config_text, const std::vector<double>& psi) {
            Problem p = problem_from_text(config_text);
            return to_std(compute_mass(p, checked_psi(p, psi)).mass);
        },
        py::arg("config_text"), py::arg("psi"),
        "Exact cell masses at a potential given in solver coordinates.");

    m.def(
        "mc_masses",
        [](const std::string& config_text, const std::vector<double>& psi, long long n_samples,
           unsigned long long seed) {
            Problem p = problem_from_text(config_text);
            SampleConfig cfg;
            cfg.n_samples = n_samples;
            cfg.seed = seed;
            McMassResult r = mc_mass(p.gen, p.domain, p.sites, checked_psi(p, psi), cfg);
            return py::make_tuple(to_std(r.estimate), to_std(r.std_error));
        },
        py::arg("config_text"), py::arg("psi"), py::arg("n_samples") = 1000000,
        py::arg("seed") = 0,
        "Monte-Carlo mass estimates and standard errors at a potential.");

    m.def(
        "grid_masses",
        [](const std::string& config_text, const std::vector<double>& psi, int resolution) {
            Problem p = problem_from_text(config_text);
            SampleConfig cfg;
            cfg.grid_resolution = resolution;
            return to_std(grid_mass(p.gen, p.domain, p.sites, checked_psi(p, psi), cfg));
        },
        py::arg("config_text"), py::arg("psi"), py::arg("resolution") = 512,
        "Midpoint-rule mass estimates at a potential.");
}
