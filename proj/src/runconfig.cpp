#include "gje/runconfig.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gje/rng.hpp"
#include "json.hpp"

namespace gje {

namespace {

using nlohmann::json;

double as_number(const json& j, const std::string& key) {
    if (!j.is_number()) throw std::invalid_argument("config: " + key + " must be a number");
    return j.get<double>();
}

Rect rect_from(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("config: " + key + " must be [x0, y0, x1, y1]");
    Rect r{{as_number(j[0], key), as_number(j[1], key)},
           {as_number(j[2], key), as_number(j[3], key)}};
    if (!(r.lo.x < r.hi.x && r.lo.y < r.hi.y))
        throw std::invalid_argument("config: " + key + " must have positive extent");
    return r;
}

bool is_power_of_two(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) return false;
    int exp = 0;
    return std::frexp(x, &exp) == 0.5;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

    RunConfig cfg;

    if (j.contains("family")) {
        std::string f = j["family"].get<std::string>();
        if (f == "reflector")
            cfg.family = Family::NearFieldReflector;
        else if (f == "quadratic_ot")
            cfg.family = Family::QuadraticOT;
        else
            throw std::invalid_argument("config: family must be \"reflector\" or \"quadratic_ot\"");
    }

    if (j.contains("domain")) {
        const json& d = j["domain"];
        if (!d.is_object()) throw std::invalid_argument("config: domain must be an object");
        if (d.contains("rect")) cfg.rect = rect_from(d["rect"], "domain.rect");
        if (d.contains("density")) {
            std::string k = d["density"].get<std::string>();
            if (k == "uniform")
                cfg.density = DensityKind::Uniform;
            else if (k == "lebesgue_quarter")
                cfg.density = DensityKind::LebesgueQuarter;
            else
                throw std::invalid_argument(
                    "config: domain.density must be \"uniform\" or \"lebesgue_quarter\"");
        }
    }

    if (!j.contains("sites")) throw std::invalid_argument("config: sites is required");
    const json& s = j["sites"];
    if (s.is_array()) {
        for (const auto& e : s) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("config: each explicit site must be [x, y]");
            cfg.explicit_sites.push_back({as_number(e[0], "sites"), as_number(e[1], "sites")});
        }
        if (cfg.explicit_sites.empty())
            throw std::invalid_argument("config: sites must not be empty");
    } else if (s.is_object()) {
        SiteGenerator gen;
        if (!s.contains("count")) throw std::invalid_argument("config: sites.count is required");
        gen.count = s["count"].get<int>();
        if (gen.count < 1) throw std::invalid_argument("config: sites.count must be >= 1");
        if (s.contains("seed")) gen.seed = s["seed"].get<unsigned long long>();
        if (s.contains("box")) gen.box = rect_from(s["box"], "sites.box");
        cfg.generator = gen;
    } else {
        throw std::invalid_argument("config: sites must be a list of points or a generator object");
    }

    if (j.contains("target")) {
        const json& t = j["target"];
        if (t.is_string()) {
            if (t.get<std::string>() != "uniform")
                throw std::invalid_argument("config: target must be \"uniform\" or a weight list");
        } else if (t.is_array()) {
            for (const auto& e : t) cfg.explicit_target.push_back(as_number(e, "target"));
        } else {
            throw std::invalid_argument("config: target must be \"uniform\" or a weight list");
        }
    }

    if (j.contains("gamma")) {
        const json& g = j["gamma"];
        if (g.is_string()) {
            if (g.get<std::string>() != "auto")
                throw std::invalid_argument("config: gamma must be \"auto\" or a number");
        } else {
            cfg.gamma_auto = false;
            cfg.gamma_value = as_number(g, "gamma");
        }
    }

    if (j.contains("solver")) {
        const json& sv = j["solver"];
        if (!sv.is_object()) throw std::invalid_argument("config: solver must be an object");
        if (sv.contains("epsilon")) cfg.solver.eps = as_number(sv["epsilon"], "solver.epsilon");
        if (sv.contains("max_iterations")) cfg.solver.max_iter = sv["max_iterations"].get<int>();
        if (sv.contains("tau_min")) cfg.solver.tau_min = as_number(sv["tau_min"], "solver.tau_min");
        if (sv.contains("delta")) {
            const json& d = sv["delta"];
            if (d.is_string()) {
                if (d.get<std::string>() != "auto")
                    throw std::invalid_argument("config: solver.delta must be \"auto\" or a number");
            } else {
                cfg.solver.delta = as_number(d, "solver.delta");
                if (!(cfg.solver.delta >= 0.0))
                    throw std::invalid_argument("config: solver.delta must be >= 0");
            }
        }
        if (sv.contains("alpha")) cfg.alpha = as_number(sv["alpha"], "solver.alpha");
    }

    if (j.contains("outputs")) {
        const json& o = j["outputs"];
        if (!o.is_object()) throw std::invalid_argument("config: outputs must be an object");
        if (o.contains("svg")) cfg.outputs.svg = o["svg"].get<std::string>();
        if (o.contains("csv")) cfg.outputs.csv = o["csv"].get<std::string>();
        if (o.contains("mesh")) cfg.outputs.mesh = o["mesh"].get<std::string>();
        if (o.contains("mesh_resolution"))
            cfg.outputs.mesh_resolution = o["mesh_resolution"].get<int>();
        if (o.contains("report")) cfg.outputs.report = o["report"].get<std::string>();
    }

    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str());
}

Problem build_problem(const RunConfig& cfg) {
    Problem p;
    p.domain.rect = cfg.rect;
    if (cfg.density == DensityKind::LebesgueQuarter && std::abs(cfg.rect.area() - 4.0) > 1e-12)
        p.domain.density = [](Vec2) { return 0.25; };
    // lebesgue_quarter on an area-4 rectangle equals the uniform density, so
    // the fast constant-density path applies

    if (cfg.generator) {
        for (int i = 0; i < cfg.generator->count; ++i)
            p.sites.push_back({i, point_in_rect(cfg.generator->seed, 2ull * i, cfg.generator->box)});
    } else {
        for (int i = 0; i < (int)cfg.explicit_sites.size(); ++i)
            p.sites.push_back({i, cfg.explicit_sites[i]});
    }

    const int n = (int)p.sites.size();
    if (cfg.explicit_target.empty()) {
        p.target = Eigen::VectorXd::Constant(n, 1.0 / n);
    } else {
        if ((int)cfg.explicit_target.size() != n)
            throw std::invalid_argument("config: target length does not match the site count");
        p.target.resize(n);
        double sum = 0.0;
        for (double w : cfg.explicit_target) sum += w;
        if (!(sum > 0.0)) throw std::invalid_argument("config: target weights must sum to > 0");
        for (int i = 0; i < n; ++i) p.target[i] = cfg.explicit_target[i] / sum;
    }

    double gamma = 0.0;
    if (cfg.family == Family::NearFieldReflector)
        gamma = cfg.gamma_auto ? twist_gamma_bound(cfg.rect, p.sites) : cfg.gamma_value;
    p.gen = {cfg.family, gamma};
    p.alpha = cfg.alpha;
    return p;
}

std::vector<std::string> validate_config(const RunConfig& cfg) {
    std::vector<std::string> out;
    Problem p;
    try {
        p = build_problem(cfg);
    } catch (const std::exception& e) {
        out.push_back(e.what());
        return out;
    }
    const int n = (int)p.sites.size();
    auto at = [&](int i) { return p.sites[i].position; };

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((at(i) - at(j)).norm() <= 1e-12) {
                std::ostringstream m;
                m << "sites " << i << " and " << j << " coincide";
                out.push_back(m.str());
            }

    if (cfg.family == Family::NearFieldReflector) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Vec2 d = at(j) - at(i);
                for (int k = j + 1; k < n; ++k) {
                    if (std::abs(d.cross(at(k) - at(i))) <= 1e-9) {
                        std::ostringstream m;
                        m << "sites " << i << ", " << j << ", " << k << " are collinear";
                        out.push_back(m.str());
                    }
                }
            }
        if (!cfg.gamma_auto && !(cfg.gamma_value > 0.0))
            out.push_back("gamma must be positive for the reflector family");
    }

    if (cfg.family == Family::QuadraticOT) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Vec2 d = at(j) - at(i);
                Vec2 mid = (at(i) + at(j)) * 0.5;
                double len = d.norm();
                bool vertical_bisector = std::abs(d.y) <= 1e-9 * len;
                bool horizontal_bisector = std::abs(d.x) <= 1e-9 * len;
                auto flag = [&](const char* wall) {
                    std::ostringstream m;
                    m << "bisector of sites " << i << " and " << j << " lies on the " << wall
                      << " wall";
                    out.push_back(m.str());
                };
                if (vertical_bisector && std::abs(mid.x - cfg.rect.lo.x) <= 1e-9) flag("left");
                if (vertical_bisector && std::abs(mid.x - cfg.rect.hi.x) <= 1e-9) flag("right");
                if (horizontal_bisector && std::abs(mid.y - cfg.rect.lo.y) <= 1e-9) flag("bottom");
                if (horizontal_bisector && std::abs(mid.y - cfg.rect.hi.y) <= 1e-9) flag("top");
            }
    }

    double min_target = p.target.minCoeff();
    if (!(min_target > 0.0)) out.push_back("target weights must be positive");
    double delta = cfg.solver.delta < 0.0 ? min_target / 2.0 : cfg.solver.delta;
    if (delta > min_target / 2.0) {
        std::ostringstream m;
        m << "delta " << delta << " exceeds half the smallest target mass " << min_target / 2.0;
        out.push_back(m.str());
    }

    if (cfg.density == DensityKind::LebesgueQuarter && std::abs(cfg.rect.area() - 4.0) > 1e-12)
        out.push_back("lebesgue_quarter density integrates to area/4 != 1 on this rectangle");

    if (!(cfg.solver.eps > 0.0)) out.push_back("solver.epsilon must be positive");
    if (cfg.solver.max_iter < 0) out.push_back("solver.max_iterations must be >= 0");
    if (!is_power_of_two(cfg.solver.tau_min) || cfg.solver.tau_min > 1.0)
        out.push_back("solver.tau_min must be a power of two in (0, 1]");
    if (!cfg.outputs.mesh.empty() && cfg.family != Family::NearFieldReflector)
        out.push_back("mesh export requires the reflector family");
    if (!cfg.outputs.mesh.empty() && cfg.outputs.mesh_resolution < 2)
        out.push_back("outputs.mesh_resolution must be >= 2");
    if (cfg.outputs.report.empty()) out.push_back("outputs.report must not be empty");

    return out;
}

}  // namespace gje
