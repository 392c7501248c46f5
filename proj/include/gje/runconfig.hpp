#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gje/genfun.hpp"
#include "gje/geom.hpp"
#include "gje/massmap.hpp"
#include "gje/newton.hpp"

namespace gje {

enum class DensityKind { Uniform, LebesgueQuarter };

struct SiteGenerator {
    int count = 0;
    unsigned long long seed = 0;
    Rect box{{0.0, 0.0}, {1.0, 1.0}};
};

struct OutputPaths {
    std::string svg;
    std::string csv;
    std::string mesh;
    int mesh_resolution = 64;
    std::string report = "report.json";
};

struct RunConfig {
    Family family = Family::NearFieldReflector;
    Rect rect{{-1.0, -1.0}, {1.0, 1.0}};
    DensityKind density = DensityKind::LebesgueQuarter;
    std::vector<Vec2> explicit_sites;
    std::optional<SiteGenerator> generator;
    std::vector<double> explicit_target;  // empty means uniform weights
    bool gamma_auto = true;
    double gamma_value = 0.0;
    SolveParams solver;  // delta < 0 means auto (half the smallest target)
    double alpha = 0.0;
    OutputPaths outputs;
};

// Parses the JSON config text; throws std::invalid_argument with a message
// naming the offending key on schema violations.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

// Materializes sites (running the generator if configured), target weights,
// density, and the generating-function spec.
Problem build_problem(const RunConfig& cfg);

// Returns all rule violations, empty when the config is runnable: distinct
// sites, no three collinear sites (reflector), no site-pair bisector on a
// wall line (quadratic), admissibility floor at most half the smallest
// target, density normalization, and output constraints.
std::vector<std::string> validate_config(const RunConfig& cfg);

}  // namespace gje
