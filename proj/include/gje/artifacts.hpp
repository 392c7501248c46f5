#pragma once

#include <string>
#include <vector>

#include "gje/diagram.hpp"
#include "gje/genfun.hpp"
#include "gje/geom.hpp"
#include "gje/newton.hpp"

namespace gje {

// SVG 1.1 rendering of the diagram: one closed path per non-empty cell with
// native arc commands, plus one dot per site. Byte-deterministic for fixed
// input.
void render_svg(const Diagram& diagram, const std::vector<Site>& sites, const Rect& rect,
                const std::string& path);

// Residual trace: header iter,res_l2,res_l1,tau and one row per accepted
// iteration.
void write_residual_csv(const SolveResult& result, const std::string& path);

// Triangle mesh of the surface u(x) = max_j G(x, y_j, v_j) sampled on a
// resolution x resolution grid: ASCII "v x y z" then "f i j k" lines, two
// triangles per grid cell. raw holds the potentials in natural coordinates.
void export_surface(const GeneratingFunctionSpec& gen, const std::vector<Site>& sites,
                    const std::vector<double>& raw, const Rect& rect, int resolution,
                    const std::string& path);

// Machine-readable solve report (JSON): status, iterations, res_l2, res_l1,
// wall_ms, plus the potential vectors and per-iteration histories.
void write_report(const Problem& p, const SolveResult& result, const std::string& path);

}  // namespace gje
