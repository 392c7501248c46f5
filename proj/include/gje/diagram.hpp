#pragma once

#include <vector>

#include "gje/arc_polygon.hpp"
#include "gje/genfun.hpp"
#include "gje/geom.hpp"

namespace gje {

// Each cell of the diagram is an intersection of regions
//   { x : lambda_i |x - p_i|^2 - mu_i <= lambda_j |x - p_j|^2 - mu_j },
// which are disks, disk complements, or half-planes.
struct MobiusWeights {
    double lambda = 0.0;
    double mu = 0.0;
    Vec2 p;
};

// Converts raw potential values into per-site weights. For the reflector
// family (lambda, mu) = (psi/2, 1/(2 psi)); for quadratic transport every
// lambda equals 1/2 so all cell boundaries degenerate to straight lines.
std::vector<MobiusWeights> mobius_weights(const GeneratingFunctionSpec& spec,
                                          const std::vector<Site>& sites,
                                          const std::vector<double>& psi_raw);

double mobius_value(const MobiusWeights& w, Vec2 x);

// Independent route to the same cells: reflector weights lift to spheres in
// R^3 whose power function differs from the weight function by a term that
// depends on x alone, so cell membership comparisons agree exactly.
struct LiftedSphere {
    double px = 0.0, py = 0.0, pz = 0.0;
    double r2 = 0.0;
};

LiftedSphere lift_to_power(double psi_raw, Vec2 y);
double power_value(const LiftedSphere& s, Vec2 x);

struct Diagram {
    std::vector<ArcPolygon> cells;
    std::vector<std::vector<int>> neighbors;  // sorted site indices, symmetric
};

// Intersects every site's constraint set against the rectangle. Cells may be
// empty; neighbors lists the pairs that share boundary of positive length.
Diagram build_diagram(const Rect& rect, const std::vector<MobiusWeights>& weights);

}  // namespace gje
