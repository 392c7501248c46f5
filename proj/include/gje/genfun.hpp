#pragma once

#include <vector>

#include "gje/geom.hpp"

namespace gje {

enum class Family {
    QuadraticOT,
    NearFieldReflector,
};

// Generating function G(x, y, v) of the coupling, together with the range
// reparametrization used by the solver. QuadraticOT pairs the quadratic
// transport cost with an additive weight and an identity reparametrization;
// NearFieldReflector uses focal parameters constrained to ]0, gamma[ and a
// scaled logistic map so solver iterates live on the whole real line.
struct GeneratingFunctionSpec {
    Family family = Family::QuadraticOT;
    double gamma = 0.0;
};

double g_eval(const GeneratingFunctionSpec& spec, Vec2 x, Vec2 y, double v);
Vec2 g_grad_x(const GeneratingFunctionSpec& spec, Vec2 x, Vec2 y, double v);
double g_dv(const GeneratingFunctionSpec& spec, Vec2 x, Vec2 y, double v);

// Solver coordinate t -> admissible raw value v, its derivative, and the
// inverse map. Identity for QuadraticOT, gamma * logistic(t) for the
// reflector.
double reparam_apply(const GeneratingFunctionSpec& spec, double t);
double reparam_derivative(const GeneratingFunctionSpec& spec, double t);
double reparam_invert(const GeneratingFunctionSpec& spec, double v);

// Largest safe focal bound for the reflector on this geometry: a 0.1%
// margin under 1 / max_i max_corner ||corner - y_i||, which keeps the
// gradient map injective on the whole rectangle.
double twist_gamma_bound(const Rect& rect, const std::vector<Site>& sites);

}  // namespace gje
