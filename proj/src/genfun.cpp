#include "gje/genfun.hpp"

#include <cmath>
#include <stdexcept>

namespace gje {

namespace {

void require_positive_focal(double v) {
    if (!(v > 0.0))
        throw std::domain_error("reflector focal parameter must be positive, got " +
                                std::to_string(v));
}

}  // namespace

double g_eval(const GeneratingFunctionSpec& spec, Vec2 x, Vec2 y, double v) {
    double d2 = (x - y).squared_norm();
    if (spec.family == Family::QuadraticOT) return -0.5 * d2 - v;
    require_positive_focal(v);
    return 0.5 / v - 0.5 * v * d2;
}

Vec2 g_grad_x(const GeneratingFunctionSpec& spec, Vec2 x, Vec2 y, double v) {
    if (spec.family == Family::QuadraticOT) return y - x;
    require_positive_focal(v);
    return (y - x) * v;
}

double g_dv(const GeneratingFunctionSpec& spec, Vec2 x, Vec2 y, double v) {
    if (spec.family == Family::QuadraticOT) return -1.0;
    require_positive_focal(v);
    double d2 = (x - y).squared_norm();
    return -0.5 / (v * v) - 0.5 * d2;
}

double reparam_apply(const GeneratingFunctionSpec& spec, double t) {
    if (spec.family == Family::QuadraticOT) return t;
    return spec.gamma / (1.0 + std::exp(-t));
}

double reparam_derivative(const GeneratingFunctionSpec& spec, double t) {
    if (spec.family == Family::QuadraticOT) return 1.0;
    double s = 1.0 / (1.0 + std::exp(-t));
    return spec.gamma * s * (1.0 - s);
}

double reparam_invert(const GeneratingFunctionSpec& spec, double v) {
    if (spec.family == Family::QuadraticOT) return v;
    if (!(v > 0.0 && v < spec.gamma))
        throw std::domain_error("raw value outside ]0, gamma[");
    return std::log(v / (spec.gamma - v));
}

double twist_gamma_bound(const Rect& rect, const std::vector<Site>& sites) {
    if (sites.empty()) throw std::invalid_argument("twist_gamma_bound: no sites");
    double worst = 0.0;
    for (const Site& s : sites)
        for (int k = 0; k < 4; ++k)
            worst = std::max(worst, (rect.corner(k) - s.position).norm());
    return (1.0 - 1e-3) / worst;
}

}  // namespace gje
