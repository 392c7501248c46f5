#include "gje/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gje/parallel.hpp"

namespace gje {

std::vector<MobiusWeights> mobius_weights(const GeneratingFunctionSpec& spec,
                                          const std::vector<Site>& sites,
                                          const std::vector<double>& psi_raw) {
    if (sites.size() != psi_raw.size())
        throw std::invalid_argument("mobius_weights: size mismatch");
    std::vector<MobiusWeights> out(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
        double v = psi_raw[i];
        if (spec.family == Family::NearFieldReflector) {
            if (v <= 0.0)
                throw std::domain_error("mobius_weights: potential must be positive");
            out[i] = {v / 2.0, 1.0 / (2.0 * v), sites[i].position};
        } else {
            out[i] = {0.5, -v, sites[i].position};
        }
    }
    return out;
}

double mobius_value(const MobiusWeights& w, Vec2 x) {
    return w.lambda * (x - w.p).squared_norm() - w.mu;
}

LiftedSphere lift_to_power(double psi_raw, Vec2 y) {
    if (psi_raw <= 0.0) throw std::domain_error("lift_to_power: potential must be positive");
    double ps = psi_raw;
    LiftedSphere s;
    s.px = ps / 2.0 * y.x;
    s.py = ps / 2.0 * y.y;
    s.pz = -ps / 4.0;
    double yn2 = y.squared_norm();
    s.r2 = ps * ps / 16.0 + ps * ps * yn2 / 4.0 - ps * yn2 / 2.0 + 1.0 / (2.0 * ps);
    return s;
}

double power_value(const LiftedSphere& s, Vec2 x) {
    double x3 = x.squared_norm();
    double dx = x.x - s.px, dy = x.y - s.py, dz = x3 - s.pz;
    return dx * dx + dy * dy + dz * dz - s.r2;
}

namespace {

double rect_min_dist(const Rect& r, Vec2 q) {
    double dx = std::max({r.lo.x - q.x, 0.0, q.x - r.hi.x});
    double dy = std::max({r.lo.y - q.y, 0.0, q.y - r.hi.y});
    return std::hypot(dx, dy);
}

double rect_max_dist(const Rect& r, Vec2 q) {
    double best = 0.0;
    for (int k = 0; k < 4; ++k) best = std::max(best, (r.corner(k) - q).norm());
    return best;
}

enum class Prefilter { Apply, Skip, MakesEmpty };

Prefilter prefilter(const CircleConstraint& c, const Rect& bb) {
    double m = 1e-9 * (1.0 + bb.hi.norm() + bb.lo.norm());
    switch (c.kind) {
        case CircleConstraint::Kind::All:
            return Prefilter::Skip;
        case CircleConstraint::Kind::Empty:
            return Prefilter::MakesEmpty;
        case CircleConstraint::Kind::HalfPlane: {
            double lo = HUGE_VAL, hi = -HUGE_VAL;
            for (int k = 0; k < 4; ++k) {
                double v = c.normal.dot(bb.corner(k)) - c.offset;
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            if (hi <= -m) return Prefilter::Skip;
            if (lo >= m) return Prefilter::MakesEmpty;
            return Prefilter::Apply;
        }
        case CircleConstraint::Kind::InsideDisk: {
            if (rect_max_dist(bb, c.center) <= c.radius - m) return Prefilter::Skip;
            if (rect_min_dist(bb, c.center) >= c.radius + m) return Prefilter::MakesEmpty;
            return Prefilter::Apply;
        }
        case CircleConstraint::Kind::OutsideDisk: {
            if (rect_min_dist(bb, c.center) >= c.radius + m) return Prefilter::Skip;
            if (rect_max_dist(bb, c.center) <= c.radius - m) return Prefilter::MakesEmpty;
            return Prefilter::Apply;
        }
    }
    return Prefilter::Apply;
}

ArcPolygon build_cell(const Rect& rect, const std::vector<MobiusWeights>& w, int i) {
    const int n = (int)w.size();
    std::vector<int> order;
    order.reserve(n - 1);
    for (int j = 0; j < n; ++j)
        if (j != i) order.push_back(j);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double da = (w[a].p - w[i].p).squared_norm();
        double db = (w[b].p - w[i].p).squared_norm();
        if (da != db) return da < db;
        return a < b;
    });

    ArcPolygon poly = rect_polygon(rect);
    std::vector<CircleConstraint> active;
    std::function<bool(Vec2)> member = [&rect, &active](Vec2 q) {
        double m = 1e-12 * (1.0 + q.norm());
        if (q.x < rect.lo.x - m || q.x > rect.hi.x + m || q.y < rect.lo.y - m ||
            q.y > rect.hi.y + m)
            return false;
        for (const CircleConstraint& c : active) {
            double band = std::max(1e-12 * c.field_gradient(q).norm(),
                                   1e-13 * (std::abs(c.qa) * q.squared_norm() +
                                            2.0 * c.qb.norm() * q.norm() + std::abs(c.qc)));
            if (c.field(q) > band) return false;
        }
        return true;
    };

    Rect bb = rect;
    for (int j : order) {
        CircleConstraint c = constraint_from_mobius(w[i].lambda, w[i].mu, w[i].p,
                                                    w[j].lambda, w[j].mu, w[j].p);
        c.owner = j;
        Prefilter p = prefilter(c, bb);
        if (p == Prefilter::Skip) continue;
        if (p == Prefilter::MakesEmpty) return {};
        CircleConstraint used;
        poly = clip(poly, c, &member, &used);
        if (poly.empty()) return {};
        active.push_back(used);
        bb = bounding_box(poly);
    }
    return poly;
}

}  // namespace

Diagram build_diagram(const Rect& rect, const std::vector<MobiusWeights>& weights) {
    Diagram d;
    const int n = (int)weights.size();
    d.cells.resize(n);
    d.neighbors.resize(n);
    parallel_for(n, [&](std::size_t i) { d.cells[i] = build_cell(rect, weights, (int)i); });

    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        std::vector<double> len(n, 0.0);
        for (const auto& loop : d.cells[i].loops)
            for (const ArcEdge& e : loop)
                if (e.owner >= 0 && e.owner < n) len[e.owner] += e.length();
        for (int j = 0; j < n; ++j)
            if (len[j] > 1e-12) pairs.insert({std::min(i, j), std::max(i, j)});
    }
    for (const auto& [a, b] : pairs) {
        d.neighbors[a].push_back(b);
        d.neighbors[b].push_back(a);
    }
    for (auto& v : d.neighbors) std::sort(v.begin(), v.end());
    return d;
}

}  // namespace gje
