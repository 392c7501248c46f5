#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gje/geom.hpp"

namespace gje {

// Owner tags on edges: nonnegative values are competitor site indices,
// kOwnerBottom..kOwnerLeft are the four rectangle walls.
constexpr int kOwnerNone = -100;
constexpr int kOwnerBottom = -1;
constexpr int kOwnerRight = -2;
constexpr int kOwnerTop = -3;
constexpr int kOwnerLeft = -4;

// One boundary piece: a straight segment from p0 to p1, or a circular arc
// from p0 to p1 around center with signed sweep (positive = counterclockwise).
// Arc endpoints are authoritative; points along the arc are produced by
// rotating p0 - center, which stays accurate even for very flat arcs whose
// center is far away.
struct ArcEdge {
    bool is_arc = false;
    Vec2 p0, p1;
    Vec2 center;
    double radius = 0.0;
    double sweep = 0.0;
    int owner = kOwnerNone;

    static ArcEdge segment(Vec2 a, Vec2 b, int owner = kOwnerNone);
    static ArcEdge arc(Vec2 a, Vec2 b, Vec2 center, double radius, double sweep,
                       int owner = kOwnerNone);

    Vec2 point(double s) const;
    Vec2 tangent(double s) const;  // unnormalized, d/ds
    double length() const;
};

// Region bounded by circular arcs and segments. Loops are closed chains,
// counterclockwise for outer boundaries and clockwise for holes, so signed
// areas add up. An empty loop list is the empty region.
struct ArcPolygon {
    std::vector<std::vector<ArcEdge>> loops;

    bool empty() const { return loops.empty(); }
};

ArcPolygon rect_polygon(const Rect& r);

// Pairwise dominance region {x : f(x) <= 0} with f(x) = a|x|^2 - 2<b,x> + c.
// Depending on the sign of a this is a disk, the complement of a disk, a
// half-plane, everything, or nothing.
struct CircleConstraint {
    enum class Kind { InsideDisk, OutsideDisk, HalfPlane, All, Empty };

    Kind kind = Kind::All;
    double qa = 0.0;
    Vec2 qb;
    double qc = 0.0;
    Vec2 center;            // InsideDisk / OutsideDisk
    double radius = 0.0;    // InsideDisk / OutsideDisk
    Vec2 normal;            // HalfPlane: {x : <normal,x> <= offset}, |normal| = 1
    double offset = 0.0;    // HalfPlane
    int owner = kOwnerNone;

    double field(Vec2 x) const { return qa * x.squared_norm() - 2.0 * qb.dot(x) + qc; }
    Vec2 field_gradient(Vec2 x) const { return (x * qa - qb) * 2.0; }
};

// Builds the dominance region of weighted point i against weighted point j,
// i.e. {x : li|x-pi|^2 - mi <= lj|x-pj|^2 - mj}.
CircleConstraint constraint_from_mobius(double li, double mi, Vec2 pi, double lj,
                                        double mj, Vec2 pj);

// Intersects the region with the constraint. New boundary pieces created on
// the constraint curve carry the constraint's owner tag. Exactly tangential
// configurations are resolved by retrying with a slightly shifted constraint;
// when `applied` is given it receives the constraint actually used, so callers
// can keep algebraic membership tests consistent with the output. `inside`
// may supply a cheaper membership test for the input region; by default a
// winding-number test on `poly` is used.
ArcPolygon clip(const ArcPolygon& poly, const CircleConstraint& c,
                const std::function<bool(Vec2)>* inside = nullptr,
                CircleConstraint* applied = nullptr);

bool contains(const ArcPolygon& poly, Vec2 q);

double area(const ArcPolygon& poly);
// Integral of the density over the region; uniform densities reduce to a
// constant times the exact area, callables go through adaptive quadrature
// on a fan from an interior anchor (relative refinement target 1e-8).
double measure(const ArcPolygon& poly, const Domain& domain);

// Line integral of f over the boundary edges carrying the given owner tag,
// composite 16-point Gauss-Legendre with subintervals no longer than pi/16
// in angle (arcs) or 1/16 of the edge (segments).
double boundary_integral(const ArcPolygon& poly, int owner,
                         const std::function<double(Vec2)>& f);

double owner_boundary_length(const ArcPolygon& poly, int owner);

Rect bounding_box(const ArcPolygon& poly);

}  // namespace gje
