#include "gje/arc_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gje/quadrature.hpp"

namespace gje {

namespace {

constexpr double kChainTol = 1e-9;      // endpoint matching when loops are stitched
constexpr double kDedupeTol = 1e-11;    // coincident crossing points are one vertex
constexpr double kDegenerateGap = 1e-10;  // closer crossings count as tangential
constexpr double kMinEdgeLen = 1e-13;
constexpr double kParamEps = 1e-11;     // root acceptance window inside an edge
constexpr double kSideProbe = 1e-10;    // offset for just-inside-the-curve probes

struct ClipRetry {};

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    return a < 0.0 ? a + 2.0 * M_PI : a;
}

double angle_of(Vec2 d) { return std::atan2(d.y, d.x); }

struct Field {
    double qa = 0.0;
    Vec2 qb;
    double qc = 0.0;

    double eval(Vec2 x) const { return qa * x.squared_norm() - 2.0 * qb.dot(x) + qc; }
    Vec2 grad(Vec2 x) const { return (x * qa - qb) * 2.0; }
    double scale_at(Vec2 x) const {
        double m = x.norm();
        return std::abs(qa) * m * m + 2.0 * qb.norm() * m + std::abs(qc);
    }
    // |f| values below this are treated as "on the curve" at x
    double on_tol(Vec2 x) const {
        return std::max(1e-12 * grad(x).norm(), 1e-13 * scale_at(x)) + 1e-300;
    }
};

Field constraint_field(const CircleConstraint& c) { return Field{c.qa, c.qb, c.qc}; }

void push_root(std::vector<double>& roots, double s) {
    if (s >= kParamEps && s <= 1.0 - kParamEps) roots.push_back(s);
}

void scan_segment_roots(const ArcEdge& e, const Field& F, std::vector<double>& roots) {
    Vec2 d = e.p1 - e.p0;
    double A = F.qa * d.squared_norm();
    double B = 2.0 * (F.qa * e.p0.dot(d) - F.qb.dot(d));
    double C = F.eval(e.p0);
    double sc = std::abs(A) + std::abs(B) + std::abs(C);
    if (sc == 0.0) return;
    if (std::abs(A) <= 1e-15 * sc) {
        if (std::abs(B) <= 1e-15 * sc) return;
        push_root(roots, -C / B);
        return;
    }
    double disc = B * B - 4.0 * A * C;
    if (disc <= 0.0) return;
    double sq = std::sqrt(disc);
    double q = -0.5 * (B + (B >= 0.0 ? sq : -sq));
    if (q != 0.0) {
        push_root(roots, q / A);
        push_root(roots, C / q);
    } else {
        push_root(roots, 0.0);
    }
}

double bisect_root(const ArcEdge& e, const Field& F, double lo, double hi, double glo) {
    for (int it = 0; it < 90; ++it) {
        double mid = 0.5 * (lo + hi);
        double g = F.eval(e.point(mid));
        if ((g > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = g;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-17) break;
    }
    return 0.5 * (lo + hi);
}

void scan_arc_roots(const ArcEdge& e, const Field& F, std::vector<double>& roots) {
    // Split at parameters where F along the arc is extremal, then bisect each
    // monotone span. The extremal condition <R(phi)(p0-center), m> = 0 is
    // solved in relative coordinates, which stays meaningful for flat arcs.
    std::vector<double> brk = {0.0, 1.0};
    Vec2 v = e.p0 - e.center;
    Vec2 m;
    bool have_m = false;
    if (F.qa != 0.0) {
        Vec2 cc = F.qb / F.qa;
        Vec2 d = cc - e.center;
        if (d.norm() > 1e-12 * (1.0 + cc.norm() + e.center.norm())) {
            m = d.perp();
            have_m = true;
        }
    } else if (F.qb.norm() > 0.0) {
        m = F.qb.perp();
        have_m = true;
    }
    if (have_m) {
        double phi0 = std::atan2(v.perp().dot(m), v.dot(m));
        for (int k = -4; k <= 4; ++k) {
            double s = (phi0 + M_PI / 2 + k * M_PI) / e.sweep;
            if (s > 1e-9 && s < 1.0 - 1e-9) brk.push_back(s);
        }
    } else {
        for (int k = 1; k < 8; ++k) brk.push_back(k / 8.0);
    }
    std::sort(brk.begin(), brk.end());
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        double a = brk[i], b = brk[i + 1];
        if (b - a < 1e-15) continue;
        double ga = F.eval(e.point(a));
        double gb = F.eval(e.point(b));
        if (ga == 0.0 || gb == 0.0) continue;  // breakpoint on curve: tangential territory
        if ((ga > 0.0) != (gb > 0.0)) push_root(roots, bisect_root(e, F, a, b, ga));
    }
}

std::vector<double> edge_roots(const ArcEdge& e, const Field& F) {
    std::vector<double> roots;
    if (e.is_arc)
        scan_arc_roots(e, F, roots);
    else
        scan_segment_roots(e, F, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

ArcEdge make_sub_edge(const ArcEdge& e, double sa, double sb, Vec2 pa, Vec2 pb) {
    if (!e.is_arc) return ArcEdge::segment(pa, pb, e.owner);
    return ArcEdge::arc(pa, pb, e.center, e.radius, e.sweep * (sb - sa), e.owner);
}

Vec2 edge_left_normal(const ArcEdge& e, double s) {
    if (!e.is_arc) return (e.p1 - e.p0).normalized().perp();
    Vec2 radial = (e.point(s) - e.center).normalized();
    return radial * (e.sweep > 0 ? -1.0 : 1.0);
}

// --- winding-number membership ----------------------------------------------

struct WindResult {
    int winding = 0;
    bool boundary = false;
    bool degenerate = false;
};

WindResult wind_once(const ArcPolygon& poly, Vec2 q, Vec2 dir) {
    WindResult out;
    Vec2 dperp = dir.perp();
    Field F{0.0, dperp * (-0.5), -q.dot(dperp)};
    for (const auto& loop : poly.loops) {
        for (const ArcEdge& e : loop) {
            if (std::abs(F.eval(e.p0)) < 1e-14 && std::abs(F.eval(e.point(0.5))) < 1e-14) {
                out.degenerate = true;  // edge runs along the ray line
                return out;
            }
            std::vector<double> roots = edge_roots(e, F);
            for (double s : roots) {
                if (s >= 1.0 - kParamEps) continue;  // counted by the next edge
                Vec2 p = e.point(s);
                double ahead = (p - q).dot(dir);
                if (std::abs(ahead) <= 1e-12) {
                    out.boundary = true;
                    return out;
                }
                if (ahead < 0.0) continue;
                Vec2 tan = e.tangent(s);
                double slope = tan.dot(dperp);
                if (std::abs(slope) <= 1e-10 * tan.norm()) {
                    out.degenerate = true;
                    return out;
                }
                out.winding += slope > 0.0 ? 1 : -1;
            }
        }
    }
    return out;
}

}  // namespace

// --- ArcEdge -----------------------------------------------------------------

ArcEdge ArcEdge::segment(Vec2 a, Vec2 b, int owner) {
    ArcEdge e;
    e.is_arc = false;
    e.p0 = a;
    e.p1 = b;
    e.owner = owner;
    return e;
}

ArcEdge ArcEdge::arc(Vec2 a, Vec2 b, Vec2 center, double radius, double sweep, int owner) {
    ArcEdge e;
    e.is_arc = true;
    e.p0 = a;
    e.p1 = b;
    e.center = center;
    e.radius = radius;
    e.sweep = sweep;
    e.owner = owner;
    return e;
}

Vec2 ArcEdge::point(double s) const {
    if (!is_arc) return p0 + (p1 - p0) * s;
    double phi = sweep * s;
    Vec2 v = p0 - center;
    double sn = std::sin(phi);
    double half = std::sin(0.5 * phi);
    double cm1 = -2.0 * half * half;  // cos(phi) - 1 without cancellation
    return p0 + v * cm1 + v.perp() * sn;
}

Vec2 ArcEdge::tangent(double s) const {
    if (!is_arc) return p1 - p0;
    return (point(s) - center).perp() * sweep;
}

double ArcEdge::length() const {
    if (!is_arc) return (p1 - p0).norm();
    return std::abs(sweep) * radius;
}

ArcPolygon rect_polygon(const Rect& r) {
    ArcPolygon poly;
    Vec2 a = r.lo, b{r.hi.x, r.lo.y}, c = r.hi, d{r.lo.x, r.hi.y};
    poly.loops.push_back({ArcEdge::segment(a, b, kOwnerBottom),
                          ArcEdge::segment(b, c, kOwnerRight),
                          ArcEdge::segment(c, d, kOwnerTop),
                          ArcEdge::segment(d, a, kOwnerLeft)});
    return poly;
}

CircleConstraint constraint_from_mobius(double li, double mi, Vec2 pi, double lj,
                                        double mj, Vec2 pj) {
    CircleConstraint c;
    double a = li - lj;
    Vec2 b = pi * li - pj * lj;
    double cc = li * pi.squared_norm() - lj * pj.squared_norm() - mi + mj;
    c.qa = a;
    c.qb = b;
    c.qc = cc;
    if (a == 0.0) {
        double nb = b.norm();
        if (nb == 0.0) {
            c.kind = cc <= 0.0 ? CircleConstraint::Kind::All : CircleConstraint::Kind::Empty;
            return c;
        }
        c.kind = CircleConstraint::Kind::HalfPlane;
        c.normal = b * (-1.0 / nb);
        c.offset = -cc / (2.0 * nb);
        c.qa = 0.0;
        c.qb = c.normal * (-0.5);
        c.qc = -c.offset;
        return c;
    }
    double r2 = (b.squared_norm() - a * cc) / (a * a);
    if (a > 0.0) {
        if (r2 <= 0.0) {
            c.kind = CircleConstraint::Kind::Empty;
            return c;
        }
        c.kind = CircleConstraint::Kind::InsideDisk;
    } else {
        if (r2 <= 0.0) {
            c.kind = CircleConstraint::Kind::All;
            return c;
        }
        c.kind = CircleConstraint::Kind::OutsideDisk;
    }
    c.center = b / a;
    c.radius = std::sqrt(r2);
    return c;
}

bool contains(const ArcPolygon& poly, Vec2 q) {
    if (poly.empty()) return false;
    for (int k = 0; k < 8; ++k) {
        double ang = 0.1234567 + k * (M_PI / 8.0);
        WindResult w = wind_once(poly, q, {std::cos(ang), std::sin(ang)});
        if (w.boundary) return true;
        if (!w.degenerate) return w.winding != 0;
    }
    return true;  // every probe ray grazed; point is effectively on the boundary
}

// --- clipping ----------------------------------------------------------------

namespace {

struct CurvePoint {
    Vec2 p;
    double along = 0.0;  // angle on the circle / abscissa on the line
};

struct Span {
    double start = 0.0;   // angle or abscissa
    double extent = 0.0;  // ccw sweep or length
};

bool angle_in_span(double a, const Span& s) {
    return wrap_angle(a - s.start) <= s.extent;
}

std::vector<std::vector<ArcEdge>> stitch(std::vector<ArcEdge> edges) {
    std::vector<std::vector<ArcEdge>> loops;
    std::vector<bool> used(edges.size(), false);
    for (std::size_t i0 = 0; i0 < edges.size(); ++i0) {
        if (used[i0]) continue;
        std::vector<ArcEdge> loop;
        used[i0] = true;
        loop.push_back(edges[i0]);
        Vec2 start = edges[i0].p0;
        std::size_t guard = edges.size() + 2;
        while (guard--) {
            Vec2 tail = loop.back().p1;
            if ((tail - start).norm() <= kChainTol) break;
            double best = kChainTol;
            double second = kChainTol;
            std::size_t bj = edges.size();
            for (std::size_t j = 0; j < edges.size(); ++j) {
                if (used[j]) continue;
                double d = (edges[j].p0 - tail).norm();
                if (d < best) {
                    second = best;
                    best = d;
                    bj = j;
                } else if (d < second) {
                    second = d;
                }
            }
            if (bj == edges.size()) throw ClipRetry{};
            if (second < kChainTol && second < 10.0 * std::max(best, 1e-15)) throw ClipRetry{};
            used[bj] = true;
            loop.push_back(edges[bj]);
        }
        if ((loop.back().p1 - start).norm() > kChainTol) throw ClipRetry{};
        loops.push_back(std::move(loop));
    }
    return loops;
}

ArcPolygon clip_once(const ArcPolygon& poly, const CircleConstraint& C,
                     const std::function<bool(Vec2)>& inside_poly) {
    const bool is_line = C.kind == CircleConstraint::Kind::HalfPlane;
    const bool ccw_pieces = C.kind == CircleConstraint::Kind::InsideDisk || is_line;
    Field F = constraint_field(C);
    Vec2 line_dir = is_line ? C.normal.perp() : Vec2{};

    std::vector<ArcEdge> kept;
    std::vector<CurvePoint> crossings;
    std::vector<Span> oncurve;

    auto edge_on_curve = [&F](const ArcEdge& e) {
        double tol = F.on_tol(e.point(0.5));
        for (double sp : {0.25, 0.5, 0.75})
            if (std::abs(F.eval(e.point(sp))) > tol) return false;
        return true;
    };

    for (const auto& loop : poly.loops) {
        std::vector<bool> on(loop.size());
        for (std::size_t i = 0; i < loop.size(); ++i) on[i] = edge_on_curve(loop[i]);
        for (std::size_t ei = 0; ei < loop.size(); ++ei) {
            const ArcEdge& e = loop[ei];
            std::vector<double> roots = edge_roots(e, F);
            // a vertex sitting exactly on the curve is itself a crossing; the
            // root window above excludes it, so report it here (p1 belongs to
            // the next edge and is reported there as its p0); vertices of
            // edges that run along the curve are closure points, not crossings
            bool prev_on = on[(ei + loop.size() - 1) % loop.size()];
            if (!on[ei] && !prev_on && std::abs(F.eval(e.p0)) <= F.on_tol(e.p0)) {
                double along = is_line ? e.p0.dot(line_dir) : angle_of(e.p0 - C.center);
                crossings.push_back({e.p0, along});
            }
            std::vector<double> brk = {0.0};
            brk.insert(brk.end(), roots.begin(), roots.end());
            brk.push_back(1.0);
            for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
                double sa = brk[i], sb = brk[i + 1];
                Vec2 pa = sa == 0.0 ? e.p0 : e.point(sa);
                Vec2 pb = sb == 1.0 ? e.p1 : e.point(sb);
                ArcEdge sub = make_sub_edge(e, sa, sb, pa, pb);
                if (sub.length() < kMinEdgeLen) continue;
                Vec2 mid = sub.point(0.5);
                double tol = F.on_tol(mid);
                // two distinct circles (or a circle and a line) meet in at most
                // two points, so three coincidences mean the curves are equal
                double g = 0.0;
                bool on_curve = true;
                for (double sp : {0.5, 0.25, 0.75}) {
                    double gs = F.eval(sub.point(sp));
                    if (std::abs(gs) > std::abs(g)) g = gs;
                    if (std::abs(gs) > tol) on_curve = false;
                }
                if (!on_curve) {
                    if (g > 0.0) continue;
                    kept.push_back(sub);
                    continue;
                }
                // edge runs along the constraint curve: keep it exactly when the
                // region's interior side is also the constraint's interior side
                if (F.grad(mid).dot(edge_left_normal(sub, 0.5)) < 0.0) {
                    kept.push_back(sub);
                    if (is_line) {
                        double s0 = sub.p0.dot(line_dir), s1 = sub.p1.dot(line_dir);
                        oncurve.push_back({std::min(s0, s1), std::abs(s1 - s0)});
                    } else {
                        double t0 = angle_of(sub.p0 - C.center);
                        double t1 = angle_of(sub.p1 - C.center);
                        if (sub.sweep >= 0.0)
                            oncurve.push_back({t0, wrap_angle(t1 - t0)});
                        else
                            oncurve.push_back({t1, wrap_angle(t0 - t1)});
                    }
                }
            }
            for (double s : roots) {
                Vec2 p = e.point(s);
                double along = is_line ? p.dot(line_dir) : angle_of(p - C.center);
                crossings.push_back({p, along});
            }
        }
    }

    // nearly coincident crossings signal tangency; resolved by perturbation
    std::vector<CurvePoint> pts;
    for (const CurvePoint& cp : crossings) {
        bool dup = false;
        for (const CurvePoint& q : pts) {
            double d = (q.p - cp.p).norm();
            if (d <= kDedupeTol) {
                dup = true;
                break;
            }
            if (d <= kDegenerateGap) throw ClipRetry{};
        }
        if (!dup) pts.push_back(cp);
    }
    if (!is_line && pts.size() % 2 != 0) throw ClipRetry{};

    std::vector<ArcEdge> pieces;
    auto try_piece = [&](Vec2 pa, Vec2 pb, double mid_along, Vec2 mid) {
        for (const Span& s : oncurve)
            if (is_line ? (mid_along >= s.start && mid_along <= s.start + s.extent)
                        : angle_in_span(mid_along, s))
                return;
        Vec2 grad = F.grad(mid);
        double gn = grad.norm();
        if (gn == 0.0) return;
        if (!inside_poly(mid - grad * (kSideProbe / gn))) return;
        if (is_line) {
            pieces.push_back(ArcEdge::segment(pa, pb, C.owner));
        } else {
            double gap = wrap_angle(angle_of(pb - C.center) - angle_of(pa - C.center));
            if (gap < 0.1 * M_PI) {
                double chord = (pb - pa).norm();
                gap = 2.0 * std::asin(std::min(1.0, chord / (2.0 * C.radius)));
            }
            if (ccw_pieces)
                pieces.push_back(ArcEdge::arc(pa, pb, C.center, C.radius, gap, C.owner));
            else
                pieces.push_back(ArcEdge::arc(pb, pa, C.center, C.radius, -gap, C.owner));
        }
    };

    if (pts.empty()) {
        if (!is_line && oncurve.empty()) {
            Rect bb = bounding_box(poly);
            Vec2 probe = C.center + Vec2{C.radius, 0.0};
            bool plausible = C.center.x - C.radius >= bb.lo.x - kChainTol &&
                             C.center.x + C.radius <= bb.hi.x + kChainTol &&
                             C.center.y - C.radius >= bb.lo.y - kChainTol &&
                             C.center.y + C.radius <= bb.hi.y + kChainTol;
            if (plausible && inside_poly(probe)) {
                double sweep = ccw_pieces ? 2.0 * M_PI : -2.0 * M_PI;
                pieces.push_back(ArcEdge::arc(probe, probe, C.center, C.radius, sweep, C.owner));
            }
        }
    } else if (is_line) {
        std::sort(pts.begin(), pts.end(),
                  [](const CurvePoint& a, const CurvePoint& b) { return a.along < b.along; });
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            Vec2 mid = (pts[k].p + pts[k + 1].p) * 0.5;
            try_piece(pts[k].p, pts[k + 1].p, 0.5 * (pts[k].along + pts[k + 1].along), mid);
        }
    } else {
        std::sort(pts.begin(), pts.end(),
                  [](const CurvePoint& a, const CurvePoint& b) { return a.along < b.along; });
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const CurvePoint& a = pts[k];
            const CurvePoint& b = pts[(k + 1) % pts.size()];
            double gap = wrap_angle(b.along - a.along);
            if (gap <= 0.0) continue;
            double half = gap / 2.0;
            Vec2 v = a.p - C.center;
            double sn = std::sin(half);
            double hh = std::sin(0.5 * half);
            Vec2 mid = a.p + v * (-2.0 * hh * hh) + v.perp() * sn;
            try_piece(a.p, b.p, wrap_angle(a.along + half), mid);
        }
    }

    std::vector<ArcEdge> all = std::move(kept);
    all.insert(all.end(), pieces.begin(), pieces.end());
    std::vector<ArcEdge> filtered;
    for (const ArcEdge& e : all)
        if (e.length() >= kMinEdgeLen) filtered.push_back(e);
    if (filtered.empty()) return {};

    ArcPolygon out;
    out.loops = stitch(std::move(filtered));
    return out;
}

CircleConstraint perturbed(const CircleConstraint& c, int attempt) {
    if (attempt == 0) return c;
    double eps = 1e-12 * std::pow(10.0, (attempt - 1) / 2);
    CircleConstraint p = c;
    if (c.kind == CircleConstraint::Kind::HalfPlane) {
        if (attempt % 2 == 0) eps = -eps;
        p.offset += eps * std::max(1.0, std::abs(c.offset));
        p.qc = -p.offset;
    } else {
        // shift the center; unlike a radius change this moves crossings only
        // linearly in eps even when the curve passes through a vertex
        double ang = 0.7 + 2.39996322972865332 * attempt;
        Vec2 d = Vec2{std::cos(ang), std::sin(ang)} * eps;
        p.center = c.center + d;
        p.qb = c.qb + d * c.qa;
        p.qc = c.qc + c.qa * (2.0 * c.center.dot(d) + d.squared_norm());
    }
    return p;
}

}  // namespace

ArcPolygon clip(const ArcPolygon& poly, const CircleConstraint& c,
                const std::function<bool(Vec2)>* inside, CircleConstraint* applied) {
    if (applied) *applied = c;
    if (c.kind == CircleConstraint::Kind::Empty) return {};
    if (c.kind == CircleConstraint::Kind::All) return poly;
    if (poly.empty()) return poly;
    std::function<bool(Vec2)> fallback;
    if (!inside) fallback = [&poly](Vec2 q) { return contains(poly, q); };
    const std::function<bool(Vec2)>& in = inside ? *inside : fallback;
    for (int attempt = 0; attempt < 9; ++attempt) {
        try {
            CircleConstraint attempt_c = perturbed(c, attempt);
            ArcPolygon out = clip_once(poly, attempt_c, in);
            if (applied) *applied = attempt_c;
            return out;
        } catch (ClipRetry&) {
        }
    }
    throw std::runtime_error("clip: tangential configuration persisted through perturbation");
}

// --- measures ----------------------------------------------------------------

namespace {

double segment_bulge(const ArcEdge& e) {
    double t = e.sweep;
    double f;
    if (std::abs(t) < 1e-2) {
        double t2 = t * t;
        f = t * t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0)));
    } else {
        f = t - std::sin(t);
    }
    return 0.5 * e.radius * e.radius * f;
}

}  // namespace

double area(const ArcPolygon& poly) {
    double total = 0.0;
    for (const auto& loop : poly.loops)
        for (const ArcEdge& e : loop) {
            total += 0.5 * e.p0.cross(e.p1);
            if (e.is_arc) total += segment_bulge(e);
        }
    return total;
}

double measure(const ArcPolygon& poly, const Domain& domain) {
    if (poly.empty()) return 0.0;
    if (domain.uniform()) return domain.rho(Vec2{}) * area(poly);

    // fan from an anchor point; cone integrals cancel with orientation, so the
    // anchor only needs to be somewhere near the region
    Vec2 c = bounding_box(poly).center();
    const auto& gs = gl8();
    const auto& gt = gl16();
    double prev = 0.0;
    for (int level = 0;; ++level) {
        int n = 1 << level;
        double val = 0.0;
        for (const auto& loop : poly.loops)
            for (const ArcEdge& e : loop)
                for (int i = 0; i < n; ++i)
                    for (int a = 0; a < 8; ++a) {
                        double s = (i + 0.5 + 0.5 * gs.node[a]) / n;
                        double ws = gs.weight[a] / (2.0 * n);
                        Vec2 xs = e.point(s);
                        double base = (xs - c).cross(e.tangent(s));
                        for (int b = 0; b < 16; ++b) {
                            double t = 0.5 + 0.5 * gt.node[b];
                            double wt = gt.weight[b] / 2.0;
                            val += ws * wt * t * base * domain.rho(c + (xs - c) * t);
                        }
                    }
        if (level > 0 && std::abs(val - prev) <= 1e-8 * std::max(std::abs(val), 1e-14))
            return val;
        if (level >= 6) return val;
        prev = val;
    }
}

double boundary_integral(const ArcPolygon& poly, int owner,
                         const std::function<double(Vec2)>& f) {
    const auto& g = gl16();
    double total = 0.0;
    for (const auto& loop : poly.loops)
        for (const ArcEdge& e : loop) {
            if (e.owner != owner) continue;
            int k = e.is_arc ? std::max(1, (int)std::ceil(std::abs(e.sweep) / (M_PI / 16.0)))
                             : 16;
            double len = e.length();
            if (len <= 0.0) continue;
            double dsub = len / k;
            for (int i = 0; i < k; ++i)
                for (int a = 0; a < 16; ++a) {
                    double s = (i + 0.5 + 0.5 * g.node[a]) / k;
                    total += f(e.point(s)) * g.weight[a] * dsub / 2.0;
                }
        }
    return total;
}

double owner_boundary_length(const ArcPolygon& poly, int owner) {
    double total = 0.0;
    for (const auto& loop : poly.loops)
        for (const ArcEdge& e : loop)
            if (e.owner == owner) total += e.length();
    return total;
}

Rect bounding_box(const ArcPolygon& poly) {
    Rect r{{HUGE_VAL, HUGE_VAL}, {-HUGE_VAL, -HUGE_VAL}};
    auto take = [&r](Vec2 p) {
        r.lo.x = std::min(r.lo.x, p.x);
        r.lo.y = std::min(r.lo.y, p.y);
        r.hi.x = std::max(r.hi.x, p.x);
        r.hi.y = std::max(r.hi.y, p.y);
    };
    for (const auto& loop : poly.loops)
        for (const ArcEdge& e : loop) {
            take(e.p0);
            take(e.p1);
            if (!e.is_arc) continue;
            double t0 = angle_of(e.p0 - e.center);
            for (int k = 0; k < 4; ++k) {
                double a = k * M_PI / 2.0;
                bool in_span = e.sweep >= 0.0 ? wrap_angle(a - t0) <= e.sweep
                                              : wrap_angle(t0 - a) <= -e.sweep;
                if (!in_span) continue;
                static const Vec2 dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
                take(e.center + dirs[k] * e.radius);
            }
        }
    return r;
}

}  // namespace gje
