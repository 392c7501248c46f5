#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace gje {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double squared_norm() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
    Vec2 perp() const { return {-y, x}; }
    Vec2 normalized() const { double n = norm(); return {x / n, y / n}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

struct Rect {
    Vec2 lo;
    Vec2 hi;

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double area() const { return width() * height(); }
    Vec2 center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}; }
    Vec2 corner(int k) const {
        switch (k & 3) {
            case 0: return lo;
            case 1: return {hi.x, lo.y};
            case 2: return hi;
            default: return {lo.x, hi.y};
        }
    }
    bool contains(Vec2 p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
    Vec2 clamp(Vec2 p) const {
        return {std::clamp(p.x, lo.x, hi.x), std::clamp(p.y, lo.y, hi.y)};
    }
};

struct Site {
    int index = 0;
    Vec2 position;
};

// Source measure: rectangle support with either the mass-normalizing uniform
// density or a caller-supplied density (assumed to integrate to one).
struct Domain {
    Rect rect;
    std::function<double(Vec2)> density;

    bool uniform() const { return !density; }
    double rho(Vec2 x) const { return density ? density(x) : 1.0 / rect.area(); }
};

}  // namespace gje
