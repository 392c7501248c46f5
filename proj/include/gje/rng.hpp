#pragma once

#include <cstdint>

#include "gje/geom.hpp"

namespace gje {

// Counter-based generator: the k-th draw depends only on (seed, k), so
// streams can be evaluated in any order or in parallel without state.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = mix64(seed ^ mix64(counter));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::uint64_t seed, std::uint64_t counter, double lo, double hi) {
    return lo + uniform01(seed, counter) * (hi - lo);
}

inline Vec2 point_in_rect(std::uint64_t seed, std::uint64_t counter, const Rect& r) {
    return {uniform_in(seed, 2 * counter, r.lo.x, r.hi.x),
            uniform_in(seed, 2 * counter + 1, r.lo.y, r.hi.y)};
}

}  // namespace gje
