#pragma once

#include <array>
#include <cmath>

namespace gje {

// Gauss-Legendre rule on [-1, 1], nodes found by Newton iteration on the
// Legendre recurrence; accurate to machine precision and computed once.
template <int N>
struct GaussLegendre {
    std::array<double, N> node;
    std::array<double, N> weight;

    GaussLegendre() {
        for (int i = 0; i < N; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= N; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

inline const GaussLegendre<16>& gl16() {
    static const GaussLegendre<16> rule;
    return rule;
}

inline const GaussLegendre<8>& gl8() {
    static const GaussLegendre<8> rule;
    return rule;
}

}  // namespace gje
