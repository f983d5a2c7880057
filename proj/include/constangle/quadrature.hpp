#pragma once
// Cumulative composite Simpson quadrature on a uniform grid.

#include <cstddef>
#include <vector>

#include "constangle/geometry.hpp"

namespace constangle {

// Given samples f[0..n-1] at uniform spacing h, returns F with F[0] = 0 and
// F[i] = integral of f from the left endpoint to node i, 4th-order accurate.
// Even nodes use the classic Simpson pair rule; odd nodes integrate the local
// quadratic over half a pair:
//   int_{x0}^{x1} = h/12 (5 f0 + 8 f1 - f2)
// and the trailing interval of an even sample count uses the mirrored rule
//   int_{x1}^{x2} = h/12 (-f0 + 8 f1 + 5 f2).
inline std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> F(n, 0.0);
    if (n < 2) return F;
    if (n == 2) {  // single interval: trapezoid is all we can do
        F[1] = 0.5 * h * (f[0] + f[1]);
        return F;
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (i % 2 == 1) {
            if (i + 1 < n) {
                F[i] = F[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
            } else {
                F[i] = F[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
            }
        } else {
            F[i] = F[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
        }
    }
    return F;
}

}  // namespace constangle
