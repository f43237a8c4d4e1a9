#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "lambdajc/errors.hpp"

namespace lambdajc {

// Three real roots of  mu^3 + x1 mu^2 + x2 mu + x3 = 0  by the trigonometric
// form of Cardano's method:
//
//   mu_j = -x1/3 + (2/3) sqrt(x1^2 - 3 x2) cos[theta + 2 pi (j-1)/3]
//   theta = (1/3) acos[(9 x1 x2 - 2 x1^3 - 27 x3) / (2 (x1^2 - 3 x2)^{3/2})]
//
// Valid whenever all roots are real, which holds for the characteristic
// cubics of Hermitian 3x3 blocks.  The acos argument is clamped to [-1, 1];
// on physical inputs it never exceeds the interval by more than rounding.
// Roots are returned in ascending order.
inline std::array<double, 3> cardano_roots(double x1, double x2, double x3) {
    const double s = x1 * x1 - 3.0 * x2;
    const double scale = std::max({1.0, x1 * x1, 3.0 * std::abs(x2)});
    if (s < -1e-12 * scale)
        throw DegenerateCubicError("cubic has complex roots (x1^2 - 3 x2 < 0)");
    if (s <= 0.0) {
        const double mu = -x1 / 3.0;  // triple root
        return {mu, mu, mu};
    }
    double arg = (9.0 * x1 * x2 - 2.0 * x1 * x1 * x1 - 27.0 * x3) /
                 (2.0 * s * std::sqrt(s));
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    const double radius = (2.0 / 3.0) * std::sqrt(s);

    std::array<double, 3> mu;
    for (int j = 0; j < 3; ++j)
        mu[j] = -x1 / 3.0 + radius * std::cos(theta + (2.0 / 3.0) * j * std::numbers::pi);
    std::sort(mu.begin(), mu.end());
    return mu;
}

inline double cubic_residual(double x1, double x2, double x3, double mu) {
    return ((mu + x1) * mu + x2) * mu + x3;
}

}  // namespace lambdajc
