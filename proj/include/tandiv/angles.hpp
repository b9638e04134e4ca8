#pragma once

#include <cmath>
#include <cstdint>

namespace tandiv {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

// Reduce x into [-pi, pi).
inline double wrap_angle(double x) {
    double y = std::remainder(x, two_pi);
    if (y >= pi) y -= two_pi; // remainder returns [-pi, pi]; fold the closed end
    return y;
}

// n*x reduced mod 2*pi into [-pi, pi). For n up to ~2^31 the naive product
// n*x carries an absolute rounding error of order |n*x|*eps, which after
// reduction shows up undiminished. Splitting x keeps the reduction exact to
// a few ulp: n*x_hi is exact for |n| < 2^26 with x_hi holding 26 bits.
double reduce_multiple(std::int64_t n, double x);

} // namespace tandiv
