#include "tandiv/angles.hpp"

namespace tandiv {

namespace {

// Veltkamp split: x = hi + lo with hi carrying the top 26 significand bits.
inline void split(double x, double& hi, double& lo) {
    const double c = 134217729.0; // 2^27 + 1
    double t = c * x;
    hi = t - (t - x);
    lo = x - hi;
}

} // namespace

double reduce_multiple(std::int64_t n, double x) {
    x = wrap_angle(x);
    double absn = std::abs((double)n);
    if (absn < 9.0e6) {
        // n * x_hi exact (26+26 bits), n * x_lo tiny; reduce the exact part first
        double hi, lo;
        split(x, hi, lo);
        double r = std::remainder((double)n * hi, two_pi);
        r += (double)n * lo;
        return wrap_angle(r);
    }
    // larger n: split n as well, reduce the two exact products separately
    std::int64_t nh = (n / (1 << 20)) * (1 << 20);
    std::int64_t nl = n - nh;
    double hi, lo;
    split(x, hi, lo);
    double r = std::remainder((double)nh * hi, two_pi);
    r = std::remainder(r + (double)nl * hi, two_pi);
    r += (double)n * lo;
    return wrap_angle(r);
}

} // namespace tandiv
