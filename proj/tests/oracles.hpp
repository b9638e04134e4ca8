#pragma once

// Test-only oracles, independent of the library's evaluation paths: plain
// composite rules and grids, nothing adaptive, nothing closed-form.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "tandiv/angles.hpp"
#include "tandiv/circle_set.hpp"

namespace oracles {

inline double poisson_density(double r, double t) {
    double s = 1.0 - r, sn = std::sin(0.5 * t);
    return s * (1.0 + r) / (tandiv::two_pi * (s * s + 4.0 * r * sn * sn));
}

// composite Simpson with a fixed panel count
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      std::size_t panels) {
    if (panels % 2 == 1) ++panels;
    double h = (b - a) / (double)panels;
    double acc = f(a) + f(b);
    for (std::size_t i = 1; i < panels; ++i) acc += f(a + h * (double)i) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// measure of a union estimated from membership on a uniform grid
inline double grid_measure(const tandiv::IntervalUnion& u, std::size_t points) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < points; ++i) {
        double x = -tandiv::pi + tandiv::two_pi * ((double)i + 0.5) / (double)points;
        if (u.contains(x)) ++hits;
    }
    return tandiv::two_pi * (double)hits / (double)points;
}

// greedy fill: sort grid cells by density and take measure m of the best
inline double greedy_worst_mass(const std::function<double(double)>& density, double m,
                                std::size_t cells) {
    double w = tandiv::two_pi / (double)cells;
    std::vector<double> vals(cells);
    for (std::size_t i = 0; i < cells; ++i)
        vals[i] = density(-tandiv::pi + ((double)i + 0.5) * w);
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    double acc = 0.0, left = m;
    for (std::size_t i = 0; i < cells && left > 0.0; ++i) {
        double take = std::min(left, w);
        acc += vals[i] * take;
        left -= take;
    }
    return acc;
}

// midpoint-rule Phi for an indicator set
inline double riemann_phi(const std::function<double(double)>& density, double x,
                          const tandiv::IntervalUnion& set, std::size_t points) {
    double acc = 0.0;
    double h = tandiv::two_pi / (double)points;
    for (std::size_t i = 0; i < points; ++i) {
        double t = -tandiv::pi + ((double)i + 0.5) * h;
        if (set.contains(t)) acc += density(tandiv::wrap_angle(x - t));
    }
    return acc * h;
}

// midpoint-rule Phi for a complex boundary function
inline std::complex<double> riemann_phi_complex(
    const std::function<double(double)>& density,
    const std::function<std::complex<double>(double)>& f, double x, std::size_t points) {
    std::complex<double> acc{0.0, 0.0};
    double h = tandiv::two_pi / (double)points;
    for (std::size_t i = 0; i < points; ++i) {
        double t = -tandiv::pi + ((double)i + 0.5) * h;
        acc += density(t) * f(x - t);
    }
    return acc * h;
}

// deterministic RNG for test inputs (independent of the library's sampler)
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    double uniform() { return (double)(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

} // namespace oracles
