#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace tandiv {

struct QuadOptions {
    double abs_tol = 1e-10;
    std::size_t max_panels = 1 << 20;
    // Panels are never created wider than this inside [osc_lo, osc_hi];
    // 0 disables the cap. Used when the integrand oscillates at a known scale.
    double width_cap = 0.0;
    double osc_lo = 0.0;
    double osc_hi = 0.0;
};

// Adaptive Gauss-Kronrod 7-15 on [a,b] with user-supplied initial split
// points. Throws errc::tolerance_not_met if the panel budget runs out
// before the summed error estimate drops below abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& split_points, const QuadOptions& opt);

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b,
                                       const std::vector<double>& split_points,
                                       const QuadOptions& opt);

} // namespace tandiv
