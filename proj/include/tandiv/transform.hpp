#pragma once

#include <complex>

#include "tandiv/blaschke.hpp"
#include "tandiv/circle_set.hpp"
#include "tandiv/kernel.hpp"

namespace tandiv {

// Phi_r(x, 1_E) = sum over arcs (a,b) of E of the kernel mass on [x-b, x-a].
// Exact up to the mass primitive; no quadrature for closed-form families,
// which is what makes radii within 1e-12 of the boundary usable.
double phi_indicator(const Kernel& kernel, double r, double x, const IntervalUnion& set);

struct PhiComplexOptions {
    double tol = 1e-8;
    std::size_t panel_budget = 1 << 20;
};

// Phi_r(x, B) = int phi_r(t) B(x - t) dt by adaptive quadrature with panels
// forced below the fastest factor oscillation inside the kernel's effective
// support. Certified to tol by panel-halving; throws if the budget runs out.
std::complex<double> phi_complex(const Kernel& kernel, double r, double x,
                                 const BlaschkeProduct& B, const PhiComplexOptions& opt = {});

} // namespace tandiv
