#pragma once

#include <vector>

#include "tandiv/curve.hpp"
#include "tandiv/kernel.hpp"

namespace tandiv {

// Kernel mass inside the moving window (-delta*lambda(r), delta*lambda(r)),
// the quantity whose delta->0 / r->1 double limit defines the concentration
// index. Window clipped to the circle.
double inner_mass(const Kernel& kernel, const ApproachCurve& curve, double delta, double r);

struct BetaEstimate {
    double value = 0.0;                  // limsup proxy
    std::vector<double> deltas;          // descending
    std::vector<double> inner_liminf;    // per-delta liminf proxy
    std::vector<double> r_grid;          // radii used
    // full table, row-major: table[di * r_grid.size() + ri]
    std::vector<double> table;
};

struct BetaOptions {
    // default dyadic delta grid 2^-1 .. 2^-12
    std::vector<double> deltas;
    // r_i = 1 - 2^-i for i in [i_lo, i_hi], capped at the kernel r cap
    int i_lo = 4;
    int i_hi = 40;
};

// liminf proxy: min of inner_mass over the last quarter of the r grid (the
// limit is r -> 1; early grid points only show the preasymptotic regime).
// limsup proxy: max of the liminf proxies over the smaller half of the delta
// grid (the limit is delta -> 0). All intermediate values are retained so
// non-stabilization stays visible.
BetaEstimate estimate_beta(const Kernel& kernel, const ApproachCurve& curve,
                           const BetaOptions& opt = {});

} // namespace tandiv
