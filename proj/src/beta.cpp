#include "tandiv/beta.hpp"

#include <algorithm>
#include <cmath>

#include "tandiv/angles.hpp"
#include "tandiv/error.hpp"

namespace tandiv {

double inner_mass(const Kernel& kernel, const ApproachCurve& curve, double delta, double r) {
    require(delta > 0.0, errc::invalid_argument, "inner_mass: delta must be positive");
    require(r > 0.0 && r < 1.0, errc::domain, "inner_mass: r must lie in (0,1)");
    double w = std::min(pi, delta * curve.eval(r));
    return kernel.mass(std::min(r, Kernel::r_cap), -w, w);
}

BetaEstimate estimate_beta(const Kernel& kernel, const ApproachCurve& curve,
                           const BetaOptions& opt) {
    std::vector<double> deltas = opt.deltas;
    if (deltas.empty())
        for (int k = 1; k <= 12; ++k) deltas.push_back(std::ldexp(1.0, -k));
    require(std::is_sorted(deltas.rbegin(), deltas.rend()), errc::invalid_argument,
            "estimate_beta: deltas must be decreasing");
    require(opt.i_lo >= 1 && opt.i_hi > opt.i_lo, errc::invalid_argument,
            "estimate_beta: bad r grid spec");

    BetaEstimate est;
    est.deltas = deltas;
    for (int i = opt.i_lo; i <= opt.i_hi; ++i)
        est.r_grid.push_back(std::min(1.0 - std::ldexp(1.0, -i), Kernel::r_cap));
    est.r_grid.erase(std::unique(est.r_grid.begin(), est.r_grid.end()), est.r_grid.end());

    std::size_t nr = est.r_grid.size();
    std::size_t tail_start = nr - std::max<std::size_t>(1, nr / 4);
    est.table.resize(deltas.size() * nr);
    est.inner_liminf.resize(deltas.size());
    for (std::size_t di = 0; di < deltas.size(); ++di) {
        double liminf = 2.0;
        for (std::size_t ri = 0; ri < nr; ++ri) {
            double m = inner_mass(kernel, curve, deltas[di], est.r_grid[ri]);
            est.table[di * nr + ri] = m;
            if (ri >= tail_start) liminf = std::min(liminf, m);
        }
        est.inner_liminf[di] = liminf;
    }
    // limsup over delta -> 0: use the smaller-delta half of the grid
    std::size_t half_start = deltas.size() / 2;
    double value = 0.0;
    for (std::size_t di = half_start; di < deltas.size(); ++di)
        value = std::max(value, est.inner_liminf[di]);
    est.value = value;
    return est;
}

} // namespace tandiv
