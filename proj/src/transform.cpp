#include "tandiv/transform.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tandiv/angles.hpp"
#include "tandiv/error.hpp"
#include "tandiv/quadrature.hpp"

namespace tandiv {

double phi_indicator(const Kernel& kernel, double r, double x, const IntervalUnion& set) {
    require(r > 0.0 && r <= Kernel::r_cap, errc::domain, "phi_indicator: r outside (0, 1-1e-12]");
    if (set.is_empty()) return 0.0;
    // Kahan-compensated sum of nonnegative arc masses
    double acc = 0.0, comp = 0.0;
    for (const Arc& a : set.arcs()) {
        double m = kernel.mass(r, x - a.hi, x - a.lo);
        double y = m - comp;
        double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return std::clamp(acc, 0.0, 1.0);
}

namespace {

// The integrand t -> phi_r(t) B(x - t) is +-1-flat except where some factor
// crosses a comb point; a quadrature panel that straddles such a crossing
// between its nodes reports a misleading error estimate. Panels are therefore
// aligned to every crossing inside the window, with extra cuts at the
// transition scale pi delta^{1/4} / n of the factor.
void factor_transition_splits(const BlaschkeProduct& B, double x, double lo, double hi,
                              std::size_t max_splits, std::vector<double>& out) {
    for (const auto& f : B.factors()) {
        double spacing = two_pi / (double)f.n;
        // two feature scales per comb point: the full transition zone
        // (pi delta^{1/4}/n wide) and the innermost swing where the value
        // rotates through the circle (sqrt(delta)/n wide)
        double dip = pi * std::max(std::pow(f.delta, 0.25), 1e-12) / (double)f.n;
        double core = std::max(std::sqrt(f.delta), 1e-13) / (double)f.n;
        double i_lo = ((double)f.n) * (x - hi) / two_pi;
        long long i0 = (long long)std::floor(i_lo);
        std::size_t count = (std::size_t)std::ceil((hi - lo) / spacing) + 2;
        require(out.size() + count * 8 <= max_splits, errc::tolerance_not_met,
                "phi_complex: factor oscillation too fine for the panel budget at this radius");
        for (std::size_t i = 0; i <= count; ++i) {
            double t = x - spacing * (double)(i0 + (long long)i);
            if (t < lo - spacing || t > hi + spacing) continue;
            for (double w : {4.0 * dip, dip, 4.0 * core, core}) {
                out.push_back(t - w);
                out.push_back(t + w);
            }
        }
    }
}

} // namespace

std::complex<double> phi_complex(const Kernel& kernel, double r, double x,
                                 const BlaschkeProduct& B, const PhiComplexOptions& opt) {
    require(r > 0.0 && r <= Kernel::r_cap, errc::domain, "phi_complex: r outside (0, 1-1e-12]");
    require(opt.tol >= 1e-10, errc::invalid_argument, "phi_complex: tol below the certified floor");
    if (B.empty()) return {1.0, 0.0};

    double s = 1.0 - r;
    long long nmax = 1;
    for (const auto& f : B.factors()) nmax = std::max(nmax, f.n);

    // beyond t_sig the kernel tail carries less than tol/4 of mass; since
    // |B| = 1 the dropped tail is bounded by that mass
    double t_sig = pi;
    {
        double lo = std::min(s, pi), hi = pi;
        for (int i = 0; i < 60; ++i) {
            double mid = 0.5 * (lo + hi);
            if (1.0 - kernel.mass(r, -mid, mid) > 0.25 * opt.tol)
                lo = mid;
            else
                hi = mid;
        }
        t_sig = hi;
    }

    std::vector<double> splits{0.0};
    for (double w = s; w < t_sig; w *= 2.0) {
        splits.push_back(w);
        splits.push_back(-w);
    }
    factor_transition_splits(B, x, -t_sig, t_sig, opt.panel_budget / 2, splits);

    QuadOptions q;
    q.abs_tol = 0.125 * opt.tol;
    q.max_panels = opt.panel_budget;
    // just under half the fastest comb period, incommensurate with it so the
    // sampling phase slides across periods instead of locking to them
    q.width_cap = 0.38196601125010515 * two_pi / (double)nmax;
    q.osc_lo = -t_sig;
    q.osc_hi = t_sig;

    auto f = [&](double t) { return kernel.density(r, t) * B.eval(x - t); };
    std::complex<double> first = integrate_complex(f, -t_sig, t_sig, splits, q);
    // certification pass with the oscillation cap halved
    QuadOptions q2 = q;
    q2.width_cap = 0.5 * q.width_cap;
    std::complex<double> second = integrate_complex(f, -t_sig, t_sig, splits, q2);
    if (std::abs(first - second) > 0.5 * opt.tol)
        fail(errc::tolerance_not_met, "phi_complex: halving check exceeded the tolerance");
    return second;
}

} // namespace tandiv
