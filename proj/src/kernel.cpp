#include "tandiv/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tandiv/angles.hpp"
#include "tandiv/error.hpp"
#include "tandiv/quadrature.hpp"

namespace tandiv {

namespace {

void check_r(double r) {
    require(r > 0.0 && r <= Kernel::r_cap, errc::domain,
            "kernel: r must lie in (0, 1-1e-12]; the closed forms lose all "
            "precision beyond the cap");
}

// Poisson primitive: F(t) = atan(q tan(t/2)) / pi on (-pi, pi), +-1/2 at the ends.
double poisson_primitive(double r, double t) {
    if (t >= pi) return 0.5;
    if (t <= -pi) return -0.5;
    double q = (2.0 - (1.0 - r)) / (1.0 - r);
    return std::atan(q * std::tan(0.5 * t)) / pi;
}

double poisson_density(double r, double t) {
    double s = 1.0 - r;
    double sn = std::sin(0.5 * t);
    return s * (1.0 + r) / (two_pi * (s * s + 4.0 * r * sn * sn));
}

long fejer_order(double r) {
    double n = std::ceil(1.0 / (1.0 - r));
    require(n <= 2.0e8, errc::tolerance_not_met,
            "fejer: order N = ceil(1/(1-r)) exceeds the O(N) mass budget");
    return (long)n;
}

double fejer_density(double r, double t) {
    long N = fejer_order(r);
    double sn = std::sin(0.5 * t);
    if (std::abs(sn) < 1e-14) return (double)(N + 1) / two_pi;
    double ratio = std::sin(0.5 * (double)(N + 1) * t) / sn;
    return ratio * ratio / (two_pi * (double)(N + 1));
}

// Fejer primitive (1/2pi)[t + 2 sum_{j<=N} (1-j/(N+1)) sin(jt)/j], evaluated
// with a rotation recurrence resynchronized in blocks to hold the drift down.
double fejer_primitive(double r, double t) {
    long N = fejer_order(r);
    double c1 = std::cos(t), s1 = std::sin(t);
    double cj = 1.0, sj = 0.0; // cos(0t), sin(0t)
    double acc = 0.0, comp = 0.0;
    const long block = 8192;
    for (long j = 1; j <= N; ++j) {
        if ((j - 1) % block == 0) {
            cj = std::cos((double)(j - 1) * t);
            sj = std::sin((double)(j - 1) * t);
        }
        double cn = cj * c1 - sj * s1;
        double snn = sj * c1 + cj * s1;
        cj = cn;
        sj = snn;
        double term = (1.0 - (double)j / (double)(N + 1)) * sj / (double)j;
        // Kahan accumulation
        double y = term - comp;
        double tt = acc + y;
        comp = (tt - acc) - y;
        acc = tt;
    }
    return (t + 2.0 * acc) / two_pi;
}

} // namespace

std::string family_name(KernelFamily f) {
    switch (f) {
        case KernelFamily::poisson: return "poisson";
        case KernelFamily::sqrt_poisson: return "sqrt_poisson";
        case KernelFamily::box: return "box";
        case KernelFamily::fejer: return "fejer";
    }
    return "?";
}

KernelFamily family_from_name(const std::string& name) {
    if (name == "poisson") return KernelFamily::poisson;
    if (name == "sqrt_poisson") return KernelFamily::sqrt_poisson;
    if (name == "box") return KernelFamily::box;
    if (name == "fejer") return KernelFamily::fejer;
    fail(errc::parse, "unknown kernel family: " + name);
}

double Kernel::density(double r, double t) const {
    check_r(r);
    t = wrap_angle(t);
    switch (family_) {
        case KernelFamily::poisson:
            return poisson_density(r, t);
        case KernelFamily::box: {
            double s = 1.0 - r;
            return std::abs(t) < s ? 1.0 / (2.0 * s) : 0.0;
        }
        case KernelFamily::fejer:
            return fejer_density(r, t);
        case KernelFamily::sqrt_poisson:
            return std::sqrt(poisson_density(r, t)) / sqrt_normalizer(r);
    }
    return 0.0;
}

double Kernel::sqrt_normalizer(double r) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = sqrt_norm_cache_.find(r);
        if (it != sqrt_norm_cache_.end()) return it->second;
    }
    double s = 1.0 - r;
    std::vector<double> splits;
    for (double w = s; w < pi; w *= 4.0) {
        splits.push_back(w);
        splits.push_back(-w);
    }
    auto integrand = [&](double t) { return std::sqrt(poisson_density(r, t)); };
    QuadOptions coarse;
    coarse.abs_tol = 1e-8;
    double q0 = integrate(integrand, -pi, pi, splits, coarse);
    QuadOptions fine;
    fine.abs_tol = std::max(1e-13, 1e-11 * q0); // relative accuracy drives normalization error
    double q = integrate(integrand, -pi, pi, splits, fine);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    sqrt_norm_cache_[r] = q;
    return q;
}

double Kernel::mass(double r, double a, double b) const {
    check_r(r);
    require(b >= a, errc::invalid_argument, "mass: requires a <= b");
    double len = b - a;
    if (len >= two_pi) return 1.0;
    // slide the window so its left end lies in [-pi, pi)
    double lo = wrap_angle(a);
    double hi = lo + len;
    struct Piece {
        double lo, hi;
    };
    Piece pieces[2];
    int np = 0;
    if (hi <= pi) {
        pieces[np++] = {lo, hi};
    } else {
        pieces[np++] = {lo, pi};
        pieces[np++] = {-pi, hi - two_pi};
    }
    double total = 0.0;
    for (int i = 0; i < np; ++i) {
        double plo = pieces[i].lo, phi = pieces[i].hi;
        switch (family_) {
            case KernelFamily::poisson:
                total += poisson_primitive(r, phi) - poisson_primitive(r, plo);
                break;
            case KernelFamily::box: {
                double s = 1.0 - r;
                double ov = std::min(phi, s) - std::max(plo, -s);
                if (ov > 0.0) total += ov / (2.0 * s);
                break;
            }
            case KernelFamily::fejer:
                total += fejer_primitive(r, phi) - fejer_primitive(r, plo);
                break;
            case KernelFamily::sqrt_poisson: {
                double s = 1.0 - r;
                std::vector<double> splits{0.0};
                for (double w = s; w < pi; w *= 4.0) {
                    splits.push_back(w);
                    splits.push_back(-w);
                }
                QuadOptions opt;
                opt.abs_tol = 1e-10;
                double c = sqrt_normalizer(r);
                total += integrate([&](double t) { return std::sqrt(poisson_density(r, t)) / c; },
                                   plo, phi, splits, opt);
                break;
            }
        }
    }
    return std::clamp(total, 0.0, 1.0);
}

double Kernel::worst_mass(double r, double m) const {
    check_r(r);
    require(m >= 0.0, errc::invalid_argument, "worst_mass: m must be >= 0");
    m = std::min(m, two_pi);
    if (m == 0.0) return 0.0;
    if (m >= two_pi) return 1.0;
    if (unimodal()) return mass(r, -0.5 * m, 0.5 * m);
    // sorted-grid greedy fill for non-unimodal families
    const int cells = 1 << 18;
    double w = two_pi / cells;
    std::vector<double> vals(cells);
    for (int i = 0; i < cells; ++i) {
        double t = -pi + (i + 0.5) * w;
        vals[i] = density(r, t);
    }
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    double remaining = m, acc = 0.0;
    for (int i = 0; i < cells && remaining > 0.0; ++i) {
        double take = std::min(remaining, w);
        acc += vals[i] * take;
        remaining -= take;
    }
    return std::min(acc, 1.0);
}

double Kernel::abs_continuity_threshold(double eps, double tau) const {
    require(eps > 0.0, errc::invalid_argument, "threshold: eps must be positive");
    require(eps < 1.0, errc::invalid_argument,
            "threshold: eps >= 1 is vacuous (every set has mass <= 1)");
    require(tau > 0.0 && tau < 1.0, errc::invalid_argument, "threshold: tau must lie in (0,1)");
    double tau_eff = std::min(tau, r_cap);
    auto sup_worst = [&](double m) {
        if (unimodal()) return worst_mass(tau_eff, m); // sup attained at r = tau
        double sup = 0.0;
        for (double g = 1.0 - tau_eff; g < 1.0; g *= 2.0) {
            double r = 1.0 - g;
            if (r <= 0.0) break;
            sup = std::max(sup, worst_mass(r, m));
        }
        return sup;
    };
    const double m_min = 1e-15;
    if (!(sup_worst(m_min) < eps))
        fail(errc::infeasible, "threshold: cannot certify any m above 1e-15");
    if (sup_worst(two_pi) < eps) return two_pi; // cannot happen for eps < 1, kept for safety
    double lo = m_min, hi = two_pi;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        if (sup_worst(mid) < eps)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double Kernel::comb_sup_mass(double r, long n, double arc_width) const {
    require(unimodal(), errc::invalid_argument,
            "comb_sup_mass: needs an even unimodal family");
    require(n >= 1 && arc_width >= 0.0, errc::invalid_argument, "comb_sup_mass: bad comb");
    double spacing = two_pi / (double)n;
    if (arc_width >= spacing) return 1.0;
    double nearest = worst_mass(r, arc_width);
    double g = 0.5 * spacing - 0.5 * arc_width;
    double others = (arc_width / spacing) * (1.0 - mass(r, -g, g)) + 2.0 * arc_width * density(r, g);
    return std::min(1.0, nearest + others);
}

} // namespace tandiv
