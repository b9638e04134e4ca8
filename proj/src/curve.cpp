#include "tandiv/curve.hpp"

#include <algorithm>
#include <cmath>

#include "tandiv/error.hpp"

namespace tandiv {

std::string curve_family_name(CurveFamily f) {
    switch (f) {
        case CurveFamily::power: return "power";
        case CurveFamily::loglinear: return "loglinear";
        case CurveFamily::linear: return "linear";
    }
    return "?";
}

CurveFamily curve_family_from_name(const std::string& name) {
    if (name == "power") return CurveFamily::power;
    if (name == "loglinear") return CurveFamily::loglinear;
    if (name == "linear") return CurveFamily::linear;
    fail(errc::parse, "unknown curve family: " + name);
}

ApproachCurve ApproachCurve::power(double c, double alpha) {
    require(c > 0.0, errc::invalid_argument, "curve: c must be positive");
    require(alpha > 0.0 && alpha <= 1.0, errc::invalid_argument,
            "curve: power exponent must lie in (0, 1]");
    return ApproachCurve(CurveFamily::power, c, alpha);
}

ApproachCurve ApproachCurve::loglinear(double c) {
    require(c > 0.0, errc::invalid_argument, "curve: c must be positive");
    return ApproachCurve(CurveFamily::loglinear, c, 0.0);
}

ApproachCurve ApproachCurve::linear(double c) {
    require(c > 0.0, errc::invalid_argument, "curve: c must be positive");
    return ApproachCurve(CurveFamily::linear, c, 0.0);
}

double ApproachCurve::eval(double r) const {
    require(r >= 0.0 && r <= 1.0, errc::domain, "curve: r must lie in [0,1]");
    double s = 1.0 - r;
    if (s == 0.0) return 0.0;
    switch (family_) {
        case CurveFamily::power: return c_ * std::pow(s, alpha_);
        case CurveFamily::loglinear: return c_ * s * (1.0 - std::log(s));
        case CurveFamily::linear: return c_ * s;
    }
    return 0.0;
}

double ApproachCurve::tangency_ratio(double r) const {
    require(r < 1.0, errc::domain, "tangency_ratio: r must be < 1");
    require(r >= 0.0, errc::domain, "tangency_ratio: r must be >= 0");
    return eval(r) / (1.0 - r);
}

double ApproachCurve::solve_radius(double target, double lo, double hi) const {
    require(lo < hi, errc::invalid_argument, "solve_radius: needs lo < hi");
    require(lo >= 0.0 && hi <= 1.0, errc::domain, "solve_radius: [lo,hi] must lie in [0,1]");
    require(target > 0.0 || eval(hi) == 0.0, errc::invalid_argument,
            "solve_radius: target must be positive");
    double flo = eval(lo), fhi = eval(hi);
    double a = lo, b = hi, fa = flo, fb = fhi;
    auto brackets = [&](double x, double y) {
        return (x - target) * (y - target) <= 0.0;
    };
    if (!brackets(fa, fb)) {
        // non-monotone guard: scan for a sign change
        bool found = false;
        const int scan = 1024;
        double prev = lo, fprev = flo;
        for (int i = 1; i <= scan; ++i) {
            double x = lo + (hi - lo) * (double)i / scan;
            double fx = eval(x);
            if (brackets(fprev, fx)) {
                a = prev;
                b = x;
                fa = fprev;
                found = true;
                break;
            }
            prev = x;
            fprev = fx;
        }
        if (!found)
            fail(errc::no_bracket,
                 "solve_radius: target not bracketed on [lo, hi]; schedule inconsistent with "
                 "the curve (condition on lambda(v_k) <= lambda(u_k) violated)");
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break; // hit radius representability
        double fm = eval(mid);
        if (brackets(fa, fm)) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    // pick the endpoint with the smaller residual
    return std::abs(eval(a) - target) <= std::abs(eval(b) - target) ? a : b;
}

} // namespace tandiv
