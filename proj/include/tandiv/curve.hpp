#pragma once

#include <string>

namespace tandiv {

enum class CurveFamily { power, loglinear, linear };

std::string curve_family_name(CurveFamily f);
CurveFamily curve_family_from_name(const std::string& name);

// Approach curve lambda: [0,1] -> [0, inf), continuous, lambda(1) = 0,
// positive and strictly decreasing on [0, 1) for every shipped family.
class ApproachCurve {
public:
    static ApproachCurve power(double c, double alpha);
    static ApproachCurve loglinear(double c);
    static ApproachCurve linear(double c);

    CurveFamily family() const { return family_; }
    double c() const { return c_; }
    double alpha() const { return alpha_; }

    double eval(double r) const;

    // lambda(r) / (1 - r); diverges iff the approach is tangential.
    double tangency_ratio(double r) const;

    // Radius from which lambda is nonincreasing (0 for all shipped families).
    double monotone_from() const { return 0.0; }

    // Solve lambda(r) = target on [lo, hi] by bisection. target must lie
    // between lambda(hi) and lambda(lo); a 1024-point scan locates a bracket
    // if the direct one fails. Accuracy is limited near r = 1 by the spacing
    // of representable radii; the residual is tied to |lambda'| * ulp(r).
    double solve_radius(double target, double lo, double hi) const;

private:
    ApproachCurve(CurveFamily f, double c, double alpha) : family_(f), c_(c), alpha_(alpha) {}
    CurveFamily family_;
    double c_;
    double alpha_;
};

} // namespace tandiv
