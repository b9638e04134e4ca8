#pragma once

#include <vector>

#include "tandiv/angles.hpp"

namespace tandiv {

// Half-open arc [lo, hi) with -pi <= lo < hi <= pi after normalization.
// Arcs wrapping the cut at +-pi are stored split in two.
struct Arc {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

// Finite union of pairwise-disjoint sorted arcs on the circle [-pi, pi).
// Immutable after construction; all operations return new values.
class IntervalUnion {
public:
    IntervalUnion() = default;

    // Normalizes arbitrary input arcs: wraps angles, splits arcs crossing the
    // cut, sorts, merges overlaps and endpoints closer than merge_eps.
    static IntervalUnion from_arcs(std::vector<Arc> raw);
    static IntervalUnion empty() { return IntervalUnion(); }
    static IntervalUnion full_circle();

    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t arc_count() const { return arcs_.size(); }
    double measure() const { return measure_; }
    bool is_empty() const { return arcs_.empty(); }

    // Membership of the point wrap_angle(x); endpoints resolve half-open.
    bool contains(double x) const;

    static constexpr double merge_eps = 1e-14;

private:
    std::vector<Arc> arcs_;       // sorted by lo, pairwise disjoint
    double measure_ = 0.0;        // cached sum of lengths

    friend IntervalUnion unite(const IntervalUnion&, const IntervalUnion&);
    friend IntervalUnion intersect(const IntervalUnion&, const IntervalUnion&);
    friend IntervalUnion subtract(const IntervalUnion&, const IntervalUnion&);
};

// n equally spaced arcs (pi(2j-delta)/n, pi(2j+delta)/n), j = 0..n-1,
// total measure 2*pi*delta. Requires n >= 1 and 0 < delta < 1.
IntervalUnion comb_set(long n, double delta);

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion subtract(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion complement(const IntervalUnion& a);
IntervalUnion shift(const IntervalUnion& a, double s);

// |a (symmetric difference) b| in radians.
double sym_diff_measure(const IntervalUnion& a, const IntervalUnion& b);

} // namespace tandiv
