#include "tandiv/circle_set.hpp"

#include <algorithm>
#include <cmath>

#include "tandiv/error.hpp"

namespace tandiv {

IntervalUnion IntervalUnion::full_circle() {
    IntervalUnion u;
    u.arcs_ = {{-pi, pi}};
    u.measure_ = two_pi;
    return u;
}

IntervalUnion IntervalUnion::from_arcs(std::vector<Arc> raw) {
    std::vector<Arc> flat;
    flat.reserve(raw.size() + 4);
    for (const Arc& a : raw) {
        if (!(a.hi > a.lo)) continue;
        double len = a.hi - a.lo;
        if (len >= two_pi - merge_eps) return full_circle();
        double lo = wrap_angle(a.lo);
        double hi = lo + len;
        if (hi <= pi) {
            flat.push_back({lo, hi});
        } else { // wraps the cut
            flat.push_back({lo, pi});
            flat.push_back({-pi, hi - two_pi});
        }
    }
    if (flat.empty()) return IntervalUnion();
    std::sort(flat.begin(), flat.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
    std::vector<Arc> merged;
    merged.reserve(flat.size());
    for (const Arc& a : flat) {
        if (!merged.empty() && a.lo <= merged.back().hi + merge_eps) {
            merged.back().hi = std::max(merged.back().hi, a.hi);
        } else {
            merged.push_back(a);
        }
    }
    // drop slivers left over from rounding
    std::vector<Arc> out;
    out.reserve(merged.size());
    for (const Arc& a : merged)
        if (a.hi - a.lo > merge_eps) out.push_back(a);
    // a union covering the whole circle collapses to the canonical form
    if (out.size() == 1 && out[0].hi - out[0].lo >= two_pi - merge_eps) return full_circle();
    IntervalUnion u;
    double m = 0.0;
    for (const Arc& a : out) m += a.hi - a.lo;
    u.arcs_ = std::move(out);
    u.measure_ = m;
    return u;
}

bool IntervalUnion::contains(double x) const {
    double t = wrap_angle(x);
    auto it = std::upper_bound(arcs_.begin(), arcs_.end(), t,
                               [](double v, const Arc& a) { return v < a.lo; });
    if (it == arcs_.begin()) return false;
    --it;
    return t >= it->lo && t < it->hi;
}

IntervalUnion comb_set(long n, double delta) {
    require(n >= 1, errc::invalid_argument, "comb_set: n must be >= 1");
    require(delta > 0.0 && delta < 1.0, errc::invalid_argument,
            "comb_set: delta must lie in (0,1), otherwise arcs merge");
    std::vector<Arc> arcs;
    arcs.reserve((std::size_t)n + 1);
    for (long j = 0; j < n; ++j) {
        double lo = pi * (2.0 * (double)j - delta) / (double)n;
        double hi = pi * (2.0 * (double)j + delta) / (double)n;
        arcs.push_back({lo, hi});
    }
    return IntervalUnion::from_arcs(std::move(arcs));
}

namespace {

// Sweep both arc lists; keep intervals where pred(inA, inB) holds.
template <typename Pred>
IntervalUnion sweep(const IntervalUnion& a, const IntervalUnion& b, Pred pred) {
    struct Ev {
        double t;
        int which; // 0 = a, 1 = b
        int delta; // +1 open, -1 close
    };
    std::vector<Ev> evs;
    evs.reserve(2 * (a.arc_count() + b.arc_count()));
    for (const Arc& x : a.arcs()) {
        evs.push_back({x.lo, 0, +1});
        evs.push_back({x.hi, 0, -1});
    }
    for (const Arc& x : b.arcs()) {
        evs.push_back({x.lo, 1, +1});
        evs.push_back({x.hi, 1, -1});
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& l, const Ev& r) {
        if (l.t != r.t) return l.t < r.t;
        return l.delta < r.delta; // closes before opens at identical points
    });
    std::vector<Arc> out;
    int in[2] = {0, 0};
    double start = 0.0;
    bool active = false;
    for (const Ev& e : evs) {
        bool before = pred(in[0] > 0, in[1] > 0);
        in[e.which] += e.delta;
        bool after = pred(in[0] > 0, in[1] > 0);
        if (!active && !before && after) {
            start = e.t;
            active = true;
        } else if (active && before && !after) {
            out.push_back({start, e.t});
            active = false;
        }
    }
    return IntervalUnion::from_arcs(std::move(out));
}

} // namespace

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return sweep(a, b, [](bool x, bool y) { return x || y; });
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
    if (a.is_empty() || b.is_empty()) return IntervalUnion::empty();
    return sweep(a, b, [](bool x, bool y) { return x && y; });
}

IntervalUnion subtract(const IntervalUnion& a, const IntervalUnion& b) {
    if (a.is_empty() || b.is_empty()) return a;
    return sweep(a, b, [](bool x, bool y) { return x && !y; });
}

IntervalUnion complement(const IntervalUnion& a) {
    return subtract(IntervalUnion::full_circle(), a);
}

IntervalUnion shift(const IntervalUnion& a, double s) {
    std::vector<Arc> arcs;
    arcs.reserve(a.arc_count());
    for (const Arc& x : a.arcs()) arcs.push_back({x.lo + s, x.hi + s});
    return IntervalUnion::from_arcs(std::move(arcs));
}

double sym_diff_measure(const IntervalUnion& a, const IntervalUnion& b) {
    return subtract(a, b).measure() + subtract(b, a).measure();
}

} // namespace tandiv
