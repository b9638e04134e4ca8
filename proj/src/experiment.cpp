#include "tandiv/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "tandiv/angles.hpp"
#include "tandiv/error.hpp"
#include "tandiv/transform.hpp"

namespace tandiv {

std::uint64_t SampleRng::next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SampleRng::next_angle() {
    double u = (double)(next_u64() >> 11) * 0x1.0p-53;
    return -pi + two_pi * u;
}

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Location locate(double x, const ScheduleEntry& e, const ApproachCurve& curve, Variant variant) {
    x = wrap_angle(x);
    long long n = e.n;
    double lo_t = two_pi / (double)n;
    double hi_t = 2.0 * lo_t;
    long long j0 = (long long)std::ceil(x * (double)n / two_pi) + 1;
    double target = two_pi * (double)j0 / (double)n - x;
    while (target >= hi_t) {
        --j0;
        target = two_pi * (double)j0 / (double)n - x;
    }
    while (target < lo_t) {
        ++j0;
        target = two_pi * (double)j0 / (double)n - x;
    }
    require(target >= lo_t && target < hi_t, errc::internal, "locate: target normalization failed");
    Location loc;
    // report j0 in [1, n]
    long long jr = j0 % n;
    if (jr <= 0) jr += n;
    loc.j0 = jr;
    loc.target = target;
    loc.r = curve.solve_radius(target, e.u, e.v);
    if (variant == Variant::theorem2) {
        loc.target2 = target + pi / (double)n;
        loc.r_second = curve.solve_radius(loc.target2, e.u, e.v);
    }
    return loc;
}

T1Trace theorem1_trace(const Kernel& kernel, const ApproachCurve& curve, const Schedule& s,
                       const SetSequence& seq, double x) {
    require(s.variant == Variant::theorem1, errc::invalid_argument,
            "theorem1_trace: wrong schedule variant");
    require(seq.depth() == s.depth, errc::invalid_argument,
            "theorem1_trace: set sequence depth mismatch");
    T1Trace tr;
    tr.x = wrap_angle(x);
    const IntervalUnion& E = seq.final_set();
    for (int k = 1; k <= s.depth; ++k) {
        const ScheduleEntry& e = s.level(k);
        Location loc = locate(tr.x, e, curve, Variant::theorem1);
        require(loc.r >= e.u && loc.r <= e.v, errc::internal,
                "theorem1_trace: located radius escaped [u_k, v_k]");
        double lam = curve.eval(loc.r);
        double phi = phi_indicator(kernel, loc.r, tr.x + lam, E);
        T1Record rec;
        rec.k = k;
        rec.j0 = loc.j0;
        rec.target = loc.target;
        rec.r = loc.r;
        rec.lambda_r = lam;
        rec.phi = phi;
        rec.odd = (k % 2 == 1);
        double beta = s.beta_target;
        double tk = std::ldexp(1.0, -k);
        if (rec.odd) {
            rec.bound = beta * (1.0 - tk) - tk;
            rec.margin = phi - rec.bound;
            tr.max_odd_phi = std::max(tr.max_odd_phi, phi);
        } else {
            rec.bound = 1.0 - beta * (1.0 - tk) + tk;
            rec.margin = rec.bound - phi;
            tr.min_even_phi = std::min(tr.min_even_phi, phi);
        }
        if (!(rec.margin >= 0.0)) ++tr.violations;
        tr.records.push_back(rec);
    }
    tr.gap = tr.max_odd_phi - tr.min_even_phi;
    return tr;
}

namespace {

// The carrier product is constant off its transition zones. The evaluation
// window around the anchor point is clear when, for every carrier factor,
// the n-fold angle keeps a margin of pi*tau (zone half-width) plus the
// window's own angular extent away from the comb points.
bool zones_clear_at(const Schedule& s, int k_level, double center, double half_width) {
    for (int j = 1; j < k_level; ++j) {
        const ScheduleEntry& e = s.level(j);
        if (!e.carrier) continue;
        double tau = std::ldexp(1.0, -16); // matches BuildOptions::carrier_zone_exp default
        double theta = reduce_multiple(e.n, center);
        double zone = pi * tau + (double)e.n * half_width;
        if (std::abs(theta) < 2.0 * zone) return false;
    }
    return true;
}

} // namespace

T2Result theorem2_gap(const Kernel& kernel, const ApproachCurve& curve, const Schedule& s,
                      const BlaschkeProduct& B, double x, int k_level, double phi_tol) {
    require(s.variant == Variant::theorem2, errc::invalid_argument,
            "theorem2_gap: wrong schedule variant");
    require(k_level >= 1 && k_level <= s.depth, errc::invalid_argument,
            "theorem2_gap: k_level outside the schedule depth");
    require(B.depth() == (std::size_t)s.depth, errc::invalid_argument,
            "theorem2_gap: product depth mismatch");
    T2Result res;
    res.x = wrap_angle(x);
    res.k_level = k_level;
    const ScheduleEntry& e = s.level(k_level);
    Location loc = locate(res.x, e, curve, Variant::theorem2);
    res.j0 = loc.j0;
    res.target = loc.target;
    res.target2 = loc.target2;
    res.r_prime = loc.r;
    res.r_second = loc.r_second;
    double a_point = res.x + loc.target; // = 2 pi j0 / n mod 2 pi
    res.anchor = B.eval_prefix((std::size_t)k_level - 1, a_point);

    PhiComplexOptions popt;
    popt.tol = phi_tol;
    res.phi_prime = phi_complex(kernel, loc.r, res.x + curve.eval(loc.r), B, popt);
    res.phi_second = phi_complex(kernel, loc.r_second, res.x + curve.eval(loc.r_second), B, popt);

    res.anchor_dev1 = std::abs(res.phi_prime + res.anchor);
    res.anchor_dev2 = std::abs(res.phi_second - res.anchor);
    res.anchor_bound = 4.0 * std::ldexp(1.0, -k_level);
    res.gap = std::abs(res.phi_prime - res.phi_second);
    res.gap_bound = 1.0 - 16.0 * std::ldexp(1.0, -k_level);
    res.gap_bound_active = res.gap_bound > 0.0;

    if (k_level < s.depth) {
        BlaschkeProduct Bk = B.prefix((std::size_t)k_level);
        std::complex<double> pk =
            phi_complex(kernel, loc.r, res.x + curve.eval(loc.r), Bk, popt);
        res.transfer_dev = std::abs(res.phi_prime - pk);
    }

    double window = pi / (double)e.n + 64.0 * (1.0 - e.u);
    res.zones_clear = zones_clear_at(s, k_level, a_point, window) &&
                      zones_clear_at(s, k_level, a_point + pi / (double)e.n, window);

    if (res.gap_bound_active && !(res.gap >= res.gap_bound)) ++res.violations;
    if (!(res.anchor_dev1 <= res.anchor_bound)) ++res.violations;
    if (!(res.anchor_dev2 <= res.anchor_bound)) ++res.violations;
    return res;
}

SweepSummary sweep_theorem1(const Kernel& kernel, const ApproachCurve& curve, const Schedule& s,
                            const SetSequence& seq, const SweepConfig& cfg) {
    require(cfg.samples >= 0, errc::invalid_argument, "sweep: samples must be >= 0");
    SweepSummary sum;
    sum.variant = Variant::theorem1;
    sum.samples = cfg.samples;
    sum.seed = cfg.seed;
    sum.min_gap = cfg.samples > 0 ? 2.0 : 0.0;
    std::ostringstream csv;
    csv << "x_index,x,k,j0,target,r,phi,bound,kind,margin\n";
    SampleRng rng(cfg.seed);
    for (int i = 0; i < cfg.samples; ++i) {
        double x = rng.next_angle();
        T1Trace tr = theorem1_trace(kernel, curve, s, seq, x);
        sum.violations += tr.violations;
        sum.min_gap = std::min(sum.min_gap, tr.gap);
        for (const T1Record& rec : tr.records) {
            csv << i << ',' << format_double(tr.x) << ',' << rec.k << ',' << rec.j0 << ','
                << format_double(rec.target) << ',' << format_double(rec.r) << ','
                << format_double(rec.phi) << ',' << format_double(rec.bound) << ','
                << (rec.odd ? "odd_lower" : "even_upper") << ',' << format_double(rec.margin)
                << '\n';
        }
    }
    sum.csv = csv.str();
    return sum;
}

SweepSummary sweep_theorem2(const Kernel& kernel, const ApproachCurve& curve, const Schedule& s,
                            const BlaschkeProduct& B, const SweepConfig& cfg) {
    require(cfg.samples >= 0, errc::invalid_argument, "sweep: samples must be >= 0");
    int k_level = cfg.k_level > 0 ? cfg.k_level : s.depth;
    SweepSummary sum;
    sum.variant = Variant::theorem2;
    sum.samples = cfg.samples;
    sum.seed = cfg.seed;
    sum.min_gap = cfg.samples > 0 ? 2.0 : 0.0;
    std::ostringstream csv;
    csv << "x_index,x,k,j0,r_prime,r_second,phi_prime_re,phi_prime_im,phi_second_re,"
           "phi_second_im,gap,gap_bound,anchor_dev1,anchor_dev2,anchor_bound,transfer_dev,"
           "zones_clear\n";
    SampleRng rng(cfg.seed);
    for (int i = 0; i < cfg.samples; ++i) {
        double x = rng.next_angle();
        T2Result res = theorem2_gap(kernel, curve, s, B, x, k_level, cfg.phi_tol);
        sum.violations += res.violations;
        sum.min_gap = std::min(sum.min_gap, res.gap);
        sum.max_anchor_dev = std::max(sum.max_anchor_dev,
                                      std::max(res.anchor_dev1, res.anchor_dev2));
        if (!res.zones_clear) ++sum.zone_hits;
        csv << i << ',' << format_double(res.x) << ',' << res.k_level << ',' << res.j0 << ','
            << format_double(res.r_prime) << ',' << format_double(res.r_second) << ','
            << format_double(res.phi_prime.real()) << ',' << format_double(res.phi_prime.imag())
            << ',' << format_double(res.phi_second.real()) << ','
            << format_double(res.phi_second.imag()) << ',' << format_double(res.gap) << ','
            << format_double(res.gap_bound) << ',' << format_double(res.anchor_dev1) << ','
            << format_double(res.anchor_dev2) << ',' << format_double(res.anchor_bound) << ','
            << format_double(res.transfer_dev) << ',' << (res.zones_clear ? 1 : 0) << '\n';
    }
    sum.csv = csv.str();
    return sum;
}

} // namespace tandiv
