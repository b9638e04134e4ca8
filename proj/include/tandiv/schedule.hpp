#pragma once

#include <string>
#include <vector>

#include "tandiv/blaschke.hpp"
#include "tandiv/curve.hpp"
#include "tandiv/kernel.hpp"

namespace tandiv {

enum class Variant { theorem1, theorem2 };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

// One certified inequality. gating rows decide pass/fail; the rest are
// diagnostics (notably the sup-form bounds that double precision cannot
// reach at depth, kept visible instead of silently dropped).
struct CertRow {
    int k = 0; // 0 = schedule-wide
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool upper = true; // true: value must stay below bound, false: above
    bool gating = true;
    double margin() const { return upper ? bound - value : value - bound; }
};

struct ScheduleEntry {
    int k = 1;
    double delta = 0.0;
    double u = 0.0;
    double v = 0.0;
    long long n = 1;
    double lambda_u = 0.0;
    // theorem2 levels below the working depth carry the factor structure with
    // microscopic delta; their (p8) window condition is not enforced.
    bool carrier = false;
};

struct Schedule {
    Variant variant = Variant::theorem1;
    int depth = 0;
    double beta_target = 0.0;
    std::string kernel_family;
    std::string curve_family;
    std::vector<ScheduleEntry> entries;  // entries[k-1] is level k
    std::vector<CertRow> certificate;

    const ScheduleEntry& level(int k) const { return entries.at((std::size_t)k - 1); }
    double comb_delta(int k) const; // arc-width parameter of U_k (5 delta_k or 6 delta_k)
    BlaschkeProduct product(int upto = -1) const; // factors b_1..b_upto (theorem2)
};

struct BuildOptions {
    Variant variant = Variant::theorem1;
    int depth = 4;
    double beta_target = 0.98;
    // build-time headroom: every gating bound is enforced at this fraction,
    // validation then re-checks the full bound
    double budget_fraction = 0.9;
    // carrier-level parameters (theorem2): delta_k = 2^-(k+carrier_delta_exp)
    // and zone half-width parameter tau = 2^-carrier_zone_exp
    int carrier_delta_exp = 79;
    int carrier_zone_exp = 16;
};

// Constructs (delta_k, u_k, v_k, n_k), k = 1..depth, by deterministic dyadic
// scans, together with the certificate of every checked inequality.
Schedule build_schedule(const Kernel& kernel, const ApproachCurve& curve, const BuildOptions& opt);

struct ValidationReport {
    bool pass = false;
    std::vector<CertRow> rows;
    double min_gating_margin = 0.0;
};

// Re-evaluates every certified inequality with quadrature-backed masses
// (never the closed-form primitives) and reports signed margins.
ValidationReport validate_schedule(const Schedule& s, const Kernel& kernel,
                                   const ApproachCurve& curve);

// Worst-case (over kernel position) mass the combs of levels k+1..depth can
// move at radii up to v_k: the transfer certificate consumed by the traces.
double transfer_tail_bound(const Schedule& s, const Kernel& kernel, int k);

} // namespace tandiv
