#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tandiv/blaschke.hpp"
#include "tandiv/curve.hpp"
#include "tandiv/kernel.hpp"
#include "tandiv/schedule.hpp"
#include "tandiv/set_sequence.hpp"

namespace tandiv {

// Deterministic generator for the sampled angles (splitmix64; the standard
// distributions are not bit-stable across library implementations).
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double next_angle(); // uniform in [-pi, pi)

private:
    std::uint64_t state_;
};

struct Location {
    long long j0 = 0;
    double target = 0.0;   // 2 pi j0 / n - x, reduced into [2 pi/n, 4 pi/n)
    double target2 = 0.0;  // target + pi/n (theorem2 only)
    double r = 0.0;        // lambda(r) = target
    double r_second = 0.0; // lambda(r_second) = target2 (theorem2 only)
};

Location locate(double x, const ScheduleEntry& e, const ApproachCurve& curve, Variant variant);

struct T1Record {
    int k = 0;
    long long j0 = 0;
    double target = 0.0;
    double r = 0.0;
    double lambda_r = 0.0;
    double phi = 0.0;
    double bound = 0.0;
    double margin = 0.0; // signed; >= 0 is a pass
    bool odd = false;
};

struct T1Trace {
    double x = 0.0;
    std::vector<T1Record> records;
    double max_odd_phi = 0.0;
    double min_even_phi = 1.0;
    double gap = 0.0;
    int violations = 0;
};

// Evaluates Phi at the located radius of every level against the certified
// per-level bounds (window mass transferred to the truncated set).
T1Trace theorem1_trace(const Kernel& kernel, const ApproachCurve& curve, const Schedule& s,
                       const SetSequence& seq, double x);

struct T2Result {
    double x = 0.0;
    int k_level = 0;
    long long j0 = 0;
    double target = 0.0, target2 = 0.0;
    double r_prime = 0.0, r_second = 0.0;
    std::complex<double> phi_prime, phi_second, anchor;
    double anchor_dev1 = 0.0, anchor_dev2 = 0.0, anchor_bound = 0.0;
    double gap = 0.0, gap_bound = 0.0;
    bool gap_bound_active = true;
    double transfer_dev = 0.0; // measured |Phi(B) - Phi(B_k)|, zero at k = depth
    bool zones_clear = true;   // evaluation windows avoid all carrier transition zones
    int violations = 0;
};

T2Result theorem2_gap(const Kernel& kernel, const ApproachCurve& curve, const Schedule& s,
                      const BlaschkeProduct& B, double x, int k_level, double phi_tol = 1e-8);

struct SweepConfig {
    int samples = 100;
    std::uint64_t seed = 20250808;
    int k_level = 0; // 0: schedule depth
    double phi_tol = 1e-8;
};

struct SweepSummary {
    Variant variant = Variant::theorem1;
    int samples = 0;
    std::uint64_t seed = 0;
    int violations = 0;
    double min_gap = 0.0;
    double max_anchor_dev = 0.0; // theorem2
    int zone_hits = 0;           // theorem2
    std::string csv;             // per-x rows, deterministic formatting
};

SweepSummary sweep_theorem1(const Kernel& kernel, const ApproachCurve& curve, const Schedule& s,
                            const SetSequence& seq, const SweepConfig& cfg);

SweepSummary sweep_theorem2(const Kernel& kernel, const ApproachCurve& curve, const Schedule& s,
                            const BlaschkeProduct& B, const SweepConfig& cfg);

// Shortest round-trip decimal formatting (used everywhere output must be
// byte-stable across runs).
std::string format_double(double v);

} // namespace tandiv
