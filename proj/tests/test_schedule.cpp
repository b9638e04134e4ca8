#include <doctest.h>

#include <cmath>

#include "tandiv/error.hpp"
#include "tandiv/json_io.hpp"
#include "tandiv/schedule.hpp"
#include "tandiv/set_sequence.hpp"

using namespace tandiv;

namespace {

Schedule build_t1() {
    BuildOptions opt;
    opt.variant = Variant::theorem1;
    opt.depth = 4;
    opt.beta_target = 0.98;
    return build_schedule(Kernel::poisson(), ApproachCurve::power(1.0, 0.5), opt);
}

Schedule build_t2() {
    BuildOptions opt;
    opt.variant = Variant::theorem2;
    opt.depth = 5;
    opt.beta_target = 1.0;
    return build_schedule(Kernel::poisson(), ApproachCurve::power(1.0, 0.5), opt);
}

} // namespace

TEST_CASE("theorem1 schedule builds and validates") {
    Kernel k = Kernel::poisson();
    ApproachCurve c = ApproachCurve::power(1.0, 0.5);
    Schedule s = build_t1();
    REQUIRE(s.depth == 4);
    for (int lev = 1; lev <= 4; ++lev) {
        const ScheduleEntry& e = s.level(lev);
        CHECK(e.delta < std::ldexp(1.0, -(lev + 5)));
        CHECK(e.u < e.v);
        CHECK(e.v <= Kernel::r_cap);
        CHECK(e.lambda_u < pi);
        CHECK(e.n == (long long)std::floor(5.0 * pi / e.lambda_u));
        if (lev > 1) CHECK(e.u > s.level(lev - 1).v);
        CHECK(3.0 * c.eval(e.v) < e.lambda_u);
    }
    ValidationReport rep = validate_schedule(s, k, c);
    CHECK(rep.pass);
    CHECK(rep.min_gating_margin > 0.0);
}

TEST_CASE("theorem1 transfer tails stay within the per-level budget") {
    Schedule s = build_t1();
    Kernel k = Kernel::poisson();
    for (int lev = 1; lev <= s.depth; ++lev)
        CHECK(transfer_tail_bound(s, k, lev) < std::ldexp(1.0, -lev));
}

TEST_CASE("building twice is bit-identical") {
    Schedule a = build_t1();
    Schedule b = build_t1();
    CHECK(schedule_to_json(a) == schedule_to_json(b));
    Schedule a2 = build_t2();
    Schedule b2 = build_t2();
    CHECK(schedule_to_json(a2) == schedule_to_json(b2));
}

TEST_CASE("tampered schedules fail validation") {
    Kernel k = Kernel::poisson();
    ApproachCurve c = ApproachCurve::power(1.0, 0.5);
    // delta_1 = 2^-5 violates the dyadic cap delta_k < 2^-(k+5); the stored
    // certificate is stale but validation re-derives the row from the entry
    {
        Schedule s = build_t1();
        s.entries[0].delta = std::ldexp(1.0, -5);
        ValidationReport rep = validate_schedule(s, k, c);
        bool p9_fails = false;
        for (const CertRow& row : rep.rows)
            if (row.name == "p9_delta_dyadic_cap" && row.k == 1 && row.margin() <= 0.0)
                p9_fails = true;
        CHECK(p9_fails);
        CHECK(!rep.pass);
    }
    // u_1 = 0.5 cannot reach the window mass
    {
        Schedule s = build_t1();
        s.entries[0].u = 0.5;
        s.entries[0].lambda_u = c.eval(0.5);
        ValidationReport rep = validate_schedule(s, k, c);
        bool p8_fails = false;
        for (const CertRow& row : rep.rows)
            if (row.name == "p8_window_mass" && row.k == 1 && row.margin() <= 0.0) p8_fails = true;
        CHECK(p8_fails);
        CHECK(!rep.pass);
    }
}

TEST_CASE("infeasible beta target raises") {
    // under the linear curve the window mass tops out near (2/pi) atan(delta),
    // far below 0.9-level targets
    BuildOptions opt;
    opt.variant = Variant::theorem1;
    opt.depth = 2;
    opt.beta_target = 0.9;
    CHECK_THROWS_AS(build_schedule(Kernel::poisson(), ApproachCurve::linear(1.0), opt), error);
}

TEST_CASE("theorem1 depth beyond the radius cap raises") {
    BuildOptions opt;
    opt.variant = Variant::theorem1;
    opt.depth = 5;
    opt.beta_target = 0.98;
    CHECK_THROWS_AS(build_schedule(Kernel::poisson(), ApproachCurve::power(1.0, 0.5), opt), error);
}

TEST_CASE("fejer is rejected for schedules") {
    BuildOptions opt;
    opt.variant = Variant::theorem1;
    opt.depth = 2;
    CHECK_THROWS_AS(build_schedule(Kernel::fejer(), ApproachCurve::power(1.0, 0.5), opt), error);
}

TEST_CASE("theorem2 schedule: carriers plus a full working level") {
    Kernel k = Kernel::poisson();
    ApproachCurve c = ApproachCurve::power(1.0, 0.5);
    Schedule s = build_t2();
    REQUIRE(s.depth == 5);
    for (int lev = 1; lev < 5; ++lev) {
        CHECK(s.level(lev).carrier);
        CHECK(s.level(lev).delta < std::ldexp(1.0, -(lev + 5)));
    }
    const ScheduleEntry& w = s.level(5);
    CHECK(!w.carrier);
    CHECK(w.n == (long long)std::floor(6.0 * pi / w.lambda_u));
    // working level reaches the beta=1 window mass
    double mass = k.mass(w.u, -w.delta * w.lambda_u, w.delta * w.lambda_u);
    CHECK(mass > 1.0 - std::ldexp(1.0, -5));
    ValidationReport rep = validate_schedule(s, k, c);
    CHECK(rep.pass);
    // the sup-form rows are retained as diagnostics and genuinely fail at depth
    bool saw_sup_diag = false;
    for (const CertRow& row : rep.rows)
        if (row.name == "p2_sup_grid_edge" && row.k == 5) {
            CHECK(!row.gating);
            CHECK(row.margin() < 0.0);
            saw_sup_diag = true;
        }
    CHECK(saw_sup_diag);
}

TEST_CASE("schedule JSON round-trips") {
    Schedule s = build_t1();
    Schedule back = schedule_from_json(schedule_to_json(s));
    CHECK(schedule_to_json(back) == schedule_to_json(s));
    Schedule s2 = build_t2();
    Schedule back2 = schedule_from_json(schedule_to_json(s2));
    CHECK(back2.product().depth() == 5);
}

TEST_CASE("build_sets follows the alternating recursion") {
    Schedule s = build_t1();
    SetSequence seq = build_sets(s);
    REQUIRE(seq.depth() == 4);
    // E_1 = U_1
    CHECK(sym_diff_measure(seq.set(1), seq.comb(1)) == doctest::Approx(0.0));
    for (int k = 2; k <= 4; ++k) {
        if (k % 2 == 0) {
            // even: E_k disjoint from U_k
            CHECK(intersect(seq.set(k), seq.comb(k)).measure() == doctest::Approx(0.0));
        } else {
            // odd: U_k inside E_k
            CHECK(subtract(seq.comb(k), seq.set(k)).measure() == doctest::Approx(0.0));
        }
    }
    // |E_K sym E_k| <= sum_{j>k} |U_j| = sum 10 pi delta_j
    for (int k = 1; k < 4; ++k) {
        double bound = 0.0;
        for (int j = k + 1; j <= 4; ++j) bound += 10.0 * pi * s.level(j).delta;
        CHECK(sym_diff_measure(seq.final_set(), seq.set(k)) <= bound + 1e-12);
    }
    // sets variant guard
    Schedule s2 = build_t2();
    CHECK_THROWS_AS(build_sets(s2), error);
}
