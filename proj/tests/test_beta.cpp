#include <doctest.h>

#include <initializer_list>

#include <cmath>

#include "tandiv/angles.hpp"
#include "tandiv/beta.hpp"

using namespace tandiv;

TEST_CASE("inner_mass box algebra") {
    Kernel box = Kernel::box();
    ApproachCurve lin = ApproachCurve::linear(1.0);
    // window delta(1-r) inside the support (1-r): mass is exactly delta
    for (double r : {0.5, 0.9, 0.999})
        for (double d : {0.1, 0.5, 0.9})
            CHECK(inner_mass(box, lin, d, r) == doctest::Approx(d).epsilon(1e-12));

    // power curve: near 1 the window exceeds the support, mass saturates at 1
    ApproachCurve half = ApproachCurve::power(1.0, 0.5);
    CHECK(inner_mass(box, half, 0.5, 1.0 - 1e-8) == doctest::Approx(1.0));
}

TEST_CASE("poisson + linear inner mass approaches (2/pi) atan(c delta)") {
    Kernel p = Kernel::poisson();
    for (double c : {1.0, 2.0}) {
        ApproachCurve lin = ApproachCurve::linear(c);
        for (double d : {0.1, 0.01}) {
            double got = inner_mass(p, lin, d, 1.0 - 1e-8);
            double want = (2.0 / pi) * std::atan(c * d);
            CHECK(std::abs(got - want) < 1e-4);
        }
    }
}

TEST_CASE("inner_mass monotone in delta") {
    Kernel p = Kernel::poisson();
    ApproachCurve half = ApproachCurve::power(1.0, 0.5);
    double prev = 0.0;
    for (double d = 0.01; d <= 1.0; d *= 2.0) {
        double m = inner_mass(p, half, d, 0.999);
        CHECK(m >= prev);
        CHECK(m <= 1.0);
        prev = m;
    }
}

TEST_CASE("estimate_beta: poisson + power(1/2) is near 1, + linear is near 0") {
    Kernel p = Kernel::poisson();
    BetaEstimate hi = estimate_beta(p, ApproachCurve::power(1.0, 0.5));
    CHECK(hi.value >= 0.99);
    BetaEstimate lo = estimate_beta(p, ApproachCurve::linear(1.0));
    CHECK(lo.value <= 0.05);
}

TEST_CASE("estimate_beta: box + power(1/2) saturates exactly") {
    BetaEstimate est = estimate_beta(Kernel::box(), ApproachCurve::power(1.0, 0.5));
    CHECK(est.value == doctest::Approx(1.0));
}

TEST_CASE("per-delta liminf proxies match the analytic linear-curve limit") {
    Kernel p = Kernel::poisson();
    ApproachCurve lin = ApproachCurve::linear(1.0);
    BetaOptions opt;
    opt.deltas = {0.1, 0.01};
    BetaEstimate est = estimate_beta(p, lin, opt);
    REQUIRE(est.inner_liminf.size() == 2);
    CHECK(std::abs(est.inner_liminf[0] - (2.0 / pi) * std::atan(0.1)) < 1e-3);
    CHECK(std::abs(est.inner_liminf[1] - (2.0 / pi) * std::atan(0.01)) < 1e-3);
}

TEST_CASE("estimate structure invariants") {
    Kernel p = Kernel::poisson();
    BetaEstimate est = estimate_beta(p, ApproachCurve::power(1.0, 0.5));
    CHECK(est.value <= 1.0);
    // the value is the max over the smaller-delta half
    std::size_t half = est.deltas.size() / 2;
    for (std::size_t di = half; di < est.deltas.size(); ++di)
        CHECK(est.value >= est.inner_liminf[di]);
    for (double v : est.inner_liminf) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    CHECK(est.table.size() == est.deltas.size() * est.r_grid.size());
}
