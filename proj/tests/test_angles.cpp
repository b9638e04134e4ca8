#include <doctest.h>

#include <initializer_list>

#include <cmath>

#include "tandiv/angles.hpp"

using namespace tandiv;

TEST_CASE("wrap_angle lands in [-pi, pi)") {
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(pi) == doctest::Approx(-pi));
    CHECK(wrap_angle(-pi) == doctest::Approx(-pi));
    CHECK(wrap_angle(3.0 * pi) == doctest::Approx(-pi));
    CHECK(wrap_angle(two_pi + 0.5) == doctest::Approx(0.5));
    for (double x : {1e6, -1e6, 12345.678}) {
        double w = wrap_angle(x);
        CHECK(w >= -pi);
        CHECK(w < pi);
        CHECK(std::abs(std::sin(w) - std::sin(x)) < 1e-9);
    }
}

TEST_CASE("reduce_multiple matches long-double reference for large n") {
    long double tp = 6.28318530717958647692528676655900577L;
    for (long long n : {7LL, 1000LL, 100003LL, 4117748LL}) {
        for (double x : {0.1, -2.5, 3.14159, 0.7071067811865476}) {
            double got = reduce_multiple(n, x);
            long double ref = std::fmod((long double)n * (long double)x, tp);
            if (ref >= tp / 2) ref -= tp;
            if (ref < -tp / 2) ref += tp;
            long double diff = std::fabs((long double)got - ref);
            diff = std::min(diff, std::fabs(diff - tp)); // same point on the circle
            CHECK((double)diff < 1e-9);
        }
    }
}

TEST_CASE("reduce_multiple is exact at comb points") {
    // x = 2 pi j / n must map to ~0 for the factor algebra to hit -1 exactly
    long long n = 100003;
    for (long long j : {1LL, 37LL, 50001LL, 100002LL}) {
        double x = two_pi * (double)j / (double)n;
        CHECK(std::abs(reduce_multiple(n, x)) < 5e-10);
    }
}
