#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tandiv/error.hpp"
#include "tandiv/transform.hpp"

using namespace tandiv;

namespace {

IntervalUnion random_union(oracles::Rng& rng, int max_arcs = 6) {
    std::vector<Arc> arcs;
    int n = 1 + (int)(rng.uniform() * max_arcs);
    for (int i = 0; i < n; ++i) {
        double lo = rng.uniform(-pi, pi);
        arcs.push_back({lo, lo + rng.uniform(0.0, 1.0)});
    }
    return IntervalUnion::from_arcs(std::move(arcs));
}

} // namespace

TEST_CASE("phi_indicator endpoints") {
    Kernel k = Kernel::poisson();
    CHECK(phi_indicator(k, 0.9, 0.3, IntervalUnion::full_circle()) == doctest::Approx(1.0));
    CHECK(phi_indicator(k, 0.9, 0.3, IntervalUnion::empty()) == 0.0);
}

TEST_CASE("phi_indicator agrees with a Riemann oracle") {
    Kernel k = Kernel::poisson();
    oracles::Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        IntervalUnion E = random_union(rng);
        double x = rng.uniform(-pi, pi);
        double got = phi_indicator(k, 0.99, x, E);
        double want = oracles::riemann_phi(
            [&](double t) { return oracles::poisson_density(0.99, t); }, x, E, 1000000);
        CHECK(std::abs(got - want) < 1e-6);
    }
}

TEST_CASE("complementarity, translation covariance, additivity") {
    Kernel k = Kernel::poisson();
    oracles::Rng rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        IntervalUnion E = random_union(rng);
        double r = rng.uniform(0.2, 0.999);
        double x = rng.uniform(-pi, pi);
        double s = rng.uniform(-pi, pi);
        double a = phi_indicator(k, r, x, E);
        CHECK(a + phi_indicator(k, r, x, complement(E)) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(phi_indicator(k, r, x + s, shift(E, s)) == doctest::Approx(a).epsilon(1e-10));
        IntervalUnion F = random_union(rng);
        IntervalUnion Fdisj = subtract(F, E);
        CHECK(phi_indicator(k, r, x, unite(E, Fdisj)) ==
              doctest::Approx(a + phi_indicator(k, r, x, Fdisj)).epsilon(1e-10));
    }
}

TEST_CASE("phi_complex basics") {
    Kernel k = Kernel::poisson();
    BlaschkeProduct empty;
    auto one = phi_complex(k, 0.9, 0.7, empty);
    CHECK(std::abs(one - std::complex<double>(1.0, 0.0)) < 1e-12);

    BlaschkeProduct B({{16, 1e-3}, {128, 1e-4}});
    oracles::Rng rng(37);
    for (int trial = 0; trial < 5; ++trial) {
        double r = rng.uniform(0.3, 0.999);
        double x = rng.uniform(-pi, pi);
        auto v = phi_complex(k, r, x, B);
        CHECK(std::abs(v) <= 1.0 + 1e-9);
    }
}

TEST_CASE("phi_complex agrees with a uniform-grid oracle at moderate r") {
    // delta = 1e-3 keeps the innermost factor swing (width sqrt(delta)/n)
    // an order of magnitude above the oracle's grid step
    Kernel k = Kernel::poisson();
    BlaschkeProduct B({{64, 1e-3}, {4096, 1e-3}});
    double r = 0.999, x = 0.4;
    auto got = phi_complex(k, r, x, B);
    auto want = oracles::riemann_phi_complex(
        [&](double t) { return oracles::poisson_density(r, t); },
        [&](double t) { return B.eval(t); }, x, 1u << 23);
    CHECK(std::abs(got - want) < 1e-6);
}

TEST_CASE("phi_complex enforces its domain and budget") {
    Kernel k = Kernel::poisson();
    BlaschkeProduct B({{64, 1e-3}});
    CHECK_THROWS_AS(phi_complex(k, 1.0 - 1e-13, 0.0, B), error); // beyond the r cap
    PhiComplexOptions tiny;
    tiny.tol = 1e-10;
    tiny.panel_budget = 8; // cannot possibly converge
    CHECK_THROWS_AS(phi_complex(k, 0.9999, 0.0, B, tiny), error);
}

TEST_CASE("indicator path reaches radii the complex path cannot") {
    Kernel k = Kernel::poisson();
    IntervalUnion E = comb_set(8, 0.25);
    double r = 1.0 - 1e-11;
    double v = phi_indicator(k, r, 0.0, E);
    // the kernel concentrates inside the arc at 0, so the value is near 1
    CHECK(v > 0.99);
    CHECK(v <= 1.0);
}
