#include "tandiv/blaschke.hpp"

#include <algorithm>
#include <cmath>

#include "tandiv/angles.hpp"
#include "tandiv/error.hpp"

namespace tandiv {

double BlaschkeFactor::rho_n() const { return std::exp(-std::sqrt(delta)); }

double BlaschkeFactor::one_minus_rho_n() const { return -std::expm1(-std::sqrt(delta)); }

double BlaschkeFactor::lipschitz() const {
    double omr = one_minus_rho_n();
    return (double)n * (2.0 - omr) / omr;
}

std::complex<double> factor_eval(const BlaschkeFactor& f, double x) {
    double theta = reduce_multiple(f.n, x);
    double a = f.rho_n();
    double ct = std::cos(theta), st = std::sin(theta);
    std::complex<double> num(ct - a, st);
    std::complex<double> den(a * ct - 1.0, a * st);
    return num / den;
}

std::complex<double> BlaschkeProduct::eval(double x) const { return eval_prefix(factors_.size(), x); }

std::complex<double> BlaschkeProduct::eval_prefix(std::size_t k, double x) const {
    require(k <= factors_.size(), errc::invalid_argument, "eval_prefix: k exceeds depth");
    std::complex<double> p(1.0, 0.0);
    for (std::size_t j = 0; j < k; ++j) p *= factor_eval(factors_[j], x);
    return p;
}

double BlaschkeProduct::lipschitz_bound() const {
    double s = 0.0;
    for (const auto& f : factors_) s += f.lipschitz();
    return s;
}

BlaschkeProduct BlaschkeProduct::prefix(std::size_t k) const {
    require(k <= factors_.size(), errc::invalid_argument, "prefix: k exceeds depth");
    return BlaschkeProduct(std::vector<BlaschkeFactor>(factors_.begin(), factors_.begin() + k));
}

Lemma1Report verify_lemma1(long long n, double delta, int grid_density) {
    require(n >= 1, errc::invalid_argument, "verify_lemma1: n must be >= 1");
    require(delta > 0.0 && delta <= lemma1_delta_cap, errc::invalid_argument,
            "verify_lemma1: delta must lie in (0, (pi/8)^4]; beyond the cap the minus-side "
            "denominator changes sign");
    require(grid_density >= 2, errc::invalid_argument, "verify_lemma1: grid density too small");
    BlaschkeFactor f{n, delta};
    Lemma1Report rep;
    rep.n = n;
    rep.delta = delta;
    rep.bound_plus = lemma1_constant * std::sqrt(delta);
    rep.bound_minus = lemma1_constant * std::pow(delta, 0.25);

    // b depends on x only through n*x mod 2*pi, so one comb period carries all
    // values; a few distant arcs are sampled as well to exercise the angle
    // reduction at large multiples.
    double q25 = std::pow(delta, 0.25);
    std::vector<long long> arcs{0};
    if (n > 2) arcs.push_back(n / 3);
    if (n > 1) arcs.push_back(n - 1);
    double plus = 0.0;
    for (long long j : arcs) {
        double c = two_pi * (double)j / (double)n;
        double h = pi * delta / (double)n;
        for (int i = 0; i <= grid_density; ++i) {
            double x = c - h + 2.0 * h * (double)i / (double)grid_density;
            plus = std::max(plus, std::abs(factor_eval(f, x) + 1.0));
        }
    }
    double minus = 0.0;
    for (long long j : arcs) {
        // the gap between arc j of U(n, delta^{1/4}) and arc j+1
        double lo = (pi * (2.0 * (double)j + q25)) / (double)n;
        double hi = (pi * (2.0 * (double)j + 2.0 - q25)) / (double)n;
        for (int i = 0; i <= grid_density; ++i) {
            double x = lo + (hi - lo) * (double)i / (double)grid_density;
            minus = std::max(minus, std::abs(factor_eval(f, x) - 1.0));
        }
    }
    rep.max_plus_dev = plus;
    rep.max_minus_dev = minus;
    rep.pass = plus <= rep.bound_plus && minus <= rep.bound_minus;
    return rep;
}

double modulus_of_continuity(const BlaschkeProduct& B, double h, int grid_density) {
    require(h > 0.0, errc::invalid_argument, "modulus_of_continuity: h must be positive");
    if (B.empty()) return 0.0;
    double step = h / (double)std::max(2, grid_density);
    const std::size_t max_points = 1 << 22;
    std::size_t points = (std::size_t)std::ceil(two_pi / step);
    if (points > max_points) {
        points = max_points;
        step = two_pi / (double)points;
    }
    std::size_t window = (std::size_t)std::floor(h / step);
    std::vector<std::complex<double>> vals(points);
    for (std::size_t i = 0; i < points; ++i) vals[i] = B.eval(-pi + step * (double)i);
    double sup = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        for (std::size_t d = 1; d <= window; ++d) {
            std::size_t j = i + d < points ? i + d : i + d - points;
            sup = std::max(sup, std::abs(vals[i] - vals[j]));
        }
    }
    // first-order inflation for what the grid can miss between samples
    double correction = 2.0 * B.lipschitz_bound() * step;
    return std::min(2.0, sup + correction);
}

} // namespace tandiv
