#pragma once

#include <complex>
#include <vector>

namespace tandiv {

// Degree-n factor b(n, delta, z) = (z^n - rho^n)/(rho^n z^n - 1) on |z| = 1,
// rho = exp(-sqrt(delta)/n). Exactly -1 at the comb points 2*pi*j/n and
// exactly +1 at the midpoints (2j+1)*pi/n.
struct BlaschkeFactor {
    long long n = 1;
    double delta = 0.0;

    // rho^n = exp(-sqrt(delta)), evaluated directly; never pow(rho, n).
    double rho_n() const;
    double one_minus_rho_n() const; // computed via expm1 to keep precision for tiny delta

    // sup over the circle of |d/dx b(e^{ix})| = n (1 + rho^n)/(1 - rho^n).
    double lipschitz() const;
};

std::complex<double> factor_eval(const BlaschkeFactor& f, double x);

class BlaschkeProduct {
public:
    BlaschkeProduct() = default;
    explicit BlaschkeProduct(std::vector<BlaschkeFactor> factors) : factors_(std::move(factors)) {}

    const std::vector<BlaschkeFactor>& factors() const { return factors_; }
    std::size_t depth() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    // Product over factors; 1 for the empty product.
    std::complex<double> eval(double x) const;

    // Partial product of the first k factors.
    std::complex<double> eval_prefix(std::size_t k, double x) const;

    // Sum of the factor Lipschitz constants; an upper bound for |B'|.
    double lipschitz_bound() const;

    BlaschkeProduct prefix(std::size_t k) const;

private:
    std::vector<BlaschkeFactor> factors_;
};

struct Lemma1Report {
    long long n = 0;
    double delta = 0.0;
    double max_plus_dev = 0.0;  // max |b + 1| over a grid of U(n, delta)
    double max_minus_dev = 0.0; // max |b - 1| over a grid of T \ U(n, delta^{1/4})
    double bound_plus = 0.0;    // 8 e pi sqrt(delta)
    double bound_minus = 0.0;   // 8 e pi delta^{1/4}
    bool pass = false;
};

// Grid check of the two-sided factor bounds. Requires delta <= (pi/8)^4 so
// the minus-side denominator pi delta^{1/4}/2 - 2 sqrt(delta) stays positive.
Lemma1Report verify_lemma1(long long n, double delta, int grid_density);

// Grid upper estimate of sup_{|x-x'|<h} |B(x)-B(x')|, inflated by a
// first-order derivative correction for the grid spacing.
double modulus_of_continuity(const BlaschkeProduct& B, double h, int grid_density = 16);

inline constexpr double lemma1_constant = 8.0 * 2.718281828459045235360287 * 3.141592653589793238462643;
inline constexpr double lemma1_delta_cap = 0.023796696280839522; // (pi/8)^4

} // namespace tandiv
