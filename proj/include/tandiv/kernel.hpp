#pragma once

#include <map>
#include <mutex>
#include <string>

namespace tandiv {

enum class KernelFamily { poisson, sqrt_poisson, box, fejer };

std::string family_name(KernelFamily f);
KernelFamily family_from_name(const std::string& name);

// Descriptor for the kernel family {phi_r}. Densities are nonnegative with
// unit mass on the circle for every r in (0, r_cap]. Immutable and
// thread-safe; the sqrt_poisson per-r normalizer cache is guarded.
class Kernel {
public:
    explicit Kernel(KernelFamily family) : family_(family) {}
    Kernel(const Kernel& o) : family_(o.family_) {}
    Kernel& operator=(const Kernel& o) {
        family_ = o.family_;
        return *this;
    }

    static Kernel poisson() { return Kernel(KernelFamily::poisson); }
    static Kernel sqrt_poisson() { return Kernel(KernelFamily::sqrt_poisson); }
    static Kernel box() { return Kernel(KernelFamily::box); }
    static Kernel fejer() { return Kernel(KernelFamily::fejer); }

    KernelFamily family() const { return family_; }

    // Even and nonincreasing on [0, pi]; the Fejer family fails this and
    // falls back to sorted-grid estimates where worst-case mass is needed.
    bool unimodal() const { return family_ != KernelFamily::fejer; }

    // phi_r(t), with t reduced mod 2*pi. Requires 0 < r <= r_cap.
    double density(double r, double t) const;

    // Integral of phi_r over [a, b] (interpreted on the circle; b - a <= 2*pi).
    // Closed form for poisson/box, coefficient sum for fejer, adaptive
    // quadrature for sqrt_poisson.
    double mass(double r, double a, double b) const;

    // sup over sets e with |e| = m of the phi_r-mass of e. Centered interval
    // for unimodal families, sorted-grid greedy fill otherwise.
    double worst_mass(double r, double m) const;

    // Largest grid-certified m with sup_{0<r<=tau} worst_mass(r, m) < eps.
    double abs_continuity_threshold(double eps, double tau) const;

    // Kernel mass of the comb U(n, .) with the given arc width, maximized
    // over the comb's position, bounded from above. Requires a unimodal
    // family. This is the transfer-certificate primitive.
    double comb_sup_mass(double r, long n, double arc_width) const;

    static constexpr double r_cap = 1.0 - 1e-12;

private:
    KernelFamily family_;
    double sqrt_normalizer(double r) const;

    mutable std::mutex cache_mutex_;
    mutable std::map<double, double> sqrt_norm_cache_;
};

} // namespace tandiv
