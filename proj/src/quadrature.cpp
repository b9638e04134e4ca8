#include "tandiv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "tandiv/error.hpp"

namespace tandiv {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
const double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct PanelResult {
    T value;
    double err;
};

template <typename T, typename F>
PanelResult<T> gk15(const F& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fc = f(c);
    T resk = wgk[7] * fc;
    T resg = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double t = h * xgk[j];
        T f1 = f(c - t), f2 = f(c + t);
        resk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    resk *= h;
    resg *= h;
    double diff = std::abs(resk - resg);
    // standard QUADPACK-style error inflation
    double err = diff;
    if (diff > 0.0) err = std::min(diff, 200.0 * diff * std::sqrt(200.0 * diff));
    return {resk, err};
}

template <typename T, typename F>
T run(const F& f, double a, double b, const std::vector<double>& split_points,
      const QuadOptions& opt) {
    require(b >= a, errc::invalid_argument, "integrate: b < a");
    if (a == b) return T{};
    std::vector<double> cuts{a, b};
    for (double s : split_points)
        if (s > a && s < b) cuts.push_back(s);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    struct Panel {
        double a, b, err;
        T val;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    std::priority_queue<Panel> heap;
    std::size_t panels = 0;
    T total{};
    double total_err = 0.0;

    auto push = [&](double lo, double hi) {
        // honor the width cap inside the oscillatory window
        if (opt.width_cap > 0.0 && hi - lo > opt.width_cap && lo < opt.osc_hi && hi > opt.osc_lo) {
            std::size_t pieces = (std::size_t)std::ceil((hi - lo) / opt.width_cap);
            pieces = std::min<std::size_t>(pieces, opt.max_panels);
            for (std::size_t i = 0; i < pieces; ++i) {
                double x0 = lo + (hi - lo) * (double)i / (double)pieces;
                double x1 = lo + (hi - lo) * (double)(i + 1) / (double)pieces;
                auto r = gk15<T>(f, x0, x1);
                heap.push({x0, x1, r.err, r.value});
                total += r.value;
                total_err += r.err;
                ++panels;
            }
            return;
        }
        auto r = gk15<T>(f, lo, hi);
        heap.push({lo, hi, r.err, r.value});
        total += r.value;
        total_err += r.err;
        ++panels;
    };

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) push(cuts[i], cuts[i + 1]);

    while (total_err > opt.abs_tol && !heap.empty()) {
        if (panels >= opt.max_panels)
            fail(errc::tolerance_not_met,
                 "integrate: panel budget exhausted before reaching tolerance");
        Panel p = heap.top();
        heap.pop();
        double w = p.b - p.a;
        if (w < 16.0 * std::numeric_limits<double>::epsilon() * (std::abs(p.a) + 1.0))
            fail(errc::tolerance_not_met, "integrate: panel width underflow");
        total -= p.val;
        total_err -= p.err;
        double m = 0.5 * (p.a + p.b);
        push(p.a, m);
        push(m, p.b);
    }
    // final tally in deterministic (sorted) order
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    T sum{};
    for (const Panel& p : all) sum += p.val;
    return sum;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& split_points, const QuadOptions& opt) {
    return run<double>(f, a, b, split_points, opt);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b,
                                       const std::vector<double>& split_points,
                                       const QuadOptions& opt) {
    return run<std::complex<double>>(f, a, b, split_points, opt);
}

} // namespace tandiv
