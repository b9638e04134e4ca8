#include "tandiv/tandiv.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "tandiv/beta.hpp"
#include "tandiv/blaschke.hpp"
#include "tandiv/circle_set.hpp"
#include "tandiv/config.hpp"
#include "tandiv/curve.hpp"
#include "tandiv/error.hpp"
#include "tandiv/experiment.hpp"
#include "tandiv/json_io.hpp"
#include "tandiv/kernel.hpp"
#include "tandiv/schedule.hpp"
#include "tandiv/set_sequence.hpp"
#include "tandiv/transform.hpp"

using nlohmann::json;

struct tandiv_kernel {
    tandiv::Kernel impl;
};
struct tandiv_curve {
    tandiv::ApproachCurve impl;
};
struct tandiv_set {
    tandiv::IntervalUnion impl;
};
struct tandiv_schedule {
    tandiv::Schedule impl;
};
struct tandiv_sets {
    tandiv::SetSequence impl;
};
struct tandiv_product {
    tandiv::BlaschkeProduct impl;
};

namespace {

thread_local std::string g_last_error;

tandiv_status status_of(tandiv::errc code) {
    using tandiv::errc;
    switch (code) {
        case errc::invalid_argument: return TANDIV_ERR_INVALID_ARGUMENT;
        case errc::domain: return TANDIV_ERR_DOMAIN;
        case errc::tolerance_not_met: return TANDIV_ERR_TOLERANCE;
        case errc::infeasible: return TANDIV_ERR_INFEASIBLE;
        case errc::no_bracket: return TANDIV_ERR_NO_BRACKET;
        case errc::parse: return TANDIV_ERR_PARSE;
        case errc::io: return TANDIV_ERR_IO;
        case errc::internal: return TANDIV_ERR_INTERNAL;
    }
    return TANDIV_ERR_INTERNAL;
}

template <typename Fn>
tandiv_status guarded(Fn&& fn) {
    try {
        fn();
        return TANDIV_OK;
    } catch (const tandiv::error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TANDIV_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TANDIV_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void check_out(const void* p) {
    tandiv::require(p != nullptr, tandiv::errc::invalid_argument, "null out-parameter");
}

void check_in(const void* p, const char* what) {
    tandiv::require(p != nullptr, tandiv::errc::invalid_argument,
                    std::string("null argument: ") + what);
}

tandiv::SweepConfig sweep_config_from_json(const char* text) {
    tandiv::SweepConfig cfg;
    if (!text || !*text) return cfg;
    json j = json::parse(text, nullptr, false);
    tandiv::require(!j.is_discarded(), tandiv::errc::parse, "sweep config: malformed JSON");
    cfg.samples = j.value("samples", cfg.samples);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.k_level = j.value("k_level", cfg.k_level);
    cfg.phi_tol = j.value("phi_tol", cfg.phi_tol);
    return cfg;
}

json summary_to_json(const tandiv::SweepSummary& sum) {
    return json{{"variant", tandiv::variant_name(sum.variant)},
                {"samples", sum.samples},
                {"seed", sum.seed},
                {"violations", sum.violations},
                {"min_gap", sum.min_gap},
                {"max_anchor_dev", sum.max_anchor_dev},
                {"zone_hits", sum.zone_hits}};
}

json t2_to_json(const tandiv::T2Result& res) {
    return json{{"x", res.x},
                {"k_level", res.k_level},
                {"j0", res.j0},
                {"target", res.target},
                {"target2", res.target2},
                {"r_prime", res.r_prime},
                {"r_second", res.r_second},
                {"phi_prime", {res.phi_prime.real(), res.phi_prime.imag()}},
                {"phi_second", {res.phi_second.real(), res.phi_second.imag()}},
                {"anchor", {res.anchor.real(), res.anchor.imag()}},
                {"anchor_dev1", res.anchor_dev1},
                {"anchor_dev2", res.anchor_dev2},
                {"anchor_bound", res.anchor_bound},
                {"gap", res.gap},
                {"gap_bound", res.gap_bound},
                {"gap_bound_active", res.gap_bound_active},
                {"transfer_dev", res.transfer_dev},
                {"zones_clear", res.zones_clear},
                {"violations", res.violations}};
}

} // namespace

extern "C" {

const char* tandiv_version(void) { return "0.1.0"; }
const char* tandiv_config_schema_version(void) { return tandiv::config_schema_version; }

const char* tandiv_last_error(void) { return g_last_error.c_str(); }

void tandiv_string_free(char* s) { delete[] s; }

/* ---- kernels ---- */

tandiv_status tandiv_kernel_create(const char* text, tandiv_kernel** out) {
    return guarded([&] {
        check_in(text, "json");
        check_out(out);
        *out = new tandiv_kernel{tandiv::kernel_from_json(text)};
    });
}

void tandiv_kernel_free(tandiv_kernel* k) { delete k; }

tandiv_status tandiv_kernel_to_json(const tandiv_kernel* k, char** out) {
    return guarded([&] {
        check_in(k, "kernel");
        check_out(out);
        *out = dup_string(tandiv::kernel_to_json(k->impl));
    });
}

tandiv_status tandiv_kernel_density(const tandiv_kernel* k, double r, double t, double* out) {
    return guarded([&] {
        check_in(k, "kernel");
        check_out(out);
        *out = k->impl.density(r, t);
    });
}

tandiv_status tandiv_kernel_mass(const tandiv_kernel* k, double r, double a, double b,
                                 double* out) {
    return guarded([&] {
        check_in(k, "kernel");
        check_out(out);
        *out = k->impl.mass(r, a, b);
    });
}

tandiv_status tandiv_kernel_worst_mass(const tandiv_kernel* k, double r, double m, double* out) {
    return guarded([&] {
        check_in(k, "kernel");
        check_out(out);
        *out = k->impl.worst_mass(r, m);
    });
}

tandiv_status tandiv_kernel_abs_continuity_threshold(const tandiv_kernel* k, double eps,
                                                     double tau, double* out) {
    return guarded([&] {
        check_in(k, "kernel");
        check_out(out);
        *out = k->impl.abs_continuity_threshold(eps, tau);
    });
}

/* ---- curves ---- */

tandiv_status tandiv_curve_create(const char* text, tandiv_curve** out) {
    return guarded([&] {
        check_in(text, "json");
        check_out(out);
        *out = new tandiv_curve{tandiv::curve_from_json(text)};
    });
}

void tandiv_curve_free(tandiv_curve* c) { delete c; }

tandiv_status tandiv_curve_to_json(const tandiv_curve* c, char** out) {
    return guarded([&] {
        check_in(c, "curve");
        check_out(out);
        *out = dup_string(tandiv::curve_to_json(c->impl));
    });
}

tandiv_status tandiv_curve_eval(const tandiv_curve* c, double r, double* out) {
    return guarded([&] {
        check_in(c, "curve");
        check_out(out);
        *out = c->impl.eval(r);
    });
}

tandiv_status tandiv_curve_tangency_ratio(const tandiv_curve* c, double r, double* out) {
    return guarded([&] {
        check_in(c, "curve");
        check_out(out);
        *out = c->impl.tangency_ratio(r);
    });
}

tandiv_status tandiv_curve_solve_radius(const tandiv_curve* c, double target, double lo, double hi,
                                        double* out) {
    return guarded([&] {
        check_in(c, "curve");
        check_out(out);
        *out = c->impl.solve_radius(target, lo, hi);
    });
}

/* ---- sets ---- */

tandiv_status tandiv_set_create(const char* text, tandiv_set** out) {
    return guarded([&] {
        check_in(text, "json");
        check_out(out);
        *out = new tandiv_set{tandiv::interval_union_from_json(text)};
    });
}

tandiv_status tandiv_set_comb(long long n, double delta, tandiv_set** out) {
    return guarded([&] {
        check_out(out);
        *out = new tandiv_set{tandiv::comb_set((long)n, delta)};
    });
}

void tandiv_set_free(tandiv_set* s) { delete s; }

tandiv_status tandiv_set_to_json(const tandiv_set* s, char** out) {
    return guarded([&] {
        check_in(s, "set");
        check_out(out);
        *out = dup_string(tandiv::interval_union_to_json(s->impl));
    });
}

tandiv_status tandiv_set_measure(const tandiv_set* s, double* out) {
    return guarded([&] {
        check_in(s, "set");
        check_out(out);
        *out = s->impl.measure();
    });
}

tandiv_status tandiv_set_arc_count(const tandiv_set* s, size_t* out) {
    return guarded([&] {
        check_in(s, "set");
        check_out(out);
        *out = s->impl.arc_count();
    });
}

tandiv_status tandiv_set_contains(const tandiv_set* s, double x, int* out) {
    return guarded([&] {
        check_in(s, "set");
        check_out(out);
        *out = s->impl.contains(x) ? 1 : 0;
    });
}

tandiv_status tandiv_set_union(const tandiv_set* a, const tandiv_set* b, tandiv_set** out) {
    return guarded([&] {
        check_in(a, "a");
        check_in(b, "b");
        check_out(out);
        *out = new tandiv_set{tandiv::unite(a->impl, b->impl)};
    });
}

tandiv_status tandiv_set_intersect(const tandiv_set* a, const tandiv_set* b, tandiv_set** out) {
    return guarded([&] {
        check_in(a, "a");
        check_in(b, "b");
        check_out(out);
        *out = new tandiv_set{tandiv::intersect(a->impl, b->impl)};
    });
}

tandiv_status tandiv_set_subtract(const tandiv_set* a, const tandiv_set* b, tandiv_set** out) {
    return guarded([&] {
        check_in(a, "a");
        check_in(b, "b");
        check_out(out);
        *out = new tandiv_set{tandiv::subtract(a->impl, b->impl)};
    });
}

tandiv_status tandiv_set_shift(const tandiv_set* a, double s, tandiv_set** out) {
    return guarded([&] {
        check_in(a, "a");
        check_out(out);
        *out = new tandiv_set{tandiv::shift(a->impl, s)};
    });
}

tandiv_status tandiv_set_sym_diff_measure(const tandiv_set* a, const tandiv_set* b, double* out) {
    return guarded([&] {
        check_in(a, "a");
        check_in(b, "b");
        check_out(out);
        *out = tandiv::sym_diff_measure(a->impl, b->impl);
    });
}

/* ---- beta ---- */

tandiv_status tandiv_inner_mass(const tandiv_kernel* k, const tandiv_curve* c, double delta,
                                double r, double* out) {
    return guarded([&] {
        check_in(k, "kernel");
        check_in(c, "curve");
        check_out(out);
        *out = tandiv::inner_mass(k->impl, c->impl, delta, r);
    });
}

tandiv_status tandiv_estimate_beta(const tandiv_kernel* k, const tandiv_curve* c,
                                   const char* options_json, char** out_json, char** out_csv) {
    return guarded([&] {
        check_in(k, "kernel");
        check_in(c, "curve");
        check_out(out_json);
        tandiv::BetaOptions opt;
        if (options_json && *options_json) {
            json j = json::parse(options_json, nullptr, false);
            tandiv::require(!j.is_discarded(), tandiv::errc::parse,
                            "beta options: malformed JSON");
            if (j.contains("deltas")) opt.deltas = j.at("deltas").get<std::vector<double>>();
            opt.i_lo = j.value("i_lo", opt.i_lo);
            opt.i_hi = j.value("i_hi", opt.i_hi);
        }
        tandiv::BetaEstimate est = tandiv::estimate_beta(k->impl, c->impl, opt);
        *out_json = dup_string(tandiv::beta_to_json(est));
        if (out_csv) {
            std::string csv = "delta,r,inner_mass\n";
            std::size_t nr = est.r_grid.size();
            for (std::size_t di = 0; di < est.deltas.size(); ++di)
                for (std::size_t ri = 0; ri < nr; ++ri)
                    csv += tandiv::format_double(est.deltas[di]) + "," +
                           tandiv::format_double(est.r_grid[ri]) + "," +
                           tandiv::format_double(est.table[di * nr + ri]) + "\n";
            *out_csv = dup_string(csv);
        }
    });
}

/* ---- schedules ---- */

tandiv_status tandiv_schedule_build(const tandiv_kernel* k, const tandiv_curve* c,
                                    const char* options_json, tandiv_schedule** out) {
    return guarded([&] {
        check_in(k, "kernel");
        check_in(c, "curve");
        check_out(out);
        tandiv::BuildOptions opt;
        if (options_json && *options_json) {
            json j = json::parse(options_json, nullptr, false);
            tandiv::require(!j.is_discarded(), tandiv::errc::parse,
                            "schedule options: malformed JSON");
            if (j.contains("variant"))
                opt.variant = tandiv::variant_from_name(j.at("variant").get<std::string>());
            opt.depth = j.value("depth", opt.depth);
            opt.beta_target = j.value("beta_target",
                                      opt.variant == tandiv::Variant::theorem2 ? 1.0 : 0.98);
        }
        *out = new tandiv_schedule{tandiv::build_schedule(k->impl, c->impl, opt)};
    });
}

tandiv_status tandiv_schedule_from_json(const char* text, tandiv_schedule** out) {
    return guarded([&] {
        check_in(text, "json");
        check_out(out);
        *out = new tandiv_schedule{tandiv::schedule_from_json(text)};
    });
}

void tandiv_schedule_free(tandiv_schedule* s) { delete s; }

tandiv_status tandiv_schedule_to_json(const tandiv_schedule* s, char** out) {
    return guarded([&] {
        check_in(s, "schedule");
        check_out(out);
        *out = dup_string(tandiv::schedule_to_json(s->impl));
    });
}

tandiv_status tandiv_schedule_depth(const tandiv_schedule* s, int* out) {
    return guarded([&] {
        check_in(s, "schedule");
        check_out(out);
        *out = s->impl.depth;
    });
}

tandiv_status tandiv_schedule_entry(const tandiv_schedule* s, int k, double* delta, double* u,
                                    double* v, long long* n) {
    return guarded([&] {
        check_in(s, "schedule");
        const tandiv::ScheduleEntry& e = s->impl.level(k);
        if (delta) *delta = e.delta;
        if (u) *u = e.u;
        if (v) *v = e.v;
        if (n) *n = e.n;
    });
}

tandiv_status tandiv_schedule_validate(const tandiv_schedule* s, const tandiv_kernel* k,
                                       const tandiv_curve* c, int* pass, char** report_json) {
    return guarded([&] {
        check_in(s, "schedule");
        check_in(k, "kernel");
        check_in(c, "curve");
        tandiv::ValidationReport rep = tandiv::validate_schedule(s->impl, k->impl, c->impl);
        if (pass) *pass = rep.pass ? 1 : 0;
        if (report_json) *report_json = dup_string(tandiv::validation_to_json(rep));
    });
}

/* ---- counterexample objects ---- */

tandiv_status tandiv_sets_build(const tandiv_schedule* s, tandiv_sets** out) {
    return guarded([&] {
        check_in(s, "schedule");
        check_out(out);
        *out = new tandiv_sets{tandiv::build_sets(s->impl)};
    });
}

void tandiv_sets_free(tandiv_sets* s) { delete s; }

tandiv_status tandiv_sets_depth(const tandiv_sets* s, int* out) {
    return guarded([&] {
        check_in(s, "sets");
        check_out(out);
        *out = s->impl.depth();
    });
}

tandiv_status tandiv_sets_level(const tandiv_sets* s, int k, tandiv_set** out) {
    return guarded([&] {
        check_in(s, "sets");
        check_out(out);
        *out = new tandiv_set{s->impl.set(k)};
    });
}

tandiv_status tandiv_sets_comb(const tandiv_sets* s, int k, tandiv_set** out) {
    return guarded([&] {
        check_in(s, "sets");
        check_out(out);
        *out = new tandiv_set{s->impl.comb(k)};
    });
}

tandiv_status tandiv_sets_to_json(const tandiv_sets* s, char** out) {
    return guarded([&] {
        check_in(s, "sets");
        check_out(out);
        *out = dup_string(tandiv::set_sequence_to_json(s->impl));
    });
}

tandiv_status tandiv_product_build(const tandiv_schedule* s, tandiv_product** out) {
    return guarded([&] {
        check_in(s, "schedule");
        check_out(out);
        *out = new tandiv_product{s->impl.product()};
    });
}

tandiv_status tandiv_product_from_json(const char* text, tandiv_product** out) {
    return guarded([&] {
        check_in(text, "json");
        check_out(out);
        *out = new tandiv_product{tandiv::product_from_json(text)};
    });
}

void tandiv_product_free(tandiv_product* b) { delete b; }

tandiv_status tandiv_product_to_json(const tandiv_product* b, char** out) {
    return guarded([&] {
        check_in(b, "product");
        check_out(out);
        *out = dup_string(tandiv::product_to_json(b->impl));
    });
}

tandiv_status tandiv_product_eval(const tandiv_product* b, double x, double* re, double* im) {
    return guarded([&] {
        check_in(b, "product");
        auto v = b->impl.eval(x);
        if (re) *re = v.real();
        if (im) *im = v.imag();
    });
}

tandiv_status tandiv_factor_eval(long long n, double delta, double x, double* re, double* im) {
    return guarded([&] {
        tandiv::require(n >= 1 && delta > 0.0, tandiv::errc::invalid_argument,
                        "factor_eval: need n >= 1 and delta > 0");
        auto v = tandiv::factor_eval({n, delta}, x);
        if (re) *re = v.real();
        if (im) *im = v.imag();
    });
}

tandiv_status tandiv_verify_lemma1(long long n, double delta, int grid_density,
                                   char** report_json) {
    return guarded([&] {
        check_out(report_json);
        tandiv::Lemma1Report rep = tandiv::verify_lemma1(n, delta, grid_density);
        json j{{"n", rep.n},
               {"delta", rep.delta},
               {"max_plus_dev", rep.max_plus_dev},
               {"max_minus_dev", rep.max_minus_dev},
               {"bound_plus", rep.bound_plus},
               {"bound_minus", rep.bound_minus},
               {"pass", rep.pass}};
        *report_json = dup_string(j.dump(2));
    });
}

tandiv_status tandiv_modulus_of_continuity(const tandiv_product* b, double h, int grid_density,
                                           double* out) {
    return guarded([&] {
        check_in(b, "product");
        check_out(out);
        *out = tandiv::modulus_of_continuity(b->impl, h, grid_density);
    });
}

/* ---- the operator ---- */

tandiv_status tandiv_phi_indicator(const tandiv_kernel* k, double r, double x,
                                   const tandiv_set* set, double* out) {
    return guarded([&] {
        check_in(k, "kernel");
        check_in(set, "set");
        check_out(out);
        *out = tandiv::phi_indicator(k->impl, r, x, set->impl);
    });
}

tandiv_status tandiv_phi_complex(const tandiv_kernel* k, double r, double x,
                                 const tandiv_product* b, double tol, double* re, double* im) {
    return guarded([&] {
        check_in(k, "kernel");
        check_in(b, "product");
        tandiv::PhiComplexOptions opt;
        opt.tol = tol;
        auto v = tandiv::phi_complex(k->impl, r, x, b->impl, opt);
        if (re) *re = v.real();
        if (im) *im = v.imag();
    });
}

/* ---- drivers ---- */

tandiv_status tandiv_sweep_theorem1(const tandiv_kernel* k, const tandiv_curve* c,
                                    const tandiv_schedule* s, const tandiv_sets* sets,
                                    const char* config_json, char** out_csv, char** out_summary) {
    return guarded([&] {
        check_in(k, "kernel");
        check_in(c, "curve");
        check_in(s, "schedule");
        check_in(sets, "sets");
        tandiv::SweepConfig cfg = sweep_config_from_json(config_json);
        tandiv::SweepSummary sum =
            tandiv::sweep_theorem1(k->impl, c->impl, s->impl, sets->impl, cfg);
        if (out_csv) *out_csv = dup_string(sum.csv);
        if (out_summary) *out_summary = dup_string(summary_to_json(sum).dump(2));
    });
}

tandiv_status tandiv_sweep_theorem2(const tandiv_kernel* k, const tandiv_curve* c,
                                    const tandiv_schedule* s, const tandiv_product* b,
                                    const char* config_json, char** out_csv, char** out_summary) {
    return guarded([&] {
        check_in(k, "kernel");
        check_in(c, "curve");
        check_in(s, "schedule");
        check_in(b, "product");
        tandiv::SweepConfig cfg = sweep_config_from_json(config_json);
        tandiv::SweepSummary sum = tandiv::sweep_theorem2(k->impl, c->impl, s->impl, b->impl, cfg);
        if (out_csv) *out_csv = dup_string(sum.csv);
        if (out_summary) *out_summary = dup_string(summary_to_json(sum).dump(2));
    });
}

tandiv_status tandiv_theorem1_trace(const tandiv_kernel* k, const tandiv_curve* c,
                                    const tandiv_schedule* s, const tandiv_sets* sets, double x,
                                    char** out_json) {
    return guarded([&] {
        check_in(k, "kernel");
        check_in(c, "curve");
        check_in(s, "schedule");
        check_in(sets, "sets");
        check_out(out_json);
        tandiv::T1Trace tr = tandiv::theorem1_trace(k->impl, c->impl, s->impl, sets->impl, x);
        json recs = json::array();
        for (const auto& rec : tr.records)
            recs.push_back(json{{"k", rec.k},
                                {"j0", rec.j0},
                                {"target", rec.target},
                                {"r", rec.r},
                                {"lambda_r", rec.lambda_r},
                                {"phi", rec.phi},
                                {"bound", rec.bound},
                                {"margin", rec.margin},
                                {"odd", rec.odd}});
        json j{{"x", tr.x},
               {"records", recs},
               {"max_odd_phi", tr.max_odd_phi},
               {"min_even_phi", tr.min_even_phi},
               {"gap", tr.gap},
               {"violations", tr.violations}};
        *out_json = dup_string(j.dump(2));
    });
}

tandiv_status tandiv_theorem2_gap(const tandiv_kernel* k, const tandiv_curve* c,
                                  const tandiv_schedule* s, const tandiv_product* b, double x,
                                  int k_level, double phi_tol, char** out_json) {
    return guarded([&] {
        check_in(k, "kernel");
        check_in(c, "curve");
        check_in(s, "schedule");
        check_in(b, "product");
        check_out(out_json);
        tandiv::T2Result res =
            tandiv::theorem2_gap(k->impl, c->impl, s->impl, b->impl, x, k_level, phi_tol);
        *out_json = dup_string(t2_to_json(res).dump(2));
    });
}

} /* extern "C" */
