// Exercises the shared-library surface the CLI builds on: handle lifecycles,
// JSON wire formats, error reporting, and one end-to-end theorem1 run.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "tandiv/tandiv.h"

static int failures = 0;

#define REQUIRE_C(cond)                                                   \
    do {                                                                  \
        if (!(cond)) {                                                    \
            std::fprintf(stderr, "[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                   \
        }                                                                 \
    } while (0)

static std::string take(char* s) {
    std::string out = s ? s : "";
    tandiv_string_free(s);
    return out;
}

int main() {
    REQUIRE_C(std::strlen(tandiv_version()) > 0);

    /* error paths surface a status and a message */
    tandiv_kernel* bad = nullptr;
    REQUIRE_C(tandiv_kernel_create("{\"family\":\"nope\"}", &bad) == TANDIV_ERR_PARSE);
    REQUIRE_C(std::strlen(tandiv_last_error()) > 0);
    REQUIRE_C(tandiv_kernel_create(nullptr, &bad) == TANDIV_ERR_INVALID_ARGUMENT);

    tandiv_kernel* kernel = nullptr;
    REQUIRE_C(tandiv_kernel_create("{\"family\":\"poisson\"}", &kernel) == TANDIV_OK);
    tandiv_curve* curve = nullptr;
    REQUIRE_C(tandiv_curve_create("{\"family\":\"power\",\"c\":1.0,\"alpha\":0.5}", &curve) ==
              TANDIV_OK);

    double val = 0.0;
    REQUIRE_C(tandiv_kernel_mass(kernel, 0.9, -3.141592653589793, 3.141592653589793, &val) ==
              TANDIV_OK);
    REQUIRE_C(std::fabs(val - 1.0) < 1e-9);
    REQUIRE_C(tandiv_kernel_density(kernel, 1.5, 0.0, &val) == TANDIV_ERR_DOMAIN);

    REQUIRE_C(tandiv_curve_eval(curve, 0.75, &val) == TANDIV_OK);
    REQUIRE_C(std::fabs(val - 0.5) < 1e-12);
    REQUIRE_C(tandiv_curve_solve_radius(curve, 0.5, 0.0, 1.0, &val) == TANDIV_OK);
    REQUIRE_C(std::fabs(val - 0.75) < 1e-10);
    REQUIRE_C(tandiv_curve_solve_radius(curve, 99.0, 0.5, 0.9, &val) == TANDIV_ERR_NO_BRACKET);

    /* sets */
    tandiv_set* comb = nullptr;
    REQUIRE_C(tandiv_set_comb(2, 0.5, &comb) == TANDIV_OK);
    REQUIRE_C(tandiv_set_measure(comb, &val) == TANDIV_OK);
    REQUIRE_C(std::fabs(val - 3.141592653589793) < 1e-12);
    int inside = 0;
    REQUIRE_C(tandiv_set_contains(comb, 0.0, &inside) == TANDIV_OK);
    REQUIRE_C(inside == 1);
    std::string comb_json;
    {
        char* text = nullptr;
        REQUIRE_C(tandiv_set_to_json(comb, &text) == TANDIV_OK);
        comb_json = take(text);
    }
    tandiv_set* parsed = nullptr;
    REQUIRE_C(tandiv_set_create(comb_json.c_str(), &parsed) == TANDIV_OK);
    REQUIRE_C(tandiv_set_sym_diff_measure(comb, parsed, &val) == TANDIV_OK);
    REQUIRE_C(val < 1e-12);
    tandiv_set* dbad = nullptr;
    REQUIRE_C(tandiv_set_comb(4, 1.5, &dbad) == TANDIV_ERR_INVALID_ARGUMENT);

    /* beta */
    char* beta_json = nullptr;
    char* beta_csv = nullptr;
    REQUIRE_C(tandiv_estimate_beta(kernel, curve, "", &beta_json, &beta_csv) == TANDIV_OK);
    std::string bj = take(beta_json);
    REQUIRE_C(bj.find("\"value\"") != std::string::npos);
    REQUIRE_C(take(beta_csv).rfind("delta,r,inner_mass", 0) == 0);

    /* schedule -> sets -> sweep, end to end */
    tandiv_schedule* sched = nullptr;
    REQUIRE_C(tandiv_schedule_build(
                  kernel, curve,
                  "{\"variant\":\"theorem1\",\"depth\":4,\"beta_target\":0.98}", &sched) ==
              TANDIV_OK);
    int depth = 0;
    REQUIRE_C(tandiv_schedule_depth(sched, &depth) == TANDIV_OK && depth == 4);
    double delta = 0, u = 0, v = 0;
    long long n = 0;
    REQUIRE_C(tandiv_schedule_entry(sched, 1, &delta, &u, &v, &n) == TANDIV_OK);
    REQUIRE_C(delta > 0 && u < v && n > 0);
    int pass = 0;
    char* report = nullptr;
    REQUIRE_C(tandiv_schedule_validate(sched, kernel, curve, &pass, &report) == TANDIV_OK);
    REQUIRE_C(pass == 1);
    REQUIRE_C(take(report).find("rows") != std::string::npos);

    tandiv_sets* sets = nullptr;
    REQUIRE_C(tandiv_sets_build(sched, &sets) == TANDIV_OK);
    tandiv_set* e1 = nullptr;
    REQUIRE_C(tandiv_sets_level(sets, 1, &e1) == TANDIV_OK);
    REQUIRE_C(tandiv_set_measure(e1, &val) == TANDIV_OK && val > 0.0);

    double phi = 0.0;
    REQUIRE_C(tandiv_phi_indicator(kernel, 0.999, 0.2, e1, &phi) == TANDIV_OK);
    REQUIRE_C(phi >= 0.0 && phi <= 1.0);

    char* csv = nullptr;
    char* summary = nullptr;
    REQUIRE_C(tandiv_sweep_theorem1(kernel, curve, sched, sets,
                                    "{\"samples\":3,\"seed\":42}", &csv, &summary) == TANDIV_OK);
    std::string sum = take(summary);
    REQUIRE_C(sum.find("\"violations\": 0") != std::string::npos);
    REQUIRE_C(take(csv).rfind("x_index,", 0) == 0);

    char* trace = nullptr;
    REQUIRE_C(tandiv_theorem1_trace(kernel, curve, sched, sets, 0.3, &trace) == TANDIV_OK);
    REQUIRE_C(take(trace).find("\"records\"") != std::string::npos);

    /* factor evaluation and the lemma report */
    double re = 0, im = 0;
    REQUIRE_C(tandiv_factor_eval(16, 1e-4, 0.0, &re, &im) == TANDIV_OK);
    REQUIRE_C(std::fabs(re + 1.0) < 1e-12 && std::fabs(im) < 1e-12);
    char* lemma = nullptr;
    REQUIRE_C(tandiv_verify_lemma1(16, 1e-4, 32, &lemma) == TANDIV_OK);
    REQUIRE_C(take(lemma).find("\"pass\": true") != std::string::npos);

    tandiv_set_free(e1);
    tandiv_sets_free(sets);
    tandiv_schedule_free(sched);
    tandiv_set_free(comb);
    tandiv_set_free(parsed);
    tandiv_curve_free(curve);
    tandiv_kernel_free(kernel);

    if (failures) {
        std::fprintf(stderr, "%d C API check(s) failed\n", failures);
        return 1;
    }
    std::printf("C API checks passed\n");
    return 0;
}
