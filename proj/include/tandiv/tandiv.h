#ifndef TANDIV_H
#define TANDIV_H

/*
 * C interface to the tandiv library: construction and finite-depth
 * verification of divergence counterexamples for convolution operators
 * sampled along tangential approach curves.
 *
 * All objects are opaque handles created by tandiv_*_create / *_build and
 * released with the matching *_free. Every function returns a status code;
 * results travel through out-parameters. Strings returned through char**
 * are heap-allocated and must be released with tandiv_string_free.
 * tandiv_last_error() describes the most recent failure on this thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TANDIV_API __declspec(dllexport)
#else
#define TANDIV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tandiv_status {
    TANDIV_OK = 0,
    TANDIV_ERR_INVALID_ARGUMENT = 1,
    TANDIV_ERR_DOMAIN = 2,
    TANDIV_ERR_TOLERANCE = 3,
    TANDIV_ERR_INFEASIBLE = 4,
    TANDIV_ERR_NO_BRACKET = 5,
    TANDIV_ERR_PARSE = 6,
    TANDIV_ERR_IO = 7,
    TANDIV_ERR_INTERNAL = 8
} tandiv_status;

typedef struct tandiv_kernel tandiv_kernel;
typedef struct tandiv_curve tandiv_curve;
typedef struct tandiv_set tandiv_set;           /* finite union of circle arcs */
typedef struct tandiv_schedule tandiv_schedule;
typedef struct tandiv_sets tandiv_sets;         /* the sequence E_1..E_K with its combs */
typedef struct tandiv_product tandiv_product;   /* finite Blaschke product */

TANDIV_API const char* tandiv_version(void);
TANDIV_API const char* tandiv_config_schema_version(void);
TANDIV_API const char* tandiv_last_error(void);
TANDIV_API void tandiv_string_free(char* s);

/* ---- kernels ---------------------------------------------------------- */

/* descriptor JSON: {"family": "poisson"|"sqrt_poisson"|"box"|"fejer"} */
TANDIV_API tandiv_status tandiv_kernel_create(const char* json, tandiv_kernel** out);
TANDIV_API void tandiv_kernel_free(tandiv_kernel* k);
TANDIV_API tandiv_status tandiv_kernel_to_json(const tandiv_kernel* k, char** out);
TANDIV_API tandiv_status tandiv_kernel_density(const tandiv_kernel* k, double r, double t,
                                               double* out);
TANDIV_API tandiv_status tandiv_kernel_mass(const tandiv_kernel* k, double r, double a, double b,
                                            double* out);
TANDIV_API tandiv_status tandiv_kernel_worst_mass(const tandiv_kernel* k, double r, double m,
                                                  double* out);
TANDIV_API tandiv_status tandiv_kernel_abs_continuity_threshold(const tandiv_kernel* k,
                                                                double eps, double tau,
                                                                double* out);

/* ---- approach curves --------------------------------------------------- */

/* descriptor JSON: {"family": "power"|"loglinear"|"linear", "c": 1.0, "alpha": 0.5} */
TANDIV_API tandiv_status tandiv_curve_create(const char* json, tandiv_curve** out);
TANDIV_API void tandiv_curve_free(tandiv_curve* c);
TANDIV_API tandiv_status tandiv_curve_to_json(const tandiv_curve* c, char** out);
TANDIV_API tandiv_status tandiv_curve_eval(const tandiv_curve* c, double r, double* out);
TANDIV_API tandiv_status tandiv_curve_tangency_ratio(const tandiv_curve* c, double r, double* out);
TANDIV_API tandiv_status tandiv_curve_solve_radius(const tandiv_curve* c, double target, double lo,
                                                   double hi, double* out);

/* ---- circle sets -------------------------------------------------------- */

/* JSON: [[lo, hi], ...] in radians */
TANDIV_API tandiv_status tandiv_set_create(const char* json, tandiv_set** out);
TANDIV_API tandiv_status tandiv_set_comb(long long n, double delta, tandiv_set** out);
TANDIV_API void tandiv_set_free(tandiv_set* s);
TANDIV_API tandiv_status tandiv_set_to_json(const tandiv_set* s, char** out);
TANDIV_API tandiv_status tandiv_set_measure(const tandiv_set* s, double* out);
TANDIV_API tandiv_status tandiv_set_arc_count(const tandiv_set* s, size_t* out);
TANDIV_API tandiv_status tandiv_set_contains(const tandiv_set* s, double x, int* out);
TANDIV_API tandiv_status tandiv_set_union(const tandiv_set* a, const tandiv_set* b,
                                          tandiv_set** out);
TANDIV_API tandiv_status tandiv_set_intersect(const tandiv_set* a, const tandiv_set* b,
                                              tandiv_set** out);
TANDIV_API tandiv_status tandiv_set_subtract(const tandiv_set* a, const tandiv_set* b,
                                             tandiv_set** out);
TANDIV_API tandiv_status tandiv_set_shift(const tandiv_set* a, double s, tandiv_set** out);
TANDIV_API tandiv_status tandiv_set_sym_diff_measure(const tandiv_set* a, const tandiv_set* b,
                                                     double* out);

/* ---- concentration index ------------------------------------------------ */

TANDIV_API tandiv_status tandiv_inner_mass(const tandiv_kernel* k, const tandiv_curve* c,
                                           double delta, double r, double* out);
/* options JSON (all optional): {"deltas": [...], "i_lo": 4, "i_hi": 40}
 * out_json: the estimate; out_csv: the full (delta, r, inner_mass) table */
TANDIV_API tandiv_status tandiv_estimate_beta(const tandiv_kernel* k, const tandiv_curve* c,
                                              const char* options_json, char** out_json,
                                              char** out_csv);

/* ---- schedules ----------------------------------------------------------- */

/* options JSON: {"variant": "theorem1"|"theorem2", "depth": 4, "beta_target": 0.98} */
TANDIV_API tandiv_status tandiv_schedule_build(const tandiv_kernel* k, const tandiv_curve* c,
                                               const char* options_json, tandiv_schedule** out);
TANDIV_API tandiv_status tandiv_schedule_from_json(const char* json, tandiv_schedule** out);
TANDIV_API void tandiv_schedule_free(tandiv_schedule* s);
TANDIV_API tandiv_status tandiv_schedule_to_json(const tandiv_schedule* s, char** out);
TANDIV_API tandiv_status tandiv_schedule_depth(const tandiv_schedule* s, int* out);
TANDIV_API tandiv_status tandiv_schedule_entry(const tandiv_schedule* s, int k, double* delta,
                                               double* u, double* v, long long* n);
TANDIV_API tandiv_status tandiv_schedule_validate(const tandiv_schedule* s,
                                                  const tandiv_kernel* k, const tandiv_curve* c,
                                                  int* pass, char** report_json);

/* ---- counterexample objects ---------------------------------------------- */

TANDIV_API tandiv_status tandiv_sets_build(const tandiv_schedule* s, tandiv_sets** out);
TANDIV_API void tandiv_sets_free(tandiv_sets* s);
TANDIV_API tandiv_status tandiv_sets_depth(const tandiv_sets* s, int* out);
/* fresh handles; the caller frees them */
TANDIV_API tandiv_status tandiv_sets_level(const tandiv_sets* s, int k, tandiv_set** out);
TANDIV_API tandiv_status tandiv_sets_comb(const tandiv_sets* s, int k, tandiv_set** out);
TANDIV_API tandiv_status tandiv_sets_to_json(const tandiv_sets* s, char** out);

TANDIV_API tandiv_status tandiv_product_build(const tandiv_schedule* s, tandiv_product** out);
TANDIV_API tandiv_status tandiv_product_from_json(const char* json, tandiv_product** out);
TANDIV_API void tandiv_product_free(tandiv_product* b);
TANDIV_API tandiv_status tandiv_product_to_json(const tandiv_product* b, char** out);
TANDIV_API tandiv_status tandiv_product_eval(const tandiv_product* b, double x, double* re,
                                             double* im);
TANDIV_API tandiv_status tandiv_factor_eval(long long n, double delta, double x, double* re,
                                            double* im);
TANDIV_API tandiv_status tandiv_verify_lemma1(long long n, double delta, int grid_density,
                                              char** report_json);
TANDIV_API tandiv_status tandiv_modulus_of_continuity(const tandiv_product* b, double h,
                                                      int grid_density, double* out);

/* ---- the operator --------------------------------------------------------- */

TANDIV_API tandiv_status tandiv_phi_indicator(const tandiv_kernel* k, double r, double x,
                                              const tandiv_set* set, double* out);
TANDIV_API tandiv_status tandiv_phi_complex(const tandiv_kernel* k, double r, double x,
                                            const tandiv_product* b, double tol, double* re,
                                            double* im);

/* ---- theorem-level drivers ------------------------------------------------- */

/* config JSON: {"samples": 100, "seed": 20250808, "k_level": 0, "phi_tol": 1e-8}
 * out_csv: per-x rows; out_summary: JSON with violations / min gap. The
 * status is TANDIV_OK even when bounds fail; inspect the summary. */
TANDIV_API tandiv_status tandiv_sweep_theorem1(const tandiv_kernel* k, const tandiv_curve* c,
                                               const tandiv_schedule* s, const tandiv_sets* sets,
                                               const char* config_json, char** out_csv,
                                               char** out_summary);
TANDIV_API tandiv_status tandiv_sweep_theorem2(const tandiv_kernel* k, const tandiv_curve* c,
                                               const tandiv_schedule* s, const tandiv_product* b,
                                               const char* config_json, char** out_csv,
                                               char** out_summary);
/* single-x traces, JSON-encoded */
TANDIV_API tandiv_status tandiv_theorem1_trace(const tandiv_kernel* k, const tandiv_curve* c,
                                               const tandiv_schedule* s, const tandiv_sets* sets,
                                               double x, char** out_json);
TANDIV_API tandiv_status tandiv_theorem2_gap(const tandiv_kernel* k, const tandiv_curve* c,
                                             const tandiv_schedule* s, const tandiv_product* b,
                                             double x, int k_level, double phi_tol,
                                             char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TANDIV_H */
