/* wallis_enclose: certified two-sided bounds for the Wallis ratio
 * W(x) = Gamma(x+1)/Gamma(x+1/2), the Student density ratio
 * r(p) = Gamma((p+1)/2)/(sqrt(p/2) Gamma(p/2)), and the digamma difference
 * psi(x+1) - psi(x+1/2), with proven relative-error caps that halve per
 * order, three interchangeable evaluation strategies, an extended-precision
 * reference oracle, and rival bound families for convergence comparisons.
 *
 * Every fallible entry point returns a we_status; outputs are written only
 * on WE_OK.  we_last_error() returns a thread-local message describing the
 * most recent failure on the calling thread.
 */

#ifndef WALLIS_ENCLOSE_H
#define WALLIS_ENCLOSE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define WE_MAX_ORDER 64        /* hard cap on the bound order k */
#define WE_NATIVE_ORDER_CAP 12 /* orders above this evaluate in extended precision */
#define WE_RACE_CAP 1000000    /* rival-family scan limit in we_convergence_race */

typedef enum we_status {
  WE_OK = 0,
  WE_ERR_DOMAIN = 1,    /* argument outside the mathematical domain */
  WE_ERR_OVERFLOW = 2,  /* exact integer exponent does not fit the output type */
  WE_ERR_TOLERANCE = 3, /* no order k <= WE_MAX_ORDER certifies the tolerance */
  WE_ERR_PRECISION = 4, /* reference enclosure missed its width target */
  WE_ERR_INVALID = 5    /* null pointer or invalid enum value */
} we_status;

typedef enum we_strategy {
  WE_STRATEGY_DIRECT = 0,
  WE_STRATEGY_RECURSIVE = 1,
  WE_STRATEGY_CACHED = 2
} we_strategy;

typedef enum we_target {
  WE_TARGET_RATIO = 0,         /* r(p) */
  WE_TARGET_WALLIS = 1,        /* W(x) */
  WE_TARGET_LOGRATIO_DERIV = 2, /* d/dp ln r(p) */
  WE_TARGET_DIGAMMA_DIFF = 3    /* psi(x+1) - psi(x+1/2) */
} we_target;

typedef struct we_bound_pair {
  double lower;
  double upper;
  int32_t order;
  we_target target;
} we_bound_pair;

/* logs: ln calls; pows: exp/sqrt/pow calls; mults: * and /; adds: + and -,
 * argument shifts included.  Callers zero-initialize; evaluators add. */
typedef struct we_op_count {
  int64_t logs;
  int64_t mults;
  int64_t adds;
  int64_t pows;
} we_op_count;

typedef struct we_exponent_cache we_exponent_cache; /* opaque */
typedef struct we_enclosure we_enclosure;           /* opaque */

const char* we_version(void);
const char* we_last_error(void);

/* --- core bounds ------------------------------------------------------- */

/* sigma_{p,m} = sum_{j=0..m} (-1)^j C(m,j) ln(p+j); strictly negative. */
we_status we_sigma(double p, int m, double* out);

/* Upper bounds U_k(p) > r(p), strictly decreasing in k; and the paired
 * lower bound L_k(p) = sqrt(p/(p+1)) / U_k(p+1) < r(p). */
we_status we_upper_bound_direct(double p, int k, we_op_count* tally, double* out);
we_status we_upper_bound_recursive(double p, int k, we_op_count* tally, double* out);
we_status we_lower_bound(double p, int k, double* out);

/* Strict enclosure L_k(p) < r(p) < U_k(p). */
we_status we_ratio_bounds(double p, int k, we_strategy strategy, we_op_count* tally,
                          we_bound_pair* out);
/* Strict enclosure for W(x), x > -1/2, via p = 2x + 1. */
we_status we_wallis_bounds(double x, int k, we_strategy strategy, we_op_count* tally,
                           we_bound_pair* out);

/* Smallest shift m >= 0 with x + m >= x_min and the exact transfer factor
 * W(x) = W(x+m) * factor. */
we_status we_shift_normalize(double x, double x_min, double* shifted_x, double* factor);

/* rho*_{p,k} = 2^-(k+1) min((k+1)!/p^(k+1), ln((p+1)/p)); the relative error
 * of both endpoints at order k is below exp(rho*) - 1, which halves (or
 * better) as k increases by 1. */
we_status we_rho_star(double p, int k, double* out);
we_status we_relative_error_cap(double p, int k, double* out);

/* Smallest k whose cap is below eps (0 < eps < 1); WE_ERR_TOLERANCE if no
 * k <= WE_MAX_ORDER works. */
we_status we_min_order_for_tolerance(double p, double eps, int32_t* out);

/* --- cached strategy ---------------------------------------------------- */

we_status we_exponent_cache_create(int k, we_exponent_cache** out);
void we_exponent_cache_destroy(we_exponent_cache* cache);
int32_t we_exponent_cache_order(const we_exponent_cache* cache);
/* Exact integer exponent H_{j,k}; WE_ERR_OVERFLOW if it exceeds uint64. */
we_status we_exponent_cache_entry(const we_exponent_cache* cache, int j, uint64_t* out);
/* One upper-bound evaluation: exactly k+1 ln calls against a built cache. */
we_status we_upper_bound_cached(double p, const we_exponent_cache* cache, we_op_count* tally,
                                double* out);

/* --- digamma bounds ------------------------------------------------------ */

we_status we_pochhammer(double y, int m, double* out);
we_status we_ell(double p, int k, double* out);
we_status we_u_bound(double p, int k, double* out);
we_status we_logratio_derivative_bounds(double p, int k, we_bound_pair* out);
we_status we_digamma_diff_bounds(double x, int k, we_bound_pair* out);
we_status we_digamma_error_bound(double p, int k, double* out);
we_status we_digamma_error_bound_coarse(double p, int k, double* out);

/* --- reference oracle ---------------------------------------------------- */

/* digits >= 30 decimal digits; squeeze_order < 0 selects the automatic
 * order, which guarantees the width target or fails with
 * WE_ERR_PRECISION.  A forced order may produce an uncertified (but still
 * valid) enclosure. */
we_status we_ratio_reference(double p, int digits, int squeeze_order, we_enclosure** out);
we_status we_wallis_reference(double x, int digits, int squeeze_order, we_enclosure** out);
we_status we_digamma_diff_reference(double x, int digits, int squeeze_order, we_enclosure** out);

void we_enclosure_destroy(we_enclosure* enc);
double we_enclosure_lo(const we_enclosure* enc);
double we_enclosure_hi(const we_enclosure* enc);
double we_enclosure_mid(const we_enclosure* enc);
int we_enclosure_certified(const we_enclosure* enc);
int32_t we_enclosure_digits(const we_enclosure* enc);
/* log10 of the relative enclosure width (finite even when the width
 * underflows double). */
we_status we_enclosure_rel_width_log10(const we_enclosure* enc, double* out);
/* Midpoint in fixed notation with `digits` fractional digits. */
we_status we_enclosure_mid_str(const we_enclosure* enc, int digits, char* buf, size_t buflen);

/* --- rival families ------------------------------------------------------ */

/* Increasing lower bounds sqrt(x * sum_{m<n} t_m) for W(x), x > 0. */
we_status we_gauss_watson_lower(double x, int64_t n_terms, double* out);
/* Wendel-shifted enclosure of Gamma(x+1)/Gamma(x+s); s = 1/2 encloses W. */
we_status we_shanbhag_bounds(double x, double s, int64_t k, double* alpha, double* beta);

typedef struct we_race_entry {
  int64_t parameter; /* first order / term count with rel err below eps */
  int32_t capped;    /* nonzero: scan hit its cap first */
  double rel_err;    /* worst-side relative error at `parameter` */
} we_race_entry;

typedef struct we_race_report {
  double x;
  double eps;
  double reference;  /* oracle midpoint for W(x) */
  we_race_entry geometric;
  we_race_entry gauss_series;
  we_race_entry wendel_shift;
  int32_t certified_order; /* -1 when no k <= WE_MAX_ORDER certifies eps */
} we_race_report;

we_status we_convergence_race(double x, double eps, we_race_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WALLIS_ENCLOSE_H */
