/* C interface to the generalized Brouncker continued fraction library.
 *
 * Every function returns a brk_status code; results travel through out
 * parameters.  Exact rational results are rendered as decimal "p/q" strings.
 * All functions are thread-safe; the only stateful object is the opaque
 * brk_series handle, which is immutable after creation.
 */
#ifndef BROUNCKER_H
#define BROUNCKER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum brk_status {
  BRK_OK = 0,
  BRK_EDOMAIN = 1,          /* argument outside a function's stated domain */
  BRK_ENONPOSITIVE = 2,     /* continued fraction element <= 0 */
  BRK_EDIVZERO = 3,         /* zero denominator in backward evaluation */
  BRK_EZEROPARAM = 4,       /* zero scale in an equivalence transform */
  BRK_ENOCONV = 5,          /* iteration budget exhausted */
  BRK_EQUADRATURE = 6,      /* adaptive integration failed */
  BRK_EMONOTONE = 7,        /* alternating-series hypothesis violated */
  BRK_EINVAL = 8,           /* malformed argument */
  BRK_EBUFFER = 9,          /* output buffer too small */
  BRK_EINTERNAL = 10
} brk_status;

/* Human-readable name for a status code. */
const char* brk_strerror(int status);

/* Detailed message for the most recent failure on this thread (empty string
 * when the last call succeeded).  Domain failures name the violated
 * hypothesis and the offending values. */
const char* brk_last_error(void);

const char* brk_version(void);

typedef struct brk_eval {
  double value;
  double err_estimate;
  long long iterations;
  int converged;
} brk_eval;

/* --- y(s, r) representations (r > 1/2) ------------------------------- */

/* Continued fraction, bracket evaluation; max_depth <= 0 selects the
 * default depth of 10^6. */
brk_status brk_y_cf(double s, double r, double tol, long long max_depth, brk_eval* out);

/* Partial product with tail correction. */
brk_status brk_y_product(double s, double r, long long n_terms, brk_eval* out);

/* Gamma closed form (precision reference, relative error ~1e-13). */
brk_status brk_y_gamma(double s, double r, double* out);

/* Exponential of the integrated logarithmic derivative. */
brk_status brk_y_exponential(double s, double r, double tol, brk_eval* out);

/* Classic Brouncker fraction b(s) = y(s, 1). */
brk_status brk_b(double s, double tol, long long max_depth, brk_eval* out);

/* y(0, r) in closed form. */
brk_status brk_y_zero(double r, double* out);

/* --- logarithmic derivatives ----------------------------------------- */

brk_status brk_f1(double s, double r, double tol, double* out);
brk_status brk_f2(double s, double r, double tol, double* out);
brk_status brk_dlog_y(double s, double r, double tol, double* out);
brk_status brk_h1(double s, double r, double tol, double* out);
brk_status brk_h2(double s, double r, double tol, double* out);
brk_status brk_d2log_y(double s, double r, double tol, double* out);

/* --- special functions ------------------------------------------------ */

brk_status brk_ln_gamma(double x, double* out);
brk_status brk_laplace_sech(double a, double* out);
brk_status brk_laplace_x_sech(double a, double* out);
brk_status brk_euler_integral(double s, double* out);

/* Euler number E_n as a decimal string.  A buffer of 64 bytes covers
 * n <= 40; BRK_EBUFFER is returned when the buffer is too small. */
brk_status brk_euler_number(int n, char* buf, size_t bufsize);

/* --- residual checks (all relative or absolute residual magnitudes) --- */

/* |y(s) y(s+2r) - (s+1)(s+2r-1)| / ((s+1)(s+2r-1)) via the closed form. */
brk_status brk_check_functional(double s, double r, double* residual);
/* f1(s) + f1(s+2r) - 1/(s+1) */
brk_status brk_check_f1_equation(double s, double r, double tol, double* residual);
/* f2(s) + f2(s+2r) - 1/(s+2r-1) */
brk_status brk_check_f2_equation(double s, double r, double tol, double* residual);
/* h1(s) + h1(s+2r) - 1/(s+1)^2 */
brk_status brk_check_h1_equation(double s, double r, double tol, double* residual);
/* h2(s) + h2(s+2r) - 1/(s+2r-1)^2 */
brk_status brk_check_h2_equation(double s, double r, double tol, double* residual);
/* dlog_y vs central difference of ln y_gamma, step 1e-4 */
brk_status brk_check_dlog_fd(double s, double r, double tol, double* residual);
/* d2log_y vs second central difference of ln y_gamma, step 1e-3 */
brk_status brk_check_d2log_fd(double s, double r, double tol, double* residual);

/* --- exact asymptotic series ------------------------------------------ */

/* Opaque handle over the exact series for one rational r. */
typedef struct brk_series brk_series;

/* r_text is "p/q", an integer, or a decimal literal; order >= 1 is the
 * highest n for A_n and the Laurent data.  NULL on failure, with *status
 * (optional) holding the reason. */
brk_series* brk_series_create(const char* r_text, int order, int* status);
void brk_series_free(brk_series* series);

int brk_series_order(const brk_series* series);

/* A_n, 1 <= n <= order, as "p/q". */
brk_status brk_series_coeff(const brk_series* series, int n, char* buf, size_t bufsize);

/* Laurent coefficient of s^{1-2m}, 0 <= m <= order, as "p/q". */
brk_status brk_series_laurent(const brk_series* series, int m, char* buf, size_t bufsize);

/* Evaluate the Laurent polynomial at s through the 1/s^{2m-1} term,
 * m <= order; err_estimate is the first omitted term's magnitude. */
brk_status brk_series_eval(const brk_series* series, double s, int m_terms, brk_eval* out);

#ifdef __cplusplus
}
#endif

#endif /* BROUNCKER_H */
