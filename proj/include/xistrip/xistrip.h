#ifndef XISTRIP_H
#define XISTRIP_H

/* C interface to libxistrip.
 *
 * The library evaluates Riemann's xi function inside the critical strip
 * through several independent routes (an incomplete-gamma series, a real
 * trigonometric form, a theta-integral form, the classical product formula,
 * and direct contour quadrature of boundary samples) so that every result
 * can be cross-checked.
 *
 * Coordinates: s-plane (sigma, t) with s = sigma + it, or z-plane (x0, t0)
 * with z = s - 1/2. The critical line is sigma = 1/2, i.e. x0 = 0.
 *
 * All functions return an xs_status code and write results through out
 * pointers. An iterative computation that exhausts its budget returns
 * XS_ERR_NO_CONVERGE with the best available value still written and the
 * converged flag cleared. A config handle is not thread-safe while being
 * mutated; after the last setter call it may be shared freely between
 * threads.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xs_status {
  XS_OK = 0,
  XS_ERR_DOMAIN = 2,      /* argument outside the supported domain */
  XS_ERR_NO_CONVERGE = 3  /* iteration budget exhausted before tolerance */
} xs_status;

typedef enum xs_method {
  XS_METHOD_INCGAMMA = 0, /* incomplete-gamma series (series form on the line, generic strip form off it) */
  XS_METHOD_REALFORM = 1, /* real trigonometric integral form; critical line only */
  XS_METHOD_STRIP = 2,    /* generic strip series, |x0| <= 1/2 */
  XS_METHOD_THETA = 3,    /* theta-integral form, |x0| <= 1/2 */
  XS_METHOD_CLASSICAL = 4,/* s(s-1)/2 * Gamma(s/2) * pi^(-s/2) * zeta(s) */
  XS_METHOD_CONTOUR = 5   /* Cauchy quadrature over boundary samples xi(2+it) */
} xs_method;

typedef struct xs_complex {
  double re;
  double im;
} xs_complex;

/* Opaque evaluation configuration. Defaults:
 *   epsilon 1e-9, n_max 8, m_cap 400, quad_step 0.01, quad_T 0 (auto),
 *   zeta_terms 20000, eta_terms 64. */
typedef struct xs_config xs_config;

typedef struct xs_xi_result {
  xs_complex value;
  int method;            /* xs_method actually used */
  int n_used;            /* series terms / samples, method dependent */
  double error_estimate; /* heuristic absolute error bound */
  int converged;         /* 1 if all internal tolerances were met */
} xs_xi_result;

typedef struct xs_gamma_result {
  xs_complex value;
  int terms_used;
  double remainder_bound; /* bound on the truncated series tail */
  int converged;
} xs_gamma_result;

typedef struct xs_scan_row {
  double t0;
  double xi_incgamma;
  double xi_classical;
  double xi_theta;
  double max_dev; /* max pairwise |difference| of the three values */
} xs_scan_row;

typedef struct xs_zero_bracket {
  double t_low;
  double t_high;
  double root;
} xs_zero_bracket;

xs_config *xs_config_create(void);
void xs_config_destroy(xs_config *cfg);

/* Setters validate their argument and leave the config unchanged on error. */
xs_status xs_config_set_epsilon(xs_config *cfg, double epsilon);   /* [1e-13, 1) */
xs_status xs_config_set_n_max(xs_config *cfg, int n_max);          /* >= 1 */
xs_status xs_config_set_m_cap(xs_config *cfg, int m_cap);          /* >= 1 */
xs_status xs_config_set_quad_step(xs_config *cfg, double step);    /* > 0 */
xs_status xs_config_set_quad_T(xs_config *cfg, double T);          /* > 0, or 0 for automatic */
xs_status xs_config_set_zeta_terms(xs_config *cfg, int n_terms);   /* >= 1 */
xs_status xs_config_set_eta_terms(xs_config *cfg, int eta_terms);  /* >= 8 */

/* Point evaluation. s-plane entry: strip methods need sigma in [0, 1];
 * classical needs sigma in (0, 2] (s != 1); contour needs sigma in [0, 1].
 * The z-plane entry is the same with x0 = sigma - 1/2. cfg may be NULL for
 * defaults. */
xs_status xs_xi_eval_s(const xs_config *cfg, double sigma, double t,
                       xs_method method, xs_xi_result *out);
xs_status xs_xi_eval_z(const xs_config *cfg, double x0, double t0,
                       xs_method method, xs_xi_result *out);

/* One critical-line sample evaluated with the incgamma, classical and theta
 * routes plus their max pairwise deviation. */
xs_status xs_xi_scan_row(const xs_config *cfg, double t0, xs_scan_row *out);

/* Sign-change zeros of xi(1/2 + it) for t in [t_from, t_to]: coarse scan at
 * step 0.25, then bisection until the bracket is narrower than 1e-6.
 * Writes at most cap brackets; *n_found gets the total found (may exceed
 * cap, in which case only the first cap are written). */
xs_status xs_find_zeros(const xs_config *cfg, double t_from, double t_to,
                        xs_method method, xs_zero_bracket *out, int cap,
                        int *n_found);

/* Incomplete gamma of argument z+1 with split point alpha > 0:
 *   lower: integral of e^-l * l^z over [0, alpha]
 *   upper: integral of e^-l * l^z over [alpha, inf)
 * Series evaluation with remainder control; the upper route falls back to
 * direct quadrature when subtraction cancellation would dominate. */
xs_status xs_lower_inc_gamma(const xs_config *cfg, xs_complex z, double alpha,
                             xs_gamma_result *out);
xs_status xs_upper_inc_gamma(const xs_config *cfg, xs_complex z, double alpha,
                             xs_gamma_result *out);

/* Principal-branch log-gamma; z must not be a pole. */
xs_status xs_log_gamma(xs_complex z, xs_complex *out);

/* zeta via the absolutely convergent Dirichlet series with tail correction;
 * requires Re(s) >= 2. */
xs_status xs_zeta_dirichlet(const xs_config *cfg, xs_complex s, xs_complex *out);

/* zeta inside the strip via the accelerated alternating series; requires
 * Re(s) in (0, 2], s != 1, and s off the eta-denominator zeros on Re(s)=1. */
xs_status xs_zeta_strip(const xs_config *cfg, xs_complex s, xs_complex *out);

/* Tail bound 2*pi^2*n^4*e^(-pi*n^2) on |Gamma(beta+1+ik, pi*n^2)| for
 * beta in [1, 3/2]; n >= 1. */
xs_status xs_crude_bound(double beta, int n, double *out);

/* Index near which the incomplete-gamma series terms peak. */
xs_status xs_j_max_estimate(int n, double k, double beta, int *out);

/* Smallest T on a 0.5-grid with K * T^(5/2) * e^(-pi*T/4) < epsilon. */
xs_status xs_tail_bound_T(double epsilon, double K, double *out);

/* Residual |1/2 + Psi(1) + 4*Psi'(1)| of the theta-series identity, where
 * Psi(y) = sum_n e^(-pi*n^2*y). Exactly zero in exact arithmetic. */
xs_status xs_psi_identity_residual(double *out);

/* Boundary values of an even, real-on-axis entire function f restricted to
 * the line a+it, supplied as a callback; reconstructs f(z0) for
 * |Re(z0)| < a by windowed composite-Simpson quadrature over [-T, T].
 * taper_start: |t| below which samples enter at full weight; pass a
 * negative value for the default 0.2*T. */
typedef void (*xs_boundary_fn)(double t, void *user, double *re, double *im);
xs_status xs_strip_continuation(xs_boundary_fn f, void *user, xs_complex z0,
                                double a, double T, double step,
                                double taper_start, xs_complex *out);

const char *xs_status_message(xs_status status);
const char *xs_version(void);

#ifdef __cplusplus
}
#endif

#endif /* XISTRIP_H */
