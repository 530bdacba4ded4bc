#include "xistrip/xistrip.h"

#include <algorithm>
#include <cmath>
#include <new>
#include <stdexcept>

#include "contour.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "xi_series.hpp"
#include "zeros.hpp"
#include "zeta.hpp"

struct xs_config {
  xs::eval_config impl;
};

namespace {

const xs::eval_config kDefaults;

const xs::eval_config &cfg_or_default(const xs_config *cfg) {
  return cfg ? cfg->impl : kDefaults;
}

template <typename Fn> xs_status guarded(Fn &&fn) {
  try {
    fn();
    return XS_OK;
  } catch (const xs::no_convergence &) {
    return XS_ERR_NO_CONVERGE;
  } catch (const std::domain_error &) {
    return XS_ERR_DOMAIN;
  } catch (const std::invalid_argument &) {
    return XS_ERR_DOMAIN;
  } catch (const std::bad_alloc &) {
    return XS_ERR_NO_CONVERGE;
  }
}

xs_complex to_c(const xs::cplx &z) { return {z.real(), z.imag()}; }

void fill(const xs::xi_result &r, xs_xi_result *out) {
  out->value = to_c(r.value);
  out->method = static_cast<int>(r.method);
  out->n_used = r.n_used;
  out->error_estimate = r.error_estimate;
  out->converged = r.converged ? 1 : 0;
}

void fill(const xs::inc_gamma_result &r, xs_gamma_result *out) {
  out->value = to_c(r.value);
  out->terms_used = r.terms_used;
  out->remainder_bound = r.remainder_bound;
  out->converged = r.converged ? 1 : 0;
}

xs::xi_result eval_z(double x0, double t0, xs_method method,
                     const xs::eval_config &cfg) {
  switch (method) {
  case XS_METHOD_INCGAMMA:
    if (x0 == 0.0)
      return xs::xi_critical_line(t0, cfg);
    return xs::xi_strip_point(x0, t0, cfg);
  case XS_METHOD_REALFORM:
    if (x0 != 0.0)
      throw std::domain_error("realform: critical line only (x0 = 0)");
    return xs::xi_real_form(t0, cfg);
  case XS_METHOD_STRIP:
    return xs::xi_strip_point(x0, t0, cfg);
  case XS_METHOD_THETA:
    return xs::xi_theta_form(x0, t0, cfg);
  case XS_METHOD_CLASSICAL: {
    double sigma = x0 + 0.5;
    if (!(sigma > 0.0) || sigma > 2.0)
      throw std::domain_error("classical: requires sigma in (0, 2]");
    xs::xi_result r;
    r.method = xs::xi_method::classical;
    r.value = xs::xi_classical(xs::cplx(sigma, t0), cfg.zeta);
    r.n_used = cfg.zeta.eta_terms;
    r.error_estimate = 1e-10 * (1.0 + std::abs(r.value));
    r.converged = true;
    return r;
  }
  case XS_METHOD_CONTOUR:
    return xs::xi_via_contour(xs::cplx(x0, t0), cfg);
  default:
    throw std::domain_error("unknown method");
  }
}

} // namespace

extern "C" {

xs_config *xs_config_create(void) { return new (std::nothrow) xs_config; }

void xs_config_destroy(xs_config *cfg) { delete cfg; }

xs_status xs_config_set_epsilon(xs_config *cfg, double epsilon) {
  if (!cfg || !(epsilon >= 1e-13) || !(epsilon < 1.0))
    return XS_ERR_DOMAIN;
  cfg->impl.epsilon = epsilon;
  return XS_OK;
}

xs_status xs_config_set_n_max(xs_config *cfg, int n_max) {
  if (!cfg || n_max < 1)
    return XS_ERR_DOMAIN;
  cfg->impl.n_max = n_max;
  return XS_OK;
}

xs_status xs_config_set_m_cap(xs_config *cfg, int m_cap) {
  if (!cfg || m_cap < 1)
    return XS_ERR_DOMAIN;
  cfg->impl.m_cap = m_cap;
  return XS_OK;
}

xs_status xs_config_set_quad_step(xs_config *cfg, double step) {
  if (!cfg || !(step > 0.0))
    return XS_ERR_DOMAIN;
  cfg->impl.quad_step = step;
  return XS_OK;
}

xs_status xs_config_set_quad_T(xs_config *cfg, double T) {
  if (!cfg || !(T >= 0.0))
    return XS_ERR_DOMAIN;
  cfg->impl.quad_T = T;
  return XS_OK;
}

xs_status xs_config_set_zeta_terms(xs_config *cfg, int n_terms) {
  if (!cfg || n_terms < 1)
    return XS_ERR_DOMAIN;
  cfg->impl.zeta.n_terms = n_terms;
  return XS_OK;
}

xs_status xs_config_set_eta_terms(xs_config *cfg, int eta_terms) {
  if (!cfg || eta_terms < 8)
    return XS_ERR_DOMAIN;
  cfg->impl.zeta.eta_terms = eta_terms;
  return XS_OK;
}

xs_status xs_xi_eval_z(const xs_config *cfg, double x0, double t0,
                       xs_method method, xs_xi_result *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  xs_status st =
      guarded([&] { fill(eval_z(x0, t0, method, cfg_or_default(cfg)), out); });
  // Budget exhaustion leaves the best value in *out but is still an error.
  if (st == XS_OK && !out->converged)
    return XS_ERR_NO_CONVERGE;
  return st;
}

xs_status xs_xi_eval_s(const xs_config *cfg, double sigma, double t,
                       xs_method method, xs_xi_result *out) {
  return xs_xi_eval_z(cfg, sigma - 0.5, t, method, out);
}

xs_status xs_xi_scan_row(const xs_config *cfg, double t0, xs_scan_row *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  bool all_conv = true;
  xs_status st = guarded([&] {
    const xs::eval_config &c = cfg_or_default(cfg);
    xs::xi_result ri = xs::xi_critical_line(t0, c);
    xs::xi_result rt = xs::xi_theta_form(0.0, t0, c);
    all_conv = ri.converged && rt.converged;
    double vi = ri.value.real();
    double vc = xs::xi_classical(xs::cplx(0.5, t0), c.zeta).real();
    double vt = rt.value.real();
    out->t0 = t0;
    out->xi_incgamma = vi;
    out->xi_classical = vc;
    out->xi_theta = vt;
    out->max_dev = std::max({std::abs(vi - vc), std::abs(vi - vt),
                             std::abs(vc - vt)});
  });
  if (st == XS_OK && !all_conv)
    return XS_ERR_NO_CONVERGE;
  return st;
}

xs_status xs_find_zeros(const xs_config *cfg, double t_from, double t_to,
                        xs_method method, xs_zero_bracket *out, int cap,
                        int *n_found) {
  if (!n_found || (cap > 0 && !out))
    return XS_ERR_DOMAIN;
  return guarded([&] {
    auto zeros = xs::find_zeros(t_from, t_to,
                                static_cast<xs::xi_method>(method),
                                cfg_or_default(cfg));
    *n_found = static_cast<int>(zeros.size());
    int n = std::min(cap, *n_found);
    for (int i = 0; i < n; ++i)
      out[i] = {zeros[i].t_low, zeros[i].t_high, zeros[i].root};
  });
}

xs_status xs_lower_inc_gamma(const xs_config *cfg, xs_complex z, double alpha,
                             xs_gamma_result *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  const xs::eval_config &c = cfg_or_default(cfg);
  xs_status st = guarded([&] {
    fill(xs::lower_inc_gamma(xs::cplx(z.re, z.im), alpha, c.epsilon, c.m_cap),
         out);
  });
  if (st == XS_OK && !out->converged)
    return XS_ERR_NO_CONVERGE;
  return st;
}

xs_status xs_upper_inc_gamma(const xs_config *cfg, xs_complex z, double alpha,
                             xs_gamma_result *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  const xs::eval_config &c = cfg_or_default(cfg);
  xs_status st = guarded([&] {
    fill(xs::upper_inc_gamma(xs::cplx(z.re, z.im), alpha, c.epsilon, c.m_cap),
         out);
  });
  if (st == XS_OK && !out->converged)
    return XS_ERR_NO_CONVERGE;
  return st;
}

xs_status xs_log_gamma(xs_complex z, xs_complex *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  return guarded([&] { *out = to_c(xs::log_gamma(xs::cplx(z.re, z.im))); });
}

xs_status xs_zeta_dirichlet(const xs_config *cfg, xs_complex s,
                            xs_complex *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  return guarded([&] {
    *out = to_c(
        xs::zeta_dirichlet(xs::cplx(s.re, s.im), cfg_or_default(cfg).zeta));
  });
}

xs_status xs_zeta_strip(const xs_config *cfg, xs_complex s, xs_complex *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  return guarded([&] {
    *out =
        to_c(xs::zeta_strip(xs::cplx(s.re, s.im), cfg_or_default(cfg).zeta));
  });
}

xs_status xs_crude_bound(double beta, int n, double *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  return guarded([&] { *out = xs::crude_bound(beta, n); });
}

xs_status xs_j_max_estimate(int n, double k, double beta, int *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  return guarded([&] { *out = xs::j_max_estimate(n, k, beta); });
}

xs_status xs_tail_bound_T(double epsilon, double K, double *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  return guarded([&] { *out = xs::tail_bound_T(epsilon, K); });
}

xs_status xs_psi_identity_residual(double *out) {
  if (!out)
    return XS_ERR_DOMAIN;
  return guarded([&] { *out = xs::psi_identity_residual(); });
}

xs_status xs_strip_continuation(xs_boundary_fn f, void *user, xs_complex z0,
                                double a, double T, double step,
                                double taper_start, xs_complex *out) {
  if (!out || !f)
    return XS_ERR_DOMAIN;
  return guarded([&] {
    xs::quadrature_window w;
    w.T = T;
    w.step = step;
    w.a = a;
    w.taper_start = taper_start;
    auto fb = [f, user](double t) {
      double re = 0.0, im = 0.0;
      f(t, user, &re, &im);
      return xs::cplx(re, im);
    };
    *out = to_c(xs::strip_continuation(fb, xs::cplx(z0.re, z0.im), w));
  });
}

const char *xs_status_message(xs_status status) {
  switch (status) {
  case XS_OK:
    return "ok";
  case XS_ERR_DOMAIN:
    return "argument outside the supported domain";
  case XS_ERR_NO_CONVERGE:
    return "did not converge within the iteration budget";
  default:
    return "unknown status";
  }
}

const char *xs_version(void) { return "1.0.0"; }

} // extern "C"
