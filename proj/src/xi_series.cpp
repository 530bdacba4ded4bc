#include "xi_series.hpp"

#include <cmath>
#include <stdexcept>

#include "gamma.hpp"
#include "quadrature.hpp"

namespace xs {

namespace {

constexpr double pi = 3.141592653589793238462643383279503;
const double pi_quarter = std::pow(pi, 0.25);

void check_point(double x0, const eval_config &cfg) {
  if (std::abs(x0) > 0.5)
    throw std::domain_error("xi series: |x0| must be <= 1/2");
  if (!(cfg.epsilon >= 1e-13) || cfg.epsilon >= 1.0)
    throw std::domain_error("xi series: epsilon outside [1e-13, 1)");
  if (cfg.n_max < 1 || cfg.m_cap < 1)
    throw std::domain_error("xi series: n_max and m_cap must be >= 1");
}

// Magnitudes of the gamma-summand coefficients at index n; used for the
// truncation-tail estimate without evaluating the incomplete gammas.
double coef_scale(const cplx &z0, int n) {
  double a = pi * n * n;
  double root_n = std::sqrt(static_cast<double>(n));
  double m2 = std::abs(cpow(a, -z0 / 2.0)) * std::abs(0.5 - z0) /
              (pi_quarter * root_n * std::abs(2.5 + z0));
  double m3 = std::abs(cpow(a, z0 / 2.0)) * std::abs(0.5 + z0) /
              (pi_quarter * root_n * std::abs(2.5 - z0));
  return m2 + m3;
}

// Tail of the n-sum past n_used: each dropped term is bounded by the
// decaying-exponential part plus coefficient magnitude times the crude
// incomplete-gamma bound.
double series_tail(const cplx &z0, int n_used, int n_stop) {
  double tail = 0.0;
  for (int n = n_used + 1; n <= n_stop + 4; ++n) {
    double a = pi * n * n;
    double t1 = 15.0 * a * std::exp(-a) / std::abs(6.25 - z0 * z0);
    tail += 2.0 * (t1 + coef_scale(z0, n) * crude_bound(1.25, n));
  }
  return tail;
}

} // namespace

xi_result xi_strip_point(double x0, double t0, const eval_config &cfg) {
  check_point(x0, cfg);
  cplx z0(x0, t0);
  double eps_g = std::min(cfg.epsilon / 100.0, 1e-13);

  xi_result r;
  r.method = xi_method::strip;
  kahan_sum_c acc;
  bool all_conv = true;
  double gamma_err = 0.0;
  int n = 0;
  while (n < cfg.n_max) {
    ++n;
    if (n >= 2 && crude_bound(1.25, n) < cfg.epsilon / 10.0) {
      --n;
      break;
    }
    double a = pi * n * n;
    double la = std::log(a);
    double root_n = std::sqrt(static_cast<double>(n));

    xi_series_term term;
    term.n = n;
    term.theta_term = 15.0 * a * std::exp(-a) / (6.25 - z0 * z0);

    cplx c2 = cexp(-z0 / 2.0 * la) * (0.5 - z0) /
              (pi_quarter * root_n * (2.5 + z0));
    inc_gamma_result u2 = upper_inc_gamma(1.25 + z0 / 2.0, a, eps_g, cfg.m_cap);
    term.upper_term = c2 * u2.value;
    all_conv = all_conv && u2.converged;
    gamma_err += std::abs(c2) * u2.remainder_bound;

    if (x0 == 0.0) {
      // z0 purely imaginary: the mirror parameters are exact conjugates,
      // so build the mirror summand by conjugation (keeps the term real
      // to the last bit and halves the gamma work).
      term.conj_term = std::conj(term.upper_term);
      gamma_err += std::abs(c2) * u2.remainder_bound;
    } else {
      cplx c3 = cexp(z0 / 2.0 * la) * (0.5 + z0) /
                (pi_quarter * root_n * (2.5 - z0));
      inc_gamma_result u3 =
          upper_inc_gamma(1.25 - z0 / 2.0, a, eps_g, cfg.m_cap);
      term.conj_term = c3 * u3.value;
      all_conv = all_conv && u3.converged;
      gamma_err += std::abs(c3) * u3.remainder_bound;
    }

    acc.add(term.theta_term - term.upper_term - term.conj_term);
    r.terms.push_back(term);
  }
  r.value = 2.0 * acc.value();
  r.n_used = n;
  r.error_estimate = series_tail(z0, n, cfg.n_max) + 2.0 * gamma_err;
  r.converged = all_conv;
  return r;
}

xi_result xi_critical_line(double t0, const eval_config &cfg) {
  xi_result r = xi_strip_point(0.0, t0, cfg);
  r.method = xi_method::incgamma;
  r.error_estimate += std::abs(r.value.imag());
  r.value = cplx(r.value.real(), 0.0);
  return r;
}

xi_result xi_real_form(double t0, const eval_config &cfg) {
  check_point(0.0, cfg);
  double t2 = t0 * t0;
  double A = (5.0 - 4.0 * t2) / (25.0 + 4.0 * t2);
  double B = 12.0 * t0 / (25.0 + 4.0 * t2);

  xi_result r;
  r.method = xi_method::realform;
  kahan_sum acc;
  int n = 0;
  double quad_err = 0.0;
  while (n < cfg.n_max) {
    ++n;
    if (n >= 2 && crude_bound(1.25, n) < cfg.epsilon / 10.0) {
      --n;
      break;
    }
    double a = pi * n * n;
    double t1 = 60.0 * a * std::exp(-a) / (25.0 + 4.0 * t2);
    auto integrand = [&](double lam) {
      double b = std::log(lam / a);
      return std::exp(-lam) * std::pow(lam, 1.25) *
             (A * std::cos(0.5 * t0 * b) + B * std::sin(0.5 * t0 * b));
    };
    // e^-45 ~ 3e-20 leaves the tail beyond a+45 below double noise.
    double I = adaptive_simpson(integrand, a, a + 45.0, cfg.epsilon / 4.0);
    quad_err += cfg.epsilon / 4.0;
    acc.add(t1 - 2.0 / (pi_quarter * std::sqrt(static_cast<double>(n))) * I);
  }
  r.value = cplx(2.0 * acc.value(), 0.0);
  r.n_used = n;
  r.error_estimate = series_tail(cplx(0.0, t0), n, cfg.n_max) + 2.0 * quad_err;
  r.converged = true;
  return r;
}

double psi(double y) {
  kahan_sum s;
  for (int n = 1;; ++n) {
    double term = std::exp(-pi * n * n * y);
    s.add(term);
    if (term < 1e-18)
      break;
  }
  return s.value();
}

double psi_prime(double y) {
  kahan_sum s;
  for (int n = 1;; ++n) {
    double term = pi * n * n * std::exp(-pi * n * n * y);
    s.add(term);
    if (term < 1e-18)
      break;
  }
  return -s.value();
}

double psi_identity_residual() {
  return std::abs(0.5 + psi(1.0) + 4.0 * psi_prime(1.0));
}

xi_result xi_theta_form(double x0, double t0, const eval_config &cfg) {
  check_point(x0, cfg);
  cplx z0(x0, t0);

  // Upper limit where the integrand (dominated by pi e^(-pi y) y^(3/4)
  // at |x0| <= 1/2) drops below double-precision relevance.
  double Y = 1.0;
  while (pi * std::exp(-pi * Y) * std::pow(Y, 0.75) >= 1e-18)
    Y += 0.5;

  cplx e1 = 0.25 + z0 / 2.0;
  cplx e2 = 0.25 - z0 / 2.0;
  cplx i1 = adaptive_simpson_c(
      [&](double y) { return psi_prime(y) * cexp(e1 * std::log(y)); }, 1.0, Y,
      cfg.epsilon / 4.0);
  cplx i2 = adaptive_simpson_c(
      [&](double y) { return psi_prime(y) * cexp(e2 * std::log(y)); }, 1.0, Y,
      cfg.epsilon / 4.0);

  xi_result r;
  r.method = xi_method::theta;
  r.value = -4.0 * psi_prime(1.0) + (0.5 - z0) * i1 + (0.5 + z0) * i2;
  r.n_used = 0;
  for (int n = 1;; ++n) {
    r.n_used = n;
    if (pi * n * n * std::exp(-pi * n * n) < 1e-18)
      break;
  }
  r.error_estimate =
      (std::abs(0.5 - z0) + std::abs(0.5 + z0)) * cfg.epsilon / 4.0 + 1e-15;
  r.converged = true;
  return r;
}

} // namespace xs
