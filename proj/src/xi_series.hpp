#ifndef XISTRIP_XI_SERIES_HPP
#define XISTRIP_XI_SERIES_HPP

#include <vector>

#include "complex_ops.hpp"
#include "zeta.hpp"

namespace xs {

enum class xi_method {
  incgamma = 0,
  realform = 1,
  strip = 2,
  theta = 3,
  classical = 4,
  contour = 5,
};

struct eval_config {
  double epsilon = 1e-9; // >= 1e-13
  int n_max = 8;
  int m_cap = 400;
  double quad_step = 0.01;
  double quad_T = 0.0; // 0 = choose from the boundary decay bound
  zeta_config zeta;
};

struct xi_series_term {
  int n = 0;
  cplx theta_term;  // decaying-exponential summand
  cplx upper_term;  // incomplete-gamma summand, entered with minus sign
  cplx conj_term;   // mirror summand (z0 -> -z0), entered with minus sign
};

struct xi_result {
  cplx value{0.0, 0.0};
  xi_method method = xi_method::incgamma;
  int n_used = 0;
  double error_estimate = 0.0;
  bool converged = false;
  std::vector<xi_series_term> terms;
};

// Incomplete-gamma series for xi at z0 = x0 + i*t0 (z-plane, |x0| <= 1/2).
// On the critical line (x0 = 0) the mirror summand is the exact conjugate
// of the gamma summand, so each term is real by construction.
xi_result xi_strip_point(double x0, double t0, const eval_config &cfg);

// Same series at x0 = 0 with the value folded to its real part; the
// imaginary residue joins the error estimate.
xi_result xi_critical_line(double t0, const eval_config &cfg);

// Real trigonometric form: per-n quadrature of
// e^-l * l^(5/4) * (A cos(t0 b/2) + B sin(t0 b/2)), b = ln(l / (pi n^2)).
// Critical line only; manifestly real.
xi_result xi_real_form(double t0, const eval_config &cfg);

// Theta-integral form over the Jacobi-type series Psi'(y).
xi_result xi_theta_form(double x0, double t0, const eval_config &cfg);

double psi(double y);       // sum_n e^(-pi n^2 y), y >= 1 intended
double psi_prime(double y); // its y-derivative (negative)

// |1/2 + Psi(1) + 4 Psi'(1)|; zero in exact arithmetic.
double psi_identity_residual();

} // namespace xs

#endif
