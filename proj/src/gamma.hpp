#ifndef XISTRIP_GAMMA_HPP
#define XISTRIP_GAMMA_HPP

#include "complex_ops.hpp"

namespace xs {

struct inc_gamma_result {
  cplx value{0.0, 0.0};
  int terms_used = 0;
  double remainder_bound = 0.0;
  bool converged = false;
};

// Principal value of ln Gamma(z); accurate to ~1e-14 relative for
// Re(z) >= 1/4 (recurrence shift into Re >= 10, then Stirling).
cplx log_gamma(cplx z);

cplx gamma_fn(const cplx &z);

// gamma(z+1, alpha): integral of e^-l * l^z over [0, alpha], by the
// ascending series e^-alpha * alpha^z * sum_j alpha^j / prod_{r<=j}(z+r),
// stopped when a geometric tail bound drops below epsilon * |partial sum|.
inc_gamma_result lower_inc_gamma(cplx z, double alpha, double epsilon,
                                 int m_cap);

// Gamma(z+1, alpha) = Gamma(z+1) - gamma(z+1, alpha). When the subtraction
// would cancel more than six digits the value is recomputed by adaptive
// quadrature of e^-l * l^z over [alpha, alpha+40] (integrand is below
// 1e-19 of its left-edge scale beyond that).
inc_gamma_result upper_inc_gamma(cplx z, double alpha, double epsilon,
                                 int m_cap);

// 2*pi^2*n^4*e^(-pi*n^2): bound on |Gamma(beta+1+ik, pi*n^2)| valid for
// beta in [1, 3/2].
double crude_bound(double beta, int n);

// Index near which the series terms of lower_inc_gamma peak, for
// z = beta + ik and alpha = pi*n^2.
int j_max_estimate(int n, double k, double beta);

} // namespace xs

#endif
