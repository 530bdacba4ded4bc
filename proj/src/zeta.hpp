#ifndef XISTRIP_ZETA_HPP
#define XISTRIP_ZETA_HPP

#include "complex_ops.hpp"

namespace xs {

struct zeta_config {
  int n_terms = 20000; // Dirichlet truncation
  int eta_terms = 64;  // alternating-series acceleration length
};

// Dirichlet series with Euler-Maclaurin tail; requires Re(s) >= 2.
cplx zeta_dirichlet(const cplx &s, const zeta_config &cfg);

// eta(s) / (1 - 2^(1-s)) with binomial-weighted acceleration of the
// alternating series; requires Re(s) in (0, 2], s != 1, and s away from
// the denominator zeros s = 1 + 2*pi*i*k/ln 2.
cplx zeta_strip(const cplx &s, const zeta_config &cfg);

// Dispatches to zeta_dirichlet for Re(s) >= 2, zeta_strip otherwise.
cplx zeta_dispatch(const cplx &s, const zeta_config &cfg);

// xi(s) = s(s-1)/2 * Gamma(s/2) * pi^(-s/2) * zeta(s), the gamma factor
// evaluated in log space. Requires Re(s) > 0, s != 1.
cplx xi_classical(const cplx &s, const zeta_config &cfg);

} // namespace xs

#endif
