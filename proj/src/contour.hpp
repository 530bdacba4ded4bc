#ifndef XISTRIP_CONTOUR_HPP
#define XISTRIP_CONTOUR_HPP

#include <functional>

#include "complex_ops.hpp"
#include "xi_series.hpp"

namespace xs {

struct quadrature_window {
  double T = 0.0;           // half-height of the truncated boundary line
  double step = 0.01;       // sample spacing
  double a = 1.5;           // boundary abscissa; fixed 3/2 for xi
  double taper_start = -1.0; // full-weight region end; < 0 means 0.2*T
};

// Reconstructs f(z0) for |Re z0| < a from boundary samples f(a+it) of an
// even, real-on-axis entire function: windowed composite Simpson over
// [-T, T] of the two-sided Cauchy kernel. The window is 1 up to
// taper_start, then rolls off smoothly to 0 at T, which suppresses the
// oscillatory truncation tail far below the bare cutoff error.
cplx strip_continuation(const std::function<cplx(double)> &f_boundary,
                        cplx z0, const quadrature_window &w);

// xi(2+it) via the classical product with the Dirichlet-series zeta
// (kept independent of the strip-series machinery on purpose).
cplx xi_boundary(double t, const zeta_config &cfg);

// Contour route to xi(z0), z-plane input, |Re z0| <= 1/2. T is taken from
// cfg.quad_T when set; otherwise certified from the boundary decay bound
// so the discarded tail is below cfg.epsilon, then doubled with the
// taper over the second half. Boundary samples are cached per (step, T).
xi_result xi_via_contour(cplx z0, const eval_config &cfg);

// Smallest T on a 0.5-grid with K * T^(5/2) * e^(-pi T/4) < epsilon.
double tail_bound_T(double epsilon, double K);

} // namespace xs

#endif
