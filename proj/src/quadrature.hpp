#ifndef XISTRIP_QUADRATURE_HPP
#define XISTRIP_QUADRATURE_HPP

#include <cmath>
#include <functional>

#include "complex_ops.hpp"
#include "errors.hpp"

namespace xs {

namespace detail {

template <typename V, typename F>
V simpson_rec(const F &f, double a, double b, V fa, V fm, V fb, V whole,
              double tol, int depth) {
  double m = 0.5 * (a + b);
  V flm = f(0.5 * (a + m));
  V frm = f(0.5 * (m + b));
  V left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  V right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  V diff = left + right - whole;
  if (std::abs(diff) <= 15.0 * tol)
    return left + right + diff / 15.0; // Richardson correction
  if (depth <= 0)
    throw no_convergence("adaptive Simpson: depth limit");
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename V, typename F>
V adaptive_simpson_impl(const F &f, double a, double b, double tol,
                        int depth) {
  V fa = f(a);
  V fm = f(0.5 * (a + b));
  V fb = f(b);
  V whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec<V>(f, a, b, fa, fm, fb, whole, tol, depth);
}

} // namespace detail

// Absolute-tolerance adaptive Simpson; throws no_convergence if the
// recursion depth limit is hit before the interval estimate settles.
template <typename F>
double adaptive_simpson(const F &f, double a, double b, double tol,
                        int depth = 48) {
  return detail::adaptive_simpson_impl<double>(f, a, b, tol, depth);
}

template <typename F>
cplx adaptive_simpson_c(const F &f, double a, double b, double tol,
                        int depth = 48) {
  return detail::adaptive_simpson_impl<cplx>(f, a, b, tol, depth);
}

} // namespace xs

#endif
