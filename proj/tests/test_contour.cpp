#include <cmath>
#include <stdexcept>

#include "contour.hpp"
#include "doctest.h"
#include "golden_values.hpp"

using xs::cplx;

namespace {

constexpr double PI = 3.141592653589793238462643383279503;

// Archetype boundary: cosh restricted to the line Re = 3/2. Even, entire,
// real on both axes, and cosh(i t0) = cos t0 gives an exact reference.
cplx cosh_boundary(double t) { return std::cosh(cplx(1.5, t)); }

xs::quadrature_window window(double T, double step) {
  xs::quadrature_window w;
  w.T = T;
  w.step = step;
  w.a = 1.5;
  return w;
}

} // namespace

TEST_CASE("boundary quadrature reproduces cos on the imaginary axis") {
  cplx v = xs::strip_continuation(cosh_boundary, cplx(0.0, 0.0),
                                  window(40.0, 0.01));
  CHECK(std::abs(v - cplx(1.0)) <= 1e-6);

  v = xs::strip_continuation(cosh_boundary, cplx(0.0, 1.0),
                             window(60.0, 0.01));
  CHECK(std::abs(v - cplx(std::cos(1.0))) <= 1e-6);
}

TEST_CASE("result is stable under doubling the truncation length") {
  cplx a = xs::strip_continuation(cosh_boundary, cplx(0.0, 2.0),
                                  window(40.0, 0.01));
  cplx b = xs::strip_continuation(cosh_boundary, cplx(0.0, 2.0),
                                  window(80.0, 0.01));
  CHECK(std::abs(a - b) <= 2e-6);
  CHECK(std::abs(b - cplx(std::cos(2.0))) <= 1e-6);
}

TEST_CASE("halving the step divides the error by at least eight") {
  // Real z0 keeps the kernel pole at t = 0 where the window is flat, so
  // the quadrature error is governed by the h^4 Simpson term.
  double ref = std::cosh(1.0);
  double e_coarse = std::abs(xs::strip_continuation(cosh_boundary,
                                                    cplx(1.0, 0.0),
                                                    window(80.0, 0.16)) -
                             cplx(ref));
  double e_fine = std::abs(xs::strip_continuation(cosh_boundary,
                                                  cplx(1.0, 0.0),
                                                  window(80.0, 0.08)) -
                           cplx(ref));
  CHECK(e_fine * 8.0 <= e_coarse);
}

TEST_CASE("window domain gates") {
  CHECK_THROWS_AS(xs::strip_continuation(cosh_boundary, cplx(0.0, 0.0),
                                         window(40.0, 1.0)), // step > T/50
                  std::domain_error);
  CHECK_THROWS_AS(xs::strip_continuation(cosh_boundary, cplx(1.5, 0.0),
                                         window(40.0, 0.01)), // |Re| = a
                  std::domain_error);
  xs::quadrature_window w = window(40.0, 0.01);
  w.taper_start = 40.0; // no taper room left
  CHECK_THROWS_AS(xs::strip_continuation(cosh_boundary, cplx(0.0, 0.0), w),
                  std::domain_error);
  w = window(0.0, 0.01); // empty range
  CHECK_THROWS_AS(xs::strip_continuation(cosh_boundary, cplx(0.0, 0.0), w),
                  std::domain_error);
}

TEST_CASE("xi from boundary samples matches the series goldens") {
  xs::eval_config cfg;
  cfg.quad_T = 50.0; // tail below 1e-11 while keeping the suite quick
  xs::xi_result r = xs::xi_via_contour(cplx(0.0, 0.0), cfg);
  CHECK(r.converged);
  CHECK(std::abs(r.value.real() - golden::xi_half) <= 1e-9);

  r = xs::xi_via_contour(cplx(0.0, 12.0), cfg);
  CHECK(std::abs(r.value.real() - golden::xi_half_12i_re) <= 1e-9);
  CHECK(std::abs(r.value.imag()) <= 1e-7);

  r = xs::xi_via_contour(cplx(0.3, 2.0), cfg);
  CHECK(std::abs(r.value - cplx(golden::xi_08_2i_re, golden::xi_08_2i_im)) <=
        1e-9);
}

TEST_CASE("contour respects the strip gate") {
  xs::eval_config cfg;
  cfg.quad_T = 50.0;
  CHECK_THROWS_AS(xs::xi_via_contour(cplx(0.6, 0.0), cfg), std::domain_error);
}

TEST_CASE("truncation length from the decay bound") {
  CHECK(xs::tail_bound_T(1e-6, 10.0) == 32.0);
  CHECK(xs::tail_bound_T(1e-12, 10.0) == 51.0);

  // Returned T sits on the half-integer grid, satisfies the bound, and is
  // the first grid point that does.
  double eps = 1e-9;
  double T = xs::tail_bound_T(eps, 10.0);
  CHECK(T == std::floor(T * 2.0) / 2.0);
  auto bound = [](double t) {
    return 10.0 * std::pow(t, 2.5) * std::exp(-PI * t / 4.0);
  };
  CHECK(bound(T) < eps);
  CHECK(bound(T - 0.5) >= eps);
  CHECK(xs::tail_bound_T(1e-12, 10.0) > xs::tail_bound_T(1e-6, 10.0));
}
