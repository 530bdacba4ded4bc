#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gamma.hpp"
#include "golden_values.hpp"
#include "zeta.hpp"

using xs::cplx;

namespace {
constexpr double PI = 3.141592653589793238462643383279503;
const xs::zeta_config CFG;

double rel_err(const cplx &got, const cplx &want) {
  return std::abs(got - want) / std::abs(want);
}
} // namespace

TEST_CASE("Dirichlet series values at even integers and complex points") {
  CHECK(rel_err(xs::zeta_dirichlet(cplx(2.0, 0.0), CFG),
                cplx(PI * PI / 6.0)) <= 1e-13);
  CHECK(rel_err(xs::zeta_dirichlet(cplx(4.0, 0.0), CFG),
                cplx(std::pow(PI, 4) / 90.0)) <= 1e-13);
  CHECK(rel_err(xs::zeta_dirichlet(cplx(2.0, 12.0), CFG),
                cplx(golden::zeta_2_12i_re, golden::zeta_2_12i_im)) <= 1e-13);
  CHECK(rel_err(xs::zeta_dirichlet(cplx(2.0, 40.0), CFG),
                cplx(golden::zeta_2_40i_re, golden::zeta_2_40i_im)) <= 1e-13);
}

TEST_CASE("strip series values") {
  CHECK(rel_err(xs::zeta_strip(cplx(0.5, 0.0), CFG), cplx(golden::zeta_half)) <=
        1e-10);
  CHECK(rel_err(xs::zeta_strip(cplx(0.5, 12.0), CFG),
                cplx(golden::zeta_half_12i_re, golden::zeta_half_12i_im)) <=
        1e-10);
}

TEST_CASE("the two routes agree where their domains overlap") {
  cplx s(2.0, 5.0);
  CHECK(std::abs(xs::zeta_strip(s, CFG) - xs::zeta_dirichlet(s, CFG)) <= 1e-10);
}

TEST_CASE("dispatch switches routes at Re(s) = 2") {
  cplx hi(2.0, 12.0);
  CHECK(xs::zeta_dispatch(hi, CFG) == xs::zeta_dirichlet(hi, CFG));
  cplx lo(1.99, 12.0);
  CHECK(xs::zeta_dispatch(lo, CFG) == xs::zeta_strip(lo, CFG));
}

TEST_CASE("zeta is real on the real axis") {
  for (double sigma : {0.3, 0.5, 1.5, 2.0, 3.0}) {
    cplx v = xs::zeta_dispatch(cplx(sigma, 0.0), CFG);
    CHECK(std::abs(v.imag()) <= 1e-15);
  }
}

TEST_CASE("reflection property links the two half-strips") {
  // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s); every factor
  // on the right comes from a different unit than zeta_strip itself.
  for (cplx s : {cplx(0.3, 5.0), cplx(0.7, -3.0), cplx(0.5, 12.0)}) {
    cplx lhs = xs::zeta_strip(s, CFG);
    cplx rhs = xs::cpow(2.0, s) * xs::cpow(PI, s - 1.0) *
               std::sin(PI * s / 2.0) * xs::gamma_fn(1.0 - s) *
               xs::zeta_strip(1.0 - s, CFG);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("domain gates") {
  CHECK_THROWS_AS(xs::zeta_dirichlet(cplx(1.5, 0.0), CFG), std::domain_error);
  CHECK_THROWS_AS(xs::zeta_strip(cplx(2.5, 0.0), CFG), std::domain_error);
  CHECK_THROWS_AS(xs::zeta_strip(cplx(-0.5, 0.0), CFG), std::domain_error);
  CHECK_THROWS_AS(xs::zeta_strip(cplx(1.0, 0.0), CFG), std::domain_error);
  // Denominator zero of the alternating-series transform on Re(s) = 1.
  double t_bad = 2.0 * PI / std::log(2.0);
  CHECK_THROWS_AS(xs::zeta_strip(cplx(1.0, t_bad), CFG), std::domain_error);
}

TEST_CASE("product-form xi golden values") {
  CHECK(rel_err(xs::xi_classical(cplx(0.5, 0.0), CFG), cplx(golden::xi_half)) <=
        1e-12);
  CHECK(rel_err(xs::xi_classical(cplx(2.0, 0.0), CFG), cplx(golden::xi_two)) <=
        1e-12);
  CHECK(rel_err(xs::xi_classical(cplx(2.0, 7.0), CFG),
                cplx(golden::xi_2_7i_re, golden::xi_2_7i_im)) <= 1e-12);
  CHECK(rel_err(xs::xi_classical(cplx(0.8, 5.0), CFG),
                cplx(golden::xi_08_5i_re, golden::xi_08_5i_im)) <= 1e-10);
}

TEST_CASE("xi is symmetric under s -> 1 - s") {
  for (cplx s : {cplx(0.8, 5.0), cplx(0.3, 2.0), cplx(0.9, -7.0)}) {
    cplx a = xs::xi_classical(s, CFG);
    cplx b = xs::xi_classical(1.0 - s, CFG);
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("xi domain gates") {
  CHECK_THROWS_AS(xs::xi_classical(cplx(0.0, 0.0), CFG), std::domain_error);
  CHECK_THROWS_AS(xs::xi_classical(cplx(1.0, 0.0), CFG), std::domain_error);
}

TEST_CASE("boundary samples decay like the certified bound") {
  // |xi(2+it)| <= 10 t^(5/2) e^(-pi t/4): the inequality the contour
  // truncation rests on, spot-checked before acceptance sweeps it densely.
  for (double t = 5.0; t <= 40.0; t += 5.0) {
    double v = std::abs(xs::xi_classical(cplx(2.0, t), CFG));
    double bound = 10.0 * std::pow(t, 2.5) * std::exp(-PI * t / 4.0);
    CHECK(v < bound);
  }
}
