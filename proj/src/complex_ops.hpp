#ifndef XISTRIP_COMPLEX_OPS_HPP
#define XISTRIP_COMPLEX_OPS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace xs {

using cplx = std::complex<double>;

// All branch decisions live here: clog is the principal branch,
// Im(clog) in (-pi, pi], and every power of a positive real base goes
// through cpow so no caller picks its own branch.

inline cplx clog(const cplx &z) {
  if (z.real() == 0.0 && z.imag() == 0.0)
    throw std::domain_error("clog: argument is zero");
  return std::log(z);
}

inline cplx cexp(const cplx &z) { return std::exp(z); }

// base^z for real base > 0 only; complex bases never occur here.
inline cplx cpow(double base, const cplx &z) {
  if (!(base > 0.0))
    throw std::domain_error("cpow: base must be positive");
  return std::exp(z * std::log(base));
}

// Compensated accumulator (Neumaier variant): the correction term also
// absorbs the case |addend| > |sum|.
struct kahan_sum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

struct kahan_sum_c {
  kahan_sum re, im;
  void add(const cplx &z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cplx value() const { return cplx(re.value(), im.value()); }
};

} // namespace xs

#endif
