#include "zeros.hpp"

#include <cmath>
#include <stdexcept>

#include "zeta.hpp"

namespace xs {

namespace {

double line_value(double t0, xi_method method, const eval_config &cfg) {
  switch (method) {
  case xi_method::incgamma:
  case xi_method::strip:
    return xi_critical_line(t0, cfg).value.real();
  case xi_method::classical:
    return xi_classical(cplx(0.5, t0), cfg.zeta).real();
  case xi_method::theta:
    return xi_theta_form(0.0, t0, cfg).value.real();
  default:
    throw std::domain_error("find_zeros: unsupported method");
  }
}

} // namespace

std::vector<zero_bracket> find_zeros(double t_from, double t_to,
                                     xi_method method,
                                     const eval_config &cfg) {
  if (!(t_from < t_to))
    throw std::domain_error("find_zeros: need t_from < t_to");

  std::vector<zero_bracket> out;
  const double coarse = 0.25;
  double a = t_from;
  double fa = line_value(a, method, cfg);
  while (a < t_to) {
    double b = std::min(a + coarse, t_to);
    double fb = line_value(b, method, cfg);
    if (fa == 0.0) {
      out.push_back({a, a, a});
    } else if (fa * fb < 0.0) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo >= 1e-6) {
        double mid = 0.5 * (lo + hi);
        double fmid = line_value(mid, method, cfg);
        if (fmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fmid < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fmid;
        }
      }
      out.push_back({lo, hi, 0.5 * (lo + hi)});
    }
    a = b;
    fa = fb;
  }
  return out;
}

} // namespace xs
