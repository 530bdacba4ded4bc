#ifndef XISTRIP_ZEROS_HPP
#define XISTRIP_ZEROS_HPP

#include <vector>

#include "xi_series.hpp"

namespace xs {

struct zero_bracket {
  double t_low = 0.0;
  double t_high = 0.0;
  double root = 0.0;
};

// Sign-change zeros of xi(1/2 + it) over [t_from, t_to]: coarse scan at
// step 0.25, bisection until the bracket is narrower than 1e-6. The
// evaluation route is incgamma, classical, or theta.
std::vector<zero_bracket> find_zeros(double t_from, double t_to,
                                     xi_method method,
                                     const eval_config &cfg);

} // namespace xs

#endif
