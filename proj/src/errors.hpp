#ifndef XISTRIP_ERRORS_HPP
#define XISTRIP_ERRORS_HPP

#include <stdexcept>

namespace xs {

// Domain violations use std::domain_error; this one signals an exhausted
// iteration budget. Both are converted to status codes at the C boundary.
struct no_convergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace xs

#endif
