#pragma once

#include <vector>

#include "whirl/errors.hpp"

namespace whirl {

// Root of x^(p+1) - x^p - 1 in (1, 2].  p = 1 gives the golden ratio,
// p = 4 the plastic-number relative 1.3247..., and alpha decreases toward 1
// as p grows.  These are the ratios whose spirals advance by one p-step
// rectangle per quarter turn.
struct PFibResult {
  int p = 0;
  double alpha = 0.0;
  double residual = 0.0;  // |alpha^p * (alpha - 1) - 1| after polishing
  int iterations = 0;     // bisection + polish steps; 0 for the analytic p = 0
};

inline constexpr int kPFibCap = 64;

// Requires p >= 0 and 0 < tol < 1e-6 (Error(bad_tolerance) otherwise).  The
// equation is evaluated as x^p*(x-1) - 1, which stays well-conditioned out to
// p = 64; the root is bracketed in (1, 2] by bisection and polished with
// safeguarded Newton steps, so the residual lands near machine precision
// regardless of tol.
PFibResult p_fibonacci(int p, double tol = 1e-13);

// Rows p = 0..p_max.  Requires 0 <= p_max <= kPFibCap (Error(cap_exceeded)).
std::vector<PFibResult> p_fibonacci_table(int p_max, double tol = 1e-13);

}  // namespace whirl
