#include "whirl/sections.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace whirl {

namespace {

// x^n by binary exponentiation; keeps the rounding error to a few ulps even
// at n = 64.
double ipow(double x, int n) {
  double r = 1.0;
  double base = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

double eval(double x, int p) { return ipow(x, p) * (x - 1.0) - 1.0; }

double eval_deriv(double x, int p) {
  return ipow(x, p - 1) * ((p + 1) * x - static_cast<double>(p));
}

}  // namespace

PFibResult p_fibonacci(int p, double tol) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  if (!(tol > 0.0) || !(tol < 1e-6))
    throw Error(errc::bad_tolerance, "tolerance must lie in (0, 1e-6), got " + std::to_string(tol));
  if (p == 0) return PFibResult{0, 2.0, 0.0, 0};

  double lo = 1.0 + 1e-9;  // eval < 0 here for every p <= 64
  double hi = 2.0;
  int iterations = 0;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (eval(mid, p) < 0.0 ? lo : hi) = mid;
    ++iterations;
  }

  double x = 0.5 * (lo + hi);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int k = 0; k < 60; ++k) {
    const double f = eval(x, p);
    (f < 0.0 ? lo : hi) = x;
    if (f == 0.0) break;
    const double step = f / eval_deriv(x, p);
    double next = x - step;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    ++iterations;
    if (std::abs(next - x) <= 4.0 * eps * x) {
      x = next;
      break;
    }
    x = next;
  }
  return PFibResult{p, x, std::abs(eval(x, p)), iterations};
}

std::vector<PFibResult> p_fibonacci_table(int p_max, double tol) {
  if (p_max < 0) throw std::invalid_argument("p_max must be >= 0");
  if (p_max > kPFibCap)
    throw Error(errc::cap_exceeded,
                "p_max " + std::to_string(p_max) + " exceeds cap " + std::to_string(kPFibCap));
  std::vector<PFibResult> rows;
  rows.reserve(p_max + 1);
  for (int p = 0; p <= p_max; ++p) rows.push_back(p_fibonacci(p, tol));
  return rows;
}

}  // namespace whirl
