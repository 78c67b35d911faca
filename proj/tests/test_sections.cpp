#include <cmath>

#include "doctest.h"
#include "whirl/sections.hpp"

using namespace whirl;

namespace {

// Root of x^p (x - 1) = 1 by plain long-double bisection.  Slower and simpler
// than the library path; exists purely to cross-check it.
double bisect_oracle(int p) {
  long double lo = 1.0L, hi = 2.0L;
  auto f = [p](long double x) {
    long double r = 1.0L;
    for (int k = 0; k < p; ++k) r *= x;
    return r * (x - 1.0L) - 1.0L;
  };
  for (int k = 0; k < 200; ++k) {
    const long double mid = 0.5L * (lo + hi);
    (f(mid) < 0.0L ? lo : hi) = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace

TEST_CASE("published ratios, truncated to ten decimals") {
  // reference values keep exactly ten decimal digits, so each root must sit
  // in [table, table + 1e-10)
  const double table[] = {2.0,          1.6180339887, 1.4655712318,
                          1.3802775690, 1.3247179572, 1.2851990332};
  const auto rows = p_fibonacci_table(5);
  REQUIRE(rows.size() == 6);
  for (int p = 0; p <= 5; ++p) {
    CHECK(rows[p].p == p);
    const double diff = rows[p].alpha - table[p];
    CHECK(diff >= 0.0);
    CHECK(diff < 1e-10);
  }
}

TEST_CASE("p = 0 is the exact doubling ratio") {
  const PFibResult r = p_fibonacci(0);
  CHECK(r.alpha == 2.0);
  CHECK(r.residual == 0.0);
  CHECK(r.iterations == 0);
}

TEST_CASE("known algebraic identities of the small roots") {
  const double golden = p_fibonacci(1).alpha;
  CHECK(std::abs(golden * golden - golden - 1.0) <= 1e-13);

  // x^5 - x^4 - 1 factors as (x^2 - x + 1)(x^3 - x - 1): the p = 4 root is
  // the real root of the cubic
  const double plastic = p_fibonacci(4).alpha;
  CHECK(std::abs(plastic * plastic * plastic - plastic - 1.0) <= 1e-13);

  const double super = p_fibonacci(2).alpha;
  CHECK(std::abs(super * super * super - super * super - 1.0) <= 1e-13);
}

TEST_CASE("roots agree with an independent bisection") {
  for (int p : {1, 2, 5, 17, 64})
    CHECK(p_fibonacci(p).alpha == doctest::Approx(bisect_oracle(p)).epsilon(1e-14));
}

TEST_CASE("roots decrease strictly toward 1") {
  const auto rows = p_fibonacci_table(kPFibCap);
  REQUIRE(rows.size() == kPFibCap + 1);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].alpha < rows[i - 1].alpha);
    CHECK(rows[i].alpha > 1.0);
  }
  // far end of the table: close to 1 but not degenerate
  CHECK(rows.back().alpha < 1.06);
  CHECK(rows.back().alpha > 1.04);
}

TEST_CASE("residuals land near machine precision regardless of tol") {
  for (const PFibResult& r : p_fibonacci_table(kPFibCap)) {
    CHECK(r.residual <= 1e-13);
    if (r.p > 0) CHECK(r.iterations > 0);
  }
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(p_fibonacci(-1), std::invalid_argument);
  for (double bad : {0.0, -1e-9, 1e-6, 0.5}) {
    try {
      p_fibonacci(3, bad);
      FAIL("accepted tol = " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == errc::bad_tolerance);
    }
  }
  CHECK_THROWS_AS(p_fibonacci_table(-1), std::invalid_argument);
  try {
    p_fibonacci_table(kPFibCap + 1);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
}
