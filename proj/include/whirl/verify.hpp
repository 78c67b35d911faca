#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "whirl/spiral.hpp"

namespace whirl {

struct CheckRow {
  std::string name;
  double m = 0.0;
  std::optional<int> index;  // present for per-square checks
  double residual = 0.0;     // dimensionless; -1 marks a row that could not run
  bool pass = false;
  std::string note;          // failure reason, empty otherwise
};

struct VerifySummary {
  int total = 0;
  int passed = 0;
  double max_residual = 0.0;
};

struct VerificationReport {
  std::vector<double> grid;
  std::vector<CheckRow> checks;
  VerifySummary summary;

  bool all_passed() const { return summary.passed == summary.total; }
};

inline constexpr int kVerifyIndexCap = 64;

// The nine ratios the whole test battery runs on: values just above 1, the
// section roots for p = 5, 4, 2, the golden ratio, and a spread of larger
// ratios up to 60.
std::vector<double> default_grid();

// Evaluates every geometric identity of the construction on the given ratios
// (centers closed vs stepped, pole forms, circumscribed circles, the common
// pole circle, diagonals, limit behavior) and reports one row per check
// instance.  Pure: the report depends only on (grid, L, max_i).  Rows are
// ordered by (name, m, index).  An invalid grid entry becomes a single failed
// "spec_validation" row and does not abort the rest.  max_i caps the square
// index for per-square checks; requires 0 <= max_i <= kVerifyIndexCap.
VerificationReport run_suite(const std::vector<double>& grid, double L = 1.0, int max_i = 30);

// Stable layout: grid, checks (name, m, optional index, residual, pass,
// note), summary (total, passed, max_residual).
nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace whirl
