#include "whirl/verify.hpp"

#include <algorithm>
#include <cmath>

#include "whirl/diagonals.hpp"
#include "whirl/tolerances.hpp"

namespace whirl {

std::vector<double> default_grid() {
  return {1.01, 1.1, 1.2851990332, 1.3247179572, 1.4655712318, 1.618033988749895, 2.0, 5.0, 60.0};
}

namespace {

void add(std::vector<CheckRow>& rows, std::string name, double m, std::optional<int> index,
         double residual, double tolerance) {
  rows.push_back(CheckRow{std::move(name), m, index, residual,
                          std::isfinite(residual) && residual <= tolerance, ""});
}

void run_for_ratio(std::vector<CheckRow>& rows, double m, double L, int max_i) {
  SpiralSpec spec;
  try {
    spec = make_spec(m, L, {0.0, 0.0});
  } catch (const Error& e) {
    rows.push_back(CheckRow{"spec_validation", m, std::nullopt, -1.0, false, e.what()});
    return;
  }
  const Pole pole = pole_closed(spec);

  for (int i = 0; i <= max_i; ++i) {
    add(rows, "center_closed_vs_recursive", m, i,
        distance(square_center_closed(spec, i), square_center_recursive(spec, i)) / L,
        tol::center_equivalence);
    const Vec2 off = pole_offset(spec, i);
    const double scaled = (off.x * off.x + off.y * off.y) * 2.0 *
                          std::pow(m, 2.0 * static_cast<double>(i)) / (L * L);
    add(rows, "circumcircle_through_pole", m, i, std::abs(scaled - 1.0), tol::circumcircle);
  }

  const Pole stepped = pole_iterative(spec, 1e-12);
  add(rows, "pole_closed_vs_iterative", m, std::nullopt,
      distance(pole.point, stepped.point) / L, tol::pole_methods_agree);

  const Point alt = pole_closed_via_lower_right(spec);
  const double scale = L + std::abs(pole.point.x) + std::abs(pole.point.y);
  add(rows, "pole_forms_agree", m, std::nullopt, distance(pole.point, alt) / scale,
      tol::pole_forms_agree);

  const Point lr = spec.lower_right();
  const double slope = (pole.point.y - lr.y) / (pole.point.x - lr.x);
  add(rows, "pole_slope_lower_right", m, std::nullopt, std::abs(slope - m) / m, tol::pole_slope);

  const Vec2 v0 = pole.point - spec.center0;
  const double dist2 = v0.x * v0.x + v0.y * v0.y;
  add(rows, "pole_circle_common", m, std::nullopt, std::abs(dist2 - L * L / 2.0) / (L * L),
      tol::pole_circle);

  const DiagonalReport diag = compute_report(spec);
  add(rows, "diagonal_orthogonality", m, std::nullopt, diag.orthogonality_residual,
      tol::diag_orthogonality);
  add(rows, "diagonal_pole_interception", m, std::nullopt, diag.pole_distance / L,
      tol::diag_interception);
  add(rows, "diagonal_length_ratio", m, std::nullopt, std::abs(diag.length_ratio - m) / m,
      tol::diag_length_ratio);
  const double slope_res = std::max(std::abs(diag.slope_d1 - (-1.0 / m)) * m,
                                    std::abs(diag.slope_d2 - m) / m);
  add(rows, "diagonal_slopes", m, std::nullopt, slope_res, tol::diag_slopes);
}

void run_limits(std::vector<CheckRow>& rows, double L) {
  {
    const double m = 1.0 + 1e-6;
    const SpiralSpec spec = make_spec(m, L, {0.0, 0.0});
    add(rows, "pole_limit_near_one", m, std::nullopt,
        distance(pole_closed(spec).point, spec.lower_right()) / L, tol::pole_limits);
  }
  {
    const double m = 1e6;
    const SpiralSpec spec = make_spec(m, L, {0.0, 0.0});
    add(rows, "pole_limit_large_m", m, std::nullopt,
        distance(pole_closed(spec).point, spec.upper_right()) / L, tol::pole_limits);
  }
}

}  // namespace

VerificationReport run_suite(const std::vector<double>& grid, double L, int max_i) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw Error(errc::bad_side, "side L must be finite and > 0");
  if (max_i < 0) throw std::invalid_argument("max_i must be >= 0");
  if (max_i > kVerifyIndexCap)
    throw Error(errc::cap_exceeded, "max_i " + std::to_string(max_i) + " exceeds cap " +
                                        std::to_string(kVerifyIndexCap));

  VerificationReport report;
  report.grid = grid;
  for (double m : grid) run_for_ratio(report.checks, m, L, max_i);
  if (!grid.empty()) run_limits(report.checks, L);

  std::sort(report.checks.begin(), report.checks.end(), [](const CheckRow& a, const CheckRow& b) {
    if (a.name != b.name) return a.name < b.name;
    if (a.m != b.m) return a.m < b.m;
    return a.index.value_or(-1) < b.index.value_or(-1);
  });

  report.summary.total = static_cast<int>(report.checks.size());
  for (const CheckRow& row : report.checks) {
    if (row.pass) ++report.summary.passed;
    if (row.residual >= 0.0)
      report.summary.max_residual = std::max(report.summary.max_residual, row.residual);
  }
  return report;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["grid"] = report.grid;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRow& row : report.checks) {
    nlohmann::ordered_json r;
    r["name"] = row.name;
    r["m"] = row.m;
    if (row.index) r["i"] = *row.index;
    r["residual"] = row.residual;
    r["pass"] = row.pass;
    r["note"] = row.note;
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", report.summary.total},
                  {"passed", report.summary.passed},
                  {"max_residual", report.summary.max_residual}};
  return j;
}

}  // namespace whirl
