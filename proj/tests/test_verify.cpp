#include <algorithm>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "whirl/verify.hpp"

using namespace whirl;

namespace {

const std::set<std::string> kAllNames = {
    "center_closed_vs_recursive", "circumcircle_through_pole", "diagonal_length_ratio",
    "diagonal_orthogonality",     "diagonal_pole_interception", "diagonal_slopes",
    "pole_circle_common",         "pole_closed_vs_iterative",   "pole_forms_agree",
    "pole_limit_large_m",         "pole_limit_near_one",        "pole_slope_lower_right",
};

}  // namespace

TEST_CASE("the default battery passes wall to wall") {
  const VerificationReport report = run_suite(default_grid());
  CHECK(report.all_passed());
  // 9 ratios x (2 per-square checks x 31 indices + 8 singletons) + 2 limits
  CHECK(report.summary.total == 632);
  CHECK(report.summary.passed == 632);
  // the largest residual comes from the limit rows, about 7e-7 against their
  // 1e-5 allowance
  CHECK(report.summary.max_residual < 1e-5);
  CHECK(report.summary.max_residual > 1e-9);

  std::set<std::string> seen;
  for (const CheckRow& row : report.checks) {
    seen.insert(row.name);
    CHECK(row.note.empty());
  }
  CHECK(seen == kAllNames);
}

TEST_CASE("every identity has at least one passing row") {
  const VerificationReport report = run_suite(default_grid());
  for (const std::string& name : kAllNames) {
    const bool hit = std::any_of(report.checks.begin(), report.checks.end(),
                                 [&](const CheckRow& r) { return r.name == name && r.pass; });
    CHECK_MESSAGE(hit, name);
  }
}

TEST_CASE("rows come out sorted by (name, m, index)") {
  const VerificationReport report = run_suite(default_grid());
  for (size_t i = 1; i < report.checks.size(); ++i) {
    const CheckRow& a = report.checks[i - 1];
    const CheckRow& b = report.checks[i];
    const bool ordered = a.name < b.name ||
                         (a.name == b.name && a.m < b.m) ||
                         (a.name == b.name && a.m == b.m &&
                          a.index.value_or(-1) < b.index.value_or(-1));
    CHECK(ordered);
  }
}

TEST_CASE("an invalid ratio becomes one failed row, the rest still run") {
  const VerificationReport report = run_suite({2.0, 0.5});
  CHECK(!report.all_passed());
  CHECK(report.summary.total == 73);  // 70 rows for m=2, 2 limits, 1 failure
  CHECK(report.summary.passed == 72);
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckRow& r) { return !r.pass; });
  REQUIRE(it != report.checks.end());
  CHECK(it->name == "spec_validation");
  CHECK(it->m == 0.5);
  CHECK(it->residual == -1.0);
  CHECK(!it->note.empty());
  // failure sentinels stay out of the residual maximum
  CHECK(report.summary.max_residual >= 0.0);
}

TEST_CASE("empty grid gives an empty, vacuously passing report") {
  const VerificationReport report = run_suite({});
  CHECK(report.checks.empty());
  CHECK(report.summary.total == 0);
  CHECK(report.summary.passed == 0);
  CHECK(report.summary.max_residual == 0.0);
  CHECK(report.all_passed());
}

TEST_CASE("suite arguments are guarded") {
  CHECK_THROWS_AS(run_suite({2.0}, 0.0), Error);
  CHECK_THROWS_AS(run_suite({2.0}, 1.0, -1), std::invalid_argument);
  try {
    run_suite({2.0}, 1.0, kVerifyIndexCap + 1);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
}

TEST_CASE("json layout is stable and ordered") {
  const VerificationReport report = run_suite({2.0}, 1.0, 3);
  const nlohmann::ordered_json j = report_to_json(report);
  std::vector<std::string> top;
  for (const auto& [key, value] : j.items()) top.push_back(key);
  CHECK(top == std::vector<std::string>{"grid", "checks", "summary"});

  REQUIRE(!j["checks"].empty());
  // first sorted row is a per-square check, so it carries an index
  std::vector<std::string> row_keys;
  for (const auto& [key, value] : j["checks"][0].items()) row_keys.push_back(key);
  CHECK(row_keys == std::vector<std::string>{"name", "m", "i", "residual", "pass", "note"});

  // singleton rows skip the index key
  bool found_plain = false;
  for (const auto& row : j["checks"]) {
    if (row["name"] == "pole_forms_agree") {
      CHECK(!row.contains("i"));
      found_plain = true;
    }
  }
  CHECK(found_plain);

  CHECK(j["summary"]["total"] == report.summary.total);
  CHECK(j["grid"].size() == 1);
}

TEST_CASE("reports are reproducible, even across threads") {
  const std::string once = report_to_json(run_suite(default_grid())).dump();
  const std::string twice = report_to_json(run_suite(default_grid())).dump();
  CHECK(once == twice);

  std::string from_a, from_b;
  std::thread a([&] { from_a = report_to_json(run_suite({1.1, 2.0}, 2.0, 10)).dump(); });
  std::thread b([&] { from_b = report_to_json(run_suite({1.1, 2.0}, 2.0, 10)).dump(); });
  a.join();
  b.join();
  CHECK(from_a == from_b);
  CHECK(from_a == report_to_json(run_suite({1.1, 2.0}, 2.0, 10)).dump());
}
