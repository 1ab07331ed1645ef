#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "listsep/search.hpp"
#include "listsep/setsys.hpp"

namespace listsep {

enum class CheckStatus { Pass, Fail, Skipped, Report };
std::string to_string(CheckStatus status);

struct CheckResult {
  int id = 0;
  std::string title;
  CheckStatus status = CheckStatus::Pass;
  std::string observed;
  std::string expected;
  std::vector<std::string> findings;  // mismatching points, skipped ranges, scan deviations
  double seconds = 0.0;
};

struct VerifyConfig {
  /// Grid points on more vertices than this are skipped.
  int max_n = 5;
  /// Replaces the built-in four-vertex example when set.
  std::optional<ListAssignment> example;
  SearchOptions search;
  int jobs = 1;
  /// Run only these criteria (all when empty).
  std::vector<int> only;
};

struct VerifyReport {
  std::vector<CheckResult> items;
  bool any_failed() const;
};

/// The four-vertex assignment with lists {1..5}, {1,2,3,6,7}, {3,4,6,7,8}, {4,6,8,9,10}.
ListAssignment example_assignment();

VerifyReport verify_paper(const VerifyConfig& config);

/// One "[STATUS] id. title: observed ...; expected ..." line per item, findings
/// indented below. Timings are off by default so output stays byte-stable.
void print_report(const VerifyReport& report, std::ostream& out, bool timings = false);

}  // namespace listsep
