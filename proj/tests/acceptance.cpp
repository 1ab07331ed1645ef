// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Criterion 10 is report-only and passes whatever the scan finds.

#include <iostream>

#include "listsep/verify.hpp"

int main() {
  using namespace listsep;
  VerifyReport report = verify_paper(VerifyConfig{});
  int failed = 0;
  for (const CheckResult& r : report.items) {
    const char* verdict = r.status == CheckStatus::Fail ? "FAIL" : r.status == CheckStatus::Skipped ? "SKIPPED" : "PASS";
    if (r.status == CheckStatus::Fail) ++failed;
    std::cout << verdict << " criterion " << r.id << " (" << r.title << "): observed " << r.observed << "; expected "
              << r.expected << (r.status == CheckStatus::Report ? " [report only]" : "") << "\n";
    for (const auto& f : r.findings) std::cout << "    " << f << "\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " of " << report.items.size() << " criteria failed\n";
  return failed ? 1 : 0;
}
