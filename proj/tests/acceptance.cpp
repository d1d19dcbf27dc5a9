// Acceptance run: one line per criterion, all rows of the reproduction table.
//
// Exit status is 0 when the set of failing criteria equals the --known-failure
// set. A known failure is still printed as FAIL; the flag only records that
// the failure has been analysed, and a known failure that starts passing
// makes the run fail so the note gets revisited.

#include <iomanip>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>

#include "smallcover/external_values.hpp"
#include "smallcover/repro.hpp"

using namespace smallcover;

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> known;
  bool verbose = false;
  app.add_option("--known-failure", known, "criterion expected to fail (repeatable)");
  app.add_flag("-v,--verbose", verbose, "print every row");
  CLI11_PARSE(app, argc, argv);

  const ExternalValues ext = ExternalValues::load_default();
  const auto rows = repro_rows();

  std::map<int, std::vector<ReproRow>> by_criterion;
  for (const auto& r : rows) by_criterion[r.criterion].push_back(r);

  std::set<int> failed;
  for (const auto& [c, group] : by_criterion) {
    const auto results = run_repro(group, "", ext, verbose ? &std::cout : nullptr);
    double seconds = 0;
    std::size_t passed = 0;
    for (const auto& r : results) {
      seconds += r.seconds;
      passed += r.passed ? 1 : 0;
    }
    const double limit = criterion_time_limit(c);
    const bool ok = passed == results.size() && seconds <= limit;
    if (!ok) failed.insert(c);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c << "  " << std::left << std::setw(38)
              << criterion_title(c) << std::right << "  rows " << passed << "/" << results.size() << "  "
              << std::fixed << std::setprecision(2) << seconds << " s (limit " << std::setprecision(0) << limit
              << " s)" << "\n";
    if (!ok && !verbose) {
      for (const auto& r : results) {
        if (r.passed) continue;
        std::cout << "        " << r.id << "\n          expected: " << r.expected << "\n          computed: " << r.actual
                  << "\n";
      }
      if (passed == results.size()) std::cout << "        over the time limit\n";
    }
  }

  const std::set<int> expected(known.begin(), known.end());
  std::cout << (by_criterion.size() - failed.size()) << "/" << by_criterion.size() << " criteria passed";
  if (!expected.empty()) {
    std::cout << "; known failures:";
    for (int c : expected) std::cout << " " << c;
  }
  std::cout << "\n";
  for (int c : expected) {
    if (!failed.count(c)) std::cout << "criterion " << c << " is listed as a known failure but passed\n";
  }
  return failed == expected ? 0 : 1;
}
