#pragma once

// Reproduction suite: every acceptance check as a row with a stored
// expectation. Rows are grouped by acceptance criterion (1..10).

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "smallcover/external_values.hpp"

namespace smallcover {

struct ReproRow {
  std::string id;        // "m3/100-expansion"; --filter matches substrings of this
  int criterion = 0;     // 1..10
  std::string claim;     // one line, human readable
  std::string expected;  // compared verbatim with compute()'s result
  std::function<std::string(const ExternalValues&)> compute;
};

/// The built-in table, in execution order.
std::vector<ReproRow> repro_rows();

/// Replaces `expected` of rows by id. Throws InvalidInput on unknown ids.
void override_expectations(std::vector<ReproRow>& rows, const std::map<std::string, std::string>& expected);

/// Wall-clock limit for all rows of one criterion, in seconds.
double criterion_time_limit(int criterion);
std::string_view criterion_title(int criterion);

struct ReproResult {
  std::string id;
  int criterion = 0;
  std::string expected;
  std::string actual;
  bool passed = false;
  double seconds = 0;
};

/// Runs the rows whose id contains `filter`, printing one line per row to
/// `out` (if non-null).
std::vector<ReproResult> run_repro(const std::vector<ReproRow>& rows, std::string_view filter,
                                   const ExternalValues& external, std::ostream* out);

}  // namespace smallcover
