#pragma once

// Command-line front end. Exit codes: 0 success, 1 invalid input,
// 2 budget exceeded, 3 reproduction mismatch.

#include <iosfwd>

namespace smallcover {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitMismatch = 3;

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace smallcover
