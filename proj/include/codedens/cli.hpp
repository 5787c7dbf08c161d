#pragma once

// Command-line front end. run_cli takes the arguments after the program
// name and returns the process exit code:
//   0 success, 1 verification failure, 2 invalid arguments, 3 guard exceeded.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace codedens {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20240917;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// RFC 4180 field: quoted only when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace codedens
