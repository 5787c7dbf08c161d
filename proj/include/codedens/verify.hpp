#pragma once

// Exhaustive verification suites shared by `verify` and the acceptance run.

#include "codedens/experiment.hpp"

#include <functional>
#include <string>
#include <vector>

namespace codedens {

enum class Grid { Micro, Desk };
Grid parse_grid(const std::string& s);
std::string to_string(Grid g);

struct SuiteResult {
    std::string name;
    long checked = 0;
    std::vector<Verdict> failures;
    bool pass() const { return failures.empty() && checked > 0; }
};

// ball_volume against the enumerated weight distribution. Desk grid:
// q in {2,3}, m <= 4, n <= 4, q^{mn} <= 2^16, t | n with t in {1,2,4}.
SuiteResult volume_suite(Grid g);

// Exhaustive densities against density_bracket over all three metrics.
SuiteResult bracket_suite(Grid g);

// Sum-rank with t = 1 against rank and with eta = 1 against Hamming:
// volumes at all radii and distances between all pairs of vectors.
SuiteResult reduction_suite(Grid g);

std::vector<SuiteResult> run_verification(Grid g);

}  // namespace codedens
