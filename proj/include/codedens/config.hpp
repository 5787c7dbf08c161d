#pragma once

#include "codedens/exact.hpp"

namespace codedens {

// Caps on exhaustive work. One record so a bigger machine can raise both.
struct Limits {
    BigInt enumeration = 1000000;   // codes or subspaces enumerated
    BigInt oracle_space = 65536;    // ambient size for brute-force volumes
};

// Defaults, with the enumeration cap taken from CODE_DENSITY_GUARD if set.
Limits default_limits();

// Throws SizeLimitError when count > guard.
void check_guard(const std::string& what, const BigInt& count, const BigInt& guard);

}  // namespace codedens
