#include "codedens/config.hpp"

#include <cstdlib>

namespace codedens {

Limits default_limits() {
    Limits out;
    if (const char* env = std::getenv("CODE_DENSITY_GUARD"); env && *env) {
        BigInt v = parse_integer(env);
        if (v <= 0) throw InvalidArgument("CODE_DENSITY_GUARD must be positive");
        out.enumeration = v;
    }
    return out;
}

void check_guard(const std::string& what, const BigInt& count, const BigInt& guard) {
    if (count > guard) throw SizeLimitError(what, count, guard);
}

}  // namespace codedens
