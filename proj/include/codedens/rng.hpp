#pragma once

// Counter-based generator. A stream is fully determined by (seed, key), so
// trial i draws the same numbers no matter which worker runs it.

#include <cstdint>

namespace codedens {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t key)
        : base_(mix64(seed ^ mix64(key + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next() { return mix64(base_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    // Uniform on [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

    std::uint64_t draws() const { return counter_; }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

}  // namespace codedens
