#pragma once

// Binomials, Gaussian binomials, the Euler-product constant and bounded
// integer compositions.

#include "codedens/exact.hpp"

#include <optional>
#include <vector>

namespace codedens {

// Number of b-dimensional subspaces of an a-dimensional space over a field
// with `base` elements. Zero when b < 0 or b > a.
BigInt qbinom(long a, long b, const BigInt& base);
BigInt qbinom(long a, long b, std::uint64_t base);

BigInt binom(long n, long k);

// prod_{j<i} (base^m - base^j): the number of ordered i-tuples of
// F_base-independent elements in F_{base^m}.
BigInt falling_qpower(const BigInt& base, long m, long i);

// Rational interval [lo, hi] known to contain a real number.
struct Enclosure {
    BigRat lo;
    BigRat hi;

    BigRat width() const { return hi - lo; }
    bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
    Enclosure widened(const BigRat& by) const { return {lo - by, hi + by}; }
};

// Enclosure of prod_{i>=1} q^i / (q^i - 1) of width at most `width`.
Enclosure euler_pi(const BigInt& q, const BigRat& width);

// A length-t vector of non-negative parts, each at most `cap`.
struct Composition {
    std::vector<long> parts;
    long cap = 0;

    long sum() const;
    friend bool operator==(const Composition&, const Composition&) = default;
};

// Lazily yields every composition of r into exactly t parts bounded by
// cap, in lexicographic order. Memory stays O(t).
class Compositions {
public:
    Compositions(long r, long t, long cap);

    // Advances to the next composition; nullopt once exhausted.
    std::optional<Composition> next();
    // Same, but exposes the parts in place without copying.
    const std::vector<long>* next_parts();

private:
    void fill_smallest(std::size_t from, long remaining);
    bool advance();

    long r_;
    long cap_;
    std::vector<long> parts_;
    bool started_ = false;
    bool done_ = false;
};

// Eager convenience wrapper, intended for tests and small inputs.
std::vector<Composition> all_compositions(long r, long t, long cap);

}  // namespace codedens
