#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace codedens {

using BigInt = mpz_class;
using BigRat = mpq_class;

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotImplemented : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Thrown when an exhaustive enumeration would exceed the configured guard.
// `count` is the exact number of objects the caller asked to enumerate.
class SizeLimitError : public std::runtime_error {
public:
    SizeLimitError(const std::string& what, BigInt count, BigInt guard)
        : std::runtime_error(what + ": " + count.get_str() + " objects exceeds guard " +
                             guard.get_str()),
          count_(std::move(count)),
          guard_(std::move(guard)) {}

    const BigInt& count() const { return count_; }
    const BigInt& guard() const { return guard_; }

private:
    BigInt count_;
    BigInt guard_;
};

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt pow(std::uint64_t base, unsigned long exponent);

// base^exponent for a possibly negative exponent.
BigRat pow_rat(const BigRat& base, long exponent);

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt floor(const BigRat& x);
BigInt ceil(const BigRat& x);

// "p/q" form, always with a denominator ("1/1" for one).
std::string to_string(const BigRat& x);
// Decimal rendering with `digits` fractional digits, rounded toward zero.
std::string to_decimal(const BigRat& x, int digits);
// Accepts "p/q", "p", or a finite decimal "0.125".
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

bool fits_u64(const BigInt& x);
std::uint64_t to_u64(const BigInt& x);
long to_long(const BigInt& x);

}  // namespace codedens
