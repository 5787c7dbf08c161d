#pragma once

// Finite-parameter bounds: Singleton-type maxima, quasi-extremal
// dimensions, the Gilbert-Varshamov cardinality and two-sided density
// brackets for nonlinear and F_{q^ℓ}-linear codes.

#include "codedens/metric.hpp"

namespace codedens {

struct CodeFamilySpec {
    bool linear = false;
    BigInt cardinality;  // S, nonlinear only
    long dimension = 0;  // k over F_{q^ℓ}, linear only
    long d = 1;

    static CodeFamilySpec nonlinear(BigInt S, long d) { return {false, std::move(S), 0, d}; }
    static CodeFamilySpec linear_code(long k, long d) { return {true, 0, k, d}; }

    // Throws InvalidArgument if the spec does not fit the space.
    void validate(const AmbientSpace& space) const;
};

struct DensityBracket {
    BigRat lower;
    BigRat upper;
    BigRat raw_lower;
    BigRat raw_upper;

    static DensityBracket from_raw(BigRat lo, BigRat hi);
    bool contains(const BigRat& x) const { return lower <= x && x <= upper; }
};

struct NonlinearBoundTerms {
    BigRat beta0;
    BigRat beta1;
    BigRat theta;
};

struct SublinearBoundTerms {
    BigRat theta_bar;
    BigInt vertices;  // (v - 1) / (q^ℓ - 1)
};

struct NonlinearBracket {
    DensityBracket bracket;
    NonlinearBoundTerms terms;
};

struct SublinearBracket {
    DensityBracket bracket;
    SublinearBoundTerms terms;
};

struct CountBracket {
    BigRat lower;
    BigRat upper;
};

// Exponent E with singleton_max = q^E.
long singleton_exponent(const AmbientSpace& space, long d);
BigInt singleton_max(const AmbientSpace& space, long d);

struct LinearDimension {
    long k_star;
    bool extremal_is_singleton;
};
// Uses the space's ℓ as the linearity degree.
LinearDimension max_linear_dimension(const AmbientSpace& space, long d);

BigInt gv_cardinality(const AmbientSpace& space, long d);

// Nonlinear statements are usually written for F_q^n; here the alphabet is
// F_{q^m}, so every q^n becomes q^{mn}.
NonlinearBracket nonlinear_bracket(const AmbientSpace& space, const BigInt& S, long d);
SublinearBracket sublinear_bracket(const AmbientSpace& space, long k, long d);
DensityBracket density_bracket(const AmbientSpace& space, const CodeFamilySpec& spec);

// Bounds on the number of codes with minimum distance at most d - 1.
CountBracket bad_code_count_brackets(const AmbientSpace& space, const CodeFamilySpec& spec);
// Number of codes in the family: C(q^{mn}, S) or [ns, k]_{q^ℓ}.
BigInt code_count(const AmbientSpace& space, const CodeFamilySpec& spec);

}  // namespace codedens
