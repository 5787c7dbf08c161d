#pragma once

// Prime fields, their extensions F_{p^m} = F_p[x]/(f), and the tower
// F_p ⊆ F_{p^ℓ} ⊆ F_{p^m} used by the samplers and brute-force oracles.
//
// Elements of F_{p^m} are stored as a single integer whose base-p digits
// are the coefficients over the polynomial basis 1, x, ..., x^{m-1}. Digit
// i of an element is therefore its i-th coordinate over F_p, which is all
// the weight functions need.

#include "codedens/exact.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace codedens {

using Elem = std::uint64_t;

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};
std::optional<PrimePower> as_prime_power(std::uint64_t q);

// Polynomials over F_p, lowest coefficient first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

namespace poly {
Poly trim(Poly a);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly mod(Poly a, const Poly& f, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
Poly powmod(const Poly& base, const BigInt& e, const Poly& f, std::uint32_t p);
bool is_irreducible(const Poly& f, std::uint32_t p);
// Lexicographically smallest monic irreducible of the given degree, where
// monic polynomials are ordered by the integer sum c_i p^i of their lower
// coefficients.
Poly smallest_irreducible(unsigned degree, std::uint32_t p);
}  // namespace poly

// F_{p^m}. Immutable after construction; safe to share between threads.
class GaloisField {
public:
    GaloisField(std::uint32_t p, unsigned m);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t order() const { return order_; }
    const Poly& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, const BigInt& e) const;
    Elem scale(Elem a, std::uint32_t c) const;

    std::uint32_t digit(Elem a, unsigned i) const;
    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(const std::vector<std::uint32_t>& d) const;

    // x, as an element; a generator of the field over F_p.
    Elem generator() const { return m_ == 1 ? 0 : p_; }

private:
    Poly to_poly(Elem a) const;
    Elem from_poly(const Poly& a) const;
    Elem mul_slow(Elem a, Elem b) const;

    std::uint32_t p_;
    unsigned m_;
    std::uint64_t order_;
    Poly modulus_;
    std::vector<std::uint64_t> place_;  // p^i
    // Log/antilog tables, present for small orders.
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
};

// Dense matrix over F_p.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // In-place reduced row-echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    bool is_zero() const;
    // Inverse of a square invertible matrix; nullopt if singular.
    std::optional<FpMatrix> inverse() const;
    // Basis of the right kernel, one vector per free column.
    std::vector<std::vector<std::uint32_t>> kernel() const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> data_;
};

// Rank over F_p of the m x n matrix whose columns are the digit vectors of
// `coords` (each an element of F_{p^m}).
std::size_t prime_field_rank(const Elem* coords, std::size_t count, std::uint32_t p, unsigned m);

// Codewords: n coordinates in F_{q^m}.
using Codeword = std::vector<Elem>;

struct FieldTower {
    std::uint32_t p = 0;
    unsigned ell = 0;
    unsigned s = 0;
    unsigned m = 0;
    GaloisField field;
    std::vector<Elem> subfield_basis;   // F_p-basis of F_{p^ℓ} inside F_{p^m}
    std::vector<Elem> relative_basis;   // F_{p^ℓ}-basis of F_{p^m}
    std::vector<Elem> subfield;         // all p^ℓ subfield elements, ascending
    FpMatrix to_relative;               // F_p coords -> coords over {e_a * b_i}

    std::uint64_t subfield_order() const {
        std::uint64_t out = 1;
        for (unsigned i = 0; i < ell; ++i) out *= p;
        return out;
    }
    bool in_subfield(Elem a) const;
};

inline constexpr unsigned kMaxTowerDegree = 24;

FieldTower build_tower(std::uint64_t p, unsigned ell, unsigned s);

// Column j is the coordinate vector of x_j over F_p (m rows, n columns).
FpMatrix expand_to_prime_field(const Codeword& x, const FieldTower& tower);

// F_{q^m}^n -> F_{q^ℓ}^{ns}: coordinate j*s + i is the coefficient of the
// i-th relative basis element in x_j.
std::vector<Elem> flatten(const Codeword& x, const FieldTower& tower);
Codeword unflatten(const std::vector<Elem>& v, const FieldTower& tower);

// Matrix over the subfield F_{p^ℓ}; entries are stored as elements of the
// big field that lie in the subfield.
class SubfieldMatrix {
public:
    SubfieldMatrix() = default;
    SubfieldMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const Elem* row(std::size_t r) const { return data_.data() + r * cols_; }

    std::vector<std::size_t> rref(const GaloisField& f);
    std::size_t rank(const GaloisField& f) const;

    friend bool operator==(const SubfieldMatrix&, const SubfieldMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

// A k-dimensional F_{q^ℓ}-subspace of F_{q^ℓ}^{ns} in canonical RREF.
struct SubspaceBasis {
    SubfieldMatrix rref;
    std::vector<std::size_t> pivots;

    std::size_t dimension() const { return rref.rows(); }
    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;
};

}  // namespace codedens
