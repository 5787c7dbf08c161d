#pragma once

// Random and exhaustive generation of codes: F_{q^ℓ}-subspaces of
// F_{q^ℓ}^{ns} (linear codes) and S-subsets of F_{q^m}^n (nonlinear codes).

#include "codedens/config.hpp"
#include "codedens/field.hpp"
#include "codedens/rng.hpp"

#include <vector>

namespace codedens {

// The idx-th subfield element, idx in [0, q^ℓ), in a fixed order.
Elem subfield_element(const FieldTower& tower, std::uint64_t idx);

// Codewords of F_{q^m}^n indexed by the integers [0, q^{mn}); coordinate j
// is digit j in base q^m.
Codeword codeword_from_index(std::uint64_t idx, const FieldTower& tower, std::size_t n);
std::uint64_t codeword_index(const Codeword& x, const FieldTower& tower);
BigInt ambient_size(const FieldTower& tower, std::size_t n);

SubspaceBasis canonical_basis(SubfieldMatrix generators, const FieldTower& tower);

// Uniform among the k-dimensional subspaces of F_{q^ℓ}^{ns}.
SubspaceBasis sample_subspace(CounterRng& rng, std::size_t k, const FieldTower& tower, std::size_t n);

// Every k-dimensional subspace exactly once, by pivot profile and then by
// the free entries of the RREF.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(std::size_t k, const FieldTower& tower, std::size_t n,
                       const BigInt& guard = default_limits().enumeration);

    const SubspaceBasis* next();
    const BigInt& total() const { return total_; }

private:
    bool next_pivots();
    void load_profile();
    bool bump_free();

    const FieldTower& tower_;
    std::size_t k_;
    std::size_t cols_;
    BigInt total_;
    std::vector<std::size_t> pivots_;
    std::vector<std::pair<std::size_t, std::size_t>> free_;
    std::vector<std::uint64_t> digits_;
    SubspaceBasis current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<SubspaceBasis> enumerate_subspaces(std::size_t k, const FieldTower& tower, std::size_t n,
                                               const BigInt& guard = default_limits().enumeration);

// S distinct codeword indices, uniform among S-subsets (Floyd's algorithm),
// returned in ascending order.
std::vector<std::uint64_t> sample_index_subset(CounterRng& rng, std::uint64_t S, std::uint64_t universe);
std::vector<Codeword> sample_code_subset(CounterRng& rng, const BigInt& S, const FieldTower& tower, std::size_t n);

// One representative per nonzero F_{q^ℓ}-projective class of the row space
// (leading coefficient 1), each converted back to F_{q^m}^n. With
// projective = false, every codeword of the subspace instead.
std::vector<Codeword> subspace_codewords(const SubspaceBasis& b, const FieldTower& tower, bool projective);

}  // namespace codedens
