#pragma once

// Hamming, rank and sum-rank metrics on F_{q^m}^n: weights, distances,
// exact ball volumes and their leading-order growth.

#include "codedens/config.hpp"
#include "codedens/field.hpp"

#include <string>
#include <vector>

namespace codedens {

enum class MetricKind { Hamming, Rank, SumRank };
enum class Parameter { Q, N, Ell, S };

std::string to_string(MetricKind k);
std::string to_string(Parameter p);
MetricKind parse_metric(const std::string& s);
Parameter parse_parameter(const std::string& s);

struct AmbientSpace {
    std::uint64_t q = 2;
    unsigned ell = 1;
    unsigned s = 1;
    std::size_t n = 1;
    MetricKind metric = MetricKind::Hamming;
    std::size_t t = 1;  // number of sum-rank blocks

    unsigned m() const { return ell * s; }
    std::size_t eta() const { return metric == MetricKind::SumRank ? n / t : n; }
    long diameter() const;
    BigInt size() const;  // q^{mn}

    static AmbientSpace hamming(std::uint64_t q, unsigned ell, unsigned s, std::size_t n);
    static AmbientSpace rank(std::uint64_t q, unsigned ell, unsigned s, std::size_t n);
    static AmbientSpace sum_rank(std::uint64_t q, unsigned ell, unsigned s, std::size_t n, std::size_t t);

    // Throws InvalidArgument unless q is a prime power, all sizes are
    // positive and t divides n.
    void validate() const;
    friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;
};

// Weights read only the base-q digits of each coordinate, so they need q
// prime (q = p) but no field multiplication.
long weight(const AmbientSpace& space, const Codeword& x);
long distance(const AmbientSpace& space, const Codeword& x, const Codeword& y);
Codeword difference(const AmbientSpace& space, const Codeword& x, const Codeword& y);

long min_distance(const AmbientSpace& space, const std::vector<Codeword>& code);
long min_distance(const AmbientSpace& space, const SubspaceBasis& code, const FieldTower& tower);

BigInt ball_volume(const AmbientSpace& space, long r);
// Composition-stream evaluation of the sum-rank volume; ball_volume uses an
// equivalent block-by-block convolution.
BigInt sum_rank_volume_by_compositions(const AmbientSpace& space, long r);

// Number of vectors of each weight 0..diameter, by full enumeration.
std::vector<BigInt> weight_distribution(const AmbientSpace& space, const BigInt& guard = default_limits().oracle_space);
BigInt ball_volume_oracle(const AmbientSpace& space, long r, const BigInt& guard = default_limits().oracle_space);

// value ~ coefficient * X^degree * q^{slope * X + offset} as X grows, where
// X is the growing parameter. For growth in q, slope is zero and offset is
// the exponent of q.
struct GrowthProfile {
    Parameter growing = Parameter::Q;
    BigRat coefficient;
    long degree = 0;
    BigRat slope;
    BigRat offset;
};

GrowthProfile volume_growth(const AmbientSpace& space, long r, Parameter growing);

}  // namespace codedens
