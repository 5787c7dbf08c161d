#pragma once

// Exhaustive densities, seeded Monte Carlo estimates with exact
// Clopper-Pearson intervals, and the verification reports built on them.

#include "codedens/classifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace codedens {

// Exact density by enumerating every code of the family.
BigRat exact_density(const AmbientSpace& space, const CodeFamilySpec& spec,
                     const BigInt& guard = default_limits().enumeration);

// Number of codes of each minimum distance (index 0..diameter) among all
// k-dimensional F_{q^ℓ}-linear codes, or all S-subsets for the nonlinear
// census. One pass serves every d.
std::vector<BigInt> linear_distance_census(const AmbientSpace& space, long k,
                                           const BigInt& guard = default_limits().enumeration);
std::vector<BigInt> nonlinear_distance_census(const AmbientSpace& space, const BigInt& S,
                                              const BigInt& guard = default_limits().enumeration);
// Fraction of the census with minimum distance at least d.
BigRat census_density(const std::vector<BigInt>& census, long d);

struct Interval {
    BigRat lower;
    BigRat upper;
};

// Exact Clopper-Pearson interval, with the endpoints rounded outward to the
// grid j / 2^20.
Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, const BigRat& level);

// Whether p lies in the exact (unrounded) Clopper-Pearson interval. The
// rounded interval above contains it whenever this holds.
bool clopper_pearson_covers(std::uint64_t successes, std::uint64_t trials, const BigRat& level, const BigRat& p);

struct SampleReport {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    BigRat point_estimate;
    BigRat ci_lower;
    BigRat ci_upper;
    BigRat confidence_level;
    std::uint64_t seed = 0;
    unsigned worker_streams = 1;
};

// Trial i always draws from CounterRng(seed, i), so the report does not
// depend on the number of worker streams.
SampleReport estimate_density(const AmbientSpace& space, const CodeFamilySpec& spec, std::uint64_t trials,
                              std::uint64_t seed, const BigRat& level, unsigned streams = 1);

// Number of successful trials; same stream layout as estimate_density.
std::uint64_t count_successes(const AmbientSpace& space, const CodeFamilySpec& spec, std::uint64_t trials,
                              std::uint64_t seed, unsigned streams = 1);

// One Monte Carlo trial: draws a uniform code and reports whether its
// minimum distance is at least d.
bool sample_trial(const AmbientSpace& space, const FieldTower& tower, const CodeFamilySpec& spec,
                  std::uint64_t seed, std::uint64_t trial);

struct Verdict {
    std::string subject;  // bracket | classification | volume | reduction
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> details;
};

Verdict check_in_bracket(const BigRat& value, const DensityBracket& bracket, std::string subject = "bracket");
Verdict verify_bracket(const AmbientSpace& space, const CodeFamilySpec& spec);

struct ConvergenceRow {
    std::uint64_t probe;
    BigRat rho;
    std::optional<DensityBracket> bracket;  // absent for GV-attaining families
};
std::vector<ConvergenceRow> convergence_experiment(const Scenario& sc, const std::vector<std::uint64_t>& probes);

}  // namespace codedens
