#pragma once

// Asymptotic density verdicts as one of q, n, ℓ, s grows, decided by the
// growth of the comparison ratio
//
//   linear:    rho = v(d-1) * q^{ℓk} / q^{ℓ(ns+1)}
//   nonlinear: rho = v(d-1) * S^2 / q^{mn}
//
// rho -> 0 gives a dense family, rho -> oo a sparse one, and a ratio
// bounded away from 0 and oo caps the limsup of the density at 1/(1+c)
// (linear) or 1/(1+c/2) (nonlinear), c = liminf rho.

#include "codedens/bounds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace codedens {

enum class Family { Extremal, GilbertVarshamov, ExplicitDimension, ExplicitCardinality };
enum class VerdictKind { Dense, Sparse, NotDense, Unknown };

std::string to_string(Family f);
std::string to_string(VerdictKind v);
Family parse_family(const std::string& s);

struct Scenario {
    // Fixed parameters. The field named by `growing` is overwritten at
    // every probe point.
    AmbientSpace base;
    Parameter growing = Parameter::Q;
    long d = 2;
    bool linear = true;  // F_{q^ℓ}-linear with ℓ = base.ell, else nonlinear
    Family family = Family::Extremal;
    // ExplicitDimension: k = k_slope * X + k_offset.
    long k_slope = 0;
    long k_offset = 1;
    // ExplicitCardinality: S = card_coef * q^{card_slope * X + card_offset}.
    BigRat card_coef = 1;
    long card_slope = 0;
    long card_offset = 1;

    AmbientSpace at(std::uint64_t x) const;
    // Smallest admissible probe value: the current value for q, else 1.
    std::uint64_t value_of_growing() const;
};

// Theorem-specific verdict, checked against the generic one.
struct CrossCheck {
    std::string theorem;
    VerdictKind verdict = VerdictKind::Unknown;
    std::optional<BigRat> upper;  // closed-form bound on the limsup
    bool agrees = false;
    std::string derivation;
};

struct Classification {
    VerdictKind verdict = VerdictKind::Unknown;
    std::optional<BigRat> upper;  // NotDense only: limsup of the density is at most this
    // rho ~ coefficient * X^degree * q^{slope X + offsets[X mod period]}.
    // For growing q: slope 0, a single offset, and X^degree absent.
    BigRat coefficient;
    long degree = 0;
    BigRat slope;
    std::vector<BigRat> offsets;
    long period = 1;
    std::uint64_t probe_start = 0;
    std::optional<BigRat> limit_constant;  // c, NotDense only
    std::string source;
    std::string note;
    std::vector<CrossCheck> cross_checks;

    bool all_cross_checks_agree() const;
};

Classification classify(const Scenario& sc);

// Exact rho at each probe value of the growing parameter.
struct RatioPoint {
    std::uint64_t value;
    BigRat rho;
};
std::vector<RatioPoint> ratio_probe(const Scenario& sc, const std::vector<std::uint64_t>& probes);

// The code cardinality (nonlinear) or F_{q^ℓ}-dimension (linear) the
// family prescribes at one instance. GV-attaining families have no integer
// size and are rejected here.
CodeFamilySpec family_spec(const Scenario& sc, const AmbientSpace& space);

// θ of the sum-rank threshold theorem, z = (d-1) mod t.
BigRat msrd_theta(long m, long eta, long t, long d);

enum class RegionCell { Dense, Sparse, Unclassified };
std::string to_string(RegionCell c);

struct RegionEntry {
    long t;
    long eta;
    RegionCell corollary;
    // Generic verdicts of F_q-linear MSRD codes with m = eta, one per d in [2, n].
    std::vector<VerdictKind> by_d;
};
// Grid of the η-versus-t corollary for F_q-linear MSRD codes.
std::vector<RegionEntry> msrd_eta_region(long t_max, long eta_max);
RegionCell region_corollary(long t, long eta);

struct Table1Row {
    std::string eta;  // as printed, e.g. ">=2"
    std::string t;
    long d;
    VerdictKind expected;
    // Instances tried for the row and their verdicts.
    std::vector<std::pair<std::string, Classification>> instances;
    bool reproduced() const;
};
std::vector<Table1Row> table1();

// Convenience scenarios for Singleton-attaining families.
Scenario mds_scenario(Parameter growing, std::uint64_t q, unsigned ell, unsigned s, std::size_t n, long d,
                      bool linear = true);
Scenario mrd_scenario(Parameter growing, std::uint64_t q, unsigned ell, unsigned s, std::size_t n, long d,
                      bool linear = true);
Scenario msrd_scenario(Parameter growing, std::uint64_t q, unsigned ell, unsigned s, std::size_t eta, std::size_t t,
                       long d, bool linear = true);

}  // namespace codedens
