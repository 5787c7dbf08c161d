#include "codedens/bounds.hpp"

#include "codedens/combinatorics.hpp"

#include <algorithm>

namespace codedens {

void CodeFamilySpec::validate(const AmbientSpace& space) const {
    space.validate();
    if (d < 1 || d > space.diameter() + 1) {
        throw InvalidArgument("d must lie in [1, " + std::to_string(space.diameter() + 1) + "], got " +
                              std::to_string(d));
    }
    if (linear) {
        const long ns = static_cast<long>(space.n * space.s);
        if (dimension < 1 || dimension > ns) {
            throw InvalidArgument("k must lie in [1, " + std::to_string(ns) + "], got " + std::to_string(dimension));
        }
    } else if (cardinality < 2 || cardinality > space.size()) {
        throw InvalidArgument("S must lie in [2, q^{mn}], got " + cardinality.get_str());
    }
}

DensityBracket DensityBracket::from_raw(BigRat lo, BigRat hi) {
    DensityBracket b;
    b.raw_lower = std::move(lo);
    b.raw_upper = std::move(hi);
    b.lower = b.raw_lower < 0 ? BigRat(0) : b.raw_lower;
    b.upper = b.raw_upper > 1 ? BigRat(1) : b.raw_upper;
    return b;
}

long singleton_exponent(const AmbientSpace& space, long d) {
    space.validate();
    if (d < 1 || d > space.diameter()) {
        throw InvalidArgument("Singleton bound needs 1 <= d <= " + std::to_string(space.diameter()));
    }
    const long m = space.m();
    const long n = static_cast<long>(space.n);
    switch (space.metric) {
        case MetricKind::Hamming: return m * (n - d + 1);
        case MetricKind::Rank: return std::max(n, m) * (std::min(n, m) - d + 1);
        case MetricKind::SumRank: {
            const long eta = static_cast<long>(space.eta());
            const long t = static_cast<long>(space.t);
            return std::max(m, eta) * (t * std::min(m, eta) - d + 1);
        }
    }
    return 0;
}

BigInt singleton_max(const AmbientSpace& space, long d) {
    return pow(BigInt(space.q), static_cast<unsigned long>(singleton_exponent(space, d)));
}

LinearDimension max_linear_dimension(const AmbientSpace& space, long d) {
    const long e = singleton_exponent(space, d);
    const long ell = space.ell;
    return {e / ell, (e / ell) * ell == e};
}

BigInt gv_cardinality(const AmbientSpace& space, long d) {
    space.validate();
    if (d < 1 || d > space.diameter() + 1) throw InvalidArgument("GV bound needs 1 <= d <= diameter + 1");
    return ceil_div(space.size(), ball_volume(space, d - 1));
}

NonlinearBracket nonlinear_bracket(const AmbientSpace& space, const BigInt& S, long d) {
    CodeFamilySpec::nonlinear(S, d).validate(space);
    const BigInt Q = space.size();
    if (Q < 4) throw InvalidArgument("nonlinear bracket needs q^{mn} >= 4, got " + Q.get_str());
    const BigInt v = ball_volume(space, d - 1);
    NonlinearBoundTerms terms;
    terms.beta0 = BigRat(Q * (v - 1), 2) - 2 * v + 3;
    terms.beta0.canonicalize();
    terms.beta1 = BigRat(2 * v - 4);
    terms.theta = 1 + terms.beta1 * make_rat(S - 2, Q - 2) + terms.beta0 * make_rat((S - 2) * (S - 3), (Q - 2) * (Q - 3));
    if (v == 1) return {DensityBracket::from_raw(1, 1), terms};
    const BigRat bad = make_rat((v - 1) * S * (S - 1), 2 * (Q - 1));
    return {DensityBracket::from_raw(1 - bad, 1 - bad / terms.theta), terms};
}

namespace {

BigInt subfield_base(const AmbientSpace& space) { return pow(BigInt(space.q), space.ell); }

BigInt projective_vertices(const AmbientSpace& space, long d) {
    const BigInt v = ball_volume(space, d - 1);
    const BigInt ql = subfield_base(space);
    BigInt quot, rem;
    BigInt num = v - 1;
    BigInt den = ql - 1;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw std::logic_error("ball is not a union of projective classes");
    return quot;
}

}  // namespace

SublinearBracket sublinear_bracket(const AmbientSpace& space, long k, long d) {
    CodeFamilySpec::linear_code(k, d).validate(space);
    const long ns = static_cast<long>(space.n * space.s);
    const BigInt ql = subfield_base(space);
    const BigInt V = projective_vertices(space, d);
    const BigInt w1 = qbinom(ns - 1, k - 1, ql);
    const BigInt w0 = qbinom(ns - 2, k - 2, ql);
    const BigInt all = qbinom(ns, k, ql);
    SublinearBoundTerms terms;
    terms.vertices = V;
    terms.theta_bar = 1 + make_rat((V - 1) * w0, w1);
    if (V == 0) return {DensityBracket::from_raw(1, 1), terms};
    const BigRat bad = make_rat(V * w1, all);
    return {DensityBracket::from_raw(1 - bad, 1 - bad / terms.theta_bar), terms};
}

DensityBracket density_bracket(const AmbientSpace& space, const CodeFamilySpec& spec) {
    if (spec.linear) return sublinear_bracket(space, spec.dimension, spec.d).bracket;
    return nonlinear_bracket(space, spec.cardinality, spec.d).bracket;
}

CountBracket bad_code_count_brackets(const AmbientSpace& space, const CodeFamilySpec& spec) {
    spec.validate(space);
    if (spec.linear) {
        const long ns = static_cast<long>(space.n * space.s);
        const long k = spec.dimension;
        const BigInt ql = subfield_base(space);
        const BigInt V = projective_vertices(space, spec.d);
        if (V == 0) return {0, 0};
        const BigInt w1 = qbinom(ns - 1, k - 1, ql);
        const BigInt w0 = qbinom(ns - 2, k - 2, ql);
        return {make_rat(V * w1 * w1, w1 + (V - 1) * w0), BigRat(V * w1)};
    }
    auto nb = nonlinear_bracket(space, spec.cardinality, spec.d);
    const BigInt Q = space.size();
    const BigInt v = ball_volume(space, spec.d - 1);
    if (v == 1) return {0, 0};
    BigInt choose;
    mpz_bin_ui(choose.get_mpz_t(), BigInt(Q - 2).get_mpz_t(), to_u64(spec.cardinality - 2));
    const BigRat upper = make_rat(Q * (v - 1) * choose, 2);
    return {upper / nb.terms.theta, upper};
}

BigInt code_count(const AmbientSpace& space, const CodeFamilySpec& spec) {
    spec.validate(space);
    if (spec.linear) {
        return qbinom(static_cast<long>(space.n * space.s), spec.dimension, subfield_base(space));
    }
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), space.size().get_mpz_t(), to_u64(spec.cardinality));
    return out;
}

}  // namespace codedens
