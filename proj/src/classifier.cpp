#include "codedens/classifier.hpp"

#include "codedens/combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace codedens {

std::string to_string(Family f) {
    switch (f) {
        case Family::Extremal: return "extremal";
        case Family::GilbertVarshamov: return "gv";
        case Family::ExplicitDimension: return "explicit-dimension";
        case Family::ExplicitCardinality: return "explicit-cardinality";
    }
    return "?";
}

std::string to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::Dense: return "dense";
        case VerdictKind::Sparse: return "sparse";
        case VerdictKind::NotDense: return "not-dense";
        case VerdictKind::Unknown: return "unknown";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "extremal") return Family::Extremal;
    if (s == "gv") return Family::GilbertVarshamov;
    if (s == "explicit-dimension") return Family::ExplicitDimension;
    if (s == "explicit-cardinality") return Family::ExplicitCardinality;
    throw InvalidArgument("unknown family '" + s + "'");
}

std::string to_string(RegionCell c) {
    switch (c) {
        case RegionCell::Dense: return "dense";
        case RegionCell::Sparse: return "sparse";
        case RegionCell::Unclassified: return "unclassified";
    }
    return "?";
}

AmbientSpace Scenario::at(std::uint64_t x) const {
    AmbientSpace sp = base;
    switch (growing) {
        case Parameter::Q: sp.q = x; break;
        case Parameter::N: sp.n = x; break;
        case Parameter::Ell: sp.ell = static_cast<unsigned>(x); break;
        case Parameter::S: sp.s = static_cast<unsigned>(x); break;
    }
    return sp;
}

std::uint64_t Scenario::value_of_growing() const {
    switch (growing) {
        case Parameter::Q: return base.q;
        case Parameter::N: return base.n;
        case Parameter::Ell: return base.ell;
        case Parameter::S: return base.s;
    }
    return 0;
}

bool Classification::all_cross_checks_agree() const {
    return std::all_of(cross_checks.begin(), cross_checks.end(), [](const CrossCheck& c) { return c.agrees; });
}

CodeFamilySpec family_spec(const Scenario& sc, const AmbientSpace& space) {
    long X = 0;
    switch (sc.growing) {
        case Parameter::Q: X = 0; break;
        case Parameter::N: X = static_cast<long>(space.n); break;
        case Parameter::Ell: X = space.ell; break;
        case Parameter::S: X = space.s; break;
    }
    switch (sc.family) {
        case Family::Extremal:
            if (sc.linear) {
                const auto ld = max_linear_dimension(space, sc.d);
                if (ld.k_star < 1) throw InvalidArgument("no positive dimension meets the Singleton bound here");
                return CodeFamilySpec::linear_code(ld.k_star, sc.d);
            }
            return CodeFamilySpec::nonlinear(singleton_max(space, sc.d), sc.d);
        case Family::ExplicitDimension:
            if (!sc.linear) throw InvalidArgument("explicit dimension needs a linear family");
            return CodeFamilySpec::linear_code(sc.k_slope * X + sc.k_offset, sc.d);
        case Family::ExplicitCardinality: {
            if (sc.linear) throw InvalidArgument("explicit cardinality needs a nonlinear family");
            const long e = sc.card_slope * X + sc.card_offset;
            const BigRat S = sc.card_coef * pow_rat(BigRat(space.q), e);
            if (S.get_den() != 1) throw InvalidArgument("cardinality " + to_string(S) + " is not an integer");
            return CodeFamilySpec::nonlinear(S.get_num(), sc.d);
        }
        case Family::GilbertVarshamov:
            throw InvalidArgument("GV-attaining families have no integer size");
    }
    return {};
}

namespace {

long growing_value(Parameter p, const AmbientSpace& sp) {
    switch (p) {
        case Parameter::Q: return static_cast<long>(sp.q);
        case Parameter::N: return static_cast<long>(sp.n);
        case Parameter::Ell: return sp.ell;
        case Parameter::S: return sp.s;
    }
    return 0;
}

// Leading behaviour of rho at one instance, with v replaced by its growth
// profile: rho ~ coef * X^degree * q^exponent.
struct RhoShape {
    BigRat coef;
    long degree = 0;
    BigRat exponent;
};

RhoShape rho_shape(const Scenario& sc, const AmbientSpace& sp) {
    const long X = sc.growing == Parameter::Q ? 0 : growing_value(sc.growing, sp);
    const long ell = sp.ell;
    const long ns = static_cast<long>(sp.n) * sp.s;
    const long mn = static_cast<long>(sp.m()) * static_cast<long>(sp.n);
    if ((sc.family == Family::ExplicitDimension && sc.growing == Parameter::Q && sc.k_slope != 0) ||
        (sc.family == Family::ExplicitCardinality && sc.growing == Parameter::Q && sc.card_slope != 0)) {
        throw InvalidArgument("as q grows the size exponent must not depend on q");
    }
    if (sc.linear && sc.family == Family::GilbertVarshamov) {
        // |C| = q^{mn}/v exactly cancels v, leaving q^{-ℓ}.
        return {1, 0, BigRat(-ell)};
    }
    const GrowthProfile g = volume_growth(sp, sc.d - 1, sc.growing);
    const BigRat ev = g.slope * X + g.offset;
    RhoShape out{g.coefficient, g.degree, 0};
    if (sc.linear) {
        const long k = family_spec(sc, sp).dimension;
        out.exponent = ev + ell * k - ell * (ns + 1);
        return out;
    }
    switch (sc.family) {
        case Family::Extremal:
            out.exponent = ev + 2 * singleton_exponent(sp, sc.d) - mn;
            break;
        case Family::ExplicitCardinality:
            out.coef *= sc.card_coef * sc.card_coef;
            out.exponent = ev + 2 * (sc.card_slope * X + sc.card_offset) - mn;
            break;
        case Family::GilbertVarshamov:
            // rho = q^{mn}/v.
            out.coef = 1 / g.coefficient;
            out.degree = -g.degree;
            out.exponent = mn - ev;
            break;
        case Family::ExplicitDimension:
            throw InvalidArgument("explicit dimension needs a linear family");
    }
    return out;
}

BigRat upper_from_constant(const BigRat& c, bool linear) {
    return linear ? BigRat(1 / (1 + c)) : BigRat(1 / (1 + c / 2));
}

std::string describe(const Scenario& sc) {
    std::ostringstream os;
    os << to_string(sc.base.metric) << (sc.linear ? " linear" : " nonlinear") << " " << to_string(sc.family)
       << ", " << to_string(sc.growing) << " grows";
    return os.str();
}

void add_check(Classification& c, std::string theorem, VerdictKind v, std::optional<BigRat> upper,
               std::string derivation) {
    CrossCheck cc;
    cc.theorem = std::move(theorem);
    cc.verdict = v;
    cc.upper = std::move(upper);
    cc.derivation = std::move(derivation);
    cc.agrees = cc.verdict == c.verdict;
    if (cc.agrees && cc.upper) cc.agrees = c.upper && *c.upper <= *cc.upper;
    c.cross_checks.push_back(std::move(cc));
}

VerdictKind threshold(const BigRat& a, const BigRat& ell) {
    if (a < ell) return VerdictKind::Dense;
    if (a > ell) return VerdictKind::Sparse;
    return VerdictKind::NotDense;
}

void hamming_checks(const Scenario& sc, Classification& c) {
    const auto& b = sc.base;
    const long n = static_cast<long>(b.n);
    const long d = sc.d;
    const long ell = b.ell;
    if (!sc.linear) {
        if (b.m() != 1 || d < 2) return;
        if (sc.growing == Parameter::Q && n >= 2) add_check(c, "nonlinear MDS, q grows", VerdictKind::Sparse, {}, "d >= 2");
        if (sc.growing == Parameter::N) add_check(c, "nonlinear MDS, n grows", VerdictKind::Sparse, {}, "d >= 2");
        return;
    }
    switch (sc.growing) {
        case Parameter::Q:
            if (d <= n) add_check(c, "linear MDS, q grows", VerdictKind::Dense, {}, "1 <= d <= n");
            break;
        case Parameter::Ell:
            if (d <= n) add_check(c, "linear MDS, ell grows", VerdictKind::Dense, {}, "1 <= d <= n");
            break;
        case Parameter::N:
            if (d >= 2) add_check(c, "linear MDS, n grows", VerdictKind::Sparse, {}, "d >= 2");
            break;
        case Parameter::S:
            if (n >= 2 && d >= 2 && d <= n) {
                const BigRat cst = BigRat(binom(n, d - 1)) * pow_rat(BigRat(b.q), -ell);
                add_check(c, "linear MDS, s grows", VerdictKind::NotDense, BigRat(1 / (1 + cst)),
                          "upper = 1/(1 + C(n,d-1) q^-ell) with C(n,d-1) = " + binom(n, d - 1).get_str());
            }
            break;
    }
}

void rank_checks(const Scenario& sc, Classification& c) {
    const auto& b = sc.base;
    const long n = static_cast<long>(b.n);
    const long m = b.m();
    const long d = sc.d;
    const long ell = b.ell;
    const BigInt q(b.q);
    if (!sc.linear) {
        if (d < 2 || m < 2) return;
        if (sc.growing == Parameter::Q && n >= 2) add_check(c, "nonlinear MRD, q grows", VerdictKind::Sparse, {}, "m, n >= 2");
        if (sc.growing == Parameter::N && d <= m) add_check(c, "nonlinear MRD, n grows", VerdictKind::Sparse, {}, "2 <= d <= m");
        return;
    }
    switch (sc.growing) {
        case Parameter::Q: {
            if (d < 2 || d > n) return;
            std::ostringstream os;
            if (n <= m) {
                const long a = (d - 1) * (n - d + 1);
                os << "n <= m: (d-1)(n-d+1) = " << a << " vs ell = " << ell;
                const VerdictKind v = threshold(a, ell);
                add_check(c, "linear MRD, q grows, n <= m", v,
                          v == VerdictKind::NotDense ? std::optional<BigRat>(BigRat(1, 2)) : std::nullopt, os.str());
            } else {
                if (d > m) return;
                const long nd = n * (d - 1);
                const long r = nd - ell * ((nd + ell - 1) / ell);
                const long a = (d - 1) * (m - d + 1) + r;
                os << "m < n: (d-1)(m-d+1) + r = " << a << " with r = n(d-1) - ell*ceil(n(d-1)/ell) = " << r
                   << " (r <= 0) vs ell = " << ell;
                const VerdictKind v = threshold(a, ell);
                add_check(c, "quasi-MRD, q grows, m < n", v,
                          v == VerdictKind::NotDense ? std::optional<BigRat>(BigRat(1, 2)) : std::nullopt, os.str());
            }
            break;
        }
        case Parameter::Ell:
            if (n >= 3 && d <= n) add_check(c, "linear MRD, ell grows", VerdictKind::Dense, {}, "n >= 3, d <= n");
            break;
        case Parameter::S:
            if (n >= 3 && d >= 2 && d <= n) {
                const BigInt ql = pow(q, static_cast<unsigned long>(ell));
                const BigInt qb = qbinom(n, d - 1, q);
                add_check(c, "linear MRD, s grows", VerdictKind::NotDense, make_rat(ql, ql + qb),
                          "upper = q^ell/(q^ell + [n,d-1]_q) with [n,d-1]_q = " + qb.get_str());
            }
            break;
        case Parameter::N:
            if (d >= 2 && d <= m) {
                const BigInt qb = qbinom(m, d - 1, q);
                const BigRat cst = BigRat(qb) * pow_rat(BigRat(q), -2 * ell);
                add_check(c, "quasi-MRD, n grows", VerdictKind::NotDense, BigRat(1 / (1 + cst)),
                          "closed form 1/(1 + [m,d-1]_q q^(-2 ell)) with [m,d-1]_q = " + qb.get_str() +
                              "; bounds the period remainder by its a-priori range");
            }
            break;
    }
}

void sum_rank_checks(const Scenario& sc, Classification& c) {
    const auto& b = sc.base;
    if (sc.growing != Parameter::Q) return;
    const long n = static_cast<long>(b.n);
    const long t = static_cast<long>(b.t);
    const long eta = static_cast<long>(b.eta());
    const long m = b.m();
    const long d = sc.d;
    const long ell = b.ell;
    if (!sc.linear) {
        if (d >= 2) add_check(c, "nonlinear MSRD, q grows", VerdictKind::Sparse, {}, "d >= 2");
        return;
    }
    if (t > 1 && d >= 2 && d <= t * std::min(m, eta)) {
        const BigRat theta = msrd_theta(m, eta, t, d);
        const long z = (d - 1) % t;
        const BigRat bound = make_rat(1, 1 + binom(t, z));
        std::ostringstream os;
        if (eta <= m) {
            os << "eta <= m: theta = " << to_string(theta) << " vs ell = " << ell;
            const VerdictKind v = threshold(theta, ell);
            add_check(c, "MSRD theta threshold, eta <= m", v,
                      v == VerdictKind::NotDense ? std::optional<BigRat>(bound) : std::nullopt, os.str());
        } else {
            const long ed = eta * (d - 1);
            const long r = ell * ((ed + ell - 1) / ell) - ed;
            os << "m < eta: theta - r = " << to_string(theta - r) << " with r = ell*ceil(eta(d-1)/ell) - eta(d-1) = "
               << r << " (r >= 0, opposite sign to the rank remainder) vs ell = " << ell;
            const VerdictKind v = threshold(theta - r, ell);
            add_check(c, "quasi-MSRD theta threshold, m < eta", v,
                      v == VerdictKind::NotDense ? std::optional<BigRat>(bound) : std::nullopt, os.str());
        }
    }
    if (ell == 1 && eta <= m && d >= 2 && d <= n) {
        const long a = (d - 1) * (n - d + 1);
        std::ostringstream os;
        os << "(d-1)(n-d+1) = " << a << ", t = " << t;
        if (a < t) add_check(c, "F_q-linear MSRD threshold", VerdictKind::Dense, {}, os.str() + " < t");
        else if (4 * t + t * t < 4 * a)
            add_check(c, "F_q-linear MSRD threshold", VerdictKind::Sparse, {}, os.str() + " > t + t^2/4");
    }
}

void gv_checks(const Scenario& sc, Classification& c) {
    const auto& b = sc.base;
    if (sc.base.metric == MetricKind::SumRank && sc.growing != Parameter::Q) return;
    if (!sc.linear) {
        const bool inside = sc.growing == Parameter::N || sc.d <= b.diameter();
        if ((sc.growing == Parameter::Q || sc.growing == Parameter::N) && sc.d >= 2 && inside)
            add_check(c, "nonlinear GV-attaining", VerdictKind::Sparse, {}, "d >= 2");
        return;
    }
    if (sc.growing == Parameter::Q || sc.growing == Parameter::Ell) {
        add_check(c, "linear GV-attaining, q or ell grows", VerdictKind::Dense, {}, "rho = q^-ell");
    } else {
        const BigInt ql = pow(BigInt(b.q), b.ell);
        add_check(c, "linear GV-attaining, n or s grows", VerdictKind::NotDense, make_rat(ql, ql + 1),
                  "upper = q^ell/(q^ell + 1)");
    }
}

void add_cross_checks(const Scenario& sc, Classification& c) {
    if (sc.d < 2 && sc.family != Family::GilbertVarshamov) return;
    if (sc.family == Family::GilbertVarshamov) {
        if (sc.d >= 2) gv_checks(sc, c);
        return;
    }
    if (sc.family != Family::Extremal) return;
    switch (sc.base.metric) {
        case MetricKind::Hamming: hamming_checks(sc, c); break;
        case MetricKind::Rank: rank_checks(sc, c); break;
        case MetricKind::SumRank: sum_rank_checks(sc, c); break;
    }
}

long period_of(const Scenario& sc) {
    if (sc.linear && sc.family == Family::Extremal &&
        (sc.growing == Parameter::N || sc.growing == Parameter::S)) {
        return sc.base.ell;
    }
    return 1;
}

}  // namespace

Classification classify(const Scenario& sc) {
    Classification c;
    if (sc.d < 1) throw InvalidArgument("d must be positive");
    if (sc.base.metric == MetricKind::SumRank && sc.growing != Parameter::Q) {
        c.verdict = VerdictKind::Unknown;
        c.source = describe(sc);
        c.note = "sum-rank volume growth is only known as q grows";
        return c;
    }
    if (!sc.linear && (sc.growing == Parameter::Ell || sc.growing == Parameter::S)) {
        throw NotImplemented("nonlinear families are classified only as q or n grows");
    }
    if (sc.growing == Parameter::Q) sc.base.validate();
    c.source = "generic ratio comparison: " + describe(sc);
    if (sc.d == 1) {
        c.verdict = VerdictKind::Dense;
        c.coefficient = 0;
        c.note = "d = 1: every code qualifies";
        add_cross_checks(sc, c);
        return c;
    }

    if (sc.growing == Parameter::Q) {
        const RhoShape sh = rho_shape(sc, sc.base);
        c.coefficient = sh.coef;
        c.degree = 0;
        c.slope = 0;
        c.offsets = {sh.exponent};
        c.period = 1;
        c.probe_start = sc.base.q;
        if (sh.exponent < 0) c.verdict = VerdictKind::Dense;
        else if (sh.exponent > 0) c.verdict = VerdictKind::Sparse;
        else {
            c.verdict = VerdictKind::NotDense;
            c.limit_constant = sh.coef;
            c.upper = upper_from_constant(sh.coef, sc.linear);
        }
        add_cross_checks(sc, c);
        return c;
    }

    const long P = period_of(sc);
    const auto& b = sc.base;
    long x0 = 4 * (static_cast<long>(b.ell + b.s + b.n + b.t) + sc.d);
    x0 = (x0 + P - 1) / P * P;
    if (sc.d > sc.at(static_cast<std::uint64_t>(x0)).diameter()) {
        throw InvalidArgument("d = " + std::to_string(sc.d) + " exceeds the diameter for every " +
                              to_string(sc.growing));
    }
    std::vector<RhoShape> shapes;
    for (long j = 0; j <= 3 * P; ++j) {
        shapes.push_back(rho_shape(sc, sc.at(static_cast<std::uint64_t>(x0 + j))));
    }
    const BigRat slope = (shapes[P].exponent - shapes[0].exponent) / P;
    for (long j = 0; j + P <= 3 * P; ++j) {
        const bool coef_ok = shapes[j].coef == shapes[0].coef && shapes[j].degree == shapes[0].degree;
        if (!coef_ok || shapes[j + P].exponent - shapes[j].exponent != slope * P) {
            throw std::logic_error("ratio exponent is not periodic-affine in the growing parameter");
        }
    }
    c.coefficient = shapes[0].coef;
    c.degree = shapes[0].degree;
    c.slope = slope;
    c.period = P;
    c.probe_start = static_cast<std::uint64_t>(x0);
    c.offsets.assign(P, 0);
    for (long j = 0; j < P; ++j) c.offsets[(x0 + j) % P] = shapes[j].exponent - slope * (x0 + j);

    if (slope < 0) c.verdict = VerdictKind::Dense;
    else if (slope > 0) c.verdict = VerdictKind::Sparse;
    else if (c.degree > 0) c.verdict = VerdictKind::Sparse;
    else if (c.degree < 0) c.verdict = VerdictKind::Dense;
    else {
        const BigRat lowest = *std::min_element(c.offsets.begin(), c.offsets.end());
        if (lowest.get_den() != 1) throw std::logic_error("non-integral exponent offset");
        c.verdict = VerdictKind::NotDense;
        c.limit_constant = c.coefficient * pow_rat(BigRat(b.q), to_long(lowest.get_num()));
        c.upper = upper_from_constant(*c.limit_constant, sc.linear);
        if (P > 1 && std::any_of(c.offsets.begin(), c.offsets.end(), [&](const BigRat& o) { return o != lowest; })) {
            c.note = "ratio oscillates with period " + std::to_string(P) + "; upper is the limsup over residues";
        }
    }
    add_cross_checks(sc, c);
    return c;
}

std::vector<RatioPoint> ratio_probe(const Scenario& sc, const std::vector<std::uint64_t>& probes) {
    std::vector<RatioPoint> out;
    for (auto x : probes) {
        const AmbientSpace sp = sc.at(x);
        sp.validate();
        if (sc.d > sp.diameter() + 1) throw InvalidArgument("d exceeds the diameter at probe " + std::to_string(x));
        const BigInt v = ball_volume(sp, sc.d - 1);
        const BigInt q(sp.q);
        const BigInt Q = sp.size();
        const long ns = static_cast<long>(sp.n) * sp.s;
        BigRat rho;
        if (sc.family == Family::GilbertVarshamov) {
            rho = sc.linear ? pow_rat(BigRat(q), -static_cast<long>(sp.ell)) : make_rat(Q, v);
        } else if (sc.linear) {
            const long k = family_spec(sc, sp).dimension;
            rho = make_rat(v, 1) * pow_rat(BigRat(q), static_cast<long>(sp.ell) * (k - ns - 1));
        } else {
            const BigInt S = family_spec(sc, sp).cardinality;
            rho = make_rat(v * S * S, Q);
        }
        out.push_back({x, rho});
    }
    return out;
}

BigRat msrd_theta(long m, long eta, long t, long d) {
    if (t < 2) throw InvalidArgument("theta needs t >= 2");
    if (m < 1 || eta < 1) throw InvalidArgument("theta needs m, eta >= 1");
    const long mn = std::min(m, eta);
    if (d < 2 || d > t * mn) {
        throw InvalidArgument("theta needs 2 <= d <= t*min(m, eta) = " + std::to_string(t * mn));
    }
    const long z = (d - 1) % t;
    return BigRat(d - 1) * (BigRat(mn) - make_rat(d - 1, t)) + make_rat(z * z, t) - z;
}

RegionCell region_corollary(long t, long eta) {
    if (t < 1 || eta < 1) throw InvalidArgument("t and eta must be positive");
    // eta < 2/sqrt(t) and eta > (t+2)^2/(4t), squared out.
    if (eta * eta * t < 4) return RegionCell::Dense;
    if (4 * t * eta > (t + 2) * (t + 2)) return RegionCell::Sparse;
    return RegionCell::Unclassified;
}

std::vector<RegionEntry> msrd_eta_region(long t_max, long eta_max) {
    if (t_max < 1 || eta_max < 1) throw InvalidArgument("grid bounds must be positive");
    std::vector<RegionEntry> out;
    for (long t = 1; t <= t_max; ++t) {
        for (long eta = 1; eta <= eta_max; ++eta) {
            RegionEntry e{t, eta, region_corollary(t, eta), {}};
            for (long d = 2; d <= eta * t; ++d) {
                e.by_d.push_back(classify(msrd_scenario(Parameter::Q, 2, 1, static_cast<unsigned>(eta),
                                                        static_cast<std::size_t>(eta), static_cast<std::size_t>(t), d))
                                     .verdict);
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

bool Table1Row::reproduced() const {
    return !instances.empty() && std::all_of(instances.begin(), instances.end(), [&](const auto& p) {
        return p.second.verdict == expected;
    });
}

std::vector<Table1Row> table1() {
    auto inst = [](long eta, long t, long d) {
        std::ostringstream os;
        os << "eta=" << eta << " t=" << t << " d=" << d << " m=" << eta;
        return std::make_pair(os.str(), classify(msrd_scenario(Parameter::Q, 2, 1, static_cast<unsigned>(eta),
                                                               static_cast<std::size_t>(eta),
                                                               static_cast<std::size_t>(t), d)));
    };
    std::vector<Table1Row> rows;
    rows.push_back({"1", "10", 5, VerdictKind::Dense, {inst(1, 10, 5)}});
    Table1Row r2{"2", ">=1", 2, VerdictKind::NotDense, {}};
    for (long t = 1; t <= 10; ++t) r2.instances.push_back(inst(2, t, 2));
    rows.push_back(std::move(r2));
    Table1Row r3{">=2", "10", 5, VerdictKind::Sparse, {}};
    for (long eta = 2; eta <= 4; ++eta) r3.instances.push_back(inst(eta, 10, 5));
    rows.push_back(std::move(r3));
    Table1Row r4{"3", ">=1", 3, VerdictKind::Sparse, {}};
    for (long t = 1; t <= 10; ++t) r4.instances.push_back(inst(3, t, 3));
    rows.push_back(std::move(r4));
    return rows;
}

namespace {

Scenario make_scenario(AmbientSpace sp, Parameter growing, long d, bool linear) {
    Scenario sc;
    sc.base = sp;
    sc.growing = growing;
    sc.d = d;
    sc.linear = linear;
    sc.family = Family::Extremal;
    return sc;
}

}  // namespace

Scenario mds_scenario(Parameter growing, std::uint64_t q, unsigned ell, unsigned s, std::size_t n, long d, bool linear) {
    return make_scenario(AmbientSpace::hamming(q, ell, s, n), growing, d, linear);
}

Scenario mrd_scenario(Parameter growing, std::uint64_t q, unsigned ell, unsigned s, std::size_t n, long d, bool linear) {
    return make_scenario(AmbientSpace::rank(q, ell, s, n), growing, d, linear);
}

Scenario msrd_scenario(Parameter growing, std::uint64_t q, unsigned ell, unsigned s, std::size_t eta, std::size_t t,
                       long d, bool linear) {
    return make_scenario(AmbientSpace::sum_rank(q, ell, s, eta * t, t), growing, d, linear);
}

}  // namespace codedens
