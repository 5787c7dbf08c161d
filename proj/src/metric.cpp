#include "codedens/metric.hpp"

#include "codedens/combinatorics.hpp"
#include "codedens/subspace.hpp"

#include <algorithm>

namespace codedens {

std::string to_string(MetricKind k) {
    switch (k) {
        case MetricKind::Hamming: return "hamming";
        case MetricKind::Rank: return "rank";
        case MetricKind::SumRank: return "sumrank";
    }
    return "?";
}

std::string to_string(Parameter p) {
    switch (p) {
        case Parameter::Q: return "q";
        case Parameter::N: return "n";
        case Parameter::Ell: return "ell";
        case Parameter::S: return "s";
    }
    return "?";
}

MetricKind parse_metric(const std::string& s) {
    if (s == "hamming") return MetricKind::Hamming;
    if (s == "rank") return MetricKind::Rank;
    if (s == "sumrank" || s == "sum-rank") return MetricKind::SumRank;
    throw InvalidArgument("unknown metric '" + s + "' (expected hamming, rank or sumrank)");
}

Parameter parse_parameter(const std::string& s) {
    if (s == "q") return Parameter::Q;
    if (s == "n") return Parameter::N;
    if (s == "ell" || s == "l") return Parameter::Ell;
    if (s == "s") return Parameter::S;
    throw InvalidArgument("unknown parameter '" + s + "' (expected q, n, ell or s)");
}

long AmbientSpace::diameter() const {
    const long mm = m();
    switch (metric) {
        case MetricKind::Hamming: return static_cast<long>(n);
        case MetricKind::Rank: return std::min(static_cast<long>(n), mm);
        case MetricKind::SumRank: return static_cast<long>(t) * std::min(mm, static_cast<long>(eta()));
    }
    return 0;
}

BigInt AmbientSpace::size() const { return pow(BigInt(q), static_cast<unsigned long>(m()) * n); }

AmbientSpace AmbientSpace::hamming(std::uint64_t q, unsigned ell, unsigned s, std::size_t n) {
    AmbientSpace a{q, ell, s, n, MetricKind::Hamming, 1};
    a.validate();
    return a;
}

AmbientSpace AmbientSpace::rank(std::uint64_t q, unsigned ell, unsigned s, std::size_t n) {
    AmbientSpace a{q, ell, s, n, MetricKind::Rank, 1};
    a.validate();
    return a;
}

AmbientSpace AmbientSpace::sum_rank(std::uint64_t q, unsigned ell, unsigned s, std::size_t n, std::size_t t) {
    AmbientSpace a{q, ell, s, n, MetricKind::SumRank, t};
    a.validate();
    return a;
}

void AmbientSpace::validate() const {
    if (!as_prime_power(q)) throw InvalidArgument("q must be a prime power, got " + std::to_string(q));
    if (ell == 0 || s == 0 || n == 0) throw InvalidArgument("ell, s and n must be positive");
    if (metric == MetricKind::SumRank) {
        if (t == 0 || n % t != 0) {
            throw InvalidArgument("t must be a positive divisor of n (n=" + std::to_string(n) +
                                  ", t=" + std::to_string(t) + ")");
        }
    }
}

namespace {

void require_prime(const AmbientSpace& space) {
    if (!is_prime(space.q)) {
        throw InvalidArgument("codeword operations need prime q, got " + std::to_string(space.q));
    }
}

Elem digit_sub(Elem a, Elem b, std::uint64_t p, unsigned m) {
    if (p == 2) return a ^ b;
    Elem out = 0;
    Elem place = 1;
    for (unsigned i = 0; i < m; ++i) {
        out += ((a % p + p - b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return out;
}

}  // namespace

long weight(const AmbientSpace& space, const Codeword& x) {
    if (x.size() != space.n) throw InvalidArgument("codeword length does not match the space");
    const auto p = static_cast<std::uint32_t>(space.q);
    switch (space.metric) {
        case MetricKind::Hamming:
            return static_cast<long>(std::count_if(x.begin(), x.end(), [](Elem e) { return e != 0; }));
        case MetricKind::Rank:
            return static_cast<long>(prime_field_rank(x.data(), x.size(), p, space.m()));
        case MetricKind::SumRank: {
            const std::size_t eta = space.eta();
            long w = 0;
            for (std::size_t b = 0; b < space.t; ++b) {
                w += static_cast<long>(prime_field_rank(x.data() + b * eta, eta, p, space.m()));
            }
            return w;
        }
    }
    return 0;
}

Codeword difference(const AmbientSpace& space, const Codeword& x, const Codeword& y) {
    if (x.size() != y.size()) throw InvalidArgument("codeword lengths differ");
    Codeword out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = digit_sub(x[j], y[j], space.q, space.m());
    return out;
}

long distance(const AmbientSpace& space, const Codeword& x, const Codeword& y) {
    return weight(space, difference(space, x, y));
}

long min_distance(const AmbientSpace& space, const std::vector<Codeword>& code) {
    require_prime(space);
    if (code.size() < 2) throw InvalidArgument("minimum distance needs at least two codewords");
    long best = space.diameter() + 1;
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            best = std::min(best, distance(space, code[i], code[j]));
            if (best <= 1) return best;
        }
    }
    return best;
}

long min_distance(const AmbientSpace& space, const SubspaceBasis& code, const FieldTower& tower) {
    require_prime(space);
    if (code.dimension() == 0) throw InvalidArgument("minimum distance of the zero code is undefined");
    long best = space.diameter() + 1;
    for (const auto& c : subspace_codewords(code, tower, true)) {
        best = std::min(best, weight(space, c));
        if (best <= 1) return best;
    }
    return best;
}

namespace {

// Weight enumerator of one F_q-matrix block: entry u counts the m x eta
// matrices of rank u.
std::vector<BigInt> block_rank_counts(const BigInt& q, long m, long eta) {
    const long cap = std::min(m, eta);
    std::vector<BigInt> w(static_cast<std::size_t>(cap) + 1);
    for (long u = 0; u <= cap; ++u) w[static_cast<std::size_t>(u)] = qbinom(eta, u, q) * falling_qpower(q, m, u);
    return w;
}

}  // namespace

BigInt ball_volume(const AmbientSpace& space, long r) {
    space.validate();
    if (r < 0) throw InvalidArgument("radius must be non-negative");
    if (r >= space.diameter()) return space.size();
    const BigInt q(space.q);
    const long m = space.m();
    const long n = static_cast<long>(space.n);
    BigInt total = 0;
    switch (space.metric) {
        case MetricKind::Hamming: {
            const BigInt a = pow(q, static_cast<unsigned long>(m)) - 1;
            BigInt ai = 1;
            for (long i = 0; i <= r; ++i, ai *= a) total += binom(n, i) * ai;
            return total;
        }
        case MetricKind::Rank:
            for (long i = 0; i <= r; ++i) total += qbinom(n, i, q) * falling_qpower(q, m, i);
            return total;
        case MetricKind::SumRank: {
            // Coefficients of (sum_u w_u z^u)^t up to z^r, one block at a time.
            const auto w = block_rank_counts(q, m, static_cast<long>(space.eta()));
            std::vector<BigInt> acc(static_cast<std::size_t>(r) + 1, 0);
            acc[0] = 1;
            for (std::size_t b = 0; b < space.t; ++b) {
                std::vector<BigInt> next(acc.size(), 0);
                for (std::size_t h = 0; h < acc.size(); ++h) {
                    if (acc[h] == 0) continue;
                    for (std::size_t u = 0; u < w.size() && h + u < acc.size(); ++u) next[h + u] += acc[h] * w[u];
                }
                acc = std::move(next);
            }
            for (const auto& c : acc) total += c;
            return total;
        }
    }
    return total;
}

BigInt sum_rank_volume_by_compositions(const AmbientSpace& space, long r) {
    if (space.metric != MetricKind::SumRank) throw InvalidArgument("not a sum-rank space");
    space.validate();
    if (r < 0) throw InvalidArgument("radius must be non-negative");
    if (r >= space.diameter()) return space.size();
    const long m = space.m();
    const long eta = static_cast<long>(space.eta());
    const auto w = block_rank_counts(BigInt(space.q), m, eta);
    BigInt total = 0;
    for (long h = 0; h <= r; ++h) {
        Compositions gen(h, static_cast<long>(space.t), std::min(m, eta));
        while (const auto* parts = gen.next_parts()) {
            BigInt term = 1;
            for (long u : *parts) term *= w[static_cast<std::size_t>(u)];
            total += term;
        }
    }
    return total;
}

std::vector<BigInt> weight_distribution(const AmbientSpace& space, const BigInt& guard) {
    space.validate();
    require_prime(space);
    const BigInt N = space.size();
    check_guard("ambient enumeration", N, guard);
    const std::uint64_t Q = to_u64(pow(BigInt(space.q), space.m()));
    const std::uint64_t total = to_u64(N);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(space.diameter()) + 1, 0);
    Codeword x(space.n, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        ++counts[static_cast<std::size_t>(weight(space, x))];
        for (std::size_t j = 0; j < x.size() && ++x[j] == Q; ++j) x[j] = 0;
    }
    return {counts.begin(), counts.end()};
}

BigInt ball_volume_oracle(const AmbientSpace& space, long r, const BigInt& guard) {
    if (r < 0) throw InvalidArgument("radius must be non-negative");
    auto dist = weight_distribution(space, guard);
    BigInt total = 0;
    for (long i = 0; i <= r && i < static_cast<long>(dist.size()); ++i) total += dist[static_cast<std::size_t>(i)];
    return total;
}

GrowthProfile volume_growth(const AmbientSpace& space, long r, Parameter growing) {
    space.validate();
    if (r < 0) throw InvalidArgument("radius must be non-negative");
    const BigInt q(space.q);
    const long m = space.m();
    const long n = static_cast<long>(space.n);
    const long ell = space.ell;
    const long s = space.s;
    GrowthProfile g;
    g.growing = growing;
    g.slope = 0;
    g.offset = 0;
    switch (space.metric) {
        case MetricKind::Hamming: {
            if (growing == Parameter::N) {
                // Sum of C(n,i)(q^m-1)^i is dominated by i = r, and C(n,r) ~ n^r / r!.
                BigInt fact = 1;
                for (long i = 2; i <= r; ++i) fact *= i;
                g.coefficient = make_rat(pow(pow(q, static_cast<unsigned long>(m)) - 1, static_cast<unsigned long>(r)), fact);
                g.degree = r;
                return g;
            }
            const long rr = std::min(r, n);
            g.coefficient = BigRat(binom(n, rr));
            if (growing == Parameter::Q) g.offset = rr * m;
            if (growing == Parameter::Ell) g.slope = rr * s;
            if (growing == Parameter::S) g.slope = rr * ell;
            return g;
        }
        case MetricKind::Rank: {
            if (growing == Parameter::Q) {
                const long rr = std::min({r, n, m});
                g.coefficient = 1;
                g.offset = rr * (m + n - rr);
                return g;
            }
            if (growing == Parameter::N) {
                const long rr = std::min(r, m);
                g.coefficient = BigRat(qbinom(m, rr, q));
                g.slope = rr;
                return g;
            }
            const long rr = std::min(r, n);
            g.coefficient = BigRat(qbinom(n, rr, q));
            g.slope = growing == Parameter::Ell ? rr * s : rr * ell;
            return g;
        }
        case MetricKind::SumRank: {
            if (growing != Parameter::Q) {
                throw NotImplemented("sum-rank volume growth is available only as q grows; supported pairs: "
                                     "hamming/{q,n,ell,s}, rank/{q,n,ell,s}, sumrank/q");
            }
            const long t = static_cast<long>(space.t);
            const long eta = static_cast<long>(space.eta());
            const long rr = std::min(r, t * std::min(m, eta));
            const long z = rr % t;
            g.coefficient = BigRat(binom(t, z));
            g.offset = BigRat(rr * (m + eta)) - make_rat(rr * rr - z * z, t) - z;
            return g;
        }
    }
    return g;
}

}  // namespace codedens
