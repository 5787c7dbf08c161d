#include "codedens/experiment.hpp"

#include "codedens/subspace.hpp"

#include <atomic>
#include <thread>

namespace codedens {

namespace {

FieldTower tower_for(const AmbientSpace& space) {
    space.validate();
    if (!is_prime(space.q)) throw InvalidArgument("sampling and enumeration need a prime q, got " + std::to_string(space.q));
    return build_tower(space.q, space.ell, space.s);
}

BigInt choose(const BigInt& n, unsigned long k) {
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

}  // namespace

std::vector<BigInt> linear_distance_census(const AmbientSpace& space, long k, const BigInt& guard) {
    CodeFamilySpec::linear_code(k, 1).validate(space);
    const FieldTower tower = tower_for(space);
    SubspaceEnumerator gen(static_cast<std::size_t>(k), tower, space.n, guard);
    std::vector<BigInt> census(static_cast<std::size_t>(space.diameter()) + 1, 0);
    while (const auto* b = gen.next()) ++census[static_cast<std::size_t>(min_distance(space, *b, tower))];
    return census;
}

std::vector<BigInt> nonlinear_distance_census(const AmbientSpace& space, const BigInt& S, const BigInt& guard) {
    CodeFamilySpec::nonlinear(S, 1).validate(space);
    const FieldTower tower = tower_for(space);
    const BigInt Q = space.size();
    check_guard("code enumeration", choose(Q, to_u64(S)), guard);
    const std::size_t N = to_u64(Q);
    const std::size_t size = to_u64(S);
    std::vector<Codeword> words;
    for (std::size_t i = 0; i < N; ++i) words.push_back(codeword_from_index(i, tower, space.n));
    std::vector<long> dist(N * N, 0);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i + 1; j < N; ++j) dist[i * N + j] = dist[j * N + i] = distance(space, words[i], words[j]);
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(space.diameter()) + 1, 0);
    std::vector<std::size_t> pick;
    // Depth-first over increasing index tuples, carrying the running minimum.
    auto rec = [&](auto&& self, std::size_t from, long best) -> void {
        if (pick.size() == size) {
            ++counts[static_cast<std::size_t>(best)];
            return;
        }
        for (std::size_t i = from; i + (size - pick.size()) <= N; ++i) {
            long b = best;
            for (auto j : pick) b = std::min(b, dist[j * N + i]);
            pick.push_back(i);
            self(self, i + 1, b);
            pick.pop_back();
        }
    };
    rec(rec, 0, space.diameter());
    std::vector<BigInt> census;
    for (auto c : counts) census.emplace_back(static_cast<unsigned long>(c));
    return census;
}

BigRat census_density(const std::vector<BigInt>& census, long d) {
    BigInt total = 0, good = 0;
    for (std::size_t i = 0; i < census.size(); ++i) {
        total += census[i];
        if (static_cast<long>(i) >= d) good += census[i];
    }
    if (total == 0) throw InvalidArgument("empty census");
    return make_rat(good, total);
}

BigRat exact_density(const AmbientSpace& space, const CodeFamilySpec& spec, const BigInt& guard) {
    spec.validate(space);
    check_guard("code enumeration", code_count(space, spec), guard);
    if (spec.d == 1) return 1;
    if (spec.linear) return census_density(linear_distance_census(space, spec.dimension, guard), spec.d);
    return census_density(nonlinear_distance_census(space, spec.cardinality, guard), spec.d);
}

namespace {

constexpr unsigned kGridBits = 20;

// 2^{20n} * P(X >= x) for X ~ Bin(n, j / 2^20).
BigInt upper_tail(std::uint64_t x, std::uint64_t n, std::uint64_t j) {
    const std::uint64_t D = 1ULL << kGridBits;
    if (x == 0) return pow(BigInt(D), n);
    if (j == 0) return 0;
    BigInt term = pow(BigInt(j), n);
    BigInt sum = term;
    for (std::uint64_t i = n; i > x; --i) {
        // T_{i-1} = T_i * i (D - j) / ((n - i + 1) j)
        mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), i);
        mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), D - j);
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), n - i + 1);
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), j);
        sum += term;
    }
    return sum;
}

// 2^{20n} * P(X <= x).
BigInt lower_tail(std::uint64_t x, std::uint64_t n, std::uint64_t j) {
    const std::uint64_t D = 1ULL << kGridBits;
    if (x >= n) return pow(BigInt(D), n);
    if (j == D) return 0;
    BigInt term = pow(BigInt(D - j), n);
    BigInt sum = term;
    for (std::uint64_t i = 0; i < x; ++i) {
        // T_{i+1} = T_i * (n - i) j / ((i + 1)(D - j))
        mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), n - i);
        mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), j);
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), i + 1);
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), D - j);
        sum += term;
    }
    return sum;
}

}  // namespace

Interval clopper_pearson(std::uint64_t x, std::uint64_t n, const BigRat& level_in) {
    BigRat level = level_in;
    level.canonicalize();
    if (n == 0) throw InvalidArgument("Clopper-Pearson needs at least one trial");
    if (x > n) throw InvalidArgument("more successes than trials");
    if (level <= 0 || level >= 1) throw InvalidArgument("confidence level must lie in (0, 1)");
    const std::uint64_t D = 1ULL << kGridBits;
    const BigRat alpha = 1 - level;
    // tail <= (alpha/2) D^n  <=>  2 den(alpha) tail <= num(alpha) D^n
    const BigInt rhs = alpha.get_num() * pow(BigInt(D), n);
    const BigInt scale = 2 * alpha.get_den();
    auto ok = [&](const BigInt& tail) { return scale * tail <= rhs; };

    Interval out;
    if (x == 0) {
        out.lower = 0;
    } else {
        // Largest j with P(X >= x) <= alpha/2; the tail grows with j.
        std::uint64_t lo = 0, hi = D;
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (ok(upper_tail(x, n, mid))) lo = mid;
            else hi = mid;
        }
        out.lower = make_rat(lo, D);
    }
    if (x == n) {
        out.upper = 1;
    } else {
        // Smallest j with P(X <= x) <= alpha/2; the tail shrinks with j.
        std::uint64_t lo = 0, hi = D;
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (ok(lower_tail(x, n, mid))) hi = mid;
            else lo = mid;
        }
        out.upper = make_rat(hi, D);
    }
    return out;
}

bool clopper_pearson_covers(std::uint64_t x, std::uint64_t n, const BigRat& level_in, const BigRat& prob) {
    BigRat level = level_in, p = prob;
    level.canonicalize();
    p.canonicalize();
    if (n == 0 || x > n) throw InvalidArgument("need 0 <= successes <= trials and trials > 0");
    if (level <= 0 || level >= 1) throw InvalidArgument("confidence level must lie in (0, 1)");
    if (p < 0 || p > 1) throw InvalidArgument("p must lie in [0, 1]");
    if (p == 0) return x == 0;
    if (p == 1) return x == n;
    const BigInt a = p.get_num(), b = p.get_den();
    const BigInt c = b - a;
    // Terms C(n,i) a^i c^{n-i}, summed against (alpha/2) b^n.
    std::vector<BigInt> terms(n + 1);
    terms[0] = pow(c, n);
    for (std::uint64_t i = 0; i < n; ++i) {
        BigInt t = terms[i] * (n - i) * a;
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), i + 1);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t());
        terms[i + 1] = std::move(t);
    }
    const BigRat alpha = 1 - level;
    const BigInt rhs = alpha.get_num() * pow(b, n);
    const BigInt scale = 2 * alpha.get_den();
    BigInt upper = 0, lower = 0;
    for (std::uint64_t i = x; i <= n; ++i) upper += terms[i];
    for (std::uint64_t i = 0; i <= x; ++i) lower += terms[i];
    // p >= p_L iff P_p(X >= x) >= alpha/2, and p <= p_U iff P_p(X <= x) >= alpha/2.
    const bool above = x == 0 || scale * upper >= rhs;
    const bool below = x == n || scale * lower >= rhs;
    return above && below;
}

bool sample_trial(const AmbientSpace& space, const FieldTower& tower, const CodeFamilySpec& spec,
                  std::uint64_t seed, std::uint64_t trial) {
    CounterRng rng(seed, trial);
    if (spec.linear) {
        const auto b = sample_subspace(rng, static_cast<std::size_t>(spec.dimension), tower, space.n);
        return min_distance(space, b, tower) >= spec.d;
    }
    return min_distance(space, sample_code_subset(rng, spec.cardinality, tower, space.n)) >= spec.d;
}

std::uint64_t count_successes(const AmbientSpace& space, const CodeFamilySpec& spec, std::uint64_t trials,
                              std::uint64_t seed, unsigned streams) {
    spec.validate(space);
    if (trials < 1) throw InvalidArgument("trials must be positive");
    if (streams < 1) throw InvalidArgument("worker streams must be positive");
    const FieldTower tower = tower_for(space);
    std::atomic<std::uint64_t> successes{0};
    auto work = [&](std::uint64_t from, std::uint64_t to) {
        std::uint64_t local = 0;
        for (std::uint64_t i = from; i < to; ++i) local += sample_trial(space, tower, spec, seed, i);
        successes += local;
    };
    if (streams == 1) {
        work(0, trials);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < streams; ++w) {
            pool.emplace_back(work, trials * w / streams, trials * (w + 1) / streams);
        }
        for (auto& th : pool) th.join();
    }
    return successes.load();
}

SampleReport estimate_density(const AmbientSpace& space, const CodeFamilySpec& spec, std::uint64_t trials,
                              std::uint64_t seed, const BigRat& level, unsigned streams) {
    SampleReport r;
    r.trials = trials;
    r.successes = count_successes(space, spec, trials, seed, streams);
    r.point_estimate = make_rat(r.successes, trials);
    const Interval ci = clopper_pearson(r.successes, trials, level);
    r.ci_lower = ci.lower;
    r.ci_upper = ci.upper;
    r.confidence_level = level;
    r.confidence_level.canonicalize();
    r.seed = seed;
    r.worker_streams = streams;
    return r;
}

Verdict check_in_bracket(const BigRat& value, const DensityBracket& bracket, std::string subject) {
    Verdict v;
    v.subject = std::move(subject);
    v.pass = bracket.contains(value);
    v.details = {{"value", to_string(value)}, {"lower", to_string(bracket.lower)}, {"upper", to_string(bracket.upper)}};
    return v;
}

Verdict verify_bracket(const AmbientSpace& space, const CodeFamilySpec& spec) {
    return check_in_bracket(exact_density(space, spec), density_bracket(space, spec));
}

std::vector<ConvergenceRow> convergence_experiment(const Scenario& sc, const std::vector<std::uint64_t>& probes) {
    std::vector<ConvergenceRow> out;
    for (const auto& pt : ratio_probe(sc, probes)) {
        ConvergenceRow row{pt.value, pt.rho, std::nullopt};
        if (sc.family != Family::GilbertVarshamov) {
            const AmbientSpace sp = sc.at(pt.value);
            row.bracket = density_bracket(sp, family_spec(sc, sp));
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace codedens
