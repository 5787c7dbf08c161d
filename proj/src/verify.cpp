#include "codedens/verify.hpp"

#include "codedens/combinatorics.hpp"
#include "codedens/subspace.hpp"

namespace codedens {

Grid parse_grid(const std::string& s) {
    if (s == "micro") return Grid::Micro;
    if (s == "desk") return Grid::Desk;
    throw InvalidArgument("unknown grid '" + s + "' (expected desk or micro)");
}

std::string to_string(Grid g) { return g == Grid::Micro ? "micro" : "desk"; }

namespace {

std::string describe(const AmbientSpace& sp) {
    std::string out = to_string(sp.metric) + "(q=" + std::to_string(sp.q) + ",ell=" + std::to_string(sp.ell) +
                      ",s=" + std::to_string(sp.s) + ",n=" + std::to_string(sp.n);
    if (sp.metric == MetricKind::SumRank) out += ",t=" + std::to_string(sp.t);
    return out + ")";
}

void record(SuiteResult& res, bool ok, Verdict v) {
    ++res.checked;
    if (!ok) res.failures.push_back(std::move(v));
}

// Every space of the given metric kind on a (q, m, n) point, one per
// divisor t of n taken from {1, 2, 4} for sum-rank.
std::vector<AmbientSpace> spaces_at(std::uint64_t q, unsigned m, std::size_t n) {
    std::vector<AmbientSpace> out = {AmbientSpace::hamming(q, 1, m, n), AmbientSpace::rank(q, 1, m, n)};
    for (std::size_t t : {1u, 2u, 4u}) {
        if (n % t == 0) out.push_back(AmbientSpace::sum_rank(q, 1, m, n, t));
    }
    return out;
}

}  // namespace

SuiteResult volume_suite(Grid g) {
    SuiteResult res{"volume", 0, {}};
    const unsigned mmax = g == Grid::Desk ? 4 : 3;
    const std::size_t nmax = g == Grid::Desk ? 4 : 3;
    const BigInt cap = g == Grid::Desk ? BigInt(65536) : BigInt(4096);
    for (std::uint64_t q : {2u, 3u}) {
        for (unsigned m = 1; m <= mmax; ++m) {
            for (std::size_t n = 1; n <= nmax; ++n) {
                if (pow(BigInt(q), m * n) > cap) continue;
                for (const auto& sp : spaces_at(q, m, n)) {
                    const auto dist = weight_distribution(sp, cap);
                    BigInt acc = 0;
                    for (long r = 0; r <= sp.diameter(); ++r) {
                        acc += dist[static_cast<std::size_t>(r)];
                        const BigInt v = ball_volume(sp, r);
                        record(res, v == acc,
                               {"volume", false,
                                {{"space", describe(sp)}, {"radius", std::to_string(r)},
                                 {"formula", v.get_str()}, {"enumerated", acc.get_str()}}});
                    }
                }
            }
        }
    }
    return res;
}

SuiteResult bracket_suite(Grid g) {
    SuiteResult res{"bracket", 0, {}};
    auto check_census = [&](const AmbientSpace& sp, const std::vector<BigInt>& census, const CodeFamilySpec& base) {
        for (long d = 1; d <= sp.diameter(); ++d) {
            CodeFamilySpec spec = base;
            spec.d = d;
            const BigRat exact = census_density(census, d);
            Verdict v = check_in_bracket(exact, density_bracket(sp, spec));
            v.details.insert(v.details.begin(), {"d", std::to_string(d)});
            v.details.insert(v.details.begin(), {"family", spec.linear ? "k=" + std::to_string(spec.dimension)
                                                                       : "S=" + spec.cardinality.get_str()});
            v.details.insert(v.details.begin(), {"space", describe(sp)});
            record(res, v.pass, std::move(v));
        }
    };
    auto metrics = [](std::uint64_t q, unsigned ell, unsigned s, std::size_t n) {
        std::vector<AmbientSpace> out = {AmbientSpace::hamming(q, ell, s, n), AmbientSpace::rank(q, ell, s, n)};
        if (n > 1) out.push_back(AmbientSpace::sum_rank(q, ell, s, n, n));
        if (n == 4) out.push_back(AmbientSpace::sum_rank(q, ell, s, n, 2));
        return out;
    };

    const std::vector<std::uint64_t> qs = g == Grid::Desk ? std::vector<std::uint64_t>{2, 3} : std::vector<std::uint64_t>{2};
    for (std::uint64_t q : qs) {
        for (std::size_t n : {2u, 3u}) {
            for (const auto& sp : metrics(q, 1, 1, n)) {
                for (long S = 2; S <= 4; ++S) {
                    check_census(sp, nonlinear_distance_census(sp, S), CodeFamilySpec::nonlinear(S, 1));
                }
            }
        }
    }
    const BigInt cap = g == Grid::Desk ? BigInt(100000) : BigInt(2000);
    for (unsigned ell = 1; ell <= 2; ++ell) {
        for (unsigned s = 1; s <= 2; ++s) {
            for (std::size_t n = 1; n <= 3; ++n) {
                for (const auto& sp : metrics(2, ell, s, n)) {
                    const long ns = static_cast<long>(n * s);
                    for (long k = 1; k <= ns; ++k) {
                        if (qbinom(ns, k, pow(BigInt(2), ell)) > cap) continue;
                        check_census(sp, linear_distance_census(sp, k), CodeFamilySpec::linear_code(k, 1));
                    }
                }
            }
        }
    }
    return res;
}

SuiteResult reduction_suite(Grid g) {
    SuiteResult res{"reduction", 0, {}};
    const BigInt cap = g == Grid::Desk ? BigInt(4096) : BigInt(256);
    for (std::uint64_t q : {2u, 3u}) {
        for (unsigned m = 1; m <= 4; ++m) {
            for (std::size_t n = 1; n <= 4; ++n) {
                if (pow(BigInt(q), m * n) > cap) continue;
                const std::pair<AmbientSpace, AmbientSpace> pairs[] = {
                    {AmbientSpace::sum_rank(q, 1, m, n, 1), AmbientSpace::rank(q, 1, m, n)},
                    {AmbientSpace::sum_rank(q, 1, m, n, n), AmbientSpace::hamming(q, 1, m, n)}};
                const FieldTower tower = build_tower(q, 1, m);
                const std::uint64_t N = to_u64(pow(BigInt(q), m * n));
                std::vector<Codeword> words;
                for (std::uint64_t i = 0; i < N; ++i) words.push_back(codeword_from_index(i, tower, n));
                for (const auto& [sr, other] : pairs) {
                    for (long r = 0; r <= other.diameter(); ++r) {
                        const BigInt a = ball_volume(sr, r), b = ball_volume(other, r);
                        record(res, a == b,
                               {"reduction", false,
                                {{"space", describe(sr)}, {"against", describe(other)}, {"radius", std::to_string(r)},
                                 {"sum-rank", a.get_str()}, {"other", b.get_str()}}});
                    }
                    long bad = 0;
                    for (std::uint64_t i = 0; i < N; ++i) {
                        for (std::uint64_t j = i + 1; j < N; ++j) {
                            bad += distance(sr, words[i], words[j]) != distance(other, words[i], words[j]);
                        }
                    }
                    record(res, bad == 0,
                           {"reduction", false,
                            {{"space", describe(sr)}, {"against", describe(other)},
                             {"mismatched pairs", std::to_string(bad)}}});
                    record(res, min_distance(sr, words) == min_distance(other, words),
                           {"reduction", false, {{"space", describe(sr)}, {"against", describe(other)},
                                                  {"check", "min distance of the whole space"}}});
                }
            }
        }
    }
    return res;
}

std::vector<SuiteResult> run_verification(Grid g) {
    return {volume_suite(g), reduction_suite(g), bracket_suite(g)};
}

}  // namespace codedens
