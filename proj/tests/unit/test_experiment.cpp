#include "codedens/experiment.hpp"
#include "codedens/rng.hpp"
#include "codedens/subspace.hpp"

#include <map>

#include <gtest/gtest.h>

using namespace codedens;

TEST(ExactDensity, Examples) {
    EXPECT_EQ(exact_density(AmbientSpace::hamming(2, 1, 1, 2), CodeFamilySpec::nonlinear(2, 2)), make_rat(1, 3));
    EXPECT_EQ(exact_density(AmbientSpace::hamming(2, 1, 2, 2), CodeFamilySpec::linear_code(1, 2)), make_rat(3, 5));
    EXPECT_EQ(exact_density(AmbientSpace::rank(2, 1, 2, 2), CodeFamilySpec::linear_code(2, 1)), 1);
    EXPECT_EQ(exact_density(AmbientSpace::hamming(3, 1, 1, 2), CodeFamilySpec::nonlinear(3, 1)), 1);
}

TEST(ExactDensity, GuardNamesTheCount) {
    try {
        exact_density(AmbientSpace::hamming(2, 1, 2, 2), CodeFamilySpec::linear_code(2, 2), BigInt(10));
        FAIL() << "guard not enforced";
    } catch (const SizeLimitError& e) {
        EXPECT_EQ(e.count(), 35);
    }
}

TEST(ExactDensity, CensusSumsToCodeCount) {
    auto r = AmbientSpace::rank(2, 1, 3, 2);
    for (long k = 1; k <= 6; ++k) {
        auto census = linear_distance_census(r, k);
        BigInt total = 0;
        for (const auto& c : census) total += c;
        EXPECT_EQ(total, code_count(r, CodeFamilySpec::linear_code(k, 1)));
        EXPECT_EQ(census[0], 0);
    }
}

TEST(ClopperPearson, KnownValuesAndEdges) {
    const BigRat grid(1, 1 << 20);
    auto ci = clopper_pearson(5, 10, make_rat(95, 100));
    // Reference values 0.187086 and 0.812914.
    EXPECT_LE(ci.lower, make_rat(187086, 1000000));
    EXPECT_GE(ci.lower, make_rat(187086, 1000000) - 2 * grid);
    EXPECT_GE(ci.upper, make_rat(812914, 1000000) - grid);
    EXPECT_LE(ci.upper, make_rat(812914, 1000000) + 2 * grid);
    auto zero = clopper_pearson(0, 1, make_rat(99, 100));
    EXPECT_EQ(zero.lower, 0);
    EXPECT_GE(zero.upper, make_rat(995, 1000));
    auto one = clopper_pearson(1, 1, make_rat(99, 100));
    EXPECT_EQ(one.upper, 1);
    EXPECT_LE(one.lower, make_rat(5, 1000));
    EXPECT_THROW(clopper_pearson(2, 1, make_rat(1, 2)), InvalidArgument);
    EXPECT_THROW(clopper_pearson(0, 1, BigRat(1)), InvalidArgument);
}

TEST(ClopperPearson, MirrorSymmetry) {
    const BigRat grid(1, 1 << 20);
    for (std::uint64_t n : {7u, 40u, 200u}) {
        for (std::uint64_t x = 0; x <= n; x += n / 7) {
            auto a = clopper_pearson(x, n, make_rat(9, 10));
            auto b = clopper_pearson(n - x, n, make_rat(9, 10));
            EXPECT_LE(abs(a.lower - (1 - b.upper)), grid);
            EXPECT_LE(a.lower, make_rat(x, n));
            EXPECT_GE(a.upper, make_rat(x, n));
        }
    }
}

TEST(Estimate, ContainsExactDensity) {
    auto h = AmbientSpace::hamming(2, 1, 2, 2);
    auto r = estimate_density(h, CodeFamilySpec::linear_code(1, 2), 2000, 2024, make_rat(99, 100));
    EXPECT_LE(r.ci_lower, make_rat(3, 5));
    EXPECT_GE(r.ci_upper, make_rat(3, 5));
    EXPECT_LE(r.ci_lower, r.point_estimate);
    EXPECT_LE(r.point_estimate, r.ci_upper);
}

TEST(Estimate, SingleTrial) {
    auto h = AmbientSpace::hamming(2, 1, 1, 2);
    auto r = estimate_density(h, CodeFamilySpec::nonlinear(2, 2), 1, 5, make_rat(99, 100));
    EXPECT_TRUE(r.point_estimate == 0 || r.point_estimate == 1);
    if (r.successes == 0) EXPECT_EQ(r.ci_lower, 0);
    else EXPECT_EQ(r.ci_upper, 1);
}

TEST(Estimate, WorkerCountDoesNotChangeTheResult) {
    auto sr = AmbientSpace::sum_rank(2, 1, 2, 4, 2);
    for (auto spec : {CodeFamilySpec::linear_code(2, 2), CodeFamilySpec::nonlinear(5, 2)}) {
        auto a = estimate_density(sr, spec, 3000, 99, make_rat(99, 100), 1);
        auto b = estimate_density(sr, spec, 3000, 99, make_rat(99, 100), 4);
        auto c = estimate_density(sr, spec, 3000, 99, make_rat(99, 100), 3);
        EXPECT_EQ(a.successes, b.successes);
        EXPECT_EQ(a.successes, c.successes);
        EXPECT_EQ(a.ci_lower, b.ci_lower);
    }
}

TEST(Estimate, SubsetSamplerUniformOnPairs) {
    // All 6 two-subsets of a 4-element space; chi-square with 5 degrees of
    // freedom against 20.52 (significance 10^-3).
    std::map<std::vector<std::uint64_t>, long> freq;
    const long N = 30000;
    for (long i = 0; i < N; ++i) {
        CounterRng rng(31, static_cast<std::uint64_t>(i));
        freq[sample_index_subset(rng, 2, 4)]++;
    }
    ASSERT_EQ(freq.size(), 6u);
    double chi = 0;
    for (const auto& [k, v] : freq) chi += (v - N / 6.0) * (v - N / 6.0) / (N / 6.0);
    EXPECT_LT(chi, 20.52);
}

TEST(VerifyBracket, GridAndNegativeControl) {
    for (unsigned ell = 1; ell <= 2; ++ell) {
        for (unsigned s = 1; s <= 2 / ell; ++s) {
            for (std::size_t n = 1; n <= 3; ++n) {
                for (auto sp : {AmbientSpace::hamming(2, ell, s, n), AmbientSpace::rank(2, ell, s, n)}) {
                    const long ns = static_cast<long>(n * s);
                    for (long k = 1; k <= ns; ++k) {
                        for (long d = 1; d <= sp.diameter(); ++d) {
                            EXPECT_TRUE(verify_bracket(sp, CodeFamilySpec::linear_code(k, d)).pass);
                        }
                    }
                }
            }
        }
    }
    auto h = AmbientSpace::hamming(2, 1, 1, 2);
    auto spec = CodeFamilySpec::nonlinear(2, 2);
    auto b = density_bracket(h, spec);
    b.upper -= make_rat(1, 1000000);
    auto v = check_in_bracket(exact_density(h, spec), b);
    EXPECT_FALSE(v.pass);
    EXPECT_EQ(v.details[0].second, "1/3");
}

TEST(Convergence, DenseAndSparseScenarios) {
    std::vector<std::uint64_t> probes;
    for (std::uint64_t p = 2; p <= 1009; ++p) {
        if (is_prime(p)) probes.push_back(p);
    }
    auto dense = convergence_experiment(mds_scenario(Parameter::Q, 2, 1, 2, 4, 2), probes);
    for (std::size_t i = 1; i < dense.size(); ++i) EXPECT_GT(dense[i].bracket->raw_lower, dense[i - 1].bracket->raw_lower);
    EXPECT_GT(dense.back().bracket->lower, make_rat(99, 100));

    auto sparse = convergence_experiment(mrd_scenario(Parameter::Q, 2, 1, 4, 4, 3), probes);
    for (std::size_t i = 1; i < sparse.size(); ++i) EXPECT_LT(sparse[i].bracket->raw_upper, sparse[i - 1].bracket->raw_upper);
    EXPECT_LT(sparse.back().bracket->upper, make_rat(1, 100));

    auto trivial = convergence_experiment(mrd_scenario(Parameter::N, 2, 1, 2, 3, 1), {2, 3, 4, 5, 6});
    for (const auto& row : trivial) {
        EXPECT_EQ(row.rho, trivial.front().rho);
        EXPECT_EQ(row.bracket->lower, 1);
        EXPECT_EQ(row.bracket->upper, 1);
    }
}

TEST(ClopperPearson, CoverageAgreesWithRoundedInterval) {
    const BigRat grid(1, 1 << 20);
    for (std::uint64_t n : {1u, 5u, 30u}) {
        for (std::uint64_t x = 0; x <= n; ++x) {
            const auto ci = clopper_pearson(x, n, make_rat(95, 100));
            for (long j = 0; j <= 64; ++j) {
                const BigRat p = make_rat(j, 64);
                const bool covers = clopper_pearson_covers(x, n, make_rat(95, 100), p);
                if (covers) EXPECT_TRUE(ci.lower <= p && p <= ci.upper) << x << "/" << n << " p=" << j << "/64";
                if (ci.lower + grid < p && p < ci.upper - grid) EXPECT_TRUE(covers);
            }
        }
    }
}
