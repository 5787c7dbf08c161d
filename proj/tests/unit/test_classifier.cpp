#include "codedens/classifier.hpp"
#include "codedens/combinatorics.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace codedens;

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= hi; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

VerdictKind verdict(const Scenario& sc) { return classify(sc).verdict; }

}  // namespace

TEST(Classify, HammingVerdicts) {
    EXPECT_EQ(verdict(mds_scenario(Parameter::Q, 2, 1, 2, 4, 2)), VerdictKind::Dense);
    EXPECT_EQ(verdict(mds_scenario(Parameter::Ell, 2, 1, 2, 4, 2)), VerdictKind::Dense);
    EXPECT_EQ(verdict(mds_scenario(Parameter::N, 2, 1, 2, 4, 2)), VerdictKind::Sparse);
    EXPECT_EQ(verdict(mds_scenario(Parameter::Q, 2, 1, 1, 3, 2, false)), VerdictKind::Sparse);
    EXPECT_EQ(verdict(mds_scenario(Parameter::N, 2, 1, 1, 3, 2, false)), VerdictKind::Sparse);
    auto s = classify(mds_scenario(Parameter::S, 2, 1, 1, 4, 2));
    EXPECT_EQ(s.verdict, VerdictKind::NotDense);
    EXPECT_EQ(*s.upper, make_rat(1, 3));
}

TEST(Classify, RankVerdicts) {
    EXPECT_EQ(verdict(mrd_scenario(Parameter::Q, 2, 1, 4, 4, 3)), VerdictKind::Sparse);
    auto eq = classify(mrd_scenario(Parameter::Q, 2, 2, 2, 3, 2));
    EXPECT_EQ(eq.verdict, VerdictKind::NotDense);
    EXPECT_LE(*eq.upper, make_rat(1, 2));
    EXPECT_EQ(verdict(mrd_scenario(Parameter::Q, 2, 1, 3, 3, 2, false)), VerdictKind::Sparse);
    auto s = classify(mrd_scenario(Parameter::S, 2, 1, 1, 3, 2));
    EXPECT_EQ(s.verdict, VerdictKind::NotDense);
    EXPECT_EQ(*s.upper, make_rat(2, 9));
    EXPECT_EQ(verdict(mrd_scenario(Parameter::Ell, 2, 1, 1, 3, 2)), VerdictKind::Dense);
}

TEST(Classify, QuasiMrdOscillatesInN) {
    // ℓ = 3, d = 2: n(d-1) mod 3 cycles, so the offsets differ by residue.
    auto c = classify(mrd_scenario(Parameter::N, 2, 3, 1, 3, 2));
    EXPECT_EQ(c.verdict, VerdictKind::NotDense);
    EXPECT_EQ(c.period, 3);
    std::set<std::string> distinct;
    for (const auto& o : c.offsets) distinct.insert(to_string(o));
    EXPECT_EQ(distinct.size(), 3u);
    // The limsup uses the smallest constant, i.e. q^{-2ℓ+1} [m, d-1]_q here.
    const BigRat cst = BigRat(qbinom(3, 1, 2)) * pow_rat(BigRat(2), -5);
    EXPECT_EQ(*c.upper, 1 / (1 + cst));
    ASSERT_EQ(c.cross_checks.size(), 1u);
    const BigRat closed = 1 / (1 + BigRat(qbinom(3, 1, 2)) * pow_rat(BigRat(2), -6));
    EXPECT_EQ(*c.cross_checks[0].upper, closed);
    EXPECT_TRUE(c.cross_checks[0].agrees);
    EXPECT_LT(*c.upper, closed);
}

TEST(Classify, SumRankTable) {
    for (const auto& row : table1()) EXPECT_TRUE(row.reproduced()) << row.eta << " " << row.t << " " << row.d;
    EXPECT_EQ(verdict(msrd_scenario(Parameter::Q, 2, 1, 2, 2, 3, 2, false)), VerdictKind::Sparse);
    EXPECT_EQ(verdict(msrd_scenario(Parameter::N, 2, 1, 2, 2, 3, 2)), VerdictKind::Unknown);
}

TEST(Classify, GilbertVarshamov) {
    for (auto g : {Parameter::Q, Parameter::N}) {
        auto sc = mds_scenario(g, 2, 1, 1, 3, 2, false);
        sc.family = Family::GilbertVarshamov;
        EXPECT_EQ(verdict(sc), VerdictKind::Sparse);
        sc.base = AmbientSpace::rank(2, 1, 3, 3);
        EXPECT_EQ(verdict(sc), VerdictKind::Sparse);
    }
    for (auto g : {Parameter::Q, Parameter::Ell}) {
        auto sc = mrd_scenario(g, 2, 1, 2, 3, 2);
        sc.family = Family::GilbertVarshamov;
        EXPECT_EQ(verdict(sc), VerdictKind::Dense);
    }
    for (auto g : {Parameter::N, Parameter::S}) {
        auto sc = mrd_scenario(g, 3, 2, 2, 3, 2);
        sc.family = Family::GilbertVarshamov;
        auto c = classify(sc);
        EXPECT_EQ(c.verdict, VerdictKind::NotDense);
        EXPECT_EQ(*c.upper, make_rat(9, 10));
    }
}

TEST(Classify, ExplicitFamilies) {
    // k = n - 1 over F_2, d = 2 in the Hamming metric: rho ~ n (q-1) q^{-1}.
    Scenario sc = mds_scenario(Parameter::N, 2, 1, 1, 4, 2);
    sc.family = Family::ExplicitDimension;
    sc.k_slope = 1;
    sc.k_offset = -1;
    EXPECT_EQ(verdict(sc), VerdictKind::Sparse);
    sc.k_offset = -2;
    sc.k_slope = 1;
    EXPECT_EQ(verdict(sc), VerdictKind::Sparse);
    // A fixed dimension as n grows: rho ~ n q^{k - n - 1} -> 0.
    sc.k_slope = 0;
    sc.k_offset = 2;
    EXPECT_EQ(verdict(sc), VerdictKind::Dense);
    // Nonlinear S = q^{n/2}... as an affine exponent: S = q^{X - 3}.
    Scenario nl = mds_scenario(Parameter::N, 2, 1, 1, 4, 2, false);
    nl.family = Family::ExplicitCardinality;
    nl.card_slope = 0;
    nl.card_offset = 2;
    EXPECT_EQ(verdict(nl), VerdictKind::Dense);
    nl.card_slope = 1;
    nl.card_offset = -3;
    EXPECT_EQ(verdict(nl), VerdictKind::Sparse);
}

TEST(Classify, Errors) {
    EXPECT_THROW(classify(mds_scenario(Parameter::Ell, 2, 1, 1, 3, 2, false)), NotImplemented);
    EXPECT_THROW(classify(mds_scenario(Parameter::Q, 6, 1, 1, 3, 2)), InvalidArgument);
    EXPECT_THROW(classify(mrd_scenario(Parameter::N, 2, 1, 1, 3, 2)), InvalidArgument);
    EXPECT_THROW(classify(mrd_scenario(Parameter::Q, 2, 1, 1, 3, 2)), InvalidArgument);
    Scenario sc = mds_scenario(Parameter::Q, 2, 1, 1, 4, 2);
    sc.family = Family::ExplicitDimension;
    sc.k_slope = 1;
    EXPECT_THROW(classify(sc), InvalidArgument);
}

TEST(Classify, TrivialDistance) {
    for (auto g : {Parameter::Q, Parameter::N, Parameter::Ell, Parameter::S}) {
        EXPECT_EQ(verdict(mrd_scenario(g, 2, 1, 2, 3, 1)), VerdictKind::Dense);
    }
}

TEST(Classify, NotDenseUpperBelowOne) {
    for (unsigned ell = 1; ell <= 3; ++ell) {
        for (std::size_t n = 2; n <= 5; ++n) {
            for (long d = 2; d <= static_cast<long>(n); ++d) {
                for (auto g : {Parameter::S, Parameter::N}) {
                    auto sc = mrd_scenario(g, 2, ell, 2, n, d);
                    if (d > sc.at(100).diameter()) continue;
                    auto c = classify(sc);
                    if (c.verdict == VerdictKind::NotDense) {
                        EXPECT_LT(*c.upper, 1);
                        EXPECT_GT(*c.upper, 0);
                    }
                }
            }
        }
    }
}

TEST(MsrdTheta, Examples) {
    EXPECT_EQ(msrd_theta(2, 2, 2, 4), 1);
    for (long t = 2; t <= 6; ++t) {
        for (long mn = 1; mn <= 4; ++mn) EXPECT_EQ(msrd_theta(mn + 1, mn, t, 2), mn - 1);
    }
    // η = 1: the Hamming case, where the threshold quantity vanishes.
    for (long t = 2; t <= 6; ++t) {
        for (long d = 2; d <= t; ++d) EXPECT_EQ(msrd_theta(3, 1, t, d), 0);
    }
    EXPECT_THROW(msrd_theta(3, 1, 3, 4), InvalidArgument);
    EXPECT_THROW(msrd_theta(2, 2, 1, 2), InvalidArgument);
}

TEST(MsrdTheta, MatchesGenericExponent) {
    for (long t = 2; t <= 4; ++t) {
        for (long eta = 1; eta <= 3; ++eta) {
            for (long m = eta; m <= 4; ++m) {
                for (long d = 2; d <= t * eta; ++d) {
                    auto c = classify(msrd_scenario(Parameter::Q, 2, 1, static_cast<unsigned>(m),
                                                    static_cast<std::size_t>(eta), static_cast<std::size_t>(t), d));
                    EXPECT_EQ(c.offsets.at(0), msrd_theta(m, eta, t, d) - 1);
                }
            }
        }
    }
}

TEST(Region, CorollaryExamplesAndGoldenGrid) {
    EXPECT_EQ(region_corollary(1, 1), RegionCell::Dense);
    EXPECT_EQ(region_corollary(4, 3), RegionCell::Sparse);
    EXPECT_EQ(region_corollary(4, 2), RegionCell::Unclassified);
    const std::set<std::pair<long, long>> dense = {{1, 1}, {2, 1}, {3, 1}};
    const std::set<std::pair<long, long>> sparse = {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 3},
                                                    {4, 4}, {5, 3}, {5, 4}, {6, 3}, {6, 4}, {7, 3}, {7, 4},
                                                    {8, 4}, {9, 4}, {10, 4}};
    for (long t = 1; t <= 10; ++t) {
        for (long eta = 1; eta <= 4; ++eta) {
            const auto cell = region_corollary(t, eta);
            if (dense.count({t, eta})) EXPECT_EQ(cell, RegionCell::Dense);
            else if (sparse.count({t, eta})) EXPECT_EQ(cell, RegionCell::Sparse);
            else EXPECT_EQ(cell, RegionCell::Unclassified) << t << "," << eta;
        }
    }
}

TEST(Region, GenericAgreesWithCorollary) {
    for (const auto& e : msrd_eta_region(10, 4)) {
        for (auto v : e.by_d) {
            if (e.corollary == RegionCell::Dense) EXPECT_EQ(v, VerdictKind::Dense);
            if (e.corollary == RegionCell::Sparse) EXPECT_EQ(v, VerdictKind::Sparse);
        }
    }
}

TEST(CrossChecks, AgreeOnSmallGrid) {
    long checked = 0;
    for (unsigned ell = 1; ell <= 3; ++ell) {
        for (unsigned s = 1; s <= 3; ++s) {
            for (std::size_t n = 1; n <= 5; ++n) {
                for (auto g : {Parameter::Q, Parameter::N, Parameter::Ell, Parameter::S}) {
                    for (bool lin : {true, false}) {
                        if (!lin && (g == Parameter::Ell || g == Parameter::S)) continue;
                        for (long d = 1; d <= static_cast<long>(n); ++d) {
                            for (auto sc : {mds_scenario(g, 2, ell, s, n, d, lin), mrd_scenario(g, 2, ell, s, n, d, lin)}) {
                                if (d > sc.at(100).diameter()) continue;
                                if (lin && g == Parameter::Q && max_linear_dimension(sc.base, d).k_star < 1) continue;
                                auto c = classify(sc);
                                for (const auto& x : c.cross_checks) {
                                    ++checked;
                                    EXPECT_TRUE(x.agrees) << x.theorem << ": " << x.derivation << " generic "
                                                          << to_string(c.verdict);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    EXPECT_GT(checked, 300);
}

TEST(RatioProbe, DenseSparseAndBounded) {
    const auto primes = primes_up_to(1009);
    auto dense = ratio_probe(mds_scenario(Parameter::Q, 2, 1, 2, 4, 2), primes);
    for (std::size_t i = 1; i < dense.size(); ++i) EXPECT_LT(dense[i].rho, dense[i - 1].rho);
    EXPECT_LT(dense.back().rho, make_rat(1, 100));

    auto sparse = ratio_probe(mrd_scenario(Parameter::Q, 2, 1, 4, 4, 3), primes);
    for (std::size_t i = 1; i < sparse.size(); ++i) EXPECT_LT(1 / sparse[i].rho, 1 / sparse[i - 1].rho);
    EXPECT_LT(1 / sparse.back().rho, make_rat(1, 100));

    auto sc = mds_scenario(Parameter::S, 2, 1, 1, 4, 2);
    auto c = classify(sc);
    std::vector<std::uint64_t> svals;
    for (std::uint64_t s = 1; s <= 24; ++s) svals.push_back(s);
    auto bounded = ratio_probe(sc, svals);
    const BigRat gap = bounded.back().rho / *c.limit_constant - 1;
    EXPECT_LT(abs(gap), make_rat(1, 10));

    auto quasi = mrd_scenario(Parameter::N, 2, 3, 1, 3, 2);
    auto qc = classify(quasi);
    std::vector<std::uint64_t> nvals = {60, 61, 62};
    BigRat lowest = ratio_probe(quasi, nvals)[0].rho;
    for (const auto& pt : ratio_probe(quasi, nvals)) lowest = std::min(lowest, pt.rho);
    EXPECT_LT(abs(lowest / *qc.limit_constant - 1), make_rat(1, 10));
}
