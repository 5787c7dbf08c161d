#include "codedens/combinatorics.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace codedens;

namespace {

// Pascal's triangle, independent of GMP's binomial.
BigInt pascal(long n, long k) {
    std::vector<std::vector<BigInt>> row(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        row[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (long j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
    }
    return (k < 0 || k > n) ? BigInt(0) : row[n][k];
}

// Counts reduced row-echelon k x a matrices over F_p: one per subspace.
long count_rref(long a, long k, long p) {
    long total = 0;
    std::vector<long> piv(static_cast<std::size_t>(k));
    // Pivot subsets via bitmasks; free entries per row are columns to the
    // right of the pivot that are not themselves pivots.
    for (long mask = 0; mask < (1L << a); ++mask) {
        if (__builtin_popcountl(static_cast<unsigned long>(mask)) != k) continue;
        long free_entries = 0;
        long row = 0;
        for (long c = 0; c < a; ++c) {
            if (!(mask >> c & 1)) continue;
            for (long j = c + 1; j < a; ++j) free_entries += !(mask >> j & 1);
            ++row;
        }
        long cnt = 1;
        for (long i = 0; i < free_entries; ++i) cnt *= p;
        total += cnt;
    }
    return total;
}

}  // namespace

TEST(QBinom, KnownValues) {
    EXPECT_EQ(qbinom(4, 2, 2), 35);
    EXPECT_EQ(qbinom(3, 1, 2), 7);
    EXPECT_EQ(qbinom(2, -1, 3), 0);
    EXPECT_EQ(qbinom(2, 3, 3), 0);
    for (long a = 0; a < 6; ++a) EXPECT_EQ(qbinom(a, 0, 5), 1);
    EXPECT_THROW(qbinom(3, 1, 1), InvalidArgument);
}

TEST(QBinom, MatchesRrefCount) {
    for (long p : {2, 3, 5}) {
        for (long a = 0; a <= 6; ++a) {
            for (long b = 0; b <= a; ++b) EXPECT_EQ(qbinom(a, b, p), count_rref(a, b, p)) << a << " " << b << " " << p;
        }
    }
}

TEST(QBinom, SymmetryAndPascal) {
    for (long q : {2, 3, 4, 7}) {
        for (long a = 1; a <= 9; ++a) {
            for (long b = 0; b <= a; ++b) {
                EXPECT_EQ(qbinom(a, b, q), qbinom(a, a - b, q));
                BigInt rhs = qbinom(a - 1, b - 1, q) + pow(BigInt(q), b) * qbinom(a - 1, b, q);
                EXPECT_EQ(qbinom(a, b, q), rhs);
            }
        }
    }
}

TEST(QBinom, HugeExponentsRoundTrip) {
    BigInt v = qbinom(400, 200, 7);
    EXPECT_GT(mpz_sizeinbase(v.get_mpz_t(), 2), 10000u);
    EXPECT_EQ(v, qbinom(400, 200, BigInt(7)));
    EXPECT_EQ(BigInt(v.get_str()), v);
}

TEST(Binom, MatchesPascal) {
    EXPECT_EQ(binom(4, 1), 4);
    EXPECT_EQ(binom(10, 5), 252);
    for (long n = 0; n <= 30; ++n) {
        for (long k = -1; k <= n + 1; ++k) EXPECT_EQ(binom(n, k), pascal(n, k));
    }
}

TEST(EulerPi, EnclosesKnownValue) {
    auto e = euler_pi(2, make_rat(1, 1000));
    EXPECT_LE(e.width(), make_rat(1, 1000));
    EXPECT_TRUE(e.contains(make_rat(34627, 10000)));
    for (long q : {2, 3, 5, 101}) EXPECT_GT(euler_pi(q, make_rat(1, 100)).lo, 1);
    EXPECT_LT(euler_pi(101, make_rat(1, 1000)).hi, make_rat(102, 100));
    EXPECT_THROW(euler_pi(2, BigRat(0)), InvalidArgument);
}

TEST(EulerPi, NestedAsWidthShrinks) {
    for (long q : {2, 3, 5}) {
        auto prev = euler_pi(q, make_rat(1, 10));
        for (long w = 100; w <= 1000000; w *= 10) {
            auto cur = euler_pi(q, BigRat(1, w));
            EXPECT_GE(cur.lo, prev.lo);
            EXPECT_LE(cur.hi, prev.hi);
            prev = cur;
        }
    }
}

TEST(EulerPi, GaussianBinomialLimit) {
    // [2n, n]_q / q^{n^2} tends to π(q).
    for (long q : {2, 3, 5}) {
        const long n = 12;
        BigRat ratio = make_rat(qbinom(2 * n, n, q), pow(BigInt(q), static_cast<unsigned long>(n * n)));
        EXPECT_TRUE(euler_pi(q, make_rat(1, 1000000)).widened(make_rat(1, 100)).contains(ratio)) << q;
    }
}

TEST(Compositions, Examples) {
    auto a = all_compositions(2, 2, 1);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].parts, (std::vector<long>{1, 1}));
    auto b = all_compositions(1, 2, 2);
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[0].parts, (std::vector<long>{0, 1}));
    EXPECT_EQ(b[1].parts, (std::vector<long>{1, 0}));
    EXPECT_EQ(all_compositions(3, 3, 2).size(), 7u);
    EXPECT_TRUE(all_compositions(7, 3, 2).empty());
}

TEST(Compositions, MatchBruteForce) {
    for (long t = 1; t <= 4; ++t) {
        for (long cap = 0; cap <= 3; ++cap) {
            std::size_t total = 0;
            for (long r = 0; r <= t * cap + 1; ++r) {
                auto got = all_compositions(r, t, cap);
                std::vector<std::vector<long>> want;
                std::vector<long> v(static_cast<std::size_t>(t), 0);
                for (;;) {
                    long s = 0;
                    for (long x : v) s += x;
                    if (s == r) want.push_back(v);
                    std::size_t i = static_cast<std::size_t>(t);
                    while (i-- > 0) {
                        if (v[i] < cap) {
                            ++v[i];
                            break;
                        }
                        v[i] = 0;
                    }
                    if (i == static_cast<std::size_t>(-1)) break;
                }
                ASSERT_EQ(got.size(), want.size());
                for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].parts, want[i]);
                total += got.size();
            }
            std::size_t expect = 1;
            for (long i = 0; i < t; ++i) expect *= static_cast<std::size_t>(cap + 1);
            EXPECT_EQ(total, expect);
        }
    }
}
