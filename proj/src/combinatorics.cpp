#include "codedens/combinatorics.hpp"

#include <numeric>

namespace codedens {

BigInt qbinom(long a, long b, const BigInt& base) {
    if (base < 2) throw InvalidArgument("qbinom: base must be at least 2, got " + base.get_str());
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    // After step i the accumulator equals [a choose i+1]_base, so each
    // division is exact; a remainder means an arithmetic bug, not bad input.
    BigInt acc = 1;
    for (long i = 0; i < b; ++i) {
        acc *= pow(base, static_cast<unsigned long>(a - i)) - 1;
        BigInt den = pow(base, static_cast<unsigned long>(i + 1)) - 1;
        BigInt rem;
        mpz_tdiv_qr(acc.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
        if (rem != 0) throw std::logic_error("qbinom: inexact division");
    }
    return acc;
}

BigInt qbinom(long a, long b, std::uint64_t base) { return qbinom(a, b, BigInt(base)); }

BigInt binom(long n, long k) {
    if (n < 0) throw InvalidArgument("binom: n must be non-negative");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt falling_qpower(const BigInt& base, long m, long i) {
    BigInt out = 1;
    BigInt qm = pow(base, static_cast<unsigned long>(m));
    BigInt qj = 1;
    for (long j = 0; j < i; ++j) {
        out *= qm - qj;
        qj *= base;
    }
    return out;
}

Enclosure euler_pi(const BigInt& q, const BigRat& width) {
    if (q < 2) throw InvalidArgument("euler_pi: q must be at least 2");
    if (width <= 0) throw InvalidArgument("euler_pi: width must be positive");
    // Each factor 1/(1 - q^-i) <= exp(2 q^-i), so the tail after N factors
    // is at most exp(y) <= 1/(1 - y) with y = 4 q^-(N+1).
    BigRat partial = 1;
    BigInt qi = 1;
    for (long n = 1;; ++n) {
        qi *= q;
        partial *= make_rat(qi, qi - 1);
        BigRat y = make_rat(4, qi * q);
        if (y >= BigRat(1, 2)) continue;
        BigRat hi = partial / (1 - y);
        if (hi - partial <= width) return {partial, hi};
    }
}

long Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

Compositions::Compositions(long r, long t, long cap) : r_(r), cap_(cap) {
    if (t < 1) throw InvalidArgument("compositions: t must be positive");
    if (cap < 0) throw InvalidArgument("compositions: cap must be non-negative");
    parts_.assign(static_cast<std::size_t>(t), 0);
    if (r < 0 || r > t * cap) done_ = true;
}

void Compositions::fill_smallest(std::size_t from, long remaining) {
    const auto t = parts_.size();
    for (std::size_t i = from; i < t; ++i) {
        long room_after = cap_ * static_cast<long>(t - 1 - i);
        long v = std::max(0L, remaining - room_after);
        parts_[i] = v;
        remaining -= v;
    }
}

bool Compositions::advance() {
    const auto t = parts_.size();
    long suffix = 0;
    for (std::size_t i = t; i-- > 0;) {
        if (i + 1 < t && parts_[i] < cap_ && suffix > 0) {
            ++parts_[i];
            fill_smallest(i + 1, suffix - 1);
            return true;
        }
        suffix += parts_[i];
    }
    return false;
}

const std::vector<long>* Compositions::next_parts() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        fill_smallest(0, r_);
        return &parts_;
    }
    if (!advance()) {
        done_ = true;
        return nullptr;
    }
    return &parts_;
}

std::optional<Composition> Compositions::next() {
    const auto* p = next_parts();
    if (!p) return std::nullopt;
    return Composition{*p, cap_};
}

std::vector<Composition> all_compositions(long r, long t, long cap) {
    std::vector<Composition> out;
    Compositions gen(r, t, cap);
    while (auto c = gen.next()) out.push_back(std::move(*c));
    return out;
}

}  // namespace codedens
