#include "codedens/field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace codedens {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(powmod_u64(a, p - 2, p));
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        out.push_back(f);
        while (n % f == 0) n /= f;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // These witnesses are deterministic for every n < 2^64.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    for (unsigned e = 63; e >= 1; --e) {
        // Integer e-th root by float estimate plus correction.
        auto root = static_cast<std::uint64_t>(std::pow(static_cast<long double>(q), 1.0L / e));
        for (std::uint64_t c = root > 1 ? root - 1 : 1; c <= root + 1; ++c) {
            if (c < 2) continue;
            BigInt v = pow(c, e);
            if (v == q && is_prime(c)) return PrimePower{c, e};
        }
    }
    return std::nullopt;
}

namespace poly {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    Poly out(acc.begin(), acc.end());
    return trim(std::move(out));
}

Poly mod(Poly a, const Poly& f, std::uint32_t p) {
    a = trim(std::move(a));
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            std::uint64_t sub = c * f[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = static_cast<std::uint32_t>((x + p - y) % p);
    }
    return trim(std::move(out));
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t li = inv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(c * li % p);
    }
    return a;
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& f, std::uint32_t p) {
    Poly result{1};
    result = mod(result, f, p);
    Poly b = mod(base, f, p);
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mod(mul(result, result, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, b, p), f, p);
    }
    return result;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    Poly g = trim(f);
    if (g.size() < 2) return false;
    const unsigned m = static_cast<unsigned>(g.size() - 1);
    if (m == 1) return true;
    const Poly x{0, 1};
    // Rabin: f | x^{p^m} - x and gcd(x^{p^{m/r}} - x, f) = 1 for primes r | m.
    if (!sub(powmod(x, pow(BigInt(p), m), g, p), mod(x, g, p), p).empty()) return false;
    for (auto r : prime_factors(m)) {
        Poly h = sub(powmod(x, pow(BigInt(p), m / static_cast<unsigned>(r)), g, p), mod(x, g, p), p);
        if (gcd(g, h, p).size() != 1) return false;
    }
    return true;
}

Poly smallest_irreducible(unsigned degree, std::uint32_t p) {
    if (degree == 0) throw InvalidArgument("irreducible polynomial degree must be positive");
    const std::uint64_t limit = to_u64(pow(BigInt(p), degree));
    for (std::uint64_t idx = 0; idx < limit; ++idx) {
        Poly f(degree + 1, 0);
        std::uint64_t v = idx;
        for (unsigned i = 0; i < degree; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        f[degree] = 1;
        if (degree > 1 && f[0] == 0) continue;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace poly

GaloisField::GaloisField(std::uint32_t p, unsigned m) : p_(p), m_(m) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime, got " + std::to_string(p));
    if (m == 0) throw InvalidArgument("field degree must be positive");
    BigInt ord = codedens::pow(BigInt(p), m);
    if (mpz_sizeinbase(ord.get_mpz_t(), 2) > 62) {
        throw InvalidArgument("field of order " + ord.get_str() + " is too large");
    }
    order_ = to_u64(ord);
    place_.resize(m + 1);
    place_[0] = 1;
    for (unsigned i = 1; i <= m; ++i) place_[i] = place_[i - 1] * p;
    modulus_ = poly::smallest_irreducible(m, p);

    if (order_ <= (1u << 16) && order_ > 2) {
        const std::uint64_t group = order_ - 1;
        const auto factors = prime_factors(group);
        Elem g = 0;
        for (Elem c = 2; c < order_; ++c) {
            bool primitive = true;
            for (auto r : factors) {
                if (pow(c, BigInt(group / r)) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                g = c;
                break;
            }
        }
        log_.assign(order_, 0);
        exp_.assign(2 * group, 0);
        Elem cur = 1;
        for (std::uint64_t i = 0; i < group; ++i) {
            exp_[i] = cur;
            exp_[i + group] = cur;
            log_[cur] = static_cast<std::uint32_t>(i);
            cur = mul_slow(cur, g);
        }
    }
}

Poly GaloisField::to_poly(Elem a) const {
    Poly out(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return poly::trim(std::move(out));
}

Elem GaloisField::from_poly(const Poly& a) const {
    Elem out = 0;
    for (std::size_t i = a.size(); i-- > 0;) out = out * p_ + a[i];
    return out;
}

Elem GaloisField::mul_slow(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>(mulmod(a, b, p_));
    return from_poly(poly::mod(poly::mul(to_poly(a), to_poly(b), p_), modulus_, p_));
}

Elem GaloisField::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    Elem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place_[i];
        a /= p_;
        b /= p_;
    }
    return out;
}

Elem GaloisField::neg(Elem a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return (p_ - a) % p_;
    Elem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((p_ - a % p_) % p_) * place_[i];
        a /= p_;
    }
    return out;
}

Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem GaloisField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
}

Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw InvalidArgument("inverse of zero");
    if (!log_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    return pow(a, BigInt(order_ - 2));
}

Elem GaloisField::pow(Elem a, const BigInt& e) const {
    Elem result = 1;
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mul_slow(result, result);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul_slow(result, a);
    }
    return result;
}

Elem GaloisField::scale(Elem a, std::uint32_t c) const {
    c %= p_;
    if (c == 0) return 0;
    if (c == 1) return a;
    Elem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        out += mulmod(a % p_, c, p_) * place_[i];
        a /= p_;
    }
    return out;
}

std::uint32_t GaloisField::digit(Elem a, unsigned i) const {
    return static_cast<std::uint32_t>(a / place_[i] % p_);
}

std::vector<std::uint32_t> GaloisField::digits(Elem a) const {
    std::vector<std::uint32_t> out(m_);
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return out;
}

Elem GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
    Elem out = 0;
    for (std::size_t i = d.size(); i-- > 0;) out = out * p_ + d[i] % p_;
    return out;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

std::vector<std::size_t> FpMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
        }
        std::uint64_t inv = inv_mod((*this)(r, c), p_);
        for (std::size_t j = 0; j < cols_; ++j) {
            (*this)(r, j) = static_cast<std::uint32_t>((*this)(r, j) * inv % p_);
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || (*this)(i, c) == 0) continue;
            std::uint64_t f = (*this)(i, c);
            for (std::size_t j = 0; j < cols_; ++j) {
                std::uint64_t sub = f * (*this)(r, j) % p_;
                (*this)(i, j) = static_cast<std::uint32_t>(((*this)(i, j) + p_ - sub) % p_);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t FpMatrix::rank() const {
    FpMatrix copy = *this;
    return copy.rref().size();
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

std::optional<FpMatrix> FpMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    FpMatrix aug(n, 2 * n, p_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = aug.rref();
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    FpMatrix out(n, n, p_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> FpMatrix::kernel() const {
    FpMatrix r = *this;
    auto pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint32_t> v(cols_, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = (p_ - r(i, f)) % p_;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t prime_field_rank(const Elem* coords, std::size_t count, std::uint32_t p, unsigned m) {
    if (p == 2) {
        // Columns are m-bit vectors; keep an XOR basis indexed by leading bit.
        std::uint64_t basis[64] = {};
        std::size_t rank = 0;
        for (std::size_t j = 0; j < count; ++j) {
            std::uint64_t v = coords[j];
            while (v) {
                int top = 63 - std::countl_zero(v);
                if (!basis[top]) {
                    basis[top] = v;
                    ++rank;
                    break;
                }
                v ^= basis[top];
            }
            if (rank == m) break;
        }
        return rank;
    }
    FpMatrix mat(count, m, p);
    for (std::size_t j = 0; j < count; ++j) {
        Elem v = coords[j];
        for (unsigned i = 0; i < m; ++i) {
            mat(j, i) = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
    }
    return mat.rank();
}

bool FieldTower::in_subfield(Elem a) const {
    if (!subfield.empty()) return std::binary_search(subfield.begin(), subfield.end(), a);
    return field.pow(a, codedens::pow(BigInt(p), ell)) == a;
}

namespace {
constexpr std::uint64_t kMaxListedSubfield = 1u << 20;
}

FieldTower build_tower(std::uint64_t p, unsigned ell, unsigned s) {
    if (!is_prime(p)) throw InvalidArgument("tower base must be prime, got " + std::to_string(p));
    if (p > UINT32_MAX) throw InvalidArgument("tower base exceeds 32 bits");
    if (ell == 0 || s == 0) throw InvalidArgument("tower degrees must be positive");
    const unsigned m = ell * s;
    if (m > kMaxTowerDegree) {
        throw InvalidArgument("tower degree " + std::to_string(m) + " exceeds " +
                              std::to_string(kMaxTowerDegree));
    }
    const auto pp = static_cast<std::uint32_t>(p);
    GaloisField field(pp, m);

    // Kernel of y -> y^{p^ℓ} - y in polynomial-basis coordinates.
    const BigInt frob = pow(BigInt(p), ell);
    FpMatrix phi(m, m, pp);
    Elem xj = 1;
    for (unsigned j = 0; j < m; ++j) {
        Elem img = field.sub(field.pow(xj, frob), xj);
        for (unsigned i = 0; i < m; ++i) phi(i, j) = field.digit(img, i);
        xj *= p;
    }
    std::vector<Elem> sub_basis;
    for (auto& v : phi.kernel()) sub_basis.push_back(field.from_digits(v));
    if (sub_basis.size() != ell) throw std::logic_error("subfield has unexpected dimension");
    // Canonical order makes 1 come first when ℓ divides evenly.
    std::sort(sub_basis.begin(), sub_basis.end());

    // Greedy F_{p^ℓ}-basis from the monomials 1, x, ..., x^{m-1}.
    std::vector<Elem> rel;
    FpMatrix span(0, m, pp);
    std::vector<std::vector<std::uint32_t>> rows;
    std::size_t current = 0;
    Elem mono = 1;
    for (unsigned j = 0; j < m && rel.size() < s; ++j, mono *= p) {
        auto trial = rows;
        for (auto e : sub_basis) trial.push_back(field.digits(field.mul(e, mono)));
        FpMatrix mat(trial.size(), m, pp);
        for (std::size_t i = 0; i < trial.size(); ++i) {
            for (unsigned c = 0; c < m; ++c) mat(i, c) = trial[i][c];
        }
        std::size_t r = mat.rank();
        if (r == current + ell) {
            rows = std::move(trial);
            current = r;
            rel.push_back(mono);
        }
    }
    if (rel.size() != s) throw std::logic_error("relative basis construction failed");

    FpMatrix change(m, m, pp);
    for (unsigned i = 0; i < s; ++i) {
        for (unsigned a = 0; a < ell; ++a) {
            Elem prod = field.mul(sub_basis[a], rel[i]);
            for (unsigned r = 0; r < m; ++r) change(r, i * ell + a) = field.digit(prod, r);
        }
    }
    auto inverse = change.inverse();
    if (!inverse) throw std::logic_error("relative basis is singular");

    std::vector<Elem> elems;
    BigInt sub_order = pow(BigInt(p), ell);
    if (sub_order <= kMaxListedSubfield) {
        const auto count = to_u64(sub_order);
        elems.reserve(count);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Elem e = 0;
            std::uint64_t v = idx;
            for (unsigned a = 0; a < ell; ++a) {
                e = field.add(e, field.scale(sub_basis[a], static_cast<std::uint32_t>(v % p)));
                v /= p;
            }
            elems.push_back(e);
        }
        std::sort(elems.begin(), elems.end());
    }

    return FieldTower{pp, ell, s, m, std::move(field), std::move(sub_basis), std::move(rel),
                      std::move(elems), std::move(*inverse)};
}

FpMatrix expand_to_prime_field(const Codeword& x, const FieldTower& tower) {
    FpMatrix out(tower.m, x.size(), tower.p);
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (unsigned i = 0; i < tower.m; ++i) out(i, j) = tower.field.digit(x[j], i);
    }
    return out;
}

std::vector<Elem> flatten(const Codeword& x, const FieldTower& tower) {
    const auto& f = tower.field;
    const std::uint32_t p = tower.p;
    std::vector<Elem> out;
    out.reserve(x.size() * tower.s);
    for (Elem xj : x) {
        auto d = f.digits(xj);
        std::vector<std::uint32_t> c(tower.m, 0);
        for (unsigned r = 0; r < tower.m; ++r) {
            std::uint64_t acc = 0;
            for (unsigned k = 0; k < tower.m; ++k) acc = (acc + static_cast<std::uint64_t>(tower.to_relative(r, k)) * d[k]) % p;
            c[r] = static_cast<std::uint32_t>(acc);
        }
        for (unsigned i = 0; i < tower.s; ++i) {
            Elem y = 0;
            for (unsigned a = 0; a < tower.ell; ++a) {
                y = f.add(y, f.scale(tower.subfield_basis[a], c[i * tower.ell + a]));
            }
            out.push_back(y);
        }
    }
    return out;
}

Codeword unflatten(const std::vector<Elem>& v, const FieldTower& tower) {
    if (v.size() % tower.s) throw InvalidArgument("flattened length is not a multiple of s");
    Codeword out(v.size() / tower.s, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
        Elem acc = 0;
        for (unsigned i = 0; i < tower.s; ++i) {
            acc = tower.field.add(acc, tower.field.mul(v[j * tower.s + i], tower.relative_basis[i]));
        }
        out[j] = acc;
    }
    return out;
}

SubfieldMatrix::SubfieldMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

std::vector<std::size_t> SubfieldMatrix::rref(const GaloisField& f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
        }
        Elem inv = f.inv((*this)(r, c));
        for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = f.mul((*this)(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            Elem factor = (*this)(i, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols_; ++j) {
                (*this)(i, j) = f.sub((*this)(i, j), f.mul(factor, (*this)(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t SubfieldMatrix::rank(const GaloisField& f) const {
    SubfieldMatrix copy = *this;
    return copy.rref(f).size();
}

}  // namespace codedens
