#include "codedens/subspace.hpp"

#include "codedens/combinatorics.hpp"

#include <algorithm>
#include <unordered_set>

namespace codedens {

Elem subfield_element(const FieldTower& tower, std::uint64_t idx) {
    if (!tower.subfield.empty()) return tower.subfield.at(idx);
    Elem e = 0;
    for (unsigned a = 0; a < tower.ell; ++a) {
        e = tower.field.add(e, tower.field.scale(tower.subfield_basis[a], static_cast<std::uint32_t>(idx % tower.p)));
        idx /= tower.p;
    }
    return e;
}

BigInt ambient_size(const FieldTower& tower, std::size_t n) {
    return pow(BigInt(tower.p), static_cast<unsigned long>(tower.m) * n);
}

Codeword codeword_from_index(std::uint64_t idx, const FieldTower& tower, std::size_t n) {
    const std::uint64_t Q = tower.field.order();
    Codeword out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = idx % Q;
        idx /= Q;
    }
    return out;
}

std::uint64_t codeword_index(const Codeword& x, const FieldTower& tower) {
    const std::uint64_t Q = tower.field.order();
    std::uint64_t out = 0;
    for (std::size_t j = x.size(); j-- > 0;) out = out * Q + x[j];
    return out;
}

SubspaceBasis canonical_basis(SubfieldMatrix generators, const FieldTower& tower) {
    auto pivots = generators.rref(tower.field);
    SubfieldMatrix rows(pivots.size(), generators.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t j = 0; j < generators.cols(); ++j) rows(i, j) = generators(i, j);
    }
    return SubspaceBasis{std::move(rows), std::move(pivots)};
}

SubspaceBasis sample_subspace(CounterRng& rng, std::size_t k, const FieldTower& tower, std::size_t n) {
    const std::size_t cols = n * tower.s;
    if (k < 1 || k > cols) throw InvalidArgument("subspace dimension out of range");
    const std::uint64_t K = to_u64(pow(BigInt(tower.p), tower.ell));
    for (;;) {
        SubfieldMatrix g(k, cols);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < cols; ++j) g(i, j) = subfield_element(tower, rng.below(K));
        }
        auto basis = canonical_basis(std::move(g), tower);
        if (basis.dimension() == k) return basis;
    }
}

SubspaceEnumerator::SubspaceEnumerator(std::size_t k, const FieldTower& tower, std::size_t n, const BigInt& guard)
    : tower_(tower), k_(k), cols_(n * tower.s) {
    if (k > cols_) throw InvalidArgument("subspace dimension exceeds ambient dimension");
    total_ = qbinom(static_cast<long>(cols_), static_cast<long>(k), pow(BigInt(tower.p), tower.ell));
    check_guard("subspace enumeration", total_, guard);
}

bool SubspaceEnumerator::next_pivots() {
    if (!started_) {
        pivots_.resize(k_);
        for (std::size_t i = 0; i < k_; ++i) pivots_[i] = i;
        return true;
    }
    for (std::size_t i = k_; i-- > 0;) {
        if (pivots_[i] < cols_ - k_ + i) {
            ++pivots_[i];
            for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void SubspaceEnumerator::load_profile() {
    free_.clear();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    current_.rref = SubfieldMatrix(k_, cols_);
    current_.pivots = pivots_;
    for (std::size_t i = 0; i < k_; ++i) {
        current_.rref(i, pivots_[i]) = 1;
        for (std::size_t j = pivots_[i] + 1; j < cols_; ++j) {
            if (!is_pivot[j]) free_.emplace_back(i, j);
        }
    }
    digits_.assign(free_.size(), 0);
}

bool SubspaceEnumerator::bump_free() {
    const std::uint64_t K = tower_.subfield_order();
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        auto [r, c] = free_[i];
        if (++digits_[i] < K) {
            current_.rref(r, c) = subfield_element(tower_, digits_[i]);
            return true;
        }
        digits_[i] = 0;
        current_.rref(r, c) = 0;
    }
    return false;
}

const SubspaceBasis* SubspaceEnumerator::next() {
    if (done_) return nullptr;
    if (!started_) {
        next_pivots();
        started_ = true;
        load_profile();
        return &current_;
    }
    if (bump_free()) return &current_;
    if (!next_pivots()) {
        done_ = true;
        return nullptr;
    }
    load_profile();
    return &current_;
}

std::vector<SubspaceBasis> enumerate_subspaces(std::size_t k, const FieldTower& tower, std::size_t n,
                                               const BigInt& guard) {
    SubspaceEnumerator gen(k, tower, n, guard);
    std::vector<SubspaceBasis> out;
    while (const auto* b = gen.next()) out.push_back(*b);
    return out;
}

std::vector<std::uint64_t> sample_index_subset(CounterRng& rng, std::uint64_t S, std::uint64_t universe) {
    if (S > universe) throw InvalidArgument("subset larger than universe");
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(S * 2);
    for (std::uint64_t j = universe - S; j < universe; ++j) {
        std::uint64_t t = rng.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Codeword> sample_code_subset(CounterRng& rng, const BigInt& S, const FieldTower& tower, std::size_t n) {
    BigInt N = ambient_size(tower, n);
    if (S < 2 || S > N) throw InvalidArgument("code size must satisfy 2 <= S <= " + N.get_str());
    if (!fits_u64(N) || N > (BigInt(1) << 62)) throw InvalidArgument("ambient space too large to index");
    auto idx = sample_index_subset(rng, to_u64(S), to_u64(N));
    std::vector<Codeword> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(codeword_from_index(i, tower, n));
    return out;
}

std::vector<Codeword> subspace_codewords(const SubspaceBasis& b, const FieldTower& tower, bool projective) {
    const auto& f = tower.field;
    const std::size_t k = b.dimension();
    const std::uint64_t K = tower.subfield_order();
    // unflatten is F_{q^ℓ}-linear, so combine the unflattened rows directly.
    std::vector<Codeword> rows;
    for (std::size_t i = 0; i < k; ++i) {
        rows.push_back(unflatten(std::vector<Elem>(b.rref.row(i), b.rref.row(i) + b.rref.cols()), tower));
    }
    const std::size_t n = k ? rows[0].size() : b.rref.cols() / tower.s;
    std::vector<Elem> scalars(K);
    for (std::uint64_t c = 0; c < K; ++c) scalars[c] = subfield_element(tower, c);
    std::vector<Codeword> out;
    std::vector<std::uint64_t> coef(k, 0);
    auto emit = [&] {
        Codeword v(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (!coef[i]) continue;
            const Elem c = scalars[coef[i]];
            for (std::size_t j = 0; j < n; ++j) {
                if (rows[i][j]) v[j] = f.add(v[j], f.mul(c, rows[i][j]));
            }
        }
        out.push_back(std::move(v));
    };
    if (!projective) {
        for (;;) {
            emit();
            std::size_t i = 0;
            while (i < k && ++coef[i] == K) coef[i++] = 0;
            if (i == k) break;
        }
        return out;
    }
    // Any fixed nonzero leading coefficient picks one vector per class.
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[lead] = 1;
        for (;;) {
            emit();
            std::size_t i = lead + 1;
            while (i < k && ++coef[i] == K) coef[i++] = 0;
            if (i == k) break;
        }
    }
    return out;
}

}  // namespace codedens
