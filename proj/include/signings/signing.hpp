#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "spectrum.hpp"

namespace signings {

/// Largest order accepted by enumerate_class unless overridden.
inline constexpr std::size_t default_enumeration_cap = 20;

struct AnalysisReport {
    bool irreducible = false;
    std::optional<std::size_t> period;
    /// Every admissible rotation (k, p), k = 0, ..., 2p-1.
    std::vector<RotationFactor> admissible;
    /// ks whose class equals M(1, A) and ks whose class equals M(e^(i*pi/p), A).
    std::vector<long long> even_ks, odd_ks;
    std::optional<CyclicStructure> cyclic;
    /// Strongly connected components, filled when the matrix is reducible.
    std::vector<std::vector<std::size_t>> components;
};

inline void require_irreducible(const NonnegMatrix& a) { require_strongly_connected(digraph_of(a)); }

/// Irreducibility, period, cyclic classes and admissible rotations; never throws on reducible input.
inline AnalysisReport analyze(const NonnegMatrix& a) {
    AnalysisReport r;
    const Digraph d = digraph_of(a);
    r.irreducible = is_strongly_connected(d);
    if (!r.irreducible) {
        r.components = strongly_connected_components(d);
        return r;
    }
    if (d.arc_count() == 0) return r;  // 1x1 zero matrix: no closed path
    CyclicStructure cs = cyclic_structure(d);
    const auto p = static_cast<long long>(cs.period);
    r.period = cs.period;
    for (long long k = 0; k < 2 * p; ++k) {
        r.admissible.emplace_back(k, p);
        (k % 2 == 0 ? r.even_ks : r.odd_ks).push_back(k);
    }
    r.cyclic = std::move(cs);
    return r;
}

inline std::vector<RotationFactor> admissible_alphas(const NonnegMatrix& a) {
    require_irreducible(a);
    const auto p = static_cast<long long>(period(digraph_of(a)));
    std::vector<RotationFactor> out;
    for (long long k = 0; k < 2 * p; ++k) out.emplace_back(k, p);
    return out;
}

/// A signing B of A with sp(B) = e^(i*pi*k/p) sp(A).
///
/// Even k: B = A. Odd k and p = 1: B = -A. Odd k and p > 1: bring A to p-cyclic form P A P^T, negate the
/// corner block A_p (rows V_{p-1}, columns V_0) and conjugate back.
inline Signing construct_witness(const Signing::BasePtr& base, long long k) {
    const NonnegMatrix& a = *base;
    require_irreducible(a);
    const CyclicStructure cs = cyclic_structure(a);
    const RotationFactor alpha(k, static_cast<long long>(cs.period));

    Signing witness = Signing::positive(base);
    if (k % 2 != 0) {
        if (cs.period == 1) {
            witness = Signing::negative(base);
        } else {
            IntMatrix cyc = conjugate_perm(a.matrix(), cs.perm);
            const std::size_t last_begin = a.order() - cs.block_sizes.back();
            const std::size_t first_end = cs.block_sizes.front();
            for (std::size_t i = last_begin; i < a.order(); ++i)
                for (std::size_t j = 0; j < first_end; ++j) cyc(i, j) = -cyc(i, j);
            witness = Signing::from_matrix(base, conjugate_perm(cyc, cs.perm.inverse()));
        }
    }
    if (!rotation_check(char_poly(a), char_poly(witness), alpha))
        throw std::logic_error("constructed witness fails the rotation check for " + alpha.to_string());
    return witness;
}

inline Signing construct_witness(const NonnegMatrix& a, long long k) {
    return construct_witness(std::make_shared<const NonnegMatrix>(a), k);
}

/// Delta with Delta B Delta = B2, normalized to delta_0 = +1, or nullopt when none exists.
///
/// Each support position (i, j) forces delta_i * delta_j = sign_B2(i,j) * sign_B(i,j). Fixing delta_0 = +1 and
/// propagating over the undirected support graph (connected, as A is irreducible) determines Delta; every
/// constraint is then re-checked.
inline std::optional<SignDiagonal> decide_diag_similar(const Signing& b, const Signing& b2) {
    if (!(b.base() == b2.base())) throw Error(ErrorKind::base_mismatch, "signings have different base matrices");
    const NonnegMatrix& a = b.base();
    require_irreducible(a);
    const std::size_t n = a.order();

    // relation[i][j] = required product delta_i * delta_j, 0 off the support
    std::vector<std::vector<int>> relation(n, std::vector<int>(n, 0));
    std::vector<std::vector<std::size_t>> neighbours(n);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!a.in_support(i, j)) continue;
            relation[i][j] = b.signs()[t] * b2.signs()[t];
            ++t;
            if (i != j) {
                neighbours[i].push_back(j);
                neighbours[j].push_back(i);
            }
        }

    std::vector<int> delta(n, 0);
    delta[0] = 1;
    std::queue<std::size_t> q;
    q.push(0);
    while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t v : neighbours[u]) {
            if (delta[v] != 0) continue;
            const int r = relation[u][v] != 0 ? relation[u][v] : relation[v][u];
            delta[v] = delta[u] * r;
            q.push(v);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (relation[i][j] != 0 && delta[i] * delta[j] != relation[i][j]) return std::nullopt;
    return SignDiagonal(std::move(delta));
}

struct MembershipResult {
    bool member = false;
    /// Delta with Delta B Delta equal to the class representative, when a member.
    std::optional<SignDiagonal> witness;

    explicit operator bool() const noexcept { return member; }
};

/// Whether B lies in M(e^(i*pi*k/p), A): its diagonal-similarity class must contain A (k even) or the
/// canonical witness for k = 1 (k odd).
inline MembershipResult membership(const Signing& b, long long k) {
    require_irreducible(b.base());
    const auto p = static_cast<long long>(period(digraph_of(b.base())));
    const RotationFactor alpha(k, p);  // validates the range of k
    const Signing representative =
        alpha.k() % 2 == 0 ? Signing::positive(b.base_ptr()) : construct_witness(b.base_ptr(), 1);
    MembershipResult r;
    r.witness = decide_diag_similar(b, representative);
    r.member = r.witness.has_value();
    return r;
}

/// Lazy range over the {-1,1}-diagonal similarity class of a signing: Delta B0 Delta for every Delta with
/// delta_0 = +1. The support is connected, so the 2^(n-1) matrices are pairwise distinct.
/// Single-consumer: iterators share no state beyond the class object.
class SimilarityClass {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Signing;
        using difference_type = std::ptrdiff_t;
        using pointer = const Signing*;
        using reference = Signing;

        iterator() = default;
        iterator(const SimilarityClass* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}

        Signing operator*() const { return owner_->at(mask_); }
        iterator& operator++() {
            ++mask_;
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++mask_;
            return tmp;
        }
        friend bool operator==(const iterator& x, const iterator& y) { return x.mask_ == y.mask_; }

    private:
        const SimilarityClass* owner_ = nullptr;
        std::uint64_t mask_ = 0;
    };

    SimilarityClass(Signing b0, std::size_t cap) : b0_(std::move(b0)) {
        require_irreducible(b0_.base());
        if (b0_.order() > cap)
            throw Error(ErrorKind::cap_exceeded, "class enumeration limited to order " + std::to_string(cap) +
                                                     ", got " + std::to_string(b0_.order()));
        count_ = std::uint64_t{1} << (b0_.order() - 1);
    }

    std::uint64_t size() const noexcept { return count_; }
    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count_}; }

    /// Bit v-1 of mask set means delta_v = -1.
    Signing at(std::uint64_t mask) const {
        std::vector<int> d(b0_.order(), 1);
        for (std::size_t v = 1; v < d.size(); ++v)
            if ((mask >> (v - 1)) & 1U) d[v] = -1;
        return conjugate_diag(b0_, SignDiagonal(std::move(d)));
    }

private:
    Signing b0_;
    std::uint64_t count_ = 0;
};

inline SimilarityClass enumerate_class(const Signing& b0, std::size_t cap = default_enumeration_cap) {
    return SimilarityClass(b0, cap);
}

} // namespace signings
