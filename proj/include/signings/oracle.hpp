#pragma once

// Brute-force machinery: exhaustive signing enumeration filtered by the exact spectral test, simple-cycle
// enumeration, and seeded generators. Nothing here goes through cyclic structure or diagonal similarity, so it
// serves as an independent check of the constructive routes in signing.hpp.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "spectrum.hpp"

namespace signings {

inline constexpr std::size_t default_support_cap = 16;
inline constexpr std::size_t default_cycle_cap = 8;

/// Seeded 64-bit generator with portable bounded draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) return lo + next();
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return lo + x % span;
    }

    bool bernoulli(double prob) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < prob; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(0, i - 1)]);
    }

private:
    std::mt19937_64 engine_;
};

inline SignDiagonal random_sign_diagonal(std::size_t n, Rng& rng) {
    std::vector<int> d(n);
    for (int& v : d) v = rng.bernoulli(0.5) ? 1 : -1;
    return SignDiagonal(std::move(d));
}

inline Permutation random_permutation(std::size_t n, Rng& rng) {
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), std::size_t{0});
    rng.shuffle(im);
    return Permutation(std::move(im));
}

/// All 2^m signings of a base with m support positions.
///
/// Ordered lexicographically by the sign vector (row-major support order, +1 before -1): mask bit m-1-t set
/// means position t carries -1.
class SigningSpace {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Signing;
        using difference_type = std::ptrdiff_t;
        using pointer = const Signing*;
        using reference = Signing;

        iterator() = default;
        iterator(const SigningSpace* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}
        Signing operator*() const { return owner_->at(mask_); }
        iterator& operator++() {
            ++mask_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++mask_;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

    private:
        const SigningSpace* owner_ = nullptr;
        std::uint64_t mask_ = 0;
    };

    SigningSpace(Signing::BasePtr base, std::size_t cap) : base_(std::move(base)), m_(base_->support_size()) {
        if (m_ > cap)
            throw Error(ErrorKind::cap_exceeded,
                        "support size " + std::to_string(m_) + " exceeds cap " + std::to_string(cap));
    }

    std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }
    std::size_t support_size() const noexcept { return m_; }
    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }
    const Signing::BasePtr& base_ptr() const noexcept { return base_; }

    Signing at(std::uint64_t mask) const { return Signing(base_, signs_of(mask)); }

    std::vector<std::int8_t> signs_of(std::uint64_t mask) const {
        std::vector<std::int8_t> s(m_, 1);
        for (std::size_t t = 0; t < m_; ++t)
            if ((mask >> (m_ - 1 - t)) & 1U) s[t] = -1;
        return s;
    }

private:
    Signing::BasePtr base_;
    std::size_t m_;
};

inline SigningSpace all_signings(const Signing::BasePtr& base, std::size_t cap = default_support_cap) {
    return SigningSpace(base, cap);
}

/// Characteristic polynomials of every signing, grouped: each distinct polynomial with the (sorted) masks of
/// the signings producing it.
struct SigningSpectra {
    SigningSpace space;
    CharPoly base_poly;
    std::vector<std::pair<CharPoly, std::vector<std::uint64_t>>> groups;
};

namespace detail {

/// Allocation-free Faddeev-LeVerrier over int64 with overflow detection, for the exhaustive oracle loops.
class FastCharPoly {
public:
    explicit FastCharPoly(std::size_t n) : n_(n), m_(n * n), acc_(n * n), prod_(n * n), coeffs_(n + 1) {}

    long long& at(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }

    /// False on overflow; coefficients() is then meaningless.
    bool compute() {
        std::fill(acc_.begin(), acc_.end(), 0);
        for (std::size_t i = 0; i < n_; ++i) acc_[i * n_ + i] = 1;
        coeffs_[0] = 1;
        for (std::size_t k = 1; k <= n_; ++k) {
            std::fill(prod_.begin(), prod_.end(), 0);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t l = 0; l < n_; ++l) {
                    const long long a = m_[i * n_ + l];
                    if (a == 0) continue;
                    for (std::size_t j = 0; j < n_; ++j) {
                        long long t;
                        if (__builtin_mul_overflow(a, acc_[l * n_ + j], &t) ||
                            __builtin_add_overflow(prod_[i * n_ + j], t, &prod_[i * n_ + j]))
                            return false;
                    }
                }
            long long tr = 0;
            for (std::size_t i = 0; i < n_; ++i)
                if (__builtin_add_overflow(tr, prod_[i * n_ + i], &tr)) return false;
            if (tr == std::numeric_limits<long long>::min()) return false;
            const auto step = static_cast<long long>(k);
            if (tr % step != 0) throw std::logic_error("Faddeev-LeVerrier: inexact division");
            const long long c = -tr / step;
            coeffs_[k] = c;
            if (k == n_) break;
            for (std::size_t i = 0; i < n_; ++i)
                if (__builtin_add_overflow(prod_[i * n_ + i], c, &prod_[i * n_ + i])) return false;
            std::swap(acc_, prod_);
        }
        return true;
    }

    const std::vector<long long>& coefficients() const noexcept { return coeffs_; }

private:
    std::size_t n_;
    std::vector<long long> m_, acc_, prod_, coeffs_;
};

} // namespace detail

inline SigningSpectra signing_spectra(const Signing::BasePtr& base, std::size_t cap = default_support_cap) {
    SigningSpectra out{all_signings(base, cap), char_poly(*base), {}};
    const std::size_t n = base->order();
    const auto support = base->support();
    const std::size_t m = support.size();

    bool small = true;
    std::vector<long long> magnitude(m, 0);
    for (std::size_t t = 0; t < m; ++t) {
        const Integer& v = (*base)(support[t].first, support[t].second);
        if (v > std::numeric_limits<long long>::max()) small = false;
        else magnitude[t] = static_cast<long long>(v);
    }

    std::map<std::vector<long long>, std::vector<std::uint64_t>> fast;
    std::map<CharPoly, std::vector<std::uint64_t>> exact;
    detail::FastCharPoly work(n);

    for (std::uint64_t mask = 0; mask < out.space.size(); ++mask) {
        if (small) {
            for (std::size_t t = 0; t < m; ++t)
                work.at(support[t].first, support[t].second) =
                    ((mask >> (m - 1 - t)) & 1U) ? -magnitude[t] : magnitude[t];
            if (work.compute()) {
                auto it = fast.find(work.coefficients());
                if (it == fast.end()) it = fast.emplace(work.coefficients(), std::vector<std::uint64_t>{}).first;
                it->second.push_back(mask);
                continue;
            }
        }
        exact[char_poly(out.space.at(mask))].push_back(mask);
    }
    for (auto& [key, masks] : fast) {
        CharPoly poly;
        for (long long c : key) poly.coeffs.emplace_back(c);
        auto& dst = exact[poly];
        dst.insert(dst.end(), masks.begin(), masks.end());
    }
    for (auto& [poly, masks] : exact) {
        std::sort(masks.begin(), masks.end());
        out.groups.emplace_back(poly, std::move(masks));
    }
    return out;
}

using RotationCheckFn = std::function<bool(const CharPoly&, const CharPoly&, const RotationFactor&)>;

inline bool default_rotation_check(const CharPoly& a, const CharPoly& b, const RotationFactor& alpha) {
    return rotation_check(a, b, alpha);
}

/// Masks of the signings B with sp(B) = alpha sp(A), ascending.
inline std::vector<std::uint64_t> brute_force_masks(const SigningSpectra& spectra, const RotationFactor& alpha,
                                                    const RotationCheckFn& check = default_rotation_check) {
    std::vector<std::uint64_t> masks;
    for (const auto& [poly, group] : spectra.groups)
        if (check(spectra.base_poly, poly, alpha)) masks.insert(masks.end(), group.begin(), group.end());
    std::sort(masks.begin(), masks.end());
    return masks;
}

/// M(e^(i*pi*k/p), A) by exhaustive search, in canonical sign-vector order.
inline std::vector<Signing> brute_force_M(const Signing::BasePtr& base, long long k,
                                          std::size_t cap = default_support_cap,
                                          const RotationCheckFn& check = default_rotation_check) {
    const Digraph d = digraph_of(*base);
    require_strongly_connected(d);
    const RotationFactor alpha(k, static_cast<long long>(period(d)));
    const SigningSpectra spectra = signing_spectra(base, cap);
    std::vector<Signing> out;
    for (std::uint64_t mask : brute_force_masks(spectra, alpha, check)) out.push_back(spectra.space.at(mask));
    return out;
}

inline std::vector<Signing> brute_force_M(const NonnegMatrix& a, long long k, std::size_t cap = default_support_cap) {
    return brute_force_M(std::make_shared<const NonnegMatrix>(a), k, cap);
}

/// Gcd of the lengths of all simple directed cycles (loops count as length 1), by DFS enumeration of cycles
/// rooted at their smallest vertex. Stops early once the gcd reaches 1.
inline std::size_t all_simple_cycles_gcd(const Digraph& d, std::size_t max_order = default_cycle_cap) {
    const std::size_t n = d.order();
    if (n > max_order)
        throw Error(ErrorKind::cap_exceeded,
                    "cycle enumeration limited to " + std::to_string(max_order) + " vertices");
    std::size_t g = 0;
    std::vector<bool> on_path(n, false);

    // explicit stack of (vertex, next successor index)
    for (std::size_t root = 0; root < n && g != 1; ++root) {
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        on_path[root] = true;
        while (!stack.empty() && g != 1) {
            auto& [u, next] = stack.back();
            const auto& succ = d.successors(u);
            if (next == succ.size()) {
                on_path[u] = false;
                stack.pop_back();
                continue;
            }
            const std::size_t v = succ[next++];
            if (v == root) {
                g = std::gcd(g, stack.size());
            } else if (v > root && !on_path[v]) {
                on_path[v] = true;
                stack.emplace_back(v, 0);
            }
        }
        for (const auto& [u, next] : stack) on_path[u] = false;
    }
    if (g == 0) throw Error(ErrorKind::no_closed_path, "digraph has no cycle");
    return g;
}

struct RandomMatrixOptions {
    std::uint64_t max_entry = 3;
    double extra_arc_probability = 0.35;
    bool shuffle = true;
};

/// Irreducible nonnegative matrix with period exactly p.
///
/// Vertices are split into p nonempty classes. A closed walk stepping class t -> t+1 through every vertex makes
/// the digraph strongly connected, a p-cycle through the first vertex of each class pins the period to p, and
/// further class-respecting arcs are added at random. The result is then relabelled by a random permutation.
inline NonnegMatrix random_irreducible(std::size_t n, std::size_t p, std::uint64_t seed,
                                       const RandomMatrixOptions& opts = {}) {
    if (n == 0 || p == 0 || p > n)
        throw Error(ErrorKind::invalid_argument,
                    "need 1 <= p <= n (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
    Rng rng(seed);

    // class sizes: one vertex each, the rest distributed at random
    std::vector<std::size_t> sizes(p, 1);
    for (std::size_t extra = n - p; extra > 0; --extra) ++sizes[rng.uniform(0, p - 1)];
    std::vector<std::vector<std::size_t>> classes(p);
    std::vector<std::size_t> class_of(n);
    for (std::size_t t = 0, v = 0; t < p; ++t)
        for (std::size_t c = 0; c < sizes[t]; ++c, ++v) {
            classes[t].push_back(v);
            class_of[v] = t;
        }

    IntMatrix m(n);
    auto weight = [&] { return Integer(rng.uniform(1, std::max<std::uint64_t>(1, opts.max_entry))); };
    auto add_arc = [&](std::size_t u, std::size_t v) {
        if (m(u, v) == 0) m(u, v) = weight();
    };

    const std::size_t longest = *std::max_element(sizes.begin(), sizes.end());
    const std::size_t walk = p * longest;
    auto walk_vertex = [&](std::size_t step) {
        const std::size_t t = step % p;
        return classes[t][(step / p) % sizes[t]];
    };
    for (std::size_t s = 0; s < walk; ++s) add_arc(walk_vertex(s), walk_vertex((s + 1) % walk));
    for (std::size_t t = 0; t < p; ++t) add_arc(classes[t][0], classes[(t + 1) % p][0]);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v : classes[(class_of[u] + 1) % p])
            if (rng.bernoulli(opts.extra_arc_probability)) add_arc(u, v);

    NonnegMatrix a(std::move(m));
    if (opts.shuffle) a = conjugate_perm(a, random_permutation(n, rng));
    if (period(digraph_of(a)) != p) throw std::logic_error("random_irreducible produced the wrong period");
    return a;
}

} // namespace signings
