#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace signings {

using Integer = boost::multiprecision::cpp_int;

/// Largest matrix order accepted by the parsers unless overridden.
inline constexpr std::size_t default_max_order = 64;

/// Dense square matrix, row-major.
template <typename T>
class BasicMatrix {
public:
    using value_type = T;

    BasicMatrix() = default;
    explicit BasicMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

    BasicMatrix(std::initializer_list<std::initializer_list<T>> rows)
        : BasicMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != n_)
                throw Error(ErrorKind::invalid_argument, "matrix rows must form a square");
            std::size_t j = 0;
            for (const auto& v : row) (*this)(i, j++) = v;
            ++i;
        }
    }

    static BasicMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        BasicMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw Error(ErrorKind::invalid_argument, "matrix rows must form a square");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.n_);
        }
        return m;
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t order() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    std::span<const T> values() const noexcept { return data_; }

    template <typename U>
    BasicMatrix<U> cast() const {
        BasicMatrix<U> out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
        return out;
    }

    friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = BasicMatrix<Integer>;

template <typename T>
BasicMatrix<T> operator*(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
    if (a.order() != b.order())
        throw Error(ErrorKind::order_mismatch, "matrix product of different orders");
    const std::size_t n = a.order();
    BasicMatrix<T> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const T& ail = a(i, l);
            if (ail == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

template <typename T>
BasicMatrix<T> operator-(BasicMatrix<T> m) {
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) m(i, j) = -m(i, j);
    return m;
}

template <typename T>
T trace(const BasicMatrix<T>& m) {
    T t(0);
    for (std::size_t i = 0; i < m.order(); ++i) t += m(i, i);
    return t;
}

/// Entrywise absolute value.
template <typename T>
BasicMatrix<T> abs(BasicMatrix<T> m) {
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            if (m(i, j) < 0) m(i, j) = -m(i, j);
    return m;
}

/// A square matrix with nonnegative integer entries and order at least one.
class NonnegMatrix {
public:
    explicit NonnegMatrix(IntMatrix m) : m_(std::move(m)) {
        if (m_.order() == 0) throw Error(ErrorKind::invalid_argument, "matrix order must be positive");
        for (const auto& v : m_.values())
            if (v < 0) throw Error(ErrorKind::invalid_argument, "matrix has a negative entry");
    }
    NonnegMatrix(std::initializer_list<std::initializer_list<Integer>> rows)
        : NonnegMatrix(IntMatrix(rows)) {}

    std::size_t order() const noexcept { return m_.order(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const IntMatrix& matrix() const noexcept { return m_; }

    bool in_support(std::size_t i, std::size_t j) const { return m_(i, j) != 0; }

    /// Nonzero positions in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> support() const {
        std::vector<std::pair<std::size_t, std::size_t>> s;
        for (std::size_t i = 0; i < order(); ++i)
            for (std::size_t j = 0; j < order(); ++j)
                if (in_support(i, j)) s.emplace_back(i, j);
        return s;
    }
    std::size_t support_size() const {
        return static_cast<std::size_t>(
            std::count_if(m_.values().begin(), m_.values().end(), [](const Integer& v) { return v != 0; }));
    }

    friend bool operator==(const NonnegMatrix&, const NonnegMatrix&) = default;

private:
    IntMatrix m_;
};

/// Diagonal matrix with entries in {+1, -1}; it is its own inverse.
class SignDiagonal {
public:
    explicit SignDiagonal(std::vector<int> diag) : d_(std::move(diag)) {
        for (int v : d_)
            if (v != 1 && v != -1) throw Error(ErrorKind::invalid_argument, "sign diagonal entries must be +1 or -1");
    }
    static SignDiagonal identity(std::size_t n) { return SignDiagonal(std::vector<int>(n, 1)); }

    std::size_t order() const noexcept { return d_.size(); }
    int operator[](std::size_t i) const { return d_[i]; }
    std::span<const int> values() const noexcept { return d_; }

    SignDiagonal negated() const {
        auto d = d_;
        for (int& v : d) v = -v;
        return SignDiagonal(std::move(d));
    }
    /// Representative of {D, -D} with first entry +1.
    SignDiagonal normalized() const { return (!d_.empty() && d_[0] < 0) ? negated() : *this; }

    friend bool operator==(const SignDiagonal&, const SignDiagonal&) = default;

private:
    std::vector<int> d_;
};

/// Bijection on {0, ..., n-1}; image[v] is the new position of v.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (std::size_t v : image_) {
            if (v >= image_.size() || seen[v])
                throw Error(ErrorKind::invalid_argument, "permutation image is not a bijection");
            seen[v] = true;
        }
    }
    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> im(n);
        std::iota(im.begin(), im.end(), std::size_t{0});
        return Permutation(std::move(im));
    }

    std::size_t order() const noexcept { return image_.size(); }
    std::size_t operator()(std::size_t v) const { return image_[v]; }
    std::span<const std::size_t> image() const noexcept { return image_; }

    Permutation inverse() const {
        std::vector<std::size_t> inv(image_.size());
        for (std::size_t v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
        return Permutation(std::move(inv));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> image_;
};

/// A sign pattern over the support of a fixed base matrix. |realize()| equals the base by construction.
class Signing {
public:
    using BasePtr = std::shared_ptr<const NonnegMatrix>;

    /// signs holds one entry per support position, row-major, each +1 or -1.
    Signing(BasePtr base, std::vector<std::int8_t> signs) : base_(std::move(base)), signs_(std::move(signs)) {
        if (!base_) throw Error(ErrorKind::invalid_argument, "signing needs a base matrix");
        if (signs_.size() != base_->support_size())
            throw Error(ErrorKind::invalid_argument, "sign vector length differs from support size");
        for (auto s : signs_)
            if (s != 1 && s != -1) throw Error(ErrorKind::invalid_argument, "signs must be +1 or -1");
    }

    static Signing uniform(BasePtr base, int sign) {
        const std::size_t m = base->support_size();
        return Signing(std::move(base), std::vector<std::int8_t>(m, static_cast<std::int8_t>(sign)));
    }
    static Signing positive(BasePtr base) { return uniform(std::move(base), 1); }
    static Signing negative(BasePtr base) { return uniform(std::move(base), -1); }
    static Signing positive(const NonnegMatrix& a) { return positive(std::make_shared<const NonnegMatrix>(a)); }

    /// Reads the signs off a signed matrix; throws base_mismatch unless |b| equals the base.
    static Signing from_matrix(BasePtr base, const IntMatrix& b) {
        if (b.order() != base->order())
            throw Error(ErrorKind::base_mismatch, "signed matrix order differs from base order");
        std::vector<std::int8_t> signs;
        for (std::size_t i = 0; i < b.order(); ++i)
            for (std::size_t j = 0; j < b.order(); ++j) {
                const Integer& a = (*base)(i, j);
                const Integer& v = b(i, j);
                if (v == a && a != 0) signs.push_back(1);
                else if (v == -a && a != 0) signs.push_back(-1);
                else if (v != 0 || a != 0)
                    throw Error(ErrorKind::base_mismatch, "|B| differs from A at (" + std::to_string(i) + "," +
                                                              std::to_string(j) + ")");
            }
        return Signing(std::move(base), std::move(signs));
    }
    static Signing from_matrix(const NonnegMatrix& a, const IntMatrix& b) {
        return from_matrix(std::make_shared<const NonnegMatrix>(a), b);
    }

    const NonnegMatrix& base() const noexcept { return *base_; }
    const BasePtr& base_ptr() const noexcept { return base_; }
    std::size_t order() const noexcept { return base_->order(); }
    std::span<const std::int8_t> signs() const noexcept { return signs_; }

    /// Sign at (i, j): +1 or -1 on the support, 0 elsewhere.
    int sign(std::size_t i, std::size_t j) const {
        if (!base_->in_support(i, j)) return 0;
        std::size_t t = 0;
        for (std::size_t r = 0; r < order(); ++r)
            for (std::size_t c = 0; c < order(); ++c) {
                if (!base_->in_support(r, c)) continue;
                if (r == i && c == j) return signs_[t];
                ++t;
            }
        return 0;
    }

    template <typename T>
    BasicMatrix<T> realize_as() const {
        const std::size_t n = order();
        BasicMatrix<T> b(n);
        std::size_t t = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Integer& a = (*base_)(i, j);
                if (a == 0) continue;
                T v = static_cast<T>(a);
                b(i, j) = signs_[t++] > 0 ? v : T(-v);
            }
        return b;
    }

    friend bool operator==(const Signing& x, const Signing& y) {
        return x.signs_ == y.signs_ && (x.base_ == y.base_ || *x.base_ == *y.base_);
    }

private:
    BasePtr base_;
    std::vector<std::int8_t> signs_;
};

/// B with b_ij = sign(i,j) * a_ij.
inline IntMatrix realize(const Signing& s) { return s.realize_as<Integer>(); }

/// D * B * D, i.e. entry (i,j) times d_i * d_j.
template <typename T>
BasicMatrix<T> conjugate_diag(BasicMatrix<T> b, const SignDiagonal& d) {
    if (b.order() != d.order()) throw Error(ErrorKind::order_mismatch, "diagonal order differs from matrix order");
    for (std::size_t i = 0; i < b.order(); ++i)
        for (std::size_t j = 0; j < b.order(); ++j)
            if (d[i] * d[j] < 0) b(i, j) = -b(i, j);
    return b;
}

inline Signing conjugate_diag(const Signing& s, const SignDiagonal& d) {
    if (s.order() != d.order()) throw Error(ErrorKind::order_mismatch, "diagonal order differs from matrix order");
    std::vector<std::int8_t> signs(s.signs().begin(), s.signs().end());
    std::size_t t = 0;
    for (std::size_t i = 0; i < s.order(); ++i)
        for (std::size_t j = 0; j < s.order(); ++j)
            if (s.base().in_support(i, j)) {
                signs[t] = static_cast<std::int8_t>(signs[t] * d[i] * d[j]);
                ++t;
            }
    return Signing(s.base_ptr(), std::move(signs));
}

/// P M P^T: entry (P(i), P(j)) of the result is entry (i, j) of m.
template <typename T>
BasicMatrix<T> conjugate_perm(const BasicMatrix<T>& m, const Permutation& p) {
    if (m.order() != p.order()) throw Error(ErrorKind::order_mismatch, "permutation order differs from matrix order");
    BasicMatrix<T> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) out(p(i), p(j)) = m(i, j);
    return out;
}

inline NonnegMatrix conjugate_perm(const NonnegMatrix& m, const Permutation& p) {
    return NonnegMatrix(conjugate_perm(m.matrix(), p));
}

} // namespace signings
