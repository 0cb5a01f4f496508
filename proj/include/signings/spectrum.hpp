#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "error.hpp"
#include "matrix.hpp"

namespace signings {

/// Coefficients (c_0 = 1, c_1, ..., c_n) of det(xI - M) = sum_j c_j x^(n-j).
template <typename T>
struct BasicCharPoly {
    std::vector<T> coeffs;

    std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    const T& operator[](std::size_t j) const { return coeffs[j]; }

    friend bool operator==(const BasicCharPoly&, const BasicCharPoly&) = default;
    friend auto operator<=>(const BasicCharPoly& a, const BasicCharPoly& b) {
        return std::lexicographical_compare_three_way(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                                      b.coeffs.end(), [](const T& x, const T& y) {
                                                          return x < y ? std::strong_ordering::less
                                                                 : y < x ? std::strong_ordering::greater
                                                                         : std::strong_ordering::equal;
                                                      });
    }
};

using CharPoly = BasicCharPoly<Integer>;

/// Faddeev-LeVerrier: N_1 = I, N_k = M N_{k-1} + c_{k-1} I, c_k = -tr(M N_k) / k.
/// Each division is exact over the integers.
template <typename T>
BasicCharPoly<T> char_poly(const BasicMatrix<T>& m) {
    const std::size_t n = m.order();
    BasicCharPoly<T> poly;
    poly.coeffs.reserve(n + 1);
    poly.coeffs.push_back(T(1));
    BasicMatrix<T> acc = BasicMatrix<T>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        BasicMatrix<T> prod = m * acc;
        T c = -trace(prod);
        const T step(static_cast<long long>(k));
        if (c % step != 0) throw std::logic_error("Faddeev-LeVerrier: inexact division");
        c /= step;
        poly.coeffs.push_back(c);
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) prod(i, i) += c;
        acc = std::move(prod);
    }
    return poly;
}

inline CharPoly char_poly(const Signing& s) { return char_poly(realize(s)); }
inline CharPoly char_poly(const NonnegMatrix& a) { return char_poly(a.matrix()); }

/// The unit alpha = e^(i*pi*num/den) with den > 0. Stored reduced.
class RationalAngle {
public:
    RationalAngle(long long num, long long den) {
        if (den <= 0) throw Error(ErrorKind::invalid_argument, "angle denominator must be positive");
        const long long g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
        // angles are taken mod 2*pi, i.e. num mod 2*den
        num_ = ((num_ % (2 * den_)) + 2 * den_) % (2 * den_);
    }
    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    std::complex<double> value() const {
        return std::polar(1.0, std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_));
    }

    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

private:
    long long num_ = 0;
    long long den_ = 1;
};

/// alpha = e^(i*pi*k/p), k in {0, ..., 2p-1}, kept unreduced so (k, p) round-trips.
class RotationFactor {
public:
    RotationFactor(long long k, long long p) : k_(k), p_(p) {
        if (p < 1) throw Error(ErrorKind::invalid_argument, "period must be positive");
        if (k < 0 || k > 2 * p - 1)
            throw Error(ErrorKind::invalid_argument,
                        "k=" + std::to_string(k) + " outside {0,...," + std::to_string(2 * p - 1) + "}");
    }
    long long k() const noexcept { return k_; }
    long long p() const noexcept { return p_; }

    RationalAngle angle() const { return RationalAngle(k_, p_); }
    std::complex<double> value() const { return angle().value(); }

    /// Symbolic form "e^(i*pi*k/p)".
    std::string to_string() const { return "e^(i*pi*" + std::to_string(k_) + "/" + std::to_string(p_) + ")"; }

    friend bool operator==(const RotationFactor&, const RotationFactor&) = default;

private:
    long long k_;
    long long p_;
};

/// Exact test of sp(B) = alpha * sp(A) from the characteristic polynomials.
///
/// e_j(alpha * lambda) = alpha^j e_j(lambda) and both polynomials are real, so the spectra agree iff for each j
/// either c_j(A) = c_j(B) = 0, or alpha^j = +-1 and c_j(B) = alpha^j c_j(A).
template <typename T>
bool rotation_check(const BasicCharPoly<T>& pa, const BasicCharPoly<T>& pb, const RationalAngle& alpha) {
    if (pa.degree() != pb.degree()) throw Error(ErrorKind::order_mismatch, "characteristic polynomial degrees differ");
    for (std::size_t j = 0; j < pa.coeffs.size(); ++j) {
        const T& a = pa.coeffs[j];
        const T& b = pb.coeffs[j];
        if (a == 0) {
            if (b != 0) return false;
            continue;
        }
        const long long turns = alpha.num() * static_cast<long long>(j);
        if (turns % alpha.den() != 0) return false;  // alpha^j not real
        const bool negate = (turns / alpha.den()) % 2 != 0;
        if (negate ? (b != -a) : (b != a)) return false;
    }
    return true;
}

template <typename T>
bool rotation_check(const BasicCharPoly<T>& pa, const BasicCharPoly<T>& pb, const RotationFactor& alpha) {
    return rotation_check(pa, pb, alpha.angle());
}

// ---------------------------------------------------------------------------
// Numeric oracle
// ---------------------------------------------------------------------------

inline constexpr double default_tolerance = 1e-9;

using NumericSpectrum = std::vector<std::complex<double>>;

namespace detail {

// Repeated eigenvalues with nontrivial Jordan blocks move by about eps^(1/m) under rounding, so
// double precision misses a 1e-9 match on periodic matrices; 100 digits keeps m <= 8 well inside it.
using SolverReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>, boost::multiprecision::et_off>;

template <typename T>
SolverReal to_solver_real(const T& v) {
    if constexpr (std::is_same_v<T, Integer>) return SolverReal(v.str());
    else return SolverReal(v);
}

} // namespace detail

/// Eigenvalues from a dense nonsymmetric eigensolver run in extended precision, unordered.
template <typename T>
NumericSpectrum numeric_spectrum(const BasicMatrix<T>& m, std::size_t max_order = default_max_order) {
    const std::size_t n = m.order();
    if (n > max_order)
        throw Error(ErrorKind::cap_exceeded, "order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
    using Dense = Eigen::Matrix<detail::SolverReal, Eigen::Dynamic, Eigen::Dynamic>;
    Dense dense(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = detail::to_solver_real(m(i, j));
    Eigen::EigenSolver<Dense> solver(dense, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::solver, "eigensolver did not converge");
    NumericSpectrum out;
    out.reserve(n);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const auto& z = solver.eigenvalues()[i];
        out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    return out;
}

inline NumericSpectrum rotate(NumericSpectrum s, std::complex<double> alpha) {
    for (auto& z : s) z *= alpha;
    return s;
}

namespace detail {

inline bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj, std::vector<bool>& seen,
                    std::vector<std::size_t>& match_right) {
    for (std::size_t v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        if (match_right[v] == static_cast<std::size_t>(-1) || augment(match_right[v], adj, seen, match_right)) {
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

} // namespace detail

/// True iff the values of s1 can be paired one-to-one with those of s2 within distance tol.
/// Greedy nearest-neighbour first; on failure, an exact bipartite matching over the tol-graph decides.
inline bool multiset_match(const NumericSpectrum& s1, const NumericSpectrum& s2, double tol = default_tolerance) {
    if (s1.size() != s2.size()) throw Error(ErrorKind::order_mismatch, "spectra have different sizes");
    const std::size_t n = s1.size();

    std::vector<bool> used(n, false);
    bool greedy_ok = true;
    for (std::size_t i = 0; i < n && greedy_ok; ++i) {
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j] && std::abs(s1[i] - s2[j]) < best_d) {
                best_d = std::abs(s1[i] - s2[j]);
                best = j;
            }
        if (best == n || best_d > tol) greedy_ok = false;
        else used[best] = true;
    }
    if (greedy_ok) return true;

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(s1[i] - s2[j]) <= tol) adj[i].push_back(j);
    std::vector<std::size_t> match_right(n, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> seen(n, false);
        if (!detail::augment(i, adj, seen, match_right)) return false;
    }
    return true;
}

} // namespace signings
