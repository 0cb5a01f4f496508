#pragma once

// Oracle-versus-construction cross-checks shared by the `verify` command and the test suites.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "signing.hpp"
#include "spectrum.hpp"

namespace signings {

/// Calls fn on every irreducible n x n matrix with entries in {0, 1}, in increasing bit-pattern order.
inline void for_each_irreducible_01(std::size_t n, const std::function<void(const Signing::BasePtr&)>& fn) {
    const std::size_t cells = n * n;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << cells); ++pattern) {
        IntMatrix m(n);
        for (std::size_t c = 0; c < cells; ++c)
            if ((pattern >> c) & 1U) m(c / n, c % n) = 1;
        auto base = std::make_shared<const NonnegMatrix>(std::move(m));
        const Digraph d = digraph_of(*base);
        if (d.arc_count() == 0 || !is_strongly_connected(d)) continue;
        fn(base);
    }
}

/// Mask of a signing in the SigningSpace order of its base.
inline std::uint64_t signing_mask(const Signing& s) {
    const std::size_t m = s.signs().size();
    std::uint64_t mask = 0;
    for (std::size_t t = 0; t < m; ++t)
        if (s.signs()[t] < 0) mask |= std::uint64_t{1} << (m - 1 - t);
    return mask;
}

struct PropertyOutcome {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string counterexample;
};

struct VerifyReport {
    std::vector<PropertyOutcome> properties;

    bool all_passed() const {
        for (const auto& p : properties)
            if (!p.passed) return false;
        return true;
    }
};

struct VerifyOptions {
    /// Largest matrix order examined.
    std::size_t max_order = 3;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    /// Walk every irreducible 0/1 matrix of order <= max_order instead of random draws.
    bool exhaustive = false;
    std::size_t support_cap = default_support_cap;
    std::size_t enumeration_cap = default_enumeration_cap;
    /// Signings sampled per matrix for the membership property.
    std::size_t membership_samples = 64;
    /// Replaceable so tests can inject a faulty spectral test.
    RotationCheckFn rotation_check = default_rotation_check;
};

namespace detail {

inline void record_failure(PropertyOutcome& out, const std::string& what) {
    if (out.passed) {
        out.passed = false;
        out.counterexample = what;
    }
}

inline std::string describe(const NonnegMatrix& a, long long k) {
    std::ostringstream os;
    os << "A =\n" << format_matrix(a.matrix()) << "k = " << k;
    return os.str();
}

} // namespace detail

/// Checks one matrix against the oracle for every admissible k.
inline void verify_matrix(const Signing::BasePtr& base, const VerifyOptions& opts, Rng& rng,
                          PropertyOutcome& class_match, PropertyOutcome& member, PropertyOutcome& cycles) {
    const Digraph d = digraph_of(*base);
    const std::size_t p = period(d);

    ++cycles.cases;
    if (d.order() <= default_cycle_cap && all_simple_cycles_gcd(d) != p)
        detail::record_failure(cycles, detail::describe(*base, 0) + " (period " + std::to_string(p) +
                                           " disagrees with the simple-cycle gcd)");

    const SigningSpectra spectra = signing_spectra(base, opts.support_cap);
    for (long long k = 0; k < 2 * static_cast<long long>(p); ++k) {
        const RotationFactor alpha(k, static_cast<long long>(p));
        const auto brute = brute_force_masks(spectra, alpha, opts.rotation_check);

        std::vector<std::uint64_t> constructed;
        for (const Signing& s : enumerate_class(construct_witness(base, k), opts.enumeration_cap)) constructed.push_back(signing_mask(s));
        std::sort(constructed.begin(), constructed.end());
        ++class_match.cases;
        if (brute != constructed)
            detail::record_failure(class_match, detail::describe(*base, k) + "\nbrute force found " +
                                                std::to_string(brute.size()) + " signings, class has " +
                                                std::to_string(constructed.size()));

        const std::size_t samples = std::min<std::uint64_t>(opts.membership_samples, spectra.space.size());
        for (std::size_t i = 0; i < samples; ++i) {
            const std::uint64_t mask =
                samples == spectra.space.size() ? i : rng.uniform(0, spectra.space.size() - 1);
            const Signing b = spectra.space.at(mask);
            const bool by_similarity = membership(b, k).member;
            const bool by_spectrum = std::binary_search(brute.begin(), brute.end(), mask);
            ++member.cases;
            if (by_similarity != by_spectrum)
                detail::record_failure(member, detail::describe(*base, k) + "\nB =\n" + format_matrix(realize(b)) +
                                                   "membership says " + (by_similarity ? "yes" : "no") +
                                                   ", spectral test says " + (by_spectrum ? "yes" : "no"));
        }
    }
}

inline VerifyReport run_verify(const VerifyOptions& opts) {
    PropertyOutcome class_match{"brute-force M(alpha,A) equals the similarity class of the witness", true, 0, {}};
    PropertyOutcome member{"membership agrees with the exact spectral test", true, 0, {}};
    PropertyOutcome cycles{"period equals the gcd of simple cycle lengths", true, 0, {}};
    Rng rng(opts.seed);

    if (opts.exhaustive) {
        for (std::size_t n = 1; n <= opts.max_order; ++n)
            for_each_irreducible_01(n, [&](const Signing::BasePtr& base) {
                verify_matrix(base, opts, rng, class_match, member, cycles);
            });
    } else {
        for (std::size_t trial = 0; trial < opts.trials; ++trial) {
            const std::size_t n = rng.uniform(1, std::max<std::size_t>(1, opts.max_order));
            const std::size_t p = rng.uniform(1, n);
            RandomMatrixOptions ropts;
            ropts.max_entry = 3;
            ropts.extra_arc_probability = 0.3;
            NonnegMatrix a = random_irreducible(n, p, rng.next(), ropts);
            for (int retry = 0; a.support_size() > opts.support_cap && retry < 64; ++retry) {
                ropts.extra_arc_probability /= 2;
                a = random_irreducible(n, p, rng.next(), ropts);
            }
            if (a.support_size() > opts.support_cap)
                throw Error(ErrorKind::cap_exceeded, "could not draw a matrix within the support cap");
            verify_matrix(std::make_shared<const NonnegMatrix>(std::move(a)), opts, rng, class_match, member, cycles);
        }
    }
    return VerifyReport{{class_match, member, cycles}};
}

} // namespace signings
