// End-to-end acceptance checks; prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <signings/signings.hpp>

using namespace signings;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    std::string failure;

    void fail(const std::string& why) {
        if (passed) failure = why;
        passed = false;
    }
};

int report(int id, const char* title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s %s (%s; %.1fs)\n", id, o.passed ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
    if (!o.passed) std::printf("  first failure: %s\n", o.failure.c_str());
    std::fflush(stdout);
    return o.passed ? 0 : 1;
}

std::string show(const NonnegMatrix& a) {
    std::string s = format_matrix(a.matrix());
    for (auto& c : s)
        if (c == '\n') c = ';';
    return s;
}

std::vector<std::uint64_t> class_masks(const Signing& witness, Outcome& o, const std::string& where) {
    std::vector<std::uint64_t> masks;
    for (const Signing& s : enumerate_class(witness)) masks.push_back(signing_mask(s));
    std::sort(masks.begin(), masks.end());
    if (std::adjacent_find(masks.begin(), masks.end()) != masks.end()) o.fail(where + ": enumerate_class repeated a signing");
    return masks;
}

// Every irreducible 0/1 matrix of order <= 4, every k: exhaustive search equals the witness's similarity class.
Outcome exhaustive_class_match() {
    Outcome o;
    std::size_t matrices = 0, cases = 0, signings = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for_each_irreducible_01(n, [&](const Signing::BasePtr& base) {
            ++matrices;
            const long long p = static_cast<long long>(period(digraph_of(*base)));
            const SigningSpectra spectra = signing_spectra(base);
            signings += spectra.space.size();
            for (long long k = 0; k < 2 * p; ++k) {
                ++cases;
                const auto brute = brute_force_masks(spectra, RotationFactor(k, p));
                const std::string where = show(*base) + " k=" + std::to_string(k);
                if (brute != class_masks(construct_witness(base, k), o, where))
                    o.fail(where + ": brute force and similarity class differ");
            }
        });
    o.detail = std::to_string(matrices) + " matrices, " + std::to_string(cases) + " (A,k) cases, " +
               std::to_string(signings) + " signings searched; the 1x1 zero matrix has no period and is skipped";
    return o;
}

// Rotations by e^(i*pi*a/b) with b >= 2 coprime to p are never realised by a signing.
Outcome non_admissible_angles() {
    Outcome o;
    Rng rng(2024);
    std::size_t matrices = 0, tests = 0, controls = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for_each_irreducible_01(n, [&](const Signing::BasePtr& base) {
            ++matrices;
            const long long p = static_cast<long long>(period(digraph_of(*base)));
            const SigningSpectra spectra = signing_spectra(base);
            for (int sample = 0; sample < 64; ++sample) {
                long long a = 0, b = 0;
                do {
                    b = static_cast<long long>(rng.uniform(2, 30));
                    a = static_cast<long long>(rng.uniform(1, static_cast<std::uint64_t>(2 * b - 1)));
                } while (std::gcd(b, p) != 1 || std::gcd(a, b) != 1);
                const RationalAngle alpha(a, b);
                for (const auto& [poly, masks] : spectra.groups) {
                    ++tests;
                    if (rotation_check(spectra.base_poly, poly, alpha))
                        o.fail(show(*base) + " rotation by pi*" + std::to_string(a) + "/" + std::to_string(b) +
                               " realised by signing mask " + std::to_string(masks.front()));
                }
            }
            // positive control: the generalised test does accept the admissible angle pi*1/p
            bool hit = false;
            for (const auto& [poly, masks] : spectra.groups)
                hit = hit || rotation_check(spectra.base_poly, poly, RationalAngle(1, p));
            controls += hit;
            if (!hit) o.fail(show(*base) + ": no signing realises the admissible angle pi/p");
        });
    o.detail = std::to_string(matrices) + " matrices x 64 angles, " + std::to_string(tests) +
               " spectrum classes rejected, admissible control accepted for " + std::to_string(controls);
    return o;
}

// Period by BFS levels equals the gcd of simple cycle lengths.
Outcome period_matches_cycles() {
    Outcome o;
    // strongly connected loopless digraphs on 1..5 labelled vertices
    const std::size_t expected_loopless[] = {0, 1, 1, 18, 1606, 565080};
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (u != v) slots.emplace_back(u, v);
        const std::uint32_t full = (1U << n) - 1;
        std::size_t loopless = 0;
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << slots.size()); ++pattern) {
            std::uint32_t out[5] = {0, 0, 0, 0, 0}, in[5] = {0, 0, 0, 0, 0};
            for (std::size_t s = 0; s < slots.size(); ++s)
                if ((pattern >> s) & 1U) {
                    out[slots[s].first] |= 1U << slots[s].second;
                    in[slots[s].second] |= 1U << slots[s].first;
                }
            auto reach = [&](const std::uint32_t* adj) {
                std::uint32_t seen = 1, frontier = 1;
                while (frontier) {
                    std::uint32_t next = 0;
                    for (std::size_t u = 0; u < n; ++u)
                        if ((frontier >> u) & 1U) next |= adj[u];
                    frontier = next & ~seen;
                    seen |= next;
                }
                return seen;
            };
            if (reach(out) != full || reach(in) != full) continue;
            ++loopless;
            std::vector<Digraph::Arc> arcs;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if ((pattern >> s) & 1U) arcs.push_back(slots[s]);
            const std::size_t base_arcs = arcs.size();
            for (std::uint32_t loops = 0; loops <= full; ++loops) {
                arcs.resize(base_arcs);
                for (std::size_t v = 0; v < n; ++v)
                    if ((loops >> v) & 1U) arcs.emplace_back(v, v);
                if (arcs.empty()) continue;  // single vertex without a loop: no closed path
                const Digraph d(n, arcs);
                ++checked;
                if (period(d) != all_simple_cycles_gcd(d))
                    o.fail("n=" + std::to_string(n) + " pattern " + std::to_string(pattern) + " loops " +
                           std::to_string(loops));
            }
        }
        if (loopless != expected_loopless[n])
            o.fail("enumerated " + std::to_string(loopless) + " strongly connected loopless digraphs on " +
                   std::to_string(n) + " vertices, expected " + std::to_string(expected_loopless[n]));
    }
    std::size_t random_checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const std::size_t n = rng.uniform(6, 8);
        // a generated matrix with a prescribed period, and an unstructured sparse strongly connected digraph
        const Digraph structured = digraph_of(random_irreducible(n, rng.uniform(1, n), rng.next()));
        Digraph sparse;
        do {
            std::vector<Digraph::Arc> arcs;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    if (rng.bernoulli(2.0 / static_cast<double>(n))) arcs.emplace_back(u, v);
            sparse = Digraph(n, arcs);
        } while (!is_strongly_connected(sparse));
        for (const Digraph* d : {&structured, static_cast<const Digraph*>(&sparse)}) {
            ++random_checked;
            if (period(*d) != all_simple_cycles_gcd(*d)) o.fail("random seed " + std::to_string(seed));
        }
    }
    o.detail = std::to_string(checked) + " strongly connected digraphs with n<=5 (loops allowed), " +
               std::to_string(random_checked) + " random ones with n=6..8 from 200 seeds";
    return o;
}

// Witness spectra: exact rotation test and numeric eigenvalues agree.
Outcome witness_spectra() {
    Outcome o;
    Rng rng(4);
    std::size_t witnesses = 0;
    std::set<std::size_t> periods;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t p = 1 + static_cast<std::size_t>(trial % 4);
        const std::size_t n = rng.uniform(p, 8);
        auto base = std::make_shared<const NonnegMatrix>(random_irreducible(n, p, rng.next()));
        periods.insert(period(digraph_of(*base)));
        const CharPoly pa = char_poly(*base);
        const NumericSpectrum sa = numeric_spectrum(base->matrix());
        for (long long k = 0; k < 2 * static_cast<long long>(p); ++k) {
            ++witnesses;
            const RotationFactor alpha(k, static_cast<long long>(p));
            const Signing w = construct_witness(base, k);
            const std::string where = show(*base) + " k=" + std::to_string(k);
            if (!rotation_check(pa, char_poly(w), alpha)) o.fail(where + ": exact rotation test rejects the witness");
            if (!multiset_match(numeric_spectrum(realize(w)), rotate(sa, alpha.value()), 1e-9))
                o.fail(where + ": numeric spectra differ by more than 1e-9");
        }
    }
    if (periods != std::set<std::size_t>{1, 2, 3, 4}) o.fail("periods 1-4 not all covered");
    o.detail = "100 matrices, n<=8, periods 1-4, " + std::to_string(witnesses) + " witnesses, tolerance 1e-9";
    return o;
}

std::vector<Graph> connected_graphs(std::size_t n) {
    std::vector<Graph::Edge> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Graph::Edge> e;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1U) e.push_back(slots[s]);
        Graph g(n, e);
        if (connected_components(g).size() == 1) out.push_back(std::move(g));
    }
    return out;
}

// Orientation bitmask: bit e set means edge e = {i<j} is directed j -> i.
std::uint64_t orientation_mask(const Orientation& o) {
    std::uint64_t mask = 0;
    for (std::size_t e = 0; e < o.arcs().size(); ++e)
        if (o.arcs()[e].first > o.arcs()[e].second) mask |= std::uint64_t{1} << e;
    return mask;
}

// i-rotated skew spectra exist exactly for bipartite graphs and form the canonical switching class.
Outcome bipartite_orientations() {
    Outcome o;
    std::size_t graphs = 0, bipartite = 0, orientations = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n)) {
            ++graphs;
            const CharPoly pa = char_poly(adjacency(g));
            const std::size_t m = g.edges().size();
            std::set<std::uint64_t> rotated;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                std::vector<Orientation::Arc> arcs;
                for (std::size_t e = 0; e < m; ++e) {
                    auto [i, j] = g.edges()[e];
                    arcs.push_back(((mask >> e) & 1U) ? Orientation::Arc{j, i} : Orientation::Arc{i, j});
                }
                ++orientations;
                if (rotation_check(pa, char_poly(skew_adjacency(Orientation(g, arcs))), RotationFactor(1, 2)))
                    rotated.insert(mask);
            }
            const auto bp = bipartition_of(g);
            const std::string where = "graph " + format_graph(g);
            if (has_i_spectrum_orientation(g).has_value() != bp.has_value()) o.fail(where + ": existence disagrees");
            if (!bp) {
                if (!rotated.empty()) o.fail(where + ": non-bipartite graph has an i-rotated orientation");
                continue;
            }
            ++bipartite;
            const Orientation canonical = canonical_orientation(g, *bp);
            std::set<std::uint64_t> switching_class;
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
                std::vector<std::size_t> set;
                for (std::size_t v = 0; v < n; ++v)
                    if ((w >> v) & 1U) set.push_back(v);
                switching_class.insert(orientation_mask(switch_orientation(canonical, set)));
            }
            if (rotated != switching_class) o.fail(where + ": i-rotated orientations differ from the switching class");
            for (std::uint64_t mask : rotated) {
                std::vector<Orientation::Arc> arcs;
                for (std::size_t e = 0; e < m; ++e) {
                    auto [i, j] = g.edges()[e];
                    arcs.push_back(((mask >> e) & 1U) ? Orientation::Arc{j, i} : Orientation::Arc{i, j});
                }
                if (!switching_equivalent(canonical, Orientation(g, arcs)))
                    o.fail(where + ": switching_equivalent misses a class member");
            }
        }
    o.detail = std::to_string(graphs) + " connected graphs with n<=5 (" + std::to_string(bipartite) + " bipartite), " +
               std::to_string(orientations) + " orientations";
    return o;
}

// decide_diag_similar recovers the conjugating diagonal up to sign.
Outcome diagonal_round_trip() {
    Outcome o;
    Rng rng(6);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = rng.uniform(1, 10);
        auto base = std::make_shared<const NonnegMatrix>(random_irreducible(n, rng.uniform(1, n), rng.next()));
        std::vector<std::int8_t> signs(base->support_size());
        for (auto& s : signs) s = rng.bernoulli(0.5) ? 1 : -1;
        const Signing b(base, signs);
        const SignDiagonal d0 = random_sign_diagonal(n, rng);
        const auto d = decide_diag_similar(b, conjugate_diag(b, d0));
        if (!d || !(*d == d0 || *d == d0.negated())) o.fail("trial " + std::to_string(trial) + ": " + show(*base));
    }
    o.detail = "1000 random (A, delta) pairs, n<=10";
    return o;
}

// Coefficients of x^(n-j) vanish unless p divides j.
Outcome cyclic_coefficients() {
    Outcome o;
    Rng rng(7);
    std::size_t zeros = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng.uniform(2, 10);
        const NonnegMatrix a = random_irreducible(n, rng.uniform(2, n), rng.next());
        const std::size_t p = period(digraph_of(a));
        if (p < 2) o.fail("generated period below 2");
        const CharPoly c = char_poly(a);
        for (std::size_t j = 1; j <= n; ++j) {
            if (j % p == 0) continue;
            ++zeros;
            if (c[j] != 0) o.fail(show(a) + " c_" + std::to_string(j) + " nonzero");
        }
    }
    o.detail = "100 matrices with p>=2, " + std::to_string(zeros) + " coefficients checked";
    return o;
}

} // namespace

int main() {
    int failures = 0;
    failures += report(1, "exhaustive n<=4: brute-force M(alpha,A) equals the witness similarity class", exhaustive_class_match);
    failures += report(2, "non-admissible rational angles are never realised", non_admissible_angles);
    failures += report(3, "period equals the simple-cycle gcd", period_matches_cycles);
    failures += report(4, "witness spectra rotate exactly and numerically", witness_spectra);
    failures += report(5, "i-rotated orientations exist iff bipartite and form the canonical switching class",
                       bipartite_orientations);
    failures += report(6, "diagonal similarity round trip", diagonal_round_trip);
    failures += report(7, "p-cyclic characteristic coefficients vanish", cyclic_coefficients);
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
