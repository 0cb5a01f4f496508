#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace signings {

/// Directed graph on {0, ..., n-1}, loops allowed, no parallel arcs.
class Digraph {
public:
    using Arc = std::pair<std::size_t, std::size_t>;

    explicit Digraph(std::size_t n = 0) : out_(n) {}

    Digraph(std::size_t n, const std::vector<Arc>& arcs) : out_(n) {
        for (const auto& [u, v] : arcs) {
            if (u >= n || v >= n) throw Error(ErrorKind::invalid_argument, "arc endpoint out of range");
            out_[u].push_back(v);
        }
        for (auto& list : out_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    std::size_t order() const noexcept { return out_.size(); }
    const std::vector<std::size_t>& successors(std::size_t u) const { return out_[u]; }

    bool has_arc(std::size_t u, std::size_t v) const {
        return std::binary_search(out_[u].begin(), out_[u].end(), v);
    }

    std::size_t arc_count() const {
        std::size_t m = 0;
        for (const auto& list : out_) m += list.size();
        return m;
    }

    std::vector<Arc> arcs() const {
        std::vector<Arc> a;
        for (std::size_t u = 0; u < order(); ++u)
            for (std::size_t v : out_[u]) a.emplace_back(u, v);
        return a;
    }

    Digraph reversed() const {
        std::vector<Arc> a;
        for (const auto& [u, v] : arcs()) a.emplace_back(v, u);
        return Digraph(order(), a);
    }

private:
    std::vector<std::vector<std::size_t>> out_;
};

template <typename T>
Digraph digraph_of(const BasicMatrix<T>& m) {
    std::vector<Digraph::Arc> arcs;
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            if (m(i, j) != 0) arcs.emplace_back(i, j);
    return Digraph(m.order(), arcs);
}

inline Digraph digraph_of(const NonnegMatrix& a) { return digraph_of(a.matrix()); }

namespace detail {

inline std::vector<bool> reachable_from(const Digraph& d, std::size_t source) {
    std::vector<bool> seen(d.order(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : d.successors(u))
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return seen;
}

} // namespace detail

/// Every vertex reaches every other. A single vertex counts as strongly connected with or without a loop.
inline bool is_strongly_connected(const Digraph& d) {
    if (d.order() <= 1) return true;
    auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
    return all(detail::reachable_from(d, 0)) && all(detail::reachable_from(d.reversed(), 0));
}

/// Strongly connected components (iterative Tarjan), each sorted, ordered by smallest vertex.
inline std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& d) {
    const std::size_t n = d.order();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> comps;
    std::size_t counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [u, next] = call.back();
            if (next < d.successors(u).size()) {
                std::size_t v = d.successors(u)[next++];
                if (index[v] == unvisited) {
                    index[v] = low[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    call.emplace_back(v, 0);
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
                continue;
            }
            if (low[u] == index[u]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != u);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            std::size_t finished = u;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
        }
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

inline std::string format_components(const std::vector<std::vector<std::size_t>>& comps) {
    std::ostringstream os;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (c) os << ' ';
        os << '{';
        for (std::size_t i = 0; i < comps[c].size(); ++i) os << (i ? "," : "") << comps[c][i];
        os << '}';
    }
    return os.str();
}

/// Throws a reducible-input error naming the strongly connected components.
inline void require_strongly_connected(const Digraph& d) {
    if (!is_strongly_connected(d))
        throw Error(ErrorKind::reducible,
                    "matrix is reducible; strongly connected components: " +
                        format_components(strongly_connected_components(d)));
}

namespace detail {

/// BFS distances from vertex 0; every vertex must be reachable.
inline std::vector<std::size_t> bfs_levels(const Digraph& d) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> level(d.order(), unset);
    std::queue<std::size_t> q;
    level[0] = 0;
    q.push(0);
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v : d.successors(u))
            if (level[v] == unset) {
                level[v] = level[u] + 1;
                q.push(v);
            }
    }
    return level;
}

} // namespace detail

/// Gcd of closed-path lengths of a strongly connected digraph.
///
/// With BFS levels l from vertex 0, the gcd of |l(u) + 1 - l(v)| over all arcs equals the gcd of cycle lengths.
/// A digraph without arcs (necessarily a single vertex) has no closed path, so its period is undefined.
inline std::size_t period(const Digraph& d) {
    require_strongly_connected(d);
    if (d.arc_count() == 0) throw Error(ErrorKind::no_closed_path, "digraph has no closed path; period undefined");
    const auto level = detail::bfs_levels(d);
    std::size_t g = 0;
    for (std::size_t u = 0; u < d.order(); ++u)
        for (std::size_t v : d.successors(u)) {
            const std::size_t a = level[u] + 1, b = level[v];
            g = std::gcd(g, a > b ? a - b : b - a);
        }
    return g;
}

/// Period p together with the cyclic vertex classes V_0, ..., V_{p-1} and the permutation into block form.
struct CyclicStructure {
    std::size_t period = 1;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> class_of;
    /// Moves V_0 first, then V_1, ..., each class kept in ascending vertex order.
    Permutation perm = Permutation::identity(0);
    /// block_sizes[t] = |V_t|.
    std::vector<std::size_t> block_sizes;
};

inline CyclicStructure cyclic_structure(const Digraph& d) {
    const std::size_t p = period(d);
    const auto level = detail::bfs_levels(d);
    CyclicStructure cs;
    cs.period = p;
    cs.classes.resize(p);
    cs.class_of.resize(d.order());
    for (std::size_t v = 0; v < d.order(); ++v) {
        cs.class_of[v] = level[v] % p;
        cs.classes[cs.class_of[v]].push_back(v);
    }
    for (std::size_t u = 0; u < d.order(); ++u)
        for (std::size_t v : d.successors(u))
            if (cs.class_of[v] != (cs.class_of[u] + 1) % p)
                throw std::logic_error("cyclic classes violated by arc (" + std::to_string(u) + "," +
                                       std::to_string(v) + ")");
    std::vector<std::size_t> image(d.order());
    std::size_t pos = 0;
    for (const auto& cls : cs.classes) {
        cs.block_sizes.push_back(cls.size());
        for (std::size_t v : cls) image[v] = pos++;
    }
    cs.perm = Permutation(std::move(image));
    return cs;
}

inline CyclicStructure cyclic_structure(const NonnegMatrix& a) { return cyclic_structure(digraph_of(a)); }

} // namespace signings
