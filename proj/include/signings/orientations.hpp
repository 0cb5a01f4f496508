#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "signing.hpp"
#include "spectrum.hpp"

namespace signings {

/// Simple undirected graph; edges stored as sorted pairs (i < j).
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit Graph(std::size_t n = 0) : n_(n) {}

    Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        for (auto& [i, j] : edges_) {
            if (i >= n || j >= n) throw Error(ErrorKind::invalid_argument, "edge endpoint out of range");
            if (i == j) throw Error(ErrorKind::invalid_argument, "loops are not allowed in a simple graph");
            if (i > j) std::swap(i, j);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw Error(ErrorKind::invalid_argument, "multi-edges are not allowed in a simple graph");
    }

    std::size_t order() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// One direction per edge of the underlying graph; arcs()[e] orients graph().edges()[e].
class Orientation {
public:
    using Arc = std::pair<std::size_t, std::size_t>;

    Orientation(Graph g, const std::vector<Arc>& arcs) : g_(std::move(g)) {
        if (arcs.size() != g_.edges().size())
            throw Error(ErrorKind::invalid_argument, "orientation must direct every edge exactly once");
        arcs_.resize(g_.edges().size());
        std::vector<bool> filled(arcs_.size(), false);
        for (const auto& arc : arcs) {
            const Graph::Edge e{std::min(arc.first, arc.second), std::max(arc.first, arc.second)};
            auto it = std::lower_bound(g_.edges().begin(), g_.edges().end(), e);
            if (it == g_.edges().end() || *it != e)
                throw Error(ErrorKind::invalid_argument, "arc (" + std::to_string(arc.first) + "," +
                                                             std::to_string(arc.second) + ") is not an edge");
            const auto idx = static_cast<std::size_t>(it - g_.edges().begin());
            if (filled[idx]) throw Error(ErrorKind::invalid_argument, "edge oriented twice");
            filled[idx] = true;
            arcs_[idx] = arc;
        }
    }

    /// Builds the orientation from the arcs alone; the underlying graph is implied.
    static Orientation from_arcs(std::size_t n, const std::vector<Arc>& arcs) {
        std::vector<Graph::Edge> edges(arcs.begin(), arcs.end());
        return Orientation(Graph(n, std::move(edges)), arcs);
    }

    const Graph& graph() const noexcept { return g_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    Graph g_;
    std::vector<Arc> arcs_;
};

struct Bipartition {
    std::vector<std::size_t> I, J;
};

inline NonnegMatrix adjacency(const Graph& g) {
    IntMatrix a(g.order());
    for (const auto& [i, j] : g.edges()) a(i, j) = a(j, i) = 1;
    return NonnegMatrix(std::move(a));
}

inline IntMatrix skew_adjacency(const Orientation& o) {
    IntMatrix s(o.graph().order());
    for (const auto& [i, j] : o.arcs()) {
        s(i, j) = 1;
        s(j, i) = -1;
    }
    return s;
}

/// The skew-adjacency matrix as a signing of the adjacency matrix.
inline Signing skew_signing(const Orientation& o, Signing::BasePtr base = nullptr) {
    if (!base) base = std::make_shared<const NonnegMatrix>(adjacency(o.graph()));
    return Signing::from_matrix(std::move(base), skew_adjacency(o));
}

inline std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
    std::vector<std::vector<std::size_t>> nbr(g.order());
    for (const auto& [i, j] : g.edges()) {
        nbr[i].push_back(j);
        nbr[j].push_back(i);
    }
    std::vector<bool> seen(g.order(), false);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (std::size_t v : nbr[u])
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline void require_connected(const Graph& g) {
    if (g.order() == 0) throw Error(ErrorKind::invalid_argument, "graph has no vertices");
    const auto comps = connected_components(g);
    if (comps.size() > 1)
        throw Error(ErrorKind::reducible, "graph is disconnected; components: " + format_components(comps));
}

/// BFS 2-colouring with vertex 0 in I; nullopt when an odd cycle exists.
inline std::optional<Bipartition> bipartition_of(const Graph& g) {
    require_connected(g);
    std::vector<std::vector<std::size_t>> nbr(g.order());
    for (const auto& [i, j] : g.edges()) {
        nbr[i].push_back(j);
        nbr[j].push_back(i);
    }
    std::vector<int> colour(g.order(), -1);
    colour[0] = 0;
    std::queue<std::size_t> q;
    q.push(0);
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t v : nbr[u]) {
            if (colour[v] == -1) {
                colour[v] = 1 - colour[u];
                q.push(v);
            } else if (colour[v] == colour[u]) {
                return std::nullopt;
            }
        }
    }
    Bipartition bp;
    for (std::size_t v = 0; v < g.order(); ++v) (colour[v] == 0 ? bp.I : bp.J).push_back(v);
    return bp;
}

/// Every edge directed from I to J.
inline Orientation canonical_orientation(const Graph& g, const Bipartition& bp) {
    std::vector<int> side(g.order(), -1);
    for (std::size_t v : bp.I) {
        if (v >= g.order() || side[v] != -1) throw Error(ErrorKind::invalid_argument, "invalid bipartition");
        side[v] = 0;
    }
    for (std::size_t v : bp.J) {
        if (v >= g.order() || side[v] != -1) throw Error(ErrorKind::invalid_argument, "invalid bipartition");
        side[v] = 1;
    }
    if (std::find(side.begin(), side.end(), -1) != side.end())
        throw Error(ErrorKind::invalid_argument, "bipartition does not cover every vertex");
    std::vector<Orientation::Arc> arcs;
    for (const auto& [i, j] : g.edges()) {
        if (side[i] == side[j])
            throw Error(ErrorKind::invalid_argument,
                        "edge {" + std::to_string(i) + "," + std::to_string(j) + "} lies inside one part");
        arcs.push_back(side[i] == 0 ? Orientation::Arc{i, j} : Orientation::Arc{j, i});
    }
    return Orientation(g, arcs);
}

/// Reverses every arc with exactly one endpoint in w.
inline Orientation switch_orientation(const Orientation& o, const std::vector<std::size_t>& w) {
    std::vector<bool> in_w(o.graph().order(), false);
    for (std::size_t v : w) {
        if (v >= o.graph().order()) throw Error(ErrorKind::invalid_argument, "switching set vertex out of range");
        in_w[v] = true;
    }
    std::vector<Orientation::Arc> arcs = o.arcs();
    for (auto& [u, v] : arcs)
        if (in_w[u] != in_w[v]) std::swap(u, v);
    return Orientation(o.graph(), arcs);
}

/// A switching set W (never containing vertex 0) taking o1 to o2, or nullopt.
inline std::optional<std::vector<std::size_t>> switching_equivalent(const Orientation& o1, const Orientation& o2) {
    if (!(o1.graph() == o2.graph())) throw Error(ErrorKind::base_mismatch, "orientations of different graphs");
    require_connected(o1.graph());
    auto base = std::make_shared<const NonnegMatrix>(adjacency(o1.graph()));
    const auto delta = decide_diag_similar(skew_signing(o1, base), skew_signing(o2, base));
    if (!delta) return std::nullopt;
    std::vector<std::size_t> w;
    for (std::size_t v = 0; v < delta->order(); ++v)
        if ((*delta)[v] < 0) w.push_back(v);
    return w;
}

/// An orientation whose skew spectrum is i times the adjacency spectrum; exists iff g is bipartite.
inline std::optional<Orientation> has_i_spectrum_orientation(const Graph& g) {
    const auto bp = bipartition_of(g);
    if (!bp) return std::nullopt;
    Orientation o = canonical_orientation(g, *bp);
    if (!rotation_check(char_poly(adjacency(g)), char_poly(skew_adjacency(o)), RotationFactor(1, 2)))
        throw std::logic_error("canonical orientation fails the i-rotation check");
    return o;
}

} // namespace signings
