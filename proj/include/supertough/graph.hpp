#ifndef SUPERTOUGH_GRAPH_HPP_
#define SUPERTOUGH_GRAPH_HPP_

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supertough/vertex_set.hpp"

namespace supertough {

/// Raised when an input exceeds what a routine is built to handle
/// (order above the bitset width, a solver's documented ceiling, ...).
class EnvelopeError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Row i of the adjacency array is the neighbourhood of i. Construction goes
/// through GraphBuilder or Graph::from_edges, which enforce symmetry and the
/// absence of loops.
class Graph {
 public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    /// Graph from adjacency rows; rows must be symmetric, loop-free and
    /// inside 0..n-1.
    template<typename Rows>
    static Graph from_rows(int n, const Rows& rows);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    /// Unchecked row access for inner loops.
    VertexSet::word_type row(int v) const { return adj_[static_cast<std::size_t>(v)].bits(); }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (v > u) out.emplace_back(u, v);
        return out;
    }

    bool is_complete() const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != n_ - 1) return false;
        return true;
    }

    bool is_regular(int r) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != r) return false;
        return true;
    }

    /// Graph obtained by renaming vertex v to perm[v].
    Graph relabeled(const std::vector<int>& perm) const;

    /// Subgraph induced by `keep`, vertices renumbered in increasing order.
    Graph induced(VertexSet keep) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
    }

 private:
    friend class GraphBuilder;

    int n_ = 0;
    std::array<VertexSet, kMaxOrder> adj_{};
};

/// Mutable staging area for Graph.
class GraphBuilder {
 public:
    explicit GraphBuilder(int n) {
        if (n < 1 || n > kMaxOrder)
            throw EnvelopeError{"graph order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder)};
        g_.n_ = n;
    }

    int order() const { return g_.n_; }

    GraphBuilder& add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument{"self-loop at vertex " + std::to_string(u)};
        g_.adj_[static_cast<std::size_t>(u)].insert(v);
        g_.adj_[static_cast<std::size_t>(v)].insert(u);
        return *this;
    }

    GraphBuilder& remove_edge(int u, int v) {
        check(u);
        check(v);
        g_.adj_[static_cast<std::size_t>(u)].erase(v);
        g_.adj_[static_cast<std::size_t>(v)].erase(u);
        return *this;
    }

    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }

    Graph build() const { return g_; }

 private:
    void check(int v) const {
        if (v < 0 || v >= g_.n_)
            throw std::out_of_range{"vertex " + std::to_string(v) + " outside 0.." + std::to_string(g_.n_ - 1)};
    }

    Graph g_;
};

inline Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    GraphBuilder b{n};
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

template<typename Rows>
Graph Graph::from_rows(int n, const Rows& rows) {
    GraphBuilder b{n};
    Graph g = b.build();
    const VertexSet all = VertexSet::full(n);
    for (int v = 0; v < n; ++v) {
        const VertexSet row = rows[static_cast<std::size_t>(v)];
        if (!row.is_subset_of(all) || row.contains(v))
            throw std::invalid_argument{"from_rows: bad row " + std::to_string(v)};
        g.adj_[static_cast<std::size_t>(v)] = row;
    }
    for (int v = 0; v < n; ++v)
        for (int w : g.adj_[static_cast<std::size_t>(v)])
            if (!g.adj_[static_cast<std::size_t>(w)].contains(v)) throw std::invalid_argument{"from_rows: asymmetric rows"};
    return g;
}

inline Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument{"relabeled: permutation size mismatch"};
    GraphBuilder b{n_};
    for (auto [u, v] : edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return b.build();
}

inline Graph Graph::induced(VertexSet keep) const {
    std::array<int, kMaxOrder> index{};
    int count = 0;
    for (int v : keep) index[static_cast<std::size_t>(v)] = count++;
    GraphBuilder b{count};
    for (int u : keep)
        for (int v : neighbors(u) & keep)
            if (u < v) b.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    return b.build();
}

// ---------------------------------------------------------------------------
// components

/// Vertices reachable from `seed` inside `allowed` (seed must be in allowed).
inline VertexSet reach(const Graph& g, int seed, VertexSet allowed) {
    using word = VertexSet::word_type;
    const word mask = allowed.bits();
    word comp = word{1} << seed;
    word frontier = comp;
    while (frontier != 0) {
        word next = 0;
        for (word f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
        next &= mask & ~comp;
        comp |= next;
        frontier = next;
    }
    return VertexSet{comp};
}

/// Number of connected components of g - removed.
inline int component_count(const Graph& g, VertexSet removed) {
    VertexSet rest = g.vertices() - removed;
    int count = 0;
    while (!rest.empty()) {
        rest -= reach(g, rest.lowest(), rest);
        ++count;
    }
    return count;
}

/// Components of g - removed, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, VertexSet removed = {}) {
    std::vector<VertexSet> out;
    VertexSet rest = g.vertices() - removed;
    while (!rest.empty()) {
        const VertexSet comp = reach(g, rest.lowest(), rest);
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

inline bool is_connected(const Graph& g) { return component_count(g, {}) == 1; }

/// Nondecreasing list of vertex degrees.
inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace supertough

#endif  // SUPERTOUGH_GRAPH_HPP_
