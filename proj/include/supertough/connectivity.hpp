#ifndef SUPERTOUGH_CONNECTIVITY_HPP_
#define SUPERTOUGH_CONNECTIVITY_HPP_

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "supertough/graph.hpp"

namespace supertough {

struct ConnectivityCertificate {
    int kappa = 0;
    /// Minimum separating set; empty optional for complete graphs, where
    /// kappa = n-1 by convention and no separator exists.
    std::optional<VertexSet> witness_cut;

    bool complete() const { return !witness_cut.has_value(); }
};

namespace detail {

/// Unit vertex capacities via splitting: v_in = 2v, v_out = 2v+1, arc
/// v_in -> v_out of capacity 1 (source and sink uncapped), edges become
/// uncapped arcs u_out -> v_in. Augments by BFS until the flow reaches
/// `limit`; returns the flow and, when it stays below the limit, the
/// vertices whose in-node is reachable in the residual graph but whose
/// out-node is not (a minimum s-t separator).
class VertexFlow {
 public:
    explicit VertexFlow(const Graph& g) : g_{g}, nodes_{2 * g.order()} {}

    std::pair<int, VertexSet> min_separator(int s, int t, int limit) {
        const int big = g_.order() + 1;
        cap_.assign(static_cast<std::size_t>(nodes_ * nodes_), 0);
        for (int v = 0; v < g_.order(); ++v) {
            at(in(v), out(v)) = (v == s || v == t) ? big : 1;
            for (int w : g_.neighbors(v)) at(out(v), in(w)) = big;
        }
        const int source = out(s);
        const int sink = in(t);
        int flow = 0;
        std::vector<int> parent(static_cast<std::size_t>(nodes_));
        while (flow < limit && augment(source, sink, parent)) ++flow;
        if (flow >= limit) return {flow, {}};

        // Residual reachability from the source after the last failed BFS.
        VertexSet cut;
        for (int v = 0; v < g_.order(); ++v)
            if (parent[static_cast<std::size_t>(in(v))] != -1 && parent[static_cast<std::size_t>(out(v))] == -1)
                cut.insert(v);
        return {flow, cut};
    }

 private:
    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }
    int& at(int a, int b) { return cap_[static_cast<std::size_t>(a * nodes_ + b)]; }

    // BFS in the residual graph; on failure `parent` marks the reachable set.
    bool augment(int source, int sink, std::vector<int>& parent) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[static_cast<std::size_t>(source)] = source;
        std::vector<int> queue{source};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int a = queue[head];
            for (int b = 0; b < nodes_; ++b) {
                if (parent[static_cast<std::size_t>(b)] != -1 || at(a, b) <= 0) continue;
                parent[static_cast<std::size_t>(b)] = a;
                if (b == sink) {
                    for (int x = sink; x != source; x = parent[static_cast<std::size_t>(x)]) {
                        const int p = parent[static_cast<std::size_t>(x)];
                        --at(p, x);
                        ++at(x, p);
                    }
                    return true;
                }
                queue.push_back(b);
            }
        }
        return false;
    }

    const Graph& g_;
    int nodes_;
    std::vector<int> cap_;
};

}  // namespace detail

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t.
inline int local_connectivity(const Graph& g, int s, int t) {
    if (s == t || g.adjacent(s, t)) throw std::invalid_argument{"local_connectivity: need distinct non-adjacent vertices"};
    return detail::VertexFlow{g}.min_separator(s, t, g.order()).first;
}

/// Vertex connectivity with a minimum separating set.
///
/// Fix a vertex v of minimum degree (lowest index on ties). Any minimum
/// separator S either misses v, and then separates v from some non-neighbour,
/// or contains v, and then v has neighbours x, y in different components of
/// G - S. So it suffices to minimise the local connectivity over pairs
/// (v, w) with w not adjacent to v and over non-adjacent pairs inside N(v).
inline ConnectivityCertificate connectivity(const Graph& g) {
    const int n = g.order();
    if (g.is_complete()) return {n - 1, std::nullopt};
    if (!is_connected(g)) return {0, VertexSet{}};

    int v = 0;
    for (int u = 1; u < n; ++u)
        if (g.degree(u) < g.degree(v)) v = u;

    std::vector<std::pair<int, int>> pairs;
    for (int w : g.vertices() - g.neighbors(v).with(v)) pairs.emplace_back(v, w);
    for (int x : g.neighbors(v))
        for (int y : g.neighbors(v) - g.neighbors(x))
            if (x < y) pairs.emplace_back(x, y);

    detail::VertexFlow flow{g};
    // Local connectivity of a non-adjacent pair is at most n-2, so the first
    // pair always beats the initial bound and sets a cut.
    int best = n - 1;
    VertexSet best_cut;
    for (auto [s, t] : pairs) {
        auto [value, cut] = flow.min_separator(s, t, best);
        if (value < best) {
            best = value;
            best_cut = cut;
        }
    }
    return {best, best_cut};
}

}  // namespace supertough

#endif  // SUPERTOUGH_CONNECTIVITY_HPP_
