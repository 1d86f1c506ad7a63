#ifndef SUPERTOUGH_CANONICAL_HPP_
#define SUPERTOUGH_CANONICAL_HPP_

// Canonical labelling by maximal column code.
//
// For an ordering p_0, ..., p_{n-1} of the vertices, column j is the j-bit
// word whose most significant bit is adj(p_0, p_j) and least significant bit
// adj(p_{j-1}, p_j); the code is columns 1..n-1 compared lexicographically.
// This is the graph6 bit order, so the maximal code is the maximal graph6
// string over all relabellings. Column j depends only on p_0..p_j, so the
// maximum is found by depth-first search that keeps, at each depth, only the
// vertices with the largest next column and prunes branches whose prefix
// falls below the incumbent. Vertices whose transposition is an automorphism
// fixing the chosen prefix (twins) give identical subtrees; one per class is
// explored.
//
// The code of a graph is maximal only if the code of its first n-1 vertices
// is maximal, which is what makes vertex-by-vertex orderly generation work.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "supertough/formats.hpp"
#include "supertough/graph.hpp"

namespace supertough {

/// Largest order accepted by canonical_form / is_canonical.
inline constexpr int kCanonicalMaxOrder = 16;

namespace detail {

using Columns = std::array<std::uint64_t, kMaxOrder>;

inline bool are_twins(const Graph& g, int v, int w) {
    return g.neighbors(v).without(w) == g.neighbors(w).without(v);
}

/// One vertex per twin class of `pool`, lowest index first.
inline VertexSet representatives(const Graph& g, VertexSet pool) {
    VertexSet reps;
    for (int v : pool) {
        bool fresh = true;
        for (int r : reps)
            if (are_twins(g, v, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.insert(v);
    }
    return reps;
}

class MaxCodeSearch {
 public:
    explicit MaxCodeSearch(const Graph& g) : g_{g}, n_{g.order()} {}

    std::vector<int> run() {
        Columns col{};
        std::vector<int> order;
        descend(0, g_.vertices(), col, order);
        return best_order_;
    }

 private:
    // Sign of picked_[0..depth) against best_[0..depth).
    int compare_prefix(int depth) const {
        for (int j = 0; j < depth; ++j) {
            const auto a = picked_[static_cast<std::size_t>(j)];
            const auto b = best_[static_cast<std::size_t>(j)];
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    void descend(int depth, VertexSet rest, const Columns& col, std::vector<int>& order) {
        const int cmp = have_best_ ? compare_prefix(depth) : 1;
        if (cmp < 0) return;
        if (depth == n_) {
            if (cmp > 0) {
                best_ = picked_;
                best_order_ = order;
                have_best_ = true;
            }
            return;
        }
        std::uint64_t top = 0;
        for (int v : rest) top = std::max(top, col[static_cast<std::size_t>(v)]);
        if (cmp == 0 && top < best_[static_cast<std::size_t>(depth)]) return;

        VertexSet tied;
        for (int v : rest)
            if (col[static_cast<std::size_t>(v)] == top) tied.insert(v);
        for (int v : representatives(g_, tied)) {
            picked_[static_cast<std::size_t>(depth)] = top;
            Columns next{};
            const VertexSet remaining = rest.without(v);
            for (int w : remaining)
                next[static_cast<std::size_t>(w)] = (col[static_cast<std::size_t>(w)] << 1) | (g_.adjacent(v, w) ? 1U : 0U);
            order.push_back(v);
            descend(depth + 1, remaining, next, order);
            order.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    Columns best_{};
    Columns picked_{};
    std::vector<int> best_order_;
};

// Does any ordering beat the identity's code? Aborts on the first one found.
class CanonicityTest {
 public:
    explicit CanonicityTest(const Graph& g) : g_{g}, n_{g.order()} {
        for (int j = 0; j < n_; ++j) {
            std::uint64_t c = 0;
            for (int i = 0; i < j; ++i) c = (c << 1) | (g.adjacent(i, j) ? 1U : 0U);
            own_[static_cast<std::size_t>(j)] = c;
        }
    }

    bool run() {
        Columns col{};
        return descend(0, g_.vertices(), col);
    }

 private:
    bool descend(int depth, VertexSet rest, const Columns& col) {
        if (depth == n_) return true;
        const std::uint64_t target = own_[static_cast<std::size_t>(depth)];
        VertexSet tied;
        for (int v : rest) {
            const std::uint64_t c = col[static_cast<std::size_t>(v)];
            if (c > target) return false;
            if (c == target) tied.insert(v);
        }
        for (int v : representatives(g_, tied)) {
            Columns next{};
            const VertexSet remaining = rest.without(v);
            for (int w : remaining)
                next[static_cast<std::size_t>(w)] = (col[static_cast<std::size_t>(w)] << 1) | (g_.adjacent(v, w) ? 1U : 0U);
            if (!descend(depth + 1, remaining, next)) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    Columns own_{};
};

inline void check_canonical_envelope(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder)
        throw EnvelopeError{"canonical form: order " + std::to_string(g.order()) + " exceeds " +
                            std::to_string(kCanonicalMaxOrder)};
}

}  // namespace detail

/// perm[v] = position of v in the canonical ordering.
inline std::vector<int> canonical_labeling(const Graph& g) {
    detail::check_canonical_envelope(g);
    const std::vector<int> order = detail::MaxCodeSearch{g}.run();
    std::vector<int> perm(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) perm[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
    return perm;
}

inline Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

/// graph6 of the canonically relabelled graph; equal iff isomorphic.
inline std::string canonical_form(const Graph& g) { return serialize_graph6(canonical_graph(g)); }

/// True iff the identity ordering already has the maximal code.
inline bool is_canonical(const Graph& g) {
    detail::check_canonical_envelope(g);
    return detail::CanonicityTest{g}.run();
}

}  // namespace supertough

#endif  // SUPERTOUGH_CANONICAL_HPP_
