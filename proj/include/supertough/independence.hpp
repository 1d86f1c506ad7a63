#ifndef SUPERTOUGH_INDEPENDENCE_HPP_
#define SUPERTOUGH_INDEPENDENCE_HPP_

#include <array>

#include "supertough/graph.hpp"

namespace supertough {

struct IndependenceCertificate {
    int alpha = 0;
    VertexSet witness;
};

inline bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

namespace detail {

// Maximum independent set by branch and bound. The bound partitions the
// candidate set greedily into cliques of g: an independent set meets each
// clique at most once. Candidates are branched on in reverse partition order
// so the bound for the remaining prefix is just the clique index.
class IndependentSetSearch {
 public:
    explicit IndependentSetSearch(const Graph& g) : g_{g} {}

    IndependenceCertificate run() {
        expand(g_.vertices(), {});
        return {best_.size(), best_};
    }

 private:
    void expand(VertexSet candidates, VertexSet current) {
        std::array<int, kMaxOrder> order{};
        std::array<int, kMaxOrder> bound{};
        int count = 0;
        int cliques = 0;
        VertexSet rest = candidates;
        while (!rest.empty()) {
            ++cliques;
            VertexSet grow = rest;
            while (!grow.empty()) {
                const int v = grow.lowest();
                grow &= g_.neighbors(v);
                rest.erase(v);
                order[static_cast<std::size_t>(count)] = v;
                bound[static_cast<std::size_t>(count)] = cliques;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (current.size() + bound[static_cast<std::size_t>(i)] <= best_.size()) return;
            const int v = order[static_cast<std::size_t>(i)];
            const VertexSet next = current.with(v);
            const VertexSet remaining = candidates - g_.neighbors(v).with(v);
            if (remaining.empty()) {
                if (next.size() > best_.size()) best_ = next;
            } else {
                expand(remaining, next);
            }
            candidates.erase(v);
        }
    }

    const Graph& g_;
    VertexSet best_;
};

}  // namespace detail

/// Independence number with a maximum independent set as witness.
inline IndependenceCertificate independence_number(const Graph& g) {
    return detail::IndependentSetSearch{g}.run();
}

}  // namespace supertough

#endif  // SUPERTOUGH_INDEPENDENCE_HPP_
