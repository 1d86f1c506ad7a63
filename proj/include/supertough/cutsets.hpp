#ifndef SUPERTOUGH_CUTSETS_HPP_
#define SUPERTOUGH_CUTSETS_HPP_

#include <stdexcept>
#include <vector>

#include "supertough/graph.hpp"

namespace supertough {

/// Calls visit(mask) for every s-subset of {0..n-1} in increasing mask
/// order (Gosper's hack); stops early when visit returns false.
template<typename Visit>
void for_each_subset_of_size(int n, int s, Visit&& visit) {
    using word = VertexSet::word_type;
    if (s < 0 || s > n) return;
    if (s == 0) {
        visit(VertexSet{});
        return;
    }
    const word limit = VertexSet::full(n).bits();
    word x = VertexSet::full(s).bits();
    for (;;) {
        if (!visit(VertexSet{x})) return;
        const word low = x & (~x + 1);
        const word ripple = x + low;
        if (ripple == 0 || (ripple & ~limit) != 0) return;  // carried past bit n-1
        x = ripple | (((x ^ ripple) >> 2) / low);
    }
}

/// Every S with |S| = s whose removal leaves at least two components, in
/// increasing mask order.
inline std::vector<VertexSet> cutsets_of_size(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument{"cutsets_of_size: need s >= 1"};
    std::vector<VertexSet> out;
    for_each_subset_of_size(g.order(), s, [&](VertexSet cut) {
        if (component_count(g, cut) >= 2) out.push_back(cut);
        return true;
    });
    return out;
}

/// Every edge has an endpoint in s.
inline bool is_vertex_cover(const Graph& g, VertexSet s) {
    const VertexSet rest = g.vertices() - s;
    for (int v : rest)
        if (g.neighbors(v).intersects(rest)) return false;
    return true;
}

}  // namespace supertough

#endif  // SUPERTOUGH_CUTSETS_HPP_
