#ifndef SUPERTOUGH_DOT_HPP_
#define SUPERTOUGH_DOT_HPP_

#include <string>

#include "supertough/generators.hpp"
#include "supertough/graph.hpp"

namespace supertough {

/// Undirected DOT, one node then one edge per line, edges in (u, v) order.
/// With a labeling, J_m vertices are named a1..am, b1..bm, c1..c(m-1).
inline std::string to_dot(const Graph& g, const JmLabeling* labels = nullptr) {
    if (labels != nullptr && labels->order() != g.order())
        throw std::invalid_argument{"to_dot: labeling does not match graph order"};
    auto name = [&](int v) { return labels != nullptr ? labels->name(v) : std::to_string(v); };
    std::string out = "graph {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + name(v) + ";\n";
    for (auto [u, v] : g.edges()) out += "  " + name(u) + " -- " + name(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace supertough

#endif  // SUPERTOUGH_DOT_HPP_
