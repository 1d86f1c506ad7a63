#ifndef SUPERTOUGH_STARS_HPP_
#define SUPERTOUGH_STARS_HPP_

#include <stdexcept>
#include <vector>

#include "supertough/graph.hpp"

namespace supertough {

/// Induced K_{1,k}: centre adjacent to every leaf, leaves pairwise non-adjacent.
struct StarInstance {
    int center = 0;
    VertexSet leaves;

    friend bool operator==(const StarInstance&, const StarInstance&) = default;
};

namespace detail {

template<typename Visit>
bool independent_subsets(const Graph& g, VertexSet pool, VertexSet chosen, int need, Visit& visit) {
    if (need == 0) return visit(chosen);
    if (pool.size() < need) return true;
    for (int v : pool) {
        pool.erase(v);
        if (!independent_subsets(g, pool - g.neighbors(v), chosen.with(v), need - 1, visit)) return false;
    }
    return true;
}

}  // namespace detail

/// Calls visit(leaves) for each independent k-subset of N(center), in
/// increasing order of leaf tuples; stops early when visit returns false.
template<typename Visit>
void for_each_star_at(const Graph& g, int center, int k, Visit&& visit) {
    detail::independent_subsets(g, g.neighbors(center), {}, k, visit);
}

/// All induced K_{1,k}, by centre then by leaf tuple.
inline std::vector<StarInstance> induced_stars(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument{"induced_stars: need k >= 2"};
    std::vector<StarInstance> out;
    for (int c = 0; c < g.order(); ++c)
        for_each_star_at(g, c, k, [&](VertexSet leaves) {
            out.push_back({c, leaves});
            return true;
        });
    return out;
}

inline bool is_star_center(const Graph& g, int v, int k) {
    bool found = false;
    for_each_star_at(g, v, k, [&](VertexSet) {
        found = true;
        return false;
    });
    return found;
}

/// Vertices that centre at least one claw (induced K_{1,3}).
inline VertexSet claw_centers(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (is_star_center(g, v, 3)) out.insert(v);
    return out;
}

inline bool is_claw_free(const Graph& g) { return claw_centers(g).empty(); }

}  // namespace supertough

#endif  // SUPERTOUGH_STARS_HPP_
