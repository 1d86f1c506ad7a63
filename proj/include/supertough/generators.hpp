#ifndef SUPERTOUGH_GENERATORS_HPP_
#define SUPERTOUGH_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "supertough/graph.hpp"

namespace supertough {

/// Role of a vertex in J_m: a_i, b_i (1 <= i <= m) or c_i (1 <= i <= m-1).
struct Role {
    enum class Kind { A, B, C };
    Kind kind;
    int index;  // 1-based

    friend bool operator==(const Role&, const Role&) = default;
};

/// Vertex numbering of J_m.
///
/// Fixed convention: a_i -> i-1, b_i -> m+i-1, c_i -> 2m+i-1, so code can
/// address vertices by role without a lookup table. Indices in this API are
/// the 1-based ones used to describe the construction.
class JmLabeling {
 public:
    explicit JmLabeling(int m) : m_{m} {
        if (m < 3) throw std::invalid_argument{"J_m needs m >= 3, got " + std::to_string(m)};
        if (3 * m - 1 > kMaxOrder) throw EnvelopeError{"J_m with m = " + std::to_string(m) + " exceeds 64 vertices"};
    }

    int m() const { return m_; }
    int order() const { return 3 * m_ - 1; }

    int a(int i) const {
        check(i, m_);
        return i - 1;
    }
    int b(int i) const {
        check(i, m_);
        return m_ + i - 1;
    }
    int c(int i) const {
        check(i, m_ - 1);
        return 2 * m_ + i - 1;
    }

    Role role(int v) const {
        if (v < 0 || v >= order()) throw std::out_of_range{"JmLabeling::role: vertex " + std::to_string(v)};
        if (v < m_) return {Role::Kind::A, v + 1};
        if (v < 2 * m_) return {Role::Kind::B, v - m_ + 1};
        return {Role::Kind::C, v - 2 * m_ + 1};
    }

    std::string name(int v) const {
        const Role r = role(v);
        const char prefix = r.kind == Role::Kind::A ? 'a' : r.kind == Role::Kind::B ? 'b' : 'c';
        return prefix + std::to_string(r.index);
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (int v = 0; v < order(); ++v) out.push_back(name(v));
        return out;
    }

    VertexSet a_set() const { return VertexSet::full(m_); }
    VertexSet b_set() const { return VertexSet{VertexSet::full(2 * m_).bits() & ~a_set().bits()}; }
    VertexSet c_set() const { return VertexSet::full(order()) - VertexSet::full(2 * m_); }

    /// X = {a_1, a_m, b_1, b_m}, the possible claw centres.
    VertexSet x_set() const { return VertexSet::of({a(1), a(m_), b(1), b(m_)}); }

 private:
    static void check(int i, int hi) {
        if (i < 1 || i > hi) throw std::out_of_range{"role index " + std::to_string(i) + " outside 1.." + std::to_string(hi)};
    }

    int m_;
};

struct LabeledGraph {
    Graph graph;
    JmLabeling labeling;
};

/// J_m: two m-cycles a_1..a_m and b_1..b_m, hubs c_i joined to a_i, a_{i+1},
/// b_i, b_{i+1}, plus the rungs a_1 b_1 and a_m b_m. 4-regular on 3m-1 vertices.
inline LabeledGraph build_jm(int m) {
    const JmLabeling lab{m};
    GraphBuilder b{lab.order()};
    for (int i = 1; i <= m; ++i) {
        const int next = i % m + 1;
        b.add_edge(lab.a(i), lab.a(next));
        b.add_edge(lab.b(i), lab.b(next));
    }
    for (int i = 1; i <= m - 1; ++i) {
        b.add_edge(lab.c(i), lab.a(i));
        b.add_edge(lab.c(i), lab.a(i + 1));
        b.add_edge(lab.c(i), lab.b(i));
        b.add_edge(lab.c(i), lab.b(i + 1));
    }
    b.add_edge(lab.a(1), lab.b(1));
    b.add_edge(lab.a(m), lab.b(m));
    return {b.build(), lab};
}

/// k-th power of the n-cycle: i ~ i +- 1, ..., i +- k (mod n).
inline Graph cycle_power(int n, int k) {
    if (k < 1) throw std::invalid_argument{"cycle_power: k must be >= 1"};
    if (n <= 2 * k) throw std::invalid_argument{"cycle_power: need n >= 2k+1"};
    GraphBuilder b{n};
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= k; ++d) b.add_edge(i, (i + d) % n);
    return b.build();
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument{"cycle: need n >= 3"};
    return cycle_power(n, 1);
}

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument{"path: need n >= 1"};
    GraphBuilder b{n};
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument{"complete: need n >= 1"};
    GraphBuilder b{n};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

/// K_{1,k} with centre 0 and leaves 1..k.
inline Graph star(int k) {
    if (k < 1) throw std::invalid_argument{"star: need k >= 1"};
    GraphBuilder b{k + 1};
    for (int i = 1; i <= k; ++i) b.add_edge(0, i);
    return b.build();
}

/// K_{a,b}: parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument{"complete_bipartite: need a, b >= 1"};
    GraphBuilder builder{a + b};
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) builder.add_edge(i, a + j);
    return builder.build();
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
inline Graph petersen() {
    GraphBuilder b{10};
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return b.build();
}

/// Line graph; vertex e corresponds to the e-th edge of g.edges().
inline Graph line_graph(const Graph& g) {
    const auto edges = g.edges();
    if (edges.empty()) throw std::invalid_argument{"line_graph: graph has no edges"};
    if (edges.size() > static_cast<std::size_t>(kMaxOrder)) throw EnvelopeError{"line_graph: more than 64 edges"};
    GraphBuilder b{static_cast<int>(edges.size())};
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t f = e + 1; f < edges.size(); ++f) {
            const auto [p, q] = edges[e];
            const auto [s, t] = edges[f];
            if (p == s || p == t || q == s || q == t) b.add_edge(static_cast<int>(e), static_cast<int>(f));
        }
    return b.build();
}

/// Uniform double in [0, 1) from the top 53 bits, so streams are identical on
/// every standard library.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// G(n, p) conditioned on connectivity (rejection sampling).
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 1 || n > kMaxOrder) throw EnvelopeError{"random_connected_graph: order out of range"};
    if (n > 1 && p <= 0.0) throw std::invalid_argument{"random_connected_graph: p must be positive"};
    for (;;) {
        GraphBuilder b{n};
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (unit_draw(rng) < p) b.add_edge(i, j);
        Graph g = b.build();
        if (is_connected(g)) return g;
    }
}

}  // namespace supertough

#endif  // SUPERTOUGH_GENERATORS_HPP_
