#ifndef SUPERTOUGH_ENUMERATE_HPP_
#define SUPERTOUGH_ENUMERATE_HPP_

// Orderly generation of connected r-regular graphs.
//
// Graphs grow one vertex at a time; the new vertex's column (its adjacency to
// the earlier vertices) is chosen and the extension is kept only if the
// resulting graph has maximal column code (see canonical.hpp). Since
// prefixes of maximal codes are maximal, every isomorphism class of the
// target appears exactly once, already in canonical labelling.
//
// Besides the canonicity test, partial graphs are cut by facts every prefix
// of a maximal-code connected r-regular graph satisfies:
//   - every vertex after the first has an earlier neighbour;
//   - the new column is not above the previous vertex's column on the
//     shared prefix (else swapping the two raises the code);
//   - degree deficits can still be met by the vertices yet to come;
//   - if i is the first vertex still short of neighbours, some later vertex
//     v will be adjacent to i and to none of 0..i-1, so every placed vertex
//     after i must already touch {0..i}.

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supertough/canonical.hpp"
#include "supertough/graph.hpp"

namespace supertough {

inline constexpr int kEnumerateMaxOrder = 12;
inline constexpr int kEnumerateMaxDegree = 4;

struct EnumerationStats {
    long nodes = 0;              // partial graphs accepted
    long canonicity_tests = 0;
};

namespace detail {

class OrderlyRegular {
 public:
    OrderlyRegular(int n, int r, const std::function<void(const Graph&)>& emit, EnumerationStats& stats)
        : n_{n}, r_{r}, emit_{emit}, stats_{stats} {}

    void run() { extend(0); }

 private:
    std::uint64_t column(int v, int upto) const {
        std::uint64_t c = 0;
        for (int i = 0; i < upto; ++i) c = (c << 1) | (rows_[static_cast<std::size_t>(v)].contains(i) ? 1U : 0U);
        return c;
    }

    bool deficits_feasible(int k) const {
        const int future = n_ - k;
        int total = 0;
        for (int i = 0; i < k; ++i) {
            const int d = r_ - rows_[static_cast<std::size_t>(i)].size();
            if (d > future) return false;
            total += d;
        }
        const int stubs = r_ * future - total;  // endpoints left for edges among future vertices
        return stubs >= 0 && stubs % 2 == 0 && stubs / 2 <= future * (future - 1) / 2;
    }

    bool touches_first_short_vertex(int k) const {
        int first_short = -1;
        for (int i = 0; i < k; ++i)
            if (rows_[static_cast<std::size_t>(i)].size() < r_) {
                first_short = i;
                break;
            }
        if (first_short < 0) return true;
        const VertexSet head = VertexSet::full(first_short + 1);
        for (int j = first_short + 1; j < k; ++j)
            if (!rows_[static_cast<std::size_t>(j)].intersects(head)) return false;
        return true;
    }

    void extend(int k) {
        if (k == n_) {
            emit_(Graph::from_rows(n_, rows_));
            return;
        }
        VertexSet open;
        for (int i = 0; i < k; ++i)
            if (rows_[static_cast<std::size_t>(i)].size() < r_) open.insert(i);

        const std::uint64_t previous = k >= 2 ? column(k - 1, k - 1) : 0;
        // Every subset of `open`, in increasing mask order.
        const auto all = open.bits();
        for (std::uint64_t sub = 0;; sub = (sub - all) & all) {
            const VertexSet nbrs{sub};
            const int size = nbrs.size();
            const bool admissible = size <= r_ && r_ - size <= n_ - k - 1 && (k == 0 || size > 0);
            if (admissible) {
                for (int i : nbrs) rows_[static_cast<std::size_t>(i)].insert(k);
                rows_[static_cast<std::size_t>(k)] = nbrs;
                if ((k < 2 || column(k, k - 1) <= previous) && deficits_feasible(k + 1) &&
                    touches_first_short_vertex(k + 1)) {
                    ++stats_.canonicity_tests;
                    if (is_canonical(Graph::from_rows(k + 1, rows_))) {
                        ++stats_.nodes;
                        extend(k + 1);
                    }
                }
                for (int i : nbrs) rows_[static_cast<std::size_t>(i)].erase(k);
                rows_[static_cast<std::size_t>(k)] = {};
            }
            if (sub == all) break;
        }
    }

    int n_;
    int r_;
    const std::function<void(const Graph&)>& emit_;
    EnumerationStats& stats_;
    std::array<VertexSet, kMaxOrder> rows_{};
};

}  // namespace detail

inline void check_regular_parameters(int n, int r) {
    if (n < 1 || r < 0) throw std::invalid_argument{"enumerate_regular: need n >= 1 and r >= 0"};
    if (r >= n) throw std::invalid_argument{"enumerate_regular: need r < n"};
    if ((n * r) % 2 != 0) throw std::invalid_argument{"enumerate_regular: n*r must be even"};
    if (n > kEnumerateMaxOrder || r > kEnumerateMaxDegree)
        throw EnvelopeError{"enumerate_regular: (n, r) = (" + std::to_string(n) + ", " + std::to_string(r) +
                            ") outside n <= 12, r <= 4"};
}

/// Calls emit once per isomorphism class of connected r-regular graphs of
/// order n. Each graph arrives in its canonical labelling, so
/// serialize_graph6(g) == canonical_form(g).
inline EnumerationStats for_each_regular(int n, int r, const std::function<void(const Graph&)>& emit) {
    check_regular_parameters(n, r);
    EnumerationStats stats;
    detail::OrderlyRegular{n, r, emit, stats}.run();
    return stats;
}

inline std::vector<Graph> enumerate_regular(int n, int r) {
    std::vector<Graph> out;
    for_each_regular(n, r, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace supertough

#endif  // SUPERTOUGH_ENUMERATE_HPP_
