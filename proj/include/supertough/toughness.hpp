#ifndef SUPERTOUGH_TOUGHNESS_HPP_
#define SUPERTOUGH_TOUGHNESS_HPP_

// Exact toughness: min over cut-sets S of |S| / k(G - S).
//
// Conventions: complete graphs have no cut-set and toughness INFINITE;
// disconnected graphs have toughness 0 (S = {} already leaves >= 2
// components). Witnesses are the minimizing S with the smallest bitset value.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supertough/connectivity.hpp"
#include "supertough/graph.hpp"
#include "supertough/independence.hpp"
#include "supertough/parallel.hpp"
#include "supertough/rational.hpp"

namespace supertough {

/// Documented ceiling of the pruned solver (a full 2^n mask sweep).
inline constexpr int kToughnessMaxOrder = 30;
/// Hard cap of the unpruned brute-force twin.
inline constexpr int kToughnessOracleMaxOrder = 22;

struct ToughnessCertificate {
    Rational value;
    VertexSet witness_cut;
    /// k(G - witness_cut); 1 for the INFINITE certificate of a complete graph.
    int component_count = 0;

    bool infinite() const { return value.is_infinite(); }

    static ToughnessCertificate complete_graph() { return {Rational::infinite(), {}, 1}; }

    friend bool operator==(const ToughnessCertificate&, const ToughnessCertificate&) = default;
};

struct SolverOptions {
    /// 0 = one per hardware thread. Results never depend on this.
    unsigned workers = 0;
};

/// Outcome of a t-toughness decision. On failure `violation` holds a cut-set
/// S with |S| < t * k(G - S); it is the violating set of smallest bitset
/// value among those every vertex of which sees >= 2 vertices outside S,
/// not necessarily a toughness minimizer.
struct ToughnessDecision {
    bool tough = true;
    std::optional<ToughnessCertificate> violation;
};

namespace detail {

inline void check_toughness_envelope(const Graph& g, int cap, const char* who) {
    if (g.order() > cap)
        throw EnvelopeError{std::string{who} + ": order " + std::to_string(g.order()) + " exceeds ceiling " +
                            std::to_string(cap)};
}

/// Splits [0, 2^n) into 2^bits contiguous chunks of masks.
struct MaskChunks {
    int n;
    int bits;

    static MaskChunks for_workers(int n, unsigned workers) {
        // A few chunks per worker for balance, but never below 2^12 masks each.
        const int wanted = std::bit_width(resolve_workers(workers) - 1U) + 3;
        return {n, std::clamp(wanted, 0, std::max(0, n - 12))};
    }
    std::size_t count() const { return std::size_t{1} << bits; }
    std::uint64_t first(std::size_t i) const { return static_cast<std::uint64_t>(i) << (n - bits); }
    std::uint64_t last(std::size_t i) const { return first(i) + ((std::uint64_t{1} << (n - bits)) - 1); }
};

/// A vertex of S with at most one neighbour outside S can be dropped from S:
/// the value strictly decreases, so no such S is a minimizer or needed to
/// witness a violation.
inline bool every_member_sees_two_outside(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
        if (std::popcount(g.row(std::countr_zero(m)) & ~mask) < 2) return false;
    return true;
}

/// Upper bound on k(G - S) for |S| = s: min(n - s, alpha(G)).
inline std::vector<int> component_caps(int n, int alpha) {
    std::vector<int> caps(static_cast<std::size_t>(n + 1));
    for (int s = 0; s <= n; ++s) caps[static_cast<std::size_t>(s)] = std::min(n - s, alpha);
    return caps;
}

inline std::uint64_t pack(const Rational& r) {
    return (static_cast<std::uint64_t>(r.num()) << 32) | static_cast<std::uint64_t>(r.den());
}
inline Rational unpack(std::uint64_t p) {
    return {static_cast<std::int64_t>(p >> 32), static_cast<std::int64_t>(p & 0xffffffffU)};
}

}  // namespace detail

/// Exact toughness with the lexicographically smallest minimizing cut-set.
///
/// Full sweep of the 2^n subsets with three exact filters, none of which can
/// discard a minimizer: |S| >= kappa; k(G - S) <= min(n - |S|, alpha), so
/// sizes with |S| / min(n - |S|, alpha) above the incumbent are skipped
/// (strictly, so ties survive for the tie-break); and every vertex of S
/// must see two vertices outside S. The incumbent is shared between workers
/// only as a pruning bound; each chunk keeps its own best and chunks are
/// merged by (value, mask), so the answer is independent of scheduling.
inline ToughnessCertificate toughness(const Graph& g, SolverOptions options = {}) {
    detail::check_toughness_envelope(g, kToughnessMaxOrder, "toughness");
    const int n = g.order();
    if (g.is_complete()) return ToughnessCertificate::complete_graph();
    if (const int k = component_count(g, {}); k >= 2) return {Rational{0}, {}, k};

    const ConnectivityCertificate conn = connectivity(g);
    const VertexSet seed_cut = *conn.witness_cut;
    const int seed_k = component_count(g, seed_cut);
    const std::vector<int> caps = detail::component_caps(n, independence_number(g).alpha);

    std::atomic<std::uint64_t> shared{detail::pack(Rational{seed_cut.size(), seed_k})};
    const auto chunks = detail::MaskChunks::for_workers(n, options.workers);
    std::vector<std::optional<ToughnessCertificate>> found(chunks.count());

    parallel_for(chunks.count(), options.workers, [&](std::size_t chunk) {
        Rational bound = detail::unpack(shared.load(std::memory_order_relaxed));
        std::vector<char> size_ok(static_cast<std::size_t>(n + 1));
        auto refresh = [&] {
            for (int s = 0; s <= n; ++s)
                size_ok[static_cast<std::size_t>(s)] =
                    s >= conn.kappa && s <= n - 2 &&
                    static_cast<std::int64_t>(s) * bound.den() <= bound.num() * caps[static_cast<std::size_t>(s)];
        };
        refresh();

        std::optional<ToughnessCertificate> best;
        const std::uint64_t hi = chunks.last(chunk);
        for (std::uint64_t mask = chunks.first(chunk);; ++mask) {
            if ((mask & 0xfffU) == 0) {
                const Rational global = detail::unpack(shared.load(std::memory_order_relaxed));
                if (global < bound) {
                    bound = global;
                    refresh();
                }
            }
            const int s = std::popcount(mask);
            if (size_ok[static_cast<std::size_t>(s)] && detail::every_member_sees_two_outside(g, mask)) {
                const VertexSet cut{mask};
                const int k = component_count(g, cut);
                if (k >= 2) {
                    const Rational value{s, k};
                    if (!best || value < best->value) {
                        best = ToughnessCertificate{value, cut, k};
                        if (value < bound) {
                            bound = value;
                            refresh();
                            std::uint64_t cur = shared.load(std::memory_order_relaxed);
                            while (value < detail::unpack(cur) && !shared.compare_exchange_weak(cur, detail::pack(value))) {
                            }
                        }
                    }
                }
            }
            if (mask == hi) break;
        }
        found[chunk] = best;
    });

    std::optional<ToughnessCertificate> result;
    for (const auto& candidate : found) {
        if (!candidate) continue;
        if (!result || candidate->value < result->value ||
            (candidate->value == result->value && candidate->witness_cut < result->witness_cut))
            result = candidate;
    }
    if (!result) throw std::logic_error{"toughness: sweep lost every minimizer"};
    return *result;
}

/// Unpruned, sequential sweep over all 2^n subsets; the independent twin
/// used to validate toughness().
inline ToughnessCertificate toughness_oracle(const Graph& g) {
    detail::check_toughness_envelope(g, kToughnessOracleMaxOrder, "toughness_oracle");
    const int n = g.order();
    std::optional<ToughnessCertificate> best;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        const VertexSet cut{mask};
        const int k = component_count(g, cut);
        if (k < 2) continue;
        const Rational value{cut.size(), k};
        if (!best || value < best->value) best = ToughnessCertificate{value, cut, k};
    }
    return best ? *best : ToughnessCertificate::complete_graph();
}

/// Decides whether every cut-set S satisfies |S| >= t * k(G - S).
inline ToughnessDecision is_t_tough(const Graph& g, const Rational& t, SolverOptions options = {}) {
    if (t.is_infinite() || t < Rational{0}) throw std::invalid_argument{"is_t_tough: t must be finite and >= 0"};
    detail::check_toughness_envelope(g, kToughnessMaxOrder, "is_t_tough");
    const int n = g.order();
    if (g.is_complete()) return {true, std::nullopt};

    // |S| < t k  <=>  |S| * t.den < t.num * k
    auto violates = [&](int s, int k) {
        return static_cast<std::int64_t>(s) * t.den() < t.num() * static_cast<std::int64_t>(k);
    };
    if (const int k = component_count(g, {}); k >= 2) {
        if (violates(0, k)) return {false, ToughnessCertificate{Rational{0}, {}, k}};
        return {true, std::nullopt};
    }

    const ConnectivityCertificate conn = connectivity(g);
    const VertexSet seed_cut = *conn.witness_cut;
    const int seed_k = component_count(g, seed_cut);
    if (violates(seed_cut.size(), seed_k))
        return {false, ToughnessCertificate{Rational{seed_cut.size(), seed_k}, seed_cut, seed_k}};

    const std::vector<int> caps = detail::component_caps(n, independence_number(g).alpha);
    std::vector<char> size_ok(static_cast<std::size_t>(n + 1));
    for (int s = 0; s <= n; ++s)
        size_ok[static_cast<std::size_t>(s)] = s >= conn.kappa && s <= n - 2 && violates(s, caps[static_cast<std::size_t>(s)]);

    const auto chunks = detail::MaskChunks::for_workers(n, options.workers);
    std::vector<std::optional<ToughnessCertificate>> hit(chunks.count());
    const std::size_t first = parallel_find_first(chunks.count(), options.workers, [&](std::size_t chunk) {
        const std::uint64_t hi = chunks.last(chunk);
        for (std::uint64_t mask = chunks.first(chunk);; ++mask) {
            const int s = std::popcount(mask);
            if (size_ok[static_cast<std::size_t>(s)] && detail::every_member_sees_two_outside(g, mask)) {
                const VertexSet cut{mask};
                const int k = component_count(g, cut);
                if (k >= 2 && violates(s, k)) {
                    hit[chunk] = ToughnessCertificate{Rational{s, k}, cut, k};
                    return true;
                }
            }
            if (mask == hi) return false;
        }
    });
    if (first == chunks.count()) return {true, std::nullopt};
    return {false, hit[first]};
}

}  // namespace supertough

#endif  // SUPERTOUGH_TOUGHNESS_HPP_
