#ifndef SUPERTOUGH_CENSUS_HPP_
#define SUPERTOUGH_CENSUS_HPP_

#include <algorithm>
#include <istream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "supertough/canonical.hpp"
#include "supertough/certificates.hpp"
#include "supertough/enumerate.hpp"
#include "supertough/formats.hpp"
#include "supertough/parallel.hpp"
#include "supertough/stars.hpp"
#include "supertough/toughness.hpp"

namespace supertough {

/// Filters, cheapest first. The declaration order is the evaluation order.
enum class Predicate { Connected, ClawFree, HasClaw, Supertough };

inline const char* to_string(Predicate p) {
    switch (p) {
        case Predicate::Connected: return "connected";
        case Predicate::ClawFree: return "claw_free";
        case Predicate::HasClaw: return "has_claw";
        case Predicate::Supertough: return "supertough";
    }
    return "unknown";
}

enum class Source { BuiltinEnumeration, Graph6Stream };

struct SearchSpec {
    int n = 0;
    int r = 0;
    Source source = Source::BuiltinEnumeration;
    std::vector<Predicate> predicates;
};

struct Survivor {
    std::string canonical_graph6;
    Graph graph;
    /// 1-based line in the input stream; 0 for built-in enumeration.
    int line = 0;
    ToughnessCertificate toughness;
    ConnectivityCertificate connectivity;
    IndependenceCertificate independence;
    VertexSet claw_centers;
    /// For supertough survivors: alpha <= 2n / (r + 2).
    std::optional<bool> alpha_bound_holds;
};

struct StreamError {
    int line = 0;
    std::string message;
};

struct CensusResult {
    SearchSpec spec;
    long examined = 0;
    /// Complete graphs seen; toughness INFINITE, never counted as supertough.
    long complete_graphs = 0;
    /// (predicate, graphs that reached and passed it), in evaluation order.
    std::vector<std::pair<Predicate, long>> passed;
    std::vector<Survivor> survivors;  // sorted by canonical graph6, then line
    std::vector<StreamError> errors;
};

struct CensusOptions {
    unsigned workers = 0;
};

/// r/2 and 2n/(r+2) comparisons on exact rationals.
inline bool is_supertough(const Graph& g, int r) {
    if (g.is_complete() || !g.is_regular(r)) return false;
    if (connectivity(g).kappa != r) return false;
    return is_t_tough(g, Rational{r, 2}, SolverOptions{1}).tough;
}

inline bool alpha_bound_holds(int alpha, int n, int r) { return Rational{alpha} <= Rational{2 * n, r + 2}; }

namespace detail {

struct Candidate {
    Graph graph;
    int line = 0;
};

inline void validate_spec(SearchSpec& spec) {
    if (spec.n < 1 || spec.r < 0 || spec.r >= spec.n) throw std::invalid_argument{"census: need 0 <= r < n"};
    if ((spec.n * spec.r) % 2 != 0) throw std::invalid_argument{"census: n*r must be even"};
    std::sort(spec.predicates.begin(), spec.predicates.end());
    spec.predicates.erase(std::unique(spec.predicates.begin(), spec.predicates.end()), spec.predicates.end());
}

inline bool passes(const Graph& g, int r, Predicate p) {
    switch (p) {
        case Predicate::Connected: return is_connected(g);
        case Predicate::ClawFree: return is_claw_free(g);
        case Predicate::HasClaw: return !is_claw_free(g);
        case Predicate::Supertough: return is_supertough(g, r);
    }
    return false;
}

}  // namespace detail

/// Reads one graph6 per line; blank lines are skipped. Entries that fail to
/// parse or do not have order n and degree r become StreamErrors.
inline std::vector<detail::Candidate> read_graph6_stream(std::istream& in, int n, int r, std::vector<StreamError>& errors) {
    std::vector<detail::Candidate> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            Graph g = parse_graph6(line);
            if (g.order() != n) {
                errors.push_back({line_no, "order " + std::to_string(g.order()) + " != " + std::to_string(n)});
            } else if (!g.is_regular(r)) {
                errors.push_back({line_no, "graph is not " + std::to_string(r) + "-regular"});
            } else {
                out.push_back({g, line_no});
            }
        } catch (const std::exception& e) {
            errors.push_back({line_no, e.what()});
        }
    }
    return out;
}

/// Census over the built-in enumeration, or over `stream` for Graph6Stream.
/// Survivors get full certificates; the result does not depend on workers.
inline CensusResult run_census(SearchSpec spec, std::istream* stream = nullptr, CensusOptions options = {}) {
    detail::validate_spec(spec);
    CensusResult result;
    std::vector<detail::Candidate> candidates;
    if (spec.source == Source::BuiltinEnumeration) {
        for (const Graph& g : enumerate_regular(spec.n, spec.r)) candidates.push_back({g, 0});
    } else {
        if (stream == nullptr) throw std::invalid_argument{"census: stream source without a stream"};
        candidates = read_graph6_stream(*stream, spec.n, spec.r, result.errors);
    }
    result.spec = spec;

    struct Outcome {
        std::vector<char> passed;
        std::optional<Survivor> survivor;
        std::optional<StreamError> error;
    };
    std::vector<Outcome> outcomes(candidates.size());
    parallel_for(candidates.size(), options.workers, [&](std::size_t i) {
        const auto& [g, line] = candidates[i];
        Outcome& out = outcomes[i];
        try {
            for (Predicate p : spec.predicates) {
                if (!detail::passes(g, spec.r, p)) return;
                out.passed.push_back(1);
            }
            Survivor s;
            s.graph = g;
            s.line = line;
            s.canonical_graph6 = canonical_form(g);
            s.toughness = toughness(g, SolverOptions{1});
            s.connectivity = connectivity(g);
            s.independence = independence_number(g);
            s.claw_centers = claw_centers(g);
            if (!s.toughness.infinite() && s.toughness.value == Rational{spec.r, 2})
                s.alpha_bound_holds = alpha_bound_holds(s.independence.alpha, g.order(), spec.r);
            out.survivor = std::move(s);
        } catch (const std::exception& e) {
            out.error = StreamError{line, e.what()};
        }
    });

    result.examined = static_cast<long>(candidates.size());
    for (const Predicate p : spec.predicates) result.passed.emplace_back(p, 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].graph.is_complete()) ++result.complete_graphs;
        const Outcome& out = outcomes[i];
        for (std::size_t j = 0; j < out.passed.size(); ++j) ++result.passed[j].second;
        if (out.survivor) result.survivors.push_back(*out.survivor);
        if (out.error) result.errors.push_back(*out.error);
    }
    std::sort(result.survivors.begin(), result.survivors.end(), [](const Survivor& a, const Survivor& b) {
        return std::tie(a.canonical_graph6, a.line) < std::tie(b.canonical_graph6, b.line);
    });
    std::sort(result.errors.begin(), result.errors.end(),
              [](const StreamError& a, const StreamError& b) { return a.line < b.line; });
    return result;
}

inline json census_json(const CensusResult& r) {
    json predicates = json::array();
    json counts = json::object();
    for (Predicate p : r.spec.predicates) predicates.push_back(to_string(p));
    for (const auto& [p, count] : r.passed) counts[to_string(p)] = count;
    json survivors = json::array();
    for (const Survivor& s : r.survivors) {
        json entry{{"graph6", s.canonical_graph6},
                   {"toughness", toughness_json(s.toughness)},
                   {"connectivity", connectivity_json(s.graph, s.connectivity)},
                   {"independence", independence_json(s.independence)},
                   {"has_claw", !s.claw_centers.empty()},
                   {"claw_centers", to_json(s.claw_centers)}};
        if (s.line > 0) entry["line"] = s.line;
        if (s.alpha_bound_holds) entry["alpha_bound_holds"] = *s.alpha_bound_holds;
        survivors.push_back(entry);
    }
    json errors = json::array();
    for (const StreamError& e : r.errors) errors.push_back(json{{"line", e.line}, {"message", e.message}});
    return json{{"n", r.spec.n},
                {"r", r.spec.r},
                {"source", r.spec.source == Source::BuiltinEnumeration ? "builtin" : "graph6"},
                {"predicates", predicates},
                {"examined", r.examined},
                {"complete_graphs", r.complete_graphs},
                {"passed", counts},
                {"survivor_count", r.survivors.size()},
                {"survivors", survivors},
                {"errors", errors}};
}

}  // namespace supertough

#endif  // SUPERTOUGH_CENSUS_HPP_
