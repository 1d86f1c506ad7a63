#ifndef SUPERTOUGH_CERTIFICATES_HPP_
#define SUPERTOUGH_CERTIFICATES_HPP_

// JSON shape shared by every invariant:
//   {"invariant": name, "value": {"num": _, "den": _} | "infinite",
//    "witness": [vertex ids], "components": int, ...}
// nlohmann::json objects keep keys sorted, so dumps are byte-stable.

#include <nlohmann/json.hpp>

#include "supertough/connectivity.hpp"
#include "supertough/graph.hpp"
#include "supertough/independence.hpp"
#include "supertough/rational.hpp"
#include "supertough/stars.hpp"
#include "supertough/toughness.hpp"

namespace supertough {

using json = nlohmann::json;

inline json to_json(const Rational& r) {
    if (r.is_infinite()) return "infinite";
    return json{{"num", r.num()}, {"den", r.den()}};
}

inline json to_json(VertexSet s) { return s.to_vector(); }

inline json toughness_json(const ToughnessCertificate& c) {
    return json{{"invariant", "toughness"},
                {"value", to_json(c.value)},
                {"witness", to_json(c.witness_cut)},
                {"components", c.component_count}};
}

/// For complete graphs the witness is empty and "complete" is true.
inline json connectivity_json(const Graph& g, const ConnectivityCertificate& c) {
    const VertexSet cut = c.witness_cut.value_or(VertexSet{});
    return json{{"invariant", "connectivity"},
                {"value", to_json(Rational{c.kappa})},
                {"witness", to_json(cut)},
                {"components", c.complete() ? 1 : component_count(g, cut)},
                {"complete", c.complete()}};
}

/// Removing the complement of an independent set leaves |set| singletons.
inline json independence_json(const IndependenceCertificate& c) {
    return json{{"invariant", "independence"},
                {"value", to_json(Rational{c.alpha})},
                {"witness", to_json(c.witness)},
                {"components", c.alpha}};
}

inline json star_json(const StarInstance& s) { return json{{"center", s.center}, {"leaves", to_json(s.leaves)}}; }

/// value = number of claws, witness = claw centres.
inline json claws_json(const Graph& g) {
    const auto claws = induced_stars(g, 3);
    json list = json::array();
    for (const auto& s : claws) list.push_back(star_json(s));
    return json{{"invariant", "claws"},
                {"value", to_json(Rational{static_cast<std::int64_t>(claws.size())})},
                {"witness", to_json(claw_centers(g))},
                {"claws", list}};
}

}  // namespace supertough

#endif  // SUPERTOUGH_CERTIFICATES_HPP_
