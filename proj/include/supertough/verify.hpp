#ifndef SUPERTOUGH_VERIFY_HPP_
#define SUPERTOUGH_VERIFY_HPP_

// Machine checks of the structural claims about J_m and of the background
// facts about toughness, each producing a ClaimReport. The check_* functions
// take any LabeledGraph so that a failing input (a damaged J_m, a value of m
// outside a claim's hypothesis) yields a FAIL report whose counterexample
// can be re-validated on its own.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supertough/certificates.hpp"
#include "supertough/connectivity.hpp"
#include "supertough/cutsets.hpp"
#include "supertough/generators.hpp"
#include "supertough/independence.hpp"
#include "supertough/stars.hpp"
#include "supertough/toughness.hpp"

namespace supertough {

enum class Claim {
    LemmaA,            // kappa(J_m) = 4
    LemmaB,            // size-4 cuts isolate a vertex of A u B or are {a_i, a_j, b_i, b_j}; m >= 5
    LemmaC,            // alpha(J_m) = m - 1; m odd
    LemmaCTriangles,   // J_m - {a_1, b_m} is spanned by m - 1 disjoint triangles; m odd
    Theorem,           // toughness(J_m) = 2; m odd
    ClawCenters,       // claw centres are exactly X = {a_1, a_m, b_1, b_m}; m >= 4
    NoK14AtX,          // no induced K_{1,4} centred in X; m >= 4
    CyclePowerTough,   // toughness(C_n^k) = k
    AlphaBound,        // supertough r-regular: alpha <= 2n / (r + 2)
    MsConsistency,     // claw-free: toughness = kappa / 2
};

inline constexpr Claim kJmClaims[] = {Claim::LemmaA,   Claim::LemmaB,      Claim::LemmaC,  Claim::LemmaCTriangles,
                                      Claim::Theorem,  Claim::ClawCenters, Claim::NoK14AtX};
inline constexpr Claim kBackgroundClaims[] = {Claim::MsConsistency, Claim::CyclePowerTough, Claim::AlphaBound};

inline const char* to_string(Claim c) {
    switch (c) {
        case Claim::LemmaA: return "LEMMA_A";
        case Claim::LemmaB: return "LEMMA_B";
        case Claim::LemmaC: return "LEMMA_C";
        case Claim::LemmaCTriangles: return "LEMMA_C_TRIANGLES";
        case Claim::Theorem: return "THEOREM";
        case Claim::ClawCenters: return "CLAW_CENTERS";
        case Claim::NoK14AtX: return "NO_K14_AT_X";
        case Claim::CyclePowerTough: return "CYCLE_POWER_TOUGH";
        case Claim::AlphaBound: return "ALPHA_BOUND";
        case Claim::MsConsistency: return "MS_CONSISTENCY";
    }
    return "UNKNOWN";
}

inline std::optional<Claim> parse_claim(const std::string& name) {
    for (Claim c : kJmClaims)
        if (name == to_string(c)) return c;
    for (Claim c : kBackgroundClaims)
        if (name == to_string(c)) return c;
    return std::nullopt;
}

/// A claim was asked for at a parameter outside its hypothesis.
class HypothesisError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

enum class Verdict { Pass, Fail };

struct ClaimReport {
    Claim claim = Claim::LemmaA;
    /// {"m": 5} for J_m claims, {"graph": "C_8^2"} for background claims.
    json parameter;
    Verdict verdict = Verdict::Pass;
    json witness = json::object();
    /// Present iff verdict is Fail.
    std::optional<json> counterexample;
    /// Run outside the claim's stated hypothesis on request.
    bool exploratory = false;

    bool passed() const { return verdict == Verdict::Pass; }
};

inline json report_json(const ClaimReport& r) {
    json out{{"claim", to_string(r.claim)},
             {"parameter", r.parameter},
             {"verdict", r.passed() ? "PASS" : "FAIL"},
             {"witness", r.witness}};
    if (r.counterexample) out["counterexample"] = *r.counterexample;
    if (r.exploratory) out["exploratory"] = true;
    return out;
}

inline json ledger_json(const std::vector<ClaimReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(report_json(r));
    return out;
}

namespace detail {

inline json names_of(const JmLabeling& lab, VertexSet s) {
    json out = json::array();
    for (int v : s) out.push_back(lab.name(v));
    return out;
}

inline ClaimReport make_report(Claim claim, json parameter) {
    ClaimReport r;
    r.claim = claim;
    r.parameter = std::move(parameter);
    return r;
}

inline ClaimReport jm_report(Claim claim, const LabeledGraph& jm) { return make_report(claim, json{{"m", jm.labeling.m()}}); }

inline void fail(ClaimReport& r, json counterexample) {
    r.verdict = Verdict::Fail;
    r.counterexample = std::move(counterexample);
}

inline json cut_json(const Graph& g, VertexSet cut) {
    return json{{"cut", to_json(cut)}, {"size", cut.size()}, {"components", component_count(g, cut)}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// J_m claims on an arbitrary labelled graph

inline ClaimReport check_lemma_a(const LabeledGraph& jm) {
    ClaimReport r = detail::jm_report(Claim::LemmaA, jm);
    const auto conn = connectivity(jm.graph);
    const VertexSet cut = conn.witness_cut.value_or(VertexSet{});
    json detail = detail::cut_json(jm.graph, cut);
    detail["kappa"] = conn.kappa;
    detail["names"] = detail::names_of(jm.labeling, cut);
    if (conn.kappa == 4 && !conn.complete())
        r.witness = detail;
    else
        detail::fail(r, detail);
    return r;
}

/// Classification of one size-4 cut-set.
struct LemmaBClass {
    bool isolates = false;  // some v in A u B outside S has N(v) inside S
    bool aligned = false;   // S = {a_i, a_j, b_i, b_j}
};

inline LemmaBClass classify_lemma_b_cut(const LabeledGraph& jm, VertexSet cut) {
    const auto& lab = jm.labeling;
    LemmaBClass out;
    for (int v : (lab.a_set() | lab.b_set()) - cut)
        if (jm.graph.neighbors(v).is_subset_of(cut)) out.isolates = true;
    const VertexSet in_a = cut & lab.a_set();
    const VertexSet in_b = cut & lab.b_set();
    if (in_a.size() == 2 && in_b.size() == 2 && (cut & lab.c_set()).empty()) {
        // a_i -> i-1 and b_i -> m+i-1, so alignment is a shift by m.
        out.aligned = VertexSet{in_b.bits() >> lab.m()} == in_a;
    }
    return out;
}

inline ClaimReport check_lemma_b(const LabeledGraph& jm) {
    ClaimReport r = detail::jm_report(Claim::LemmaB, jm);
    int isolating = 0;
    int aligned = 0;
    json nonconforming = json::array();
    const auto cuts = cutsets_of_size(jm.graph, 4);
    for (VertexSet cut : cuts) {
        const LemmaBClass c = classify_lemma_b_cut(jm, cut);
        if (c.isolates) {
            ++isolating;
        } else if (c.aligned) {
            ++aligned;
        } else {
            json ce = detail::cut_json(jm.graph, cut);
            ce["names"] = detail::names_of(jm.labeling, cut);
            nonconforming.push_back(ce);
        }
    }
    const json counts{{"cutsets", cuts.size()}, {"isolating", isolating}, {"aligned", aligned}};
    if (nonconforming.empty()) {
        r.witness = counts;
    } else {
        // The first (smallest) offending cut leads; the rest follow in order.
        json ce = nonconforming.front();
        ce["all_nonconforming"] = nonconforming;
        ce["counts"] = counts;
        detail::fail(r, ce);
    }
    return r;
}

/// The m-1 triangles covering J_m - {a_1, b_m}: {c_i, b_i, b_{i+1}} for odd
/// i and {c_i, a_i, a_{i+1}} for even i.
inline std::vector<VertexSet> lemma_c_triangles(const JmLabeling& lab) {
    std::vector<VertexSet> out;
    for (int i = 1; i <= lab.m() - 1; ++i) {
        if (i % 2 == 1)
            out.push_back(VertexSet::of({lab.c(i), lab.b(i), lab.b(i + 1)}));
        else
            out.push_back(VertexSet::of({lab.c(i), lab.a(i), lab.a(i + 1)}));
    }
    return out;
}

inline ClaimReport check_lemma_c_triangles(const LabeledGraph& jm) {
    ClaimReport r = detail::jm_report(Claim::LemmaCTriangles, jm);
    const auto& lab = jm.labeling;
    json listed = json::array();
    VertexSet covered;
    for (VertexSet t : lab.m() % 2 == 1 ? lemma_c_triangles(lab) : std::vector<VertexSet>{}) {
        listed.push_back(detail::names_of(lab, t));
        const auto v = t.to_vector();
        const bool triangle = jm.graph.adjacent(v[0], v[1]) && jm.graph.adjacent(v[0], v[2]) && jm.graph.adjacent(v[1], v[2]);
        if (!triangle) {
            detail::fail(r, json{{"triple", detail::names_of(lab, t)}, {"reason", "not a triangle"}});
            return r;
        }
        if (covered.intersects(t)) {
            detail::fail(r, json{{"triple", detail::names_of(lab, t)}, {"reason", "overlaps an earlier triangle"}});
            return r;
        }
        covered |= t;
    }
    const VertexSet target = jm.graph.vertices() - VertexSet::of({lab.a(1), lab.b(lab.m())});
    if (covered != target) {
        detail::fail(r, json{{"triangles", listed},
                             {"reason", "union differs from V - {a_1, b_m}"},
                             {"missing", detail::names_of(lab, target - covered)}});
        return r;
    }
    r.witness = json{{"triangles", listed}, {"uncovered", detail::names_of(lab, jm.graph.vertices() - covered)}};
    return r;
}

/// alpha = m - 1, together with the spanning-triangle argument.
inline ClaimReport check_lemma_c(const LabeledGraph& jm) {
    ClaimReport r = detail::jm_report(Claim::LemmaC, jm);
    const auto ind = independence_number(jm.graph);
    const json detail{{"alpha", ind.alpha},
                      {"independent_set", to_json(ind.witness)},
                      {"names", detail::names_of(jm.labeling, ind.witness)}};
    const ClaimReport triangles = check_lemma_c_triangles(jm);
    if (ind.alpha != jm.labeling.m() - 1) {
        detail::fail(r, detail);
    } else if (!triangles.passed()) {
        detail::fail(r, json{{"triangles", *triangles.counterexample}});
    } else {
        r.witness = detail;
    }
    return r;
}

inline ClaimReport check_theorem(const LabeledGraph& jm, SolverOptions solver = {}) {
    ClaimReport r = detail::jm_report(Claim::Theorem, jm);
    const auto cert = toughness(jm.graph, solver);
    json detail = toughness_json(cert);
    detail["names"] = detail::names_of(jm.labeling, cert.witness_cut);
    if (cert.value == Rational{2})
        r.witness = detail;
    else
        detail::fail(r, detail);
    return r;
}

inline ClaimReport check_claw_centers(const LabeledGraph& jm) {
    ClaimReport r = detail::jm_report(Claim::ClawCenters, jm);
    const VertexSet centers = claw_centers(jm.graph);
    const VertexSet x = jm.labeling.x_set();
    if (centers == x) {
        r.witness = json{{"centers", detail::names_of(jm.labeling, centers)}};
        return r;
    }
    // A vertex in one set but not the other, with a claw when it has one.
    json ce{{"centers", detail::names_of(jm.labeling, centers)}, {"expected", detail::names_of(jm.labeling, x)}};
    if (const VertexSet extra = centers - x; !extra.empty()) {
        const int v = extra.lowest();
        for_each_star_at(jm.graph, v, 3, [&](VertexSet leaves) {
            ce["claw"] = star_json({v, leaves});
            return false;
        });
    }
    detail::fail(r, ce);
    return r;
}

inline ClaimReport check_no_k14_at_x(const LabeledGraph& jm) {
    ClaimReport r = detail::jm_report(Claim::NoK14AtX, jm);
    for (int v : jm.labeling.x_set()) {
        std::optional<StarInstance> found;
        for_each_star_at(jm.graph, v, 4, [&](VertexSet leaves) {
            found = StarInstance{v, leaves};
            return false;
        });
        if (found) {
            json ce = star_json(*found);
            ce["names"] = detail::names_of(jm.labeling, found->leaves.with(v));
            detail::fail(r, ce);
            return r;
        }
    }
    r.witness = json{{"centers_checked", detail::names_of(jm.labeling, jm.labeling.x_set())}, {"k14_count", 0}};
    return r;
}

// ---------------------------------------------------------------------------
// J_m claims with their hypotheses enforced

inline bool claim_applies(Claim c, int m) {
    switch (c) {
        case Claim::LemmaA: return m >= 3;
        case Claim::LemmaB: return m >= 5;
        case Claim::LemmaC:
        case Claim::LemmaCTriangles:
        case Claim::Theorem: return m >= 3 && m % 2 == 1;
        case Claim::ClawCenters:
        case Claim::NoK14AtX: return m >= 4;
        default: return false;
    }
}

inline const char* hypothesis_text(Claim c) {
    switch (c) {
        case Claim::LemmaA: return "m >= 3";
        case Claim::LemmaB: return "m >= 5";
        case Claim::LemmaC:
        case Claim::LemmaCTriangles:
        case Claim::Theorem: return "m >= 3 and odd";
        case Claim::ClawCenters:
        case Claim::NoK14AtX: return "m >= 4";
        default: return "background claim, no m";
    }
}

inline void require_hypothesis(Claim c, int m) {
    if (!claim_applies(c, m))
        throw HypothesisError{std::string{to_string(c)} + " needs " + hypothesis_text(c) + ", got m = " + std::to_string(m)};
}

/// Runs one J_m claim. With `exploratory`, m outside the hypothesis is
/// allowed (J_m still needs m >= 3) and the report is marked as such.
inline ClaimReport verify_claim(Claim c, int m, SolverOptions solver = {}, bool exploratory = false) {
    const bool inside = claim_applies(c, m);
    if (!inside && !(exploratory && m >= 3)) require_hypothesis(c, m);
    const LabeledGraph jm = build_jm(m);
    ClaimReport r = [&] {
        switch (c) {
            case Claim::LemmaA: return check_lemma_a(jm);
            case Claim::LemmaB: return check_lemma_b(jm);
            case Claim::LemmaC: return check_lemma_c(jm);
            case Claim::LemmaCTriangles: return check_lemma_c_triangles(jm);
            case Claim::Theorem: return check_theorem(jm, solver);
            case Claim::ClawCenters: return check_claw_centers(jm);
            case Claim::NoK14AtX: return check_no_k14_at_x(jm);
            default: throw std::logic_error{"verify_claim: not a J_m claim"};
        }
    }();
    r.exploratory = !inside;
    return r;
}

inline ClaimReport verify_lemma_a(int m) { return verify_claim(Claim::LemmaA, m); }
inline ClaimReport verify_lemma_b(int m) { return verify_claim(Claim::LemmaB, m); }
inline ClaimReport verify_lemma_c(int m) { return verify_claim(Claim::LemmaC, m); }
inline ClaimReport verify_theorem(int m, SolverOptions solver = {}) { return verify_claim(Claim::Theorem, m, solver); }

/// Claw centres equal X and no induced K_{1,4} sits at X (one CLAW_CENTERS
/// report; the K_{1,4} part is also available as NO_K14_AT_X).
inline ClaimReport verify_claw_structure(int m) {
    require_hypothesis(Claim::ClawCenters, m);
    const LabeledGraph jm = build_jm(m);
    ClaimReport r = check_claw_centers(jm);
    const ClaimReport k14 = check_no_k14_at_x(jm);
    if (r.passed() && !k14.passed()) detail::fail(r, json{{"k14_at_x", *k14.counterexample}});
    return r;
}

// ---------------------------------------------------------------------------
// background

struct NamedGraph {
    std::string name;
    Graph graph;
    int cycle_power_k = 0;  // > 0 for C_n^k
};

/// Claw-free graphs for MS_CONSISTENCY, cycle powers, and J_m for the
/// ALPHA_BOUND sweep.
inline std::vector<NamedGraph> background_graphs() {
    std::vector<NamedGraph> out;
    out.push_back({"J_3", build_jm(3).graph});
    out.push_back({"C_8^2", cycle_power(8, 2), 2});
    out.push_back({"C_10^2", cycle_power(10, 2), 2});
    out.push_back({"C_9^3", cycle_power(9, 3), 3});
    out.push_back({"L(K_4)", line_graph(complete(4))});
    out.push_back({"L(K_3,3)", line_graph(complete_bipartite(3, 3))});
    out.push_back({"L(K_5)", line_graph(complete(5))});
    out.push_back({"L(petersen)", line_graph(petersen())});
    return out;
}

inline std::optional<int> regular_degree(const Graph& g) {
    const int r = g.degree(0);
    return g.is_regular(r) ? std::optional<int>{r} : std::nullopt;
}

inline ClaimReport check_ms_consistency(const NamedGraph& ng, const ToughnessCertificate& t) {
    ClaimReport r = detail::make_report(Claim::MsConsistency, json{{"graph", ng.name}});
    const auto conn = connectivity(ng.graph);
    const auto stars = induced_stars(ng.graph, 3);
    json detail{{"toughness", to_json(t.value)},
                {"kappa", conn.kappa},
                {"claw_free", stars.empty()},
                {"cut", to_json(t.witness_cut)},
                {"components", t.component_count}};
    if (!stars.empty()) detail["claw"] = star_json(stars.front());
    const bool ok = stars.empty() && !conn.complete() && is_connected(ng.graph) && t.value == Rational{conn.kappa, 2};
    if (ok)
        r.witness = detail;
    else
        detail::fail(r, detail);
    return r;
}

inline ClaimReport check_cycle_power(const NamedGraph& ng, const ToughnessCertificate& t) {
    ClaimReport r = detail::make_report(Claim::CyclePowerTough, json{{"graph", ng.name}});
    json detail = toughness_json(t);
    detail["k"] = ng.cycle_power_k;
    if (t.value == Rational{ng.cycle_power_k})
        r.witness = detail;
    else
        detail::fail(r, detail);
    return r;
}

/// nullopt unless g is regular and supertough.
inline std::optional<ClaimReport> check_alpha_bound(const std::string& name, const Graph& g, const ToughnessCertificate& t) {
    const auto r_deg = regular_degree(g);
    if (!r_deg || t.infinite() || t.value != Rational{*r_deg, 2}) return std::nullopt;
    ClaimReport r = detail::make_report(Claim::AlphaBound, json{{"graph", name}});
    const auto ind = independence_number(g);
    const Rational bound{2 * g.order(), *r_deg + 2};
    json detail{{"alpha", ind.alpha},
                {"independent_set", to_json(ind.witness)},
                {"n", g.order()},
                {"r", *r_deg},
                {"bound", to_json(bound)}};
    if (Rational{ind.alpha} <= bound)
        r.witness = detail;
    else
        detail::fail(r, detail);
    return r;
}

/// MS_CONSISTENCY on the claw-free fixtures, CYCLE_POWER_TOUGH on the cycle
/// powers, ALPHA_BOUND on every supertough graph among them and on J_m for
/// the odd m in `jm_values`.
inline std::vector<ClaimReport> verify_background(SolverOptions solver = {}, const std::vector<int>& jm_values = {3, 5, 7}) {
    std::vector<ClaimReport> out;
    for (const NamedGraph& ng : background_graphs()) {
        const auto t = toughness(ng.graph, solver);
        out.push_back(check_ms_consistency(ng, t));
        if (ng.cycle_power_k > 0) out.push_back(check_cycle_power(ng, t));
        if (auto a = check_alpha_bound(ng.name, ng.graph, t)) out.push_back(*a);
    }
    for (int m : jm_values) {
        if (m < 3 || m % 2 == 0 || m == 3) continue;  // J_3 is covered above
        const Graph g = build_jm(m).graph;
        if (auto a = check_alpha_bound("J_" + std::to_string(m), g, toughness(g, solver))) out.push_back(*a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// ledger

struct LedgerOptions {
    int m_min = 3;
    int m_max = 9;
    /// Highest m for toughness-dependent claims unless asked for explicitly.
    int toughness_ceiling = 7;
    bool odd_only = false;
    /// Empty: every claim. Naming a claim makes m outside its hypothesis an
    /// error (or an exploratory run).
    std::vector<Claim> claims;
    bool exploratory = false;
    SolverOptions solver;
};

inline std::vector<ClaimReport> run_ledger(const LedgerOptions& opt) {
    if (opt.m_min < 3 || opt.m_max < opt.m_min) throw std::invalid_argument{"ledger: need 3 <= m_min <= m_max"};
    const bool explicit_claims = !opt.claims.empty();
    auto wanted = [&](Claim c) {
        return !explicit_claims || std::find(opt.claims.begin(), opt.claims.end(), c) != opt.claims.end();
    };

    std::vector<int> ms;
    for (int m = opt.m_min; m <= opt.m_max; ++m)
        if (!opt.odd_only || m % 2 == 1) ms.push_back(m);

    std::vector<ClaimReport> out;
    for (Claim c : kJmClaims) {
        if (!wanted(c)) continue;
        for (int m : ms) {
            if (!claim_applies(c, m)) {
                if (!explicit_claims) continue;
                if (!opt.exploratory) require_hypothesis(c, m);
            }
            if (c == Claim::Theorem && !explicit_claims && m > opt.toughness_ceiling) continue;
            out.push_back(verify_claim(c, m, opt.solver, opt.exploratory));
        }
    }

    const bool any_background = std::any_of(std::begin(kBackgroundClaims), std::end(kBackgroundClaims), wanted);
    if (any_background) {
        std::vector<int> jm_values;
        for (int m : ms)
            if (m % 2 == 1 && m <= opt.toughness_ceiling) jm_values.push_back(m);
        for (ClaimReport& r : verify_background(opt.solver, jm_values))
            if (wanted(r.claim)) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace supertough

#endif  // SUPERTOUGH_VERIFY_HPP_
