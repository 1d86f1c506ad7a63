// Acceptance run: one line per criterion.
//
// Two criteria are expected to print FAIL. The lemma ledger fails because
// LEMMA_B as stated misses the twisted 4-cuts of J_m, and the census finds
// three supertough quartic graphs of order 10, not two. For those, the
// process still exits 0 when the failure is exactly the analysed one, so the
// ctest gate catches any other regression. Any other FAIL exits 1.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support/oracles.hpp"
#include "supertough/supertough.hpp"

using namespace supertough;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    /// For a FAIL: true iff the failure matches the recorded analysis.
    bool known_deviation = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome ac1_theorem() {
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(3);
    bool ok = true;
    for (int m : {3, 5, 7}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto cert = toughness(build_jm(m).graph);
        ok = ok && cert.value == Rational{2};
        d << "J_" << m << "=" << cert.value << " (" << seconds_since(t0) << "s) ";
    }
    return {ok, d.str()};
}

bool is_twisted(const JmLabeling& lab, VertexSet s) {
    const int m = lab.m();
    for (int i = 2; i <= m - 1; ++i)
        if (s == VertexSet::of({lab.a(i), lab.a(m), lab.b(1), lab.b(i)}) ||
            s == VertexSet::of({lab.a(1), lab.a(i), lab.b(i), lab.b(m)}))
            return true;
    return false;
}

Outcome ac2_lemmas() {
    std::ostringstream d;
    bool a_ok = true;
    for (int m = 3; m <= 9; ++m) a_ok = a_ok && verify_lemma_a(m).passed();
    bool c_ok = true;
    for (int m : {3, 5, 7}) c_ok = c_ok && verify_lemma_c(m).passed() && verify_claim(Claim::LemmaCTriangles, m).passed();
    bool b_ok = true;
    bool b_as_analysed = true;
    for (int m : {5, 6, 7}) {
        const auto r = verify_lemma_b(m);
        if (r.passed()) continue;
        b_ok = false;
        const LabeledGraph jm = build_jm(m);
        const json& all = r.counterexample->at("all_nonconforming");
        b_as_analysed = b_as_analysed && all.size() == static_cast<std::size_t>(2 * (m - 2));
        for (const json& c : all) {
            VertexSet s;
            for (int v : c["cut"]) s.insert(v);
            b_as_analysed = b_as_analysed && is_twisted(jm.labeling, s) && component_count(jm.graph, s) >= 2;
        }
        d << "LEMMA_B m=" << m << ": " << all.size() << " twisted cuts; ";
    }
    d << "LEMMA_A m=3..9 " << (a_ok ? "PASS" : "FAIL") << ", LEMMA_C m=3,5,7 " << (c_ok ? "PASS" : "FAIL");
    Outcome o{a_ok && b_ok && c_ok, d.str()};
    o.known_deviation = a_ok && c_ok && !b_ok && b_as_analysed;
    return o;
}

Outcome ac3_claws() {
    bool ok = true;
    for (int m = 4; m <= 7; ++m) ok = ok && verify_claw_structure(m).passed() && verify_claim(Claim::NoK14AtX, m).passed();
    return {ok, "claw centres = {a1,am,b1,bm}, no K_{1,4} at X, m=4..7"};
}

Outcome ac4_background() {
    int total = 0;
    int passed = 0;
    for (const auto& r : verify_background()) {
        ++total;
        passed += r.passed() ? 1 : 0;
    }
    const bool j3 = is_claw_free(build_jm(3).graph) && toughness(build_jm(3).graph).value == Rational{2};
    const bool c8 = toughness(cycle_power(8, 2)).value == Rational{2};
    const bool c10 = toughness(cycle_power(10, 2)).value == Rational{2};
    std::ostringstream d;
    d << passed << "/" << total << " background reports PASS";
    return {passed == total && j3 && c8 && c10, d.str()};
}

Outcome ac5_census() {
    std::ostringstream d;
    bool enumeration_ok = true;
    for (int n = 3; n <= 8; ++n)
        for (int r = 2; r <= 4 && r < n; ++r) {
            if ((n * r) % 2 != 0) continue;
            std::set<std::string> labelled;
            oracle::for_each_labeled_regular(n, r, [&](const Graph& g) {
                if (oracle::connected(g)) labelled.insert(canonical_form(g));
            });
            std::set<std::string> orderly;
            for (const Graph& g : enumerate_regular(n, r)) orderly.insert(serialize_graph6(g));
            enumeration_ok = enumeration_ok && labelled == orderly;
        }
    d << "enumeration vs labelled oracle n<=8: " << (enumeration_ok ? "agree" : "DISAGREE") << "; ";
    if (!enumeration_ok) return {false, d.str()};

    const auto result = run_census({10, 4, Source::BuiltinEnumeration, {Predicate::Connected, Predicate::Supertough}});
    int with_claws = 0;
    bool all_confirmed = true;
    bool has_c10 = false;
    const std::string c10 = canonical_form(cycle_power(10, 2));
    for (const auto& s : result.survivors) {
        if (!s.claw_centers.empty()) ++with_claws;
        const auto brute = oracle::toughness(s.graph);
        all_confirmed = all_confirmed && brute.value.num == 2 && brute.value.den == 1;
        if (s.canonical_graph6 == c10) has_c10 = true;
    }
    d << result.examined << " classes, " << result.survivors.size() << " supertough (" << with_claws
      << " with claws" << (has_c10 ? ", plus C_10^2" : "") << "); expected exactly 2";
    Outcome o{result.survivors.size() == 2, d.str()};
    o.known_deviation = result.examined == 59 && result.survivors.size() == 3 && with_claws == 2 && has_c10 && all_confirmed;
    return o;
}

Outcome ac6_oracle() {
    std::mt19937_64 rng{20240601};
    int agree = 0;
    int total = 0;
    auto check = [&](const Graph& g) {
        ++total;
        if (toughness(g) == toughness_oracle(g)) ++agree;
    };
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 8);
        check(random_connected_graph(n, 0.15 + 0.6 * unit_draw(rng), rng));
    }
    check(build_jm(3).graph);
    check(build_jm(5).graph);
    check(petersen());
    check(cycle_power(8, 2));
    std::ostringstream d;
    d << agree << "/" << total << " agree on value and witness";
    return {agree == total, d.str()};
}

Outcome ac7_roundtrip() {
    std::mt19937_64 rng{77};
    int ok = 0;
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const Graph g = oracle::random_graph(n, unit_draw(rng), rng);
        const std::string s = serialize_graph6(g);
        if (parse_graph6(s) == g && serialize_graph6(parse_graph6(s)) == s) ++ok;
    }
    const bool k3 = serialize_graph6(complete(3)) == "Bw" && parse_graph6("Bw") == complete(3);
    std::ostringstream d;
    d << ok << "/500 round-trip, K_3 <-> \"Bw\" " << (k3 ? "ok" : "MISMATCH");
    return {ok == 500 && k3, d.str()};
}

Outcome ac8_determinism() {
    auto ledger = [](const std::string& workers) {
        std::ostringstream out;
        std::ostringstream err;
        std::istringstream in;
        cli::run_cli({"verify", "--m", "3..7", "--workers", workers}, out, err, in);
        return out.str();
    };
    const std::string one = ledger("1");
    const std::string eight = ledger("8");
    const std::string again = ledger("1");
    std::ostringstream d;
    d << one.size() << " bytes, workers 1 vs 8 " << (one == eight ? "identical" : "DIFFER");
    return {!one.empty() && one == eight && one == again, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"AC1 theorem toughness(J_m)=2", ac1_theorem},
        {"AC2 lemma ledger", ac2_lemmas},
        {"AC3 claw structure", ac3_claws},
        {"AC4 background", ac4_background},
        {"AC5 order-10 census", ac5_census},
        {"AC6 oracle equivalence", ac6_oracle},
        {"AC7 graph6 round-trip", ac7_roundtrip},
        {"AC8 determinism", ac8_determinism},
    };
    int unexpected = 0;
    int known = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string{"exception: "} + e.what()};
        }
        const char* tag = o.pass ? "PASS" : "FAIL";
        std::printf("%-32s %s  %s  [%.2fs]%s\n", name, tag, o.detail.c_str(), seconds_since(t0),
                    !o.pass && o.known_deviation ? "  (known deviation, see README)" : "");
        if (!o.pass) (o.known_deviation ? known : unexpected) += 1;
    }
    std::printf("summary: %zu criteria, %d unexpected failure(s), %d known deviation(s)\n", criteria.size(), unexpected,
                known);
    std::fflush(stdout);
    return unexpected == 0 ? 0 : 1;
}
