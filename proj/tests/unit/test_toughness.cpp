#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "supertough/connectivity.hpp"
#include "supertough/generators.hpp"
#include "supertough/toughness.hpp"

using namespace supertough;

namespace {

Rational to_rational(const oracle::Fraction& f) { return f.den == 0 ? Rational::infinite() : Rational{f.num, f.den}; }

void expect_certificate_consistent(const Graph& g, const ToughnessCertificate& c) {
    if (c.infinite()) {
        EXPECT_TRUE(g.is_complete());
        return;
    }
    const int k = component_count(g, c.witness_cut);
    EXPECT_EQ(k, c.component_count);
    EXPECT_GE(k, 2);
    EXPECT_EQ(Rational(c.witness_cut.size(), k), c.value);
}

}  // namespace

TEST(Toughness, SpecExamples) {
    const auto claw = toughness(star(3));
    EXPECT_EQ(claw.value, Rational(1, 3));
    EXPECT_EQ(claw.witness_cut, VertexSet::of({0}));
    EXPECT_EQ(claw.component_count, 3);

    const LabeledGraph j5 = build_jm(5);
    const auto t = toughness(j5.graph);
    EXPECT_EQ(t.value, Rational{2});
    const auto& lab = j5.labeling;
    EXPECT_EQ(t.witness_cut, VertexSet::of({lab.a(1), lab.a(2), lab.b(1), lab.b(2)}));
    EXPECT_EQ(t.component_count, 2);

    EXPECT_EQ(toughness(petersen()).value, Rational(4, 3));
}

TEST(Toughness, PetersenFrozenFromOracle) {
    const auto brute = oracle::toughness(petersen());
    EXPECT_EQ(brute.value.num, 4);
    EXPECT_EQ(brute.value.den, 3);
    const auto fast = toughness(petersen());
    EXPECT_EQ(fast.witness_cut.bits(), brute.witness);
    expect_certificate_consistent(petersen(), fast);
}

TEST(Toughness, Conventions) {
    const auto k4 = toughness(complete(4));
    EXPECT_TRUE(k4.infinite());
    EXPECT_EQ(k4, ToughnessCertificate::complete_graph());
    EXPECT_TRUE(toughness(Graph::from_edges(1, {})).infinite());

    const auto split = toughness(Graph::from_edges(5, {{0, 1}, {2, 3}}));
    EXPECT_EQ(split.value, Rational{0});
    EXPECT_TRUE(split.witness_cut.empty());
    EXPECT_EQ(split.component_count, 3);
}

TEST(Toughness, SmallFamilies) {
    EXPECT_EQ(toughness(cycle(6)).value, Rational{1});
    EXPECT_EQ(toughness(path(5)).value, Rational(1, 2));
    EXPECT_EQ(toughness(cycle_power(8, 2)).value, Rational{2});
    EXPECT_EQ(toughness(cycle_power(10, 2)).value, Rational{2});
    EXPECT_EQ(toughness(complete_bipartite(2, 5)).value, Rational(2, 5));
}

TEST(Toughness, Envelope) {
    EXPECT_THROW(toughness(cycle(31)), EnvelopeError);
    EXPECT_THROW(toughness_oracle(cycle(23)), EnvelopeError);
    EXPECT_NO_THROW(toughness(cycle(30)));
}

TEST(Toughness, WorkerCountDoesNotChangeResult) {
    const Graph g = build_jm(5).graph;
    const auto one = toughness(g, SolverOptions{1});
    for (unsigned w : {2U, 3U, 8U}) EXPECT_EQ(toughness(g, SolverOptions{w}), one) << w;
}

TEST(Toughness, OracleMatchesBruteForceReference) {
    std::mt19937_64 rng{31};
    for (int i = 0; i < 60; ++i) {
        const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 8), 0.5, rng);
        const auto lib = toughness_oracle(g);
        const auto ref = oracle::toughness(g);
        EXPECT_EQ(lib.value, to_rational(ref.value)) << serialize_graph6(g);
        if (ref.value.den != 0 && ref.value.num != 0) EXPECT_EQ(lib.witness_cut.bits(), ref.witness);
    }
}

TEST(IsTTough, SpecExamples) {
    EXPECT_TRUE(is_t_tough(cycle(6), Rational{1}).tough);
    EXPECT_TRUE(is_t_tough(build_jm(7).graph, Rational{2}).tough);
    const auto claw = is_t_tough(star(3), Rational(1, 2));
    EXPECT_FALSE(claw.tough);
    ASSERT_TRUE(claw.violation);
    EXPECT_EQ(claw.violation->witness_cut, VertexSet::of({0}));
}

TEST(IsTTough, Arguments) {
    EXPECT_THROW(is_t_tough(cycle(5), Rational::infinite()), std::invalid_argument);
    EXPECT_THROW(is_t_tough(cycle(5), Rational{-1}), std::invalid_argument);
    EXPECT_TRUE(is_t_tough(complete(5), Rational{1000}).tough);
    EXPECT_TRUE(is_t_tough(Graph::from_edges(3, {}), Rational{0}).tough);
    EXPECT_FALSE(is_t_tough(Graph::from_edges(3, {}), Rational(1, 100)).tough);
}

// The violation is the smallest-mask cut below t, not necessarily the minimiser.
TEST(IsTTough, ViolationIsValid) {
    const Graph g = build_jm(5).graph;
    const auto d = is_t_tough(g, Rational(9, 4));
    ASSERT_FALSE(d.tough);
    ASSERT_TRUE(d.violation);
    expect_certificate_consistent(g, *d.violation);
    EXPECT_LT(d.violation->value, Rational(9, 4));
}

TEST(IsTTough, KnownJmValues) {
    for (int m : {3, 5, 7}) {
        const Graph g = build_jm(m).graph;
        EXPECT_TRUE(is_t_tough(g, Rational{2}).tough) << m;
        EXPECT_FALSE(is_t_tough(g, Rational(2 * 7 + 1, 7)).tough) << m;
    }
}
