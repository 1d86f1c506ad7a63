#include <gtest/gtest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "supertough/cutsets.hpp"
#include "supertough/generators.hpp"
#include "supertough/stars.hpp"

using namespace supertough;

TEST(Stars, SpecExamples) {
    const auto claws = induced_stars(star(3), 3);
    ASSERT_EQ(claws.size(), 1U);
    EXPECT_EQ(claws[0].center, 0);
    EXPECT_EQ(claws[0].leaves, VertexSet::of({1, 2, 3}));
    EXPECT_TRUE(induced_stars(build_jm(3).graph, 3).empty());
    EXPECT_THROW(induced_stars(star(3), 1), std::invalid_argument);
}

TEST(Stars, NoK14AtX) {
    const LabeledGraph jm = build_jm(5);
    for (int v : jm.labeling.x_set()) EXPECT_FALSE(is_star_center(jm.graph, v, 4)) << jm.labeling.name(v);
}

TEST(ClawCenters, Examples) {
    const LabeledGraph j6 = build_jm(6);
    EXPECT_EQ(claw_centers(j6.graph), VertexSet::of({j6.labeling.a(1), j6.labeling.a(6), j6.labeling.b(1), j6.labeling.b(6)}));
    EXPECT_TRUE(claw_centers(cycle(9)).empty());
    EXPECT_EQ(claw_centers(star(4)), VertexSet::of({0}));
    EXPECT_EQ(claw_centers(petersen()), petersen().vertices());
}

TEST(ClawCenters, AgreeWithOracle) {
    std::mt19937_64 rng{5};
    for (int i = 0; i < 150; ++i) {
        const Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 8), unit_draw(rng), rng);
        EXPECT_EQ(claw_centers(g).to_vector(), oracle::claw_centers(g)) << serialize_graph6(g);
    }
}

TEST(ForEachStar, StopsEarly) {
    int calls = 0;
    for_each_star_at(star(6), 0, 3, [&](VertexSet) { return ++calls < 2; });
    EXPECT_EQ(calls, 2);
}

TEST(Cutsets, Examples) {
    for (int s = 1; s <= 3; ++s) EXPECT_TRUE(cutsets_of_size(complete(4), s).empty());
    const auto c5 = cutsets_of_size(cycle(5), 2);
    ASSERT_EQ(c5.size(), 5U);
    for (VertexSet s : c5) {
        const auto v = s.to_vector();
        EXPECT_FALSE(cycle(5).adjacent(v[0], v[1]));
    }
    EXPECT_THROW(cutsets_of_size(cycle(5), 0), std::invalid_argument);
    // Ascending word order.
    EXPECT_TRUE(std::is_sorted(c5.begin(), c5.end()));
}

TEST(Cutsets, MatchesDefinition) {
    const Graph g = petersen();
    const auto threes = cutsets_of_size(g, 3);
    int expected = 0;
    for_each_subset_of_size(10, 3, [&](VertexSet s) {
        if (component_count(g, s) >= 2) ++expected;
        return true;
    });
    EXPECT_EQ(static_cast<int>(threes.size()), expected);
    for (int v = 0; v < 10; ++v)
        EXPECT_NE(std::find(threes.begin(), threes.end(), g.neighbors(v)), threes.end());
}
