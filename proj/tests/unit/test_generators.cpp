#include <gtest/gtest.h>

#include "supertough/generators.hpp"
#include "supertough/stars.hpp"

using namespace supertough;

TEST(Jm, OrderSizeAndRegularity) {
    for (int m = 3; m <= 21; ++m) {
        const LabeledGraph jm = build_jm(m);
        EXPECT_EQ(jm.graph.order(), 3 * m - 1);
        EXPECT_EQ(jm.graph.edge_count(), 2 * (3 * m - 1));
        EXPECT_TRUE(jm.graph.is_regular(4)) << m;
    }
    EXPECT_EQ(build_jm(5).graph.edge_count(), 28);
}

TEST(Jm, Envelope) {
    EXPECT_THROW(build_jm(2), std::invalid_argument);
    EXPECT_NO_THROW(build_jm(21));  // 62 vertices
    EXPECT_THROW(build_jm(22), EnvelopeError);
}

TEST(Jm, RoleConvention) {
    const JmLabeling lab{5};
    EXPECT_EQ(lab.a(1), 0);
    EXPECT_EQ(lab.b(1), 5);
    EXPECT_EQ(lab.c(1), 10);
    EXPECT_EQ(lab.c(4), 13);
    EXPECT_EQ(lab.name(0), "a1");
    EXPECT_EQ(lab.name(9), "b5");
    EXPECT_EQ(lab.name(13), "c4");
    EXPECT_THROW(lab.c(5), std::out_of_range);
    EXPECT_EQ(lab.x_set(), VertexSet::of({0, 4, 5, 9}));
}

TEST(Jm, Adjacency) {
    const LabeledGraph jm = build_jm(5);
    const auto& lab = jm.labeling;
    const auto& g = jm.graph;
    for (int i = 1; i <= 4; ++i) {
        EXPECT_EQ(g.neighbors(lab.c(i)), VertexSet::of({lab.a(i), lab.a(i + 1), lab.b(i), lab.b(i + 1)}));
        EXPECT_TRUE(g.adjacent(lab.a(i), lab.a(i + 1)));
        EXPECT_TRUE(g.adjacent(lab.b(i), lab.b(i + 1)));
    }
    EXPECT_TRUE(g.adjacent(lab.a(5), lab.a(1)));
    EXPECT_TRUE(g.adjacent(lab.a(1), lab.b(1)));
    EXPECT_TRUE(g.adjacent(lab.a(5), lab.b(5)));
    EXPECT_FALSE(g.adjacent(lab.a(2), lab.b(2)));
}

TEST(Jm, SmallestCaseIsClawFree) { EXPECT_TRUE(is_claw_free(build_jm(3).graph)); }

TEST(Jm, ClawCentersAtFour) {
    const LabeledGraph jm = build_jm(4);
    EXPECT_EQ(claw_centers(jm.graph), jm.labeling.x_set());
}

TEST(CyclePower, Shapes) {
    EXPECT_TRUE(cycle_power(8, 2).is_regular(4));
    EXPECT_EQ(cycle_power(5, 1), cycle(5));
    EXPECT_EQ(cycle_power(7, 3), complete(7));
    EXPECT_THROW(cycle_power(6, 3), std::invalid_argument);
    EXPECT_THROW(cycle_power(6, 0), std::invalid_argument);
}

TEST(Fixtures, Shapes) {
    EXPECT_EQ(path(4).edge_count(), 3);
    EXPECT_EQ(complete(5).edge_count(), 10);
    EXPECT_EQ(star(3).degree(0), 3);
    EXPECT_EQ(star(3).order(), 4);
    EXPECT_TRUE(petersen().is_regular(3));
    EXPECT_EQ(petersen().edge_count(), 15);
    EXPECT_EQ(complete_bipartite(3, 3).edge_count(), 9);
    EXPECT_TRUE(line_graph(complete(4)).is_regular(4));
    EXPECT_EQ(line_graph(petersen()).order(), 15);
}

TEST(Random, SeededAndConnected) {
    std::mt19937_64 a{7};
    std::mt19937_64 b{7};
    for (int i = 0; i < 20; ++i) {
        const Graph g = random_connected_graph(9, 0.3, a);
        EXPECT_EQ(g, random_connected_graph(9, 0.3, b));
        EXPECT_TRUE(is_connected(g));
    }
}
