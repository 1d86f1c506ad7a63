#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "supertough/canonical.hpp"
#include "supertough/generators.hpp"

using namespace supertough;

TEST(Canonical, SpecExamples) {
    const Graph c5 = cycle(5);
    const Graph shuffled = c5.relabeled({3, 0, 4, 1, 2});
    EXPECT_EQ(canonical_form(c5), canonical_form(shuffled));

    const Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    EXPECT_NE(canonical_form(cycle(6)), canonical_form(two_triangles));
}

// Petersen has girth 5; a 3-regular order-10 graph containing a triangle or
// 4-cycle cannot be isomorphic to it.
TEST(Canonical, PetersenVersusOtherCubic) {
    std::mt19937_64 rng{11};
    int checked = 0;
    for (int attempt = 0; attempt < 2000 && checked < 5; ++attempt) {
        const Graph g = oracle::random_graph(10, 0.33, rng);
        if (!g.is_regular(3)) continue;
        if (oracle::girth(g) == 5) continue;
        EXPECT_NE(canonical_form(g), canonical_form(petersen()));
        ++checked;
    }
    EXPECT_EQ(oracle::girth(petersen()), 5);
    // Prism C_5 x K_2 is cubic with girth 4.
    const Graph prism = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5},
                                               {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    EXPECT_EQ(oracle::girth(prism), 4);
    EXPECT_NE(canonical_form(prism), canonical_form(petersen()));
}

TEST(Canonical, InvariantUnderRelabelling) {
    std::mt19937_64 rng{3};
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(n, unit_draw(rng), rng);
        const Graph h = g.relabeled(oracle::random_permutation(n, rng));
        EXPECT_EQ(canonical_form(g), canonical_form(h)) << serialize_graph6(g);
        EXPECT_TRUE(is_canonical(canonical_graph(g)));
    }
}

// Two graphs get the same form exactly when a brute-force canonical string
// says they are isomorphic.
TEST(Canonical, SeparatesExactlyTheIsomorphismClasses) {
    std::mt19937_64 rng{17};
    std::vector<Graph> pool;
    for (int i = 0; i < 60; ++i) pool.push_back(oracle::random_graph(6, 0.5, rng));
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const bool iso = oracle::brute_canonical(pool[i]) == oracle::brute_canonical(pool[j]);
            EXPECT_EQ(canonical_form(pool[i]) == canonical_form(pool[j]), iso);
        }
}

TEST(Canonical, LabelingIsAPermutation) {
    const auto perm = canonical_labeling(petersen());
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 10; ++i) EXPECT_EQ(sorted[static_cast<std::size_t>(i)], i);
    EXPECT_EQ(canonical_graph(petersen()), petersen().relabeled(perm));
}

TEST(Canonical, Envelope) {
    EXPECT_THROW(canonical_form(cycle(17)), EnvelopeError);
    EXPECT_NO_THROW(canonical_form(cycle(16)));
}
