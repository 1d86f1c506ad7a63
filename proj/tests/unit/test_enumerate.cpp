#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "supertough/canonical.hpp"
#include "supertough/enumerate.hpp"
#include "supertough/generators.hpp"

using namespace supertough;

namespace {

std::set<std::string> oracle_classes(int n, int r) {
    std::set<std::string> forms;
    oracle::for_each_labeled_regular(n, r, [&](const Graph& g) {
        if (oracle::connected(g)) forms.insert(canonical_form(g));
    });
    return forms;
}

std::set<std::string> orderly_classes(int n, int r) {
    std::set<std::string> forms;
    for (const Graph& g : enumerate_regular(n, r)) {
        EXPECT_TRUE(g.is_regular(r));
        EXPECT_TRUE(is_connected(g));
        EXPECT_EQ(serialize_graph6(g), canonical_form(g));  // emitted canonically labelled
        EXPECT_TRUE(forms.insert(serialize_graph6(g)).second) << "duplicate class";
    }
    return forms;
}

}  // namespace

TEST(Enumerate, SpecExamples) {
    const auto k5 = enumerate_regular(5, 4);
    ASSERT_EQ(k5.size(), 1U);
    EXPECT_TRUE(k5[0].is_complete());

    const auto octahedron = enumerate_regular(6, 4);
    ASSERT_EQ(octahedron.size(), 1U);
    EXPECT_EQ(canonical_form(octahedron[0]), canonical_form(line_graph(complete(4))));
}

// Class counts of connected r-regular graphs, frozen from the labelled oracle
// below (and matching the standard published tables).
TEST(Enumerate, FrozenClassCounts) {
    const std::vector<std::pair<std::pair<int, int>, std::size_t>> table = {
        {{4, 3}, 1},  {{6, 3}, 2},  {{8, 3}, 5},  {{10, 3}, 19}, {{12, 3}, 85}, {{5, 4}, 1},   {{6, 4}, 1},
        {{7, 4}, 2},  {{8, 4}, 6},  {{9, 4}, 16}, {{10, 4}, 59}, {{11, 4}, 265}, {{12, 4}, 1544},
        {{7, 2}, 1},  {{12, 2}, 1}};
    for (const auto& [nr, count] : table) EXPECT_EQ(enumerate_regular(nr.first, nr.second).size(), count) << nr.first << "," << nr.second;
}

TEST(Enumerate, AgreesWithLabelledOracleUpToEight) {
    for (int n = 3; n <= 8; ++n)
        for (int r = 2; r <= 4 && r < n; ++r) {
            if ((n * r) % 2 != 0) continue;
            EXPECT_EQ(orderly_classes(n, r), oracle_classes(n, r)) << "n=" << n << " r=" << r;
        }
}

TEST(Enumerate, Parameters) {
    EXPECT_THROW(enumerate_regular(5, 3), std::invalid_argument);
    EXPECT_THROW(enumerate_regular(4, 4), std::invalid_argument);
    EXPECT_THROW(enumerate_regular(13, 4), EnvelopeError);
    EXPECT_THROW(enumerate_regular(12, 5), EnvelopeError);
    EXPECT_EQ(enumerate_regular(1, 0).size(), 1U);
    EXPECT_TRUE(enumerate_regular(4, 0).empty());  // edgeless and disconnected
}

TEST(Enumerate, StatsCount) {
    long emitted = 0;
    const auto stats = for_each_regular(8, 3, [&](const Graph&) { ++emitted; });
    EXPECT_EQ(emitted, 5);
    EXPECT_GT(stats.canonicity_tests, stats.nodes - 1);
}
