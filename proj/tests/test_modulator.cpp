#include "firefight/modulator.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace firefight;

namespace {

TEST(FindModulator, PathToCluster) {
    auto m = find_modulator(oracle::path_graph(3), ClassTag::cluster, 1);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->vertices.size(), 1U);
    EXPECT_TRUE(verify_modulator(oracle::path_graph(3), *m));
    EXPECT_FALSE(find_modulator(oracle::path_graph(5), ClassTag::cluster, 0));
}

TEST(FindModulator, CycleToThreshold) {
    auto c4 = oracle::cycle_graph(4);
    auto m = find_modulator(c4, ClassTag::threshold, 1);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->vertices.size(), 1U);
    EXPECT_TRUE(verify_modulator(c4, *m));
    EXPECT_FALSE(verify_modulator(c4, Modulator{{}, ClassTag::threshold, 1}));
}

TEST(FindModulator, UnsupportedClass) {
    EXPECT_THROW(find_modulator(oracle::path_graph(3), ClassTag::diameter2_components, 1), InputError);
    EXPECT_THROW(find_modulator(oracle::path_graph(3), ClassTag::cluster, -1), InputError);
}

TEST(FindCliqueModulator, Examples) {
    auto k5 = find_clique_modulator(oracle::complete_graph(5), 0);
    ASSERT_TRUE(k5);
    EXPECT_TRUE(k5->vertices.empty());
    auto p3 = find_clique_modulator(oracle::path_graph(3), 1);
    ASSERT_TRUE(p3);
    ASSERT_EQ(p3->vertices.size(), 1U);
    EXPECT_NE(p3->vertices[0], 1);  // removing the middle leaves two non-adjacent ends
    EXPECT_FALSE(find_clique_modulator(Graph(4), 2));
}

TEST(FindModulator, MatchesSubsetBruteForce) {
    std::mt19937_64 rng(31);
    const ClassTag tags[] = {ClassTag::cluster, ClassTag::threshold, ClassTag::star_forest, ClassTag::split,
                             ClassTag::clique};
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        auto g = oracle::random_graph(n, 0.45, rng);
        for (ClassTag tag : tags) {
            int expect = oracle::min_deletion_brute(g, tag, n);
            auto m = find_modulator(g, tag, n);
            ASSERT_TRUE(m);
            EXPECT_EQ(static_cast<int>(m->vertices.size()), expect) << to_string(tag);
            EXPECT_TRUE(verify_modulator(g, *m));
            if (expect > 0) {
                EXPECT_FALSE(find_modulator(g, tag, expect - 1));
                // tamper: dropping one vertex from a minimum modulator breaks it
                auto tampered = *m;
                tampered.vertices.erase(tampered.vertices.begin() + static_cast<long>(rng() % tampered.vertices.size()));
                EXPECT_FALSE(verify_modulator(g, tampered));
            }
        }
    }
}

TEST(FindModulator, Deterministic) {
    std::mt19937_64 rng(4);
    auto g = oracle::random_graph(9, 0.5, rng);
    EXPECT_EQ(find_modulator(g, ClassTag::split, 9), find_modulator(g, ClassTag::split, 9));
}

} // namespace
