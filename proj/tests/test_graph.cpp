#include "firefight/classes.hpp"
#include "firefight/instance.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace firefight;

namespace {

TEST(ParseInstance, MinimalFile) {
    auto inst = parse_instance("p ff 3 2\ne 1 2\ne 2 3\ns 1\n");
    EXPECT_EQ(inst.graph.n(), 3);
    EXPECT_EQ(inst.graph.m(), 2);
    EXPECT_EQ(inst.source, 0);
    EXPECT_TRUE(inst.graph.adjacent(0, 1));
    EXPECT_TRUE(inst.graph.adjacent(1, 2));
    EXPECT_FALSE(inst.graph.adjacent(0, 2));
    EXPECT_FALSE(inst.modulator);
}

TEST(ParseInstance, OptionalRecordsAndComments) {
    auto inst = parse_instance("# a comment\np ff 4 1\ne 1 4\ns 4\nx 2 1\nc threshold\nk 3\n");
    ASSERT_TRUE(inst.modulator);
    EXPECT_EQ(*inst.modulator, (VertexList{0, 1}));
    EXPECT_EQ(inst.class_tag, ClassTag::threshold);
    EXPECT_EQ(inst.demand, 3);
    EXPECT_EQ(inst.source, 3);
}

TEST(ParseInstance, Errors) {
    EXPECT_THROW(parse_instance("p ff 3 2\ne 1 2\ne 2 3\ns 9\n"), InputError);
    EXPECT_THROW(parse_instance("p ff 3 2\ne 1 2\ne 2 3\n"), InputError);  // no source
    EXPECT_THROW(parse_instance("p ff 3 2\ne 1 2\ne 2 1\ns 1\n"), InputError);  // duplicate
    EXPECT_THROW(parse_instance("p ff 3 1\ne 1 1\ns 1\n"), InputError);  // self-loop
    EXPECT_THROW(parse_instance("p ff 3 1\ne 1 x\ns 1\n"), InputError);  // malformed
    EXPECT_THROW(parse_instance("p ff 3 2\ne 1 2\ns 1\n"), InputError);  // edge count
    EXPECT_THROW(parse_instance("e 1 2\np ff 3 1\ns 1\n"), InputError);  // before header
    EXPECT_THROW(parse_instance("p ff 3 0\ns 1\nc pentagon\n"), InputError);
    EXPECT_THROW(parse_instance("p ff 3 0\ns 1\nq 1\n"), InputError);
}

TEST(ParseInstance, RoundTripOverRandomInstances) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 15);
        Instance inst;
        inst.graph = oracle::random_graph(n, 0.3, rng);
        inst.source = static_cast<Vertex>(rng() % n);
        if (trial % 2) {
            VertexList xs;
            for (Vertex v = 0; v < n; ++v)
                if (rng() % 3 == 0)
                    xs.push_back(v);
            inst.modulator = xs;
            inst.class_tag = kAllClassTags[trial % kAllClassTags.size()];
        }
        if (trial % 3 == 0)
            inst.demand = static_cast<int>(rng() % 10);
        std::string text = serialize_instance(inst);
        Instance back = parse_instance(text);
        EXPECT_EQ(back, inst);
        EXPECT_EQ(serialize_instance(back), text);
    }
}

TEST(Bfs, PathAndClique) {
    auto p3 = oracle::path_graph(3);
    EXPECT_EQ(bfs_distances(p3, 0), (std::vector<int>{0, 1, 2}));
    auto blocked = bfs_distances(p3, 0, VertexList{1});
    EXPECT_EQ(blocked[0], 0);
    EXPECT_EQ(blocked[2], kUnreachable);
    auto k4 = oracle::complete_graph(4);
    EXPECT_EQ(bfs_distances(k4, 2), (std::vector<int>{1, 1, 0, 1}));
}

TEST(Bfs, EdgeDistancesDifferByAtMostOne) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_graph(12, 0.25, rng);
        auto d = bfs_distances(g, 0);
        for (auto [u, v] : g.edges()) {
            if (d[u] == kUnreachable || d[v] == kUnreachable) {
                EXPECT_EQ(d[u], d[v]);
                continue;
            }
            EXPECT_LE(std::abs(d[u] - d[v]), 1);
        }
    }
}

TEST(Component, Cases) {
    auto p4 = oracle::path_graph(4);
    EXPECT_EQ(connected_component_of(Graph(1), 0), (VertexList{0}));
    EXPECT_EQ(connected_component_of(p4, 0), (VertexList{0, 1, 2, 3}));
    EXPECT_EQ(connected_component_of(p4, 0, VertexList{2}), (VertexList{0, 1}));
}

TEST(LongestInducedPath, Examples) {
    EXPECT_EQ(longest_induced_path_from(oracle::path_graph(4), 0), 3);
    EXPECT_EQ(longest_induced_path_from(oracle::complete_graph(5), 2), 1);
    for (Vertex v = 0; v < 5; ++v)
        EXPECT_EQ(longest_induced_path_from(oracle::cycle_graph(5), v), oracle::longest_induced_path_brute(oracle::cycle_graph(5), v));
    EXPECT_EQ(longest_induced_path_from(oracle::cycle_graph(5), 0), 3);
    EXPECT_THROW(longest_induced_path_from(Graph(30), 0), SizeGuardError);
    EXPECT_NO_THROW(longest_induced_path_from(Graph(30), 0, 40));
}

TEST(LongestInducedPath, MatchesBruteForce) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto g = oracle::random_graph(n, 0.4, rng);
        Vertex s = static_cast<Vertex>(rng() % n);
        int got = longest_induced_path_from(g, s);
        EXPECT_EQ(got, oracle::longest_induced_path_brute(g, s));
        EXPECT_LE(got, n - 1);
    }
    EXPECT_EQ(longest_induced_path_from(oracle::path_graph(9), 0), 8);
}

TEST(Recognize, Examples) {
    auto k13 = oracle::make(4, {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_TRUE(recognize(k13, ClassTag::star_forest));
    EXPECT_FALSE(recognize(k13, ClassTag::cluster));
    EXPECT_FALSE(recognize(oracle::cycle_graph(4), ClassTag::threshold));
    EXPECT_TRUE(recognize(oracle::path_graph(3), ClassTag::threshold));
    for (int n = 1; n <= 6; ++n) {
        auto k = oracle::complete_graph(n);
        EXPECT_TRUE(recognize(k, ClassTag::split));
        EXPECT_TRUE(recognize(k, ClassTag::cluster));
        EXPECT_TRUE(recognize(k, ClassTag::threshold));
        EXPECT_TRUE(recognize(k, ClassTag::clique));
    }
    EXPECT_TRUE(recognize(oracle::cycle_graph(5), ClassTag::diameter2_components));
    EXPECT_FALSE(recognize(oracle::cycle_graph(6), ClassTag::diameter2_components));
}

TEST(Recognize, AgreesWithForbiddenSubgraphs) {
    std::mt19937_64 rng(5);
    const ClassTag tags[] = {ClassTag::cluster, ClassTag::threshold, ClassTag::split, ClassTag::star_forest,
                             ClassTag::clique};
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
        auto g = oracle::random_graph(n, p, rng);
        for (ClassTag tag : tags)
            EXPECT_EQ(recognize(g, tag), !oracle::has_induced(g, oracle::forbidden_for(tag)))
                << to_string(tag) << " trial " << trial;
    }
}

TEST(ThresholdSplit, PartitionIsCliqueAndIndependent) {
    auto g = oracle::make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {0, 4}});
    auto split = threshold_split(g);
    ASSERT_TRUE(split);
    for (Vertex a : split->clique)
        for (Vertex b : split->clique)
            if (a != b)
                EXPECT_TRUE(g.adjacent(a, b));
    for (Vertex a : split->independent)
        for (Vertex b : split->independent)
            EXPECT_FALSE(g.adjacent(a, b));
    EXPECT_FALSE(threshold_split(oracle::path_graph(4)));
}

TEST(TwinClasses, FalseAndTrueTwins) {
    // 0 is joined to 1,2 (false twins); 3-4 adjacent and both joined to 0 (true twins).
    auto g = oracle::make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {3, 4}});
    auto cls = twin_classes(g);
    EXPECT_EQ(cls[1], cls[2]);
    EXPECT_EQ(cls[3], cls[4]);
    EXPECT_NE(cls[1], cls[3]);
    auto excl = twin_classes(g, VertexMask::single(1));
    EXPECT_NE(excl[1], excl[2]);
}

} // namespace
