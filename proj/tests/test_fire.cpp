#include "firefight/fire.hpp"
#include "firefight/search.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace firefight;

namespace {

Strategy seq(std::initializer_list<Vertex> vs) { return Strategy{VertexList(vs)}; }

TEST(Simulate, PathDefendMiddle) {
    auto g = oracle::path_graph(3);  // s=0, b=1, c=2
    auto out = simulate(g, 0, seq({1}));
    EXPECT_TRUE(out.valid);
    EXPECT_EQ(out.burned, (VertexList{0}));
    EXPECT_EQ(out.saved_count, 2);
    EXPECT_EQ(sav(out), 2);
    EXPECT_EQ(out.burn_time[0], 0);
}

TEST(Simulate, StarFromCentre) {
    auto g = oracle::make(4, {{0, 1}, {0, 2}, {0, 3}});
    auto out = simulate(g, 0, seq({1}));
    EXPECT_TRUE(out.valid);
    EXPECT_EQ(out.burned, (VertexList{0, 2, 3}));
    EXPECT_EQ(out.saved_count, 1);
    EXPECT_EQ(out.burn_time[2], 1);
}

TEST(Simulate, DefendingBurnedVertexIsInvalid) {
    auto g = oracle::path_graph(3);
    auto out = simulate(g, 0, seq({2, 1}));
    EXPECT_FALSE(out.valid);
    EXPECT_EQ(out.failed_round, 2);
    EXPECT_EQ(out.burned, (VertexList{0, 1}));
    EXPECT_EQ(out.saved_count, 1);
    EXPECT_FALSE(simulate(g, 0, seq({0})).valid);
}

TEST(Simulate, InputErrors) {
    auto g = oracle::path_graph(3);
    EXPECT_THROW(simulate(g, 0, seq({5})), InputError);
    EXPECT_THROW(simulate(g, 0, seq({2, 2})), InputError);
    EXPECT_THROW(simulate(g, 7, seq({})), InputError);
}

TEST(Simulate, TrailingDefenceAfterFireStopsIsHarmless) {
    auto g = oracle::path_graph(4);
    auto a = simulate(g, 0, seq({1}));
    auto b = simulate(g, 0, seq({1, 3}));
    EXPECT_TRUE(b.valid);
    EXPECT_EQ(a.saved_count, b.saved_count);
}

TEST(FastValidity, Examples) {
    auto g = oracle::path_graph(3);
    EXPECT_TRUE(fast_validity_check(g, 0, seq({1})));
    EXPECT_FALSE(fast_validity_check(g, 0, seq({2, 1})));
}

// Random sequences over random graphs, validity decided both ways.
TEST(FastValidity, AgreesWithSimulation) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 3000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        auto g = oracle::random_graph(n, 0.1 + 0.05 * static_cast<double>(rng() % 10), rng);
        Vertex s = static_cast<Vertex>(rng() % n);
        VertexList perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        perm.resize(rng() % (n + 1));
        Strategy st{perm};
        ASSERT_EQ(fast_validity_check(g, s, st), simulate(g, s, st).valid) << "trial " << trial;
    }
}

TEST(Simulate, BurnedIsReachabilityWithoutStrategy) {
    std::mt19937_64 rng(99);
    int checked = 0;
    while (checked < 500) {
        int n = 2 + static_cast<int>(rng() % 11);
        auto g = oracle::random_graph(n, 0.3, rng);
        VertexList perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Vertex s = perm.back();
        perm.resize(rng() % n);
        Strategy st{perm};
        auto out = simulate(g, s, st);
        if (!out.valid)
            continue;
        ++checked;
        EXPECT_EQ(out.burned, connected_component_of(g, s, perm));
        // monotonicity: dropping the last defence keeps validity, never saves more
        if (!perm.empty()) {
            Strategy shorter{VertexList(perm.begin(), perm.end() - 1)};
            auto o2 = simulate(g, s, shorter);
            EXPECT_TRUE(o2.valid);
            EXPECT_LE(o2.saved_count, out.saved_count);
        }
    }
}

TEST(FireRules, MatchesSimulate) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        auto g = oracle::random_graph(n, 0.3, rng);
        VertexList perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Vertex s = perm.back();
        perm.resize(rng() % n);
        auto out = simulate(g, s, Strategy{perm});
        FireRules rules(g, s);
        auto st = rules.play(perm);
        ASSERT_EQ(st.has_value(), out.valid);
        if (st)
            EXPECT_EQ(n - rules.final_burned(*st).count(), out.saved_count);
    }
}

TEST(StrategyText, ParseAndFormat) {
    auto st = parse_strategy("2,5,7", 7);
    EXPECT_EQ(st.sequence, (VertexList{1, 4, 6}));
    EXPECT_EQ(format_strategy(st), "2,5,7");
    EXPECT_TRUE(parse_strategy("", 3).empty());
    EXPECT_THROW(parse_strategy("2,,3", 5), InputError);
    EXPECT_THROW(parse_strategy("9", 5), InputError);
    EXPECT_THROW(parse_strategy("a", 5), InputError);
}

} // namespace
