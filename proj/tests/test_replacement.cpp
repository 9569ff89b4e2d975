#include <gtest/gtest.h>

#include "support.hpp"

using namespace testutil;
using sens::CachePolicy;
using sens::ReplacementDistanceOracle;

TEST(Replacement, C4DetourThroughThree) {
    const auto g = cycle(4);
    ReplacementDistanceOracle o(g, CachePolicy::Lazy);
    EXPECT_EQ(o.query(0, 2, edge_id(g, 0, 1)), Distance(2));
    EXPECT_EQ(o.query(0, 1, edge_id(g, 0, 1)), Distance(3));
}

TEST(Replacement, BridgeDisconnects) {
    const auto g = path(3);
    ReplacementDistanceOracle o(g, CachePolicy::Lazy);
    EXPECT_TRUE(o.query(0, 2, edge_id(g, 1, 2)).is_infinite());
}

TEST(Replacement, NonTreeEdgeKeepsDistanceAndCache) {
    const auto g = cycle(5);  // tree from 0 avoids the edge 2-3
    ReplacementDistanceOracle o(g, CachePolicy::Lazy);
    const auto e = edge_id(g, 2, 3);
    for (Vertex v = 0; v < 5; ++v) {
        EXPECT_EQ(o.query(0, v, e), sssp(g, 0)[v]);
    }
    EXPECT_EQ(o.cache_size(), 0u);
}

TEST(Replacement, ProfileC5) {
    const auto g = cycle(5);
    ReplacementDistanceOracle o(g, CachePolicy::Lazy);
    const auto prof = o.profile(0, 2);
    ASSERT_EQ(prof.size(), 2u);
    EXPECT_EQ(prof[0].first, edge_id(g, 0, 1));
    EXPECT_EQ(prof[0].second, Distance(3));
    EXPECT_EQ(prof[1].first, edge_id(g, 1, 2));
    EXPECT_EQ(prof[1].second, Distance(3));
    EXPECT_TRUE(o.profile(3, 3).empty());
}

TEST(Replacement, ProfileOnTreeIsAllInfinite) {
    const auto g = sens::parse_graph("6 5 undirected unweighted\n0 1\n1 2\n1 3\n3 4\n3 5");
    ReplacementDistanceOracle o(g, CachePolicy::Eager);
    const auto prof = o.profile(0, 5);
    ASSERT_EQ(prof.size(), 3u);
    for (const auto& [e, d] : prof) {
        EXPECT_TRUE(d.is_infinite());
    }
}

TEST(Replacement, ProfileUnreachableThrows) {
    const Graph g(2);
    ReplacementDistanceOracle o(g, CachePolicy::Lazy);
    EXPECT_THROW(o.profile(0, 1), sens::Error);
}

TEST(Replacement, EagerAndLazyCacheSizes) {
    const auto p3 = path(3);
    ReplacementDistanceOracle eager(p3, CachePolicy::Eager);
    // sources 0 and 2 have two tree edges each, source 1 has two
    EXPECT_EQ(eager.cache_size(), 6u);
    ReplacementDistanceOracle lazy(p3, CachePolicy::Lazy);
    EXPECT_EQ(lazy.cache_size(), 0u);
    const auto g5 = cycle(5);
    ReplacementDistanceOracle c5(g5, CachePolicy::Eager);
    EXPECT_LE(c5.cache_size(), 5u * 4u);
}

TEST(Replacement, IdempotentUnderBothPolicies) {
    sens::Rng rng(9);
    const auto g = sens::gen_connected(15, 25, rng);
    ReplacementDistanceOracle eager(g, CachePolicy::Eager);
    ReplacementDistanceOracle lazy(g, CachePolicy::Lazy);
    for (sens::EdgeId e = 0; e < g.m(); ++e) {
        for (Vertex v = 0; v < g.n(); ++v) {
            const auto a = lazy.query(3, v, e);
            EXPECT_EQ(lazy.query(3, v, e), a);
            EXPECT_EQ(eager.query(3, v, e), a);
        }
    }
}

TEST(Replacement, MatchesEditedCopiesRandom) {
    sens::Rng rng(48);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + rng.index(47);
        const bool directed = trial % 3 == 2;
        Graph g(n, directed);
        for (std::size_t k = 0; k < 3 * n; ++k) {
            const auto u = static_cast<Vertex>(rng.index(n));
            const auto v = static_cast<Vertex>(rng.index(n));
            if (u != v && !g.has_edge(u, v)) {
                g.add_edge(u, v);
            }
        }
        ReplacementDistanceOracle o(g, CachePolicy::Lazy);
        for (sens::EdgeId e = 0; e < g.m(); ++e) {
            const auto h = without(g, e);
            for (Vertex u = 0; u < n; ++u) {
                const auto truth = sssp(h, u);
                const auto base = sssp(g, u);
                for (Vertex v = 0; v < n; ++v) {
                    const auto d = o.query(u, v, e);
                    ASSERT_EQ(d, truth[v]) << "trial " << trial << " e=" << e << " u=" << u << " v=" << v;
                    ASSERT_GE(d, base[v]);
                }
            }
        }
    }
}
