#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "weakiasi/distance.hpp"
#include "weakiasi/families.hpp"

using namespace weakiasi;

namespace {

Graph family(Family f, std::vector<std::uint32_t> params, std::uint32_t power = 1)
{
    return instantiate({f, std::move(params), power});
}

bool edges_subset(const Graph& a, const Graph& b)
{
    for (const Edge& e : a.edges())
        if (!b.has_edge(e.u, e.v))
            return false;
    return true;
}

} // namespace

TEST(Graph, RejectsMalformedEdges)
{
    EXPECT_THROW(Graph(3, {Edge{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {Edge{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {Edge{0, 1}, Edge{1, 0}}), std::invalid_argument);
}

TEST(Graph, NormalizesEdgeOrder)
{
    Graph g(4, {Edge{3, 1}, Edge{2, 0}});
    ASSERT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 2}));
    EXPECT_EQ(g.edges()[1], (Edge{1, 3}));
    EXPECT_TRUE(g.has_edge(3, 1));
    EXPECT_EQ(g.edge_index(3, 1), 1u);
    EXPECT_FALSE(g.edge_index(0, 1).has_value());
}

TEST(Generate, WheelOnTriangleIsK4)
{
    const Graph w = family(Family::Wheel, {3});
    EXPECT_EQ(w.vertex_count(), 4u);
    EXPECT_EQ(w.edge_count(), 6u);
    EXPECT_EQ(w, complete_graph(4));
}

TEST(Generate, HelmCounts)
{
    for (std::uint32_t n = 3; n <= 12; ++n) {
        const Graph h = family(Family::Helm, {n});
        EXPECT_EQ(h.vertex_count(), 2 * n + 1);
        EXPECT_EQ(h.edge_count(), 3 * n);
        EXPECT_EQ(h.degree(2 * n), n);     // hub
        EXPECT_EQ(h.degree(n + 1), 1u);    // pendant
        EXPECT_TRUE(h.has_edge(1, n + 1)); // pendant n+i hangs on rim i
    }
}

TEST(Generate, CompleteSunEdgeCount)
{
    for (std::uint32_t n = 3; n <= 9; ++n) {
        // Count straight from the adjacency rule: u_i ~ w_j iff j = i or i = j + 1 (mod n).
        std::size_t expected = n * (n - 1) / 2;
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t i = 0; i < n; ++i)
                expected += (i == j || i == (j + 1) % n);
        const Graph s = family(Family::CompleteSun, {n});
        EXPECT_EQ(s.vertex_count(), 2 * n);
        EXPECT_EQ(s.edge_count(), expected);
        EXPECT_TRUE(s.has_edge(n, 0));
        EXPECT_TRUE(s.has_edge(n, 1));
    }
    EXPECT_EQ(family(Family::CompleteSun, {3}).edge_count(), 9u);
}

TEST(Generate, SplitAndBipartite)
{
    const Graph ks = family(Family::CompleteSplit, {3, 2});
    EXPECT_EQ(ks.edge_count(), 3u + 6u);
    EXPECT_FALSE(ks.has_edge(3, 4));
    const Graph kb = family(Family::CompleteBipartite, {2, 3});
    EXPECT_EQ(kb.edge_count(), 6u);
    EXPECT_FALSE(kb.has_edge(0, 1));
}

TEST(Generate, GridLadderPrism)
{
    for (std::uint32_t rows = 1; rows <= 4; ++rows)
        for (std::uint32_t cols = 1; cols <= 4; ++cols)
            EXPECT_EQ(family(Family::Grid, {rows, cols}).edge_count(), rows * (cols - 1) + cols * (rows - 1));
    EXPECT_EQ(family(Family::Grid, {2, 3}).edge_count(), 7u);
    EXPECT_EQ(family(Family::Ladder, {4}).edge_count(), 10u);
    EXPECT_EQ(family(Family::Prism, {5}).edge_count(), 15u);
}

TEST(Generate, FamiliesAreConnected)
{
    for (Family f : kAllFamilies) {
        std::vector<std::uint32_t> params(parameter_names(f).size(), 4);
        EXPECT_TRUE(is_connected(family(f, params))) << family_name(f);
    }
}

TEST(Generate, InvalidParameters)
{
    EXPECT_THROW(generate({Family::Cycle, {2}}), InvalidParameter);
    EXPECT_THROW(generate({Family::Wheel, {2}}), InvalidParameter);
    EXPECT_THROW(generate({Family::Helm, {2}}), InvalidParameter);
    EXPECT_THROW(generate({Family::CompleteSun, {2}}), InvalidParameter);
    EXPECT_THROW(generate({Family::Path, {0}}), InvalidParameter);
    EXPECT_THROW(generate({Family::CompleteSplit, {0, 2}}), InvalidParameter);
    EXPECT_THROW(generate({Family::Grid, {3}}), InvalidParameter);
    EXPECT_THROW(generate({Family::Path, {3, 3}}), InvalidParameter);
    try {
        generate({Family::Cycle, {2}});
    } catch (const InvalidParameter& e) {
        EXPECT_NE(std::string(e.what()).find(">= 3"), std::string::npos);
    }
}

TEST(Generate, FamilyNamesRoundTrip)
{
    for (Family f : kAllFamilies)
        EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_FALSE(parse_family("lobster").has_value());
}

TEST(Distance, Examples)
{
    const auto p4 = all_pairs_distance(family(Family::Path, {4}));
    EXPECT_EQ(p4(0, 3), 3u);
    EXPECT_EQ(p4(3, 0), 3u);

    const Graph split(4, {Edge{0, 1}, Edge{2, 3}});
    const auto d = all_pairs_distance(split);
    EXPECT_EQ(d(0, 2), kUnreachable);
    EXPECT_EQ(d(0, 1), 1u);

    const auto c7 = all_pairs_distance(family(Family::Cycle, {7}));
    EXPECT_EQ(c7(0, 3), 3u);
    EXPECT_EQ(c7(0, 4), 3u);
}

TEST(Distance, CycleDistanceIsCircular)
{
    for (std::uint32_t n = 3; n <= 15; ++n) {
        const auto d = all_pairs_distance(family(Family::Cycle, {n}));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                const std::uint32_t k = u > v ? u - v : v - u;
                EXPECT_EQ(d(u, v), std::min(k, n - k));
            }
    }
}

TEST(Distance, MetricProperties)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(rng, 9, 0.3);
        const auto d = all_pairs_distance(g);
        for (Vertex u = 0; u < 9; ++u) {
            EXPECT_EQ(d(u, u), 0u);
            for (Vertex v = 0; v < 9; ++v) {
                EXPECT_EQ(d(u, v), d(v, u));
                for (Vertex w = 0; w < 9; ++w) {
                    if (d(u, w) != kUnreachable && d(w, v) != kUnreachable) {
                        EXPECT_LE(d(u, v), d(u, w) + d(w, v));
                    }
                }
            }
        }
    }
}

TEST(Diameter, Examples)
{
    EXPECT_EQ(diameter(complete_graph(6)), 1u);
    EXPECT_EQ(diameter(family(Family::CompleteBipartite, {3, 4})), 2u);
    EXPECT_EQ(diameter(family(Family::Cycle, {9})), 4u);
    EXPECT_EQ(diameter(Graph(3, {Edge{0, 1}})), kUnreachable);
    for (std::uint32_t n = 3; n <= 20; ++n)
        EXPECT_EQ(diameter(family(Family::Cycle, {n})), n / 2);
}

TEST(Power, Examples)
{
    EXPECT_EQ(family(Family::Cycle, {4}, 2), complete_graph(4));
    EXPECT_EQ(family(Family::Path, {4}, 3), complete_graph(4));
    const Graph h = family(Family::Helm, {5});
    EXPECT_EQ(graph_power(h, 1), h);
    EXPECT_THROW(graph_power(h, 0), std::invalid_argument);
}

TEST(Power, DisconnectedInputStaysDisconnected)
{
    const Graph g(5, {Edge{0, 1}, Edge{1, 2}, Edge{3, 4}});
    const Graph sq = graph_power(g, 2);
    EXPECT_TRUE(sq.has_edge(0, 2));
    EXPECT_FALSE(sq.has_edge(2, 3));
    EXPECT_EQ(sq.edge_count(), 4u);
}

TEST(Power, MonotoneAndSaturating)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(rng, 10, 0.25);
        Graph prev = g;
        for (std::uint32_t r = 2; r <= 10; ++r) {
            const Graph next = graph_power(g, r);
            EXPECT_TRUE(edges_subset(prev, next));
            prev = next;
        }
        if (const Distance d = diameter(g); d != kUnreachable && g.vertex_count() > 1) {
            for (std::uint32_t r = d; r <= d + 3; ++r)
                EXPECT_TRUE(is_complete(graph_power(g, r)));
        }
    }
}

TEST(Power, DiameterPowerIsComplete)
{
    for (Family f : kAllFamilies)
        for (std::uint32_t k = 3; k <= 6; ++k) {
            std::vector<std::uint32_t> params(parameter_names(f).size(), k);
            const Graph g = family(f, params);
            EXPECT_TRUE(is_complete(graph_power(g, diameter(g)))) << family_name(f) << " " << k;
        }
}

TEST(Power, PathPowerEdgeCount)
{
    for (std::uint32_t n = 2; n <= 16; ++n)
        for (std::uint32_t r = 1; r < n; ++r)
            EXPECT_EQ(2 * family(Family::Path, {n}, r).edge_count(), r * (2 * n - 1 - r)) << n << " " << r;
}

TEST(Power, CyclePowerEdgeCountAndRegularity)
{
    for (std::uint32_t n = 5; n <= 18; ++n)
        for (std::uint32_t r = 1; r < n / 2; ++r) {
            const Graph g = family(Family::Cycle, {n}, r);
            EXPECT_EQ(g.edge_count(), r * n);
            for (Vertex v = 0; v < n; ++v)
                EXPECT_EQ(g.degree(v), 2 * r);
        }
}

TEST(Power, HelmAndSunSquareEdgeCounts)
{
    for (std::uint32_t n = 3; n <= 12; ++n) {
        EXPECT_EQ(2 * family(Family::Helm, {n}, 2).edge_count(), n * (n + 9));
        EXPECT_EQ(2 * family(Family::CompleteSun, {n}, 2).edge_count(), n * (3 * n + 1));
    }
}

TEST(Power, HelmSquarePendantNeighbourhood)
{
    // Each pendant w_i sees its rim vertex, both rim neighbours of it, and the hub.
    for (std::uint32_t n = 4; n <= 9; ++n) {
        const Graph g = family(Family::Helm, {n}, 2);
        for (Vertex i = 0; i < n; ++i) {
            const Vertex w = n + i;
            EXPECT_EQ(g.degree(w), 4u);
            EXPECT_TRUE(g.has_edge(w, (i + 1) % n));
            EXPECT_TRUE(g.has_edge(w, (i + n - 1) % n));
            EXPECT_TRUE(g.has_edge(w, 2 * n));
            EXPECT_FALSE(g.has_edge(w, (i + 2) % n));
        }
    }
}
