#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace weakiasi {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v once it lives inside a Graph.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

    /// Rejects self-loops, out-of-range endpoints and duplicate edges.
    Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count)
    {
        edges_.reserve(edges.size());
        for (const Edge& e : edges) {
            if (e.u >= vertex_count || e.v >= vertex_count)
                throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            "} has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
            if (e.u == e.v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                                        "}");
        for (const Edge& e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (auto& list : adjacency_)
            std::sort(list.begin(), list.end());
    }

    Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges sorted lexicographically with u < v. Edge indices used by
    /// certificates refer to positions in this list.
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool has_edge(Vertex a, Vertex b) const
    {
        if (a >= vertex_count() || b >= vertex_count())
            return false;
        const auto& list = adjacency_[a];
        return std::binary_search(list.begin(), list.end(), b);
    }

    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const
    {
        const Edge key = a < b ? Edge{a, b} : Edge{b, a};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key)
            return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

inline Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph(n, edges);
}

/// First edge of g with both endpoints in `vertices`, if any.
inline std::optional<Edge> edge_within(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<bool> member(g.vertex_count(), false);
    for (Vertex v : vertices) {
        if (v >= g.vertex_count())
            throw std::out_of_range("vertex " + std::to_string(v) + " is not in the graph");
        member[v] = true;
    }
    for (const Edge& e : g.edges())
        if (member[e.u] && member[e.v])
            return e;
    return std::nullopt;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> vertices)
{
    return !edge_within(g, vertices).has_value();
}

inline bool is_complete(const Graph& g) noexcept
{
    const std::size_t n = g.vertex_count();
    return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

} // namespace weakiasi
