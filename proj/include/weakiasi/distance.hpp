#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "weakiasi/graph.hpp"

namespace weakiasi {

using Distance = std::uint32_t;

/// Sentinel for pairs in different components.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Hop distances between every pair of vertices.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kUnreachable) {}

    std::size_t vertex_count() const noexcept { return n_; }
    Distance operator()(Vertex u, Vertex v) const { return dist_.at(std::size_t{u} * n_ + v); }
    Distance& at(Vertex u, Vertex v) { return dist_.at(std::size_t{u} * n_ + v); }

private:
    std::size_t n_ = 0;
    std::vector<Distance> dist_;
};

inline DistanceMatrix all_pairs_distance(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    DistanceMatrix d(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        queue.clear();
        queue.push_back(s);
        d.at(s, s) = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            const Distance next = d(s, u) + 1;
            for (Vertex w : g.neighbors(u)) {
                if (d(s, w) == kUnreachable) {
                    d.at(s, w) = next;
                    queue.push_back(w);
                }
            }
        }
    }
    return d;
}

/// Largest finite distance, or kUnreachable when g is disconnected.
/// The empty and single-vertex graphs have diameter 0.
inline Distance diameter(const Graph& g)
{
    const auto d = all_pairs_distance(g);
    Distance best = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            if (d(u, v) == kUnreachable)
                return kUnreachable;
            best = std::max(best, d(u, v));
        }
    return best;
}

inline bool is_connected(const Graph& g) { return diameter(g) != kUnreachable; }

/// r-th power: u ~ v iff 0 < d(u, v) <= r. r = 0 is rejected.
inline Graph graph_power(const Graph& g, std::uint32_t r)
{
    if (r == 0)
        throw std::invalid_argument("graph power requires r >= 1");
    if (r == 1)
        return g;
    const auto d = all_pairs_distance(g);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (d(u, v) <= r)
                edges.push_back({u, v});
    return Graph(g.vertex_count(), edges);
}

} // namespace weakiasi
