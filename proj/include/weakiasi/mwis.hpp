#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "weakiasi/graph.hpp"

namespace weakiasi {

using Weight = std::uint64_t;

/// Vertex weights over a graph. The graph must outlive the instance.
class WeightedInstance {
public:
    WeightedInstance(const Graph& graph, std::vector<Weight> weights) : graph_(&graph), weights_(std::move(weights))
    {
        if (weights_.size() != graph.vertex_count())
            throw std::invalid_argument("weights must cover every vertex (" + std::to_string(weights_.size()) +
                                        " for " + std::to_string(graph.vertex_count()) + ")");
    }

    const Graph& graph() const noexcept { return *graph_; }
    std::span<const Weight> weights() const noexcept { return weights_; }

private:
    const Graph* graph_;
    std::vector<Weight> weights_;
};

inline std::vector<Weight> degree_weights(const Graph& g)
{
    std::vector<Weight> w(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        w[v] = g.degree(v);
    return w;
}

struct MwisSolution {
    std::vector<Vertex> chosen; // ascending
    Weight weight = 0;

    friend bool operator==(const MwisSolution&, const MwisSolution&) = default;
};

/// Tie-break among equal-weight sets: at the smallest vertex where the two
/// sets differ, the preferred one contains it. On sets of equal size this is
/// the lexicographic order of the sorted vertex lists.
inline bool preferred(std::span<const Vertex> a, std::span<const Vertex> b)
{
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i])
        ++i;
    if (i == a.size())
        return false;
    if (i == b.size())
        return true;
    return a[i] < b[i];
}

inline Weight total_weight(std::span<const Weight> weights, std::span<const Vertex> chosen)
{
    Weight w = 0;
    for (Vertex v : chosen)
        w += weights[v];
    return w;
}

class SizeLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t kBitmaskVertexLimit = 30;

/// Enumerates every independent set; reference solver for small instances.
inline MwisSolution mwis_bitmask(const WeightedInstance& inst)
{
    const Graph& g = inst.graph();
    const std::size_t n = g.vertex_count();
    if (n > kBitmaskVertexLimit)
        throw SizeLimitExceeded("mwis_bitmask handles at most " + std::to_string(kBitmaskVertexLimit) +
                                " vertices, got " + std::to_string(n));
    std::vector<std::uint32_t> nbr(n, 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= std::uint32_t{1} << e.v;
        nbr[e.v] |= std::uint32_t{1} << e.u;
    }
    const auto weights = inst.weights();

    std::uint32_t best_mask = 0;
    Weight best = 0;
    bool found = false;

    // Include-before-exclude in index order visits sets in preference order,
    // so the first set reaching the maximum is the preferred one.
    auto visit = [&](auto&& self, std::size_t v, std::uint32_t mask, std::uint32_t blocked, Weight w) -> void {
        if (v == n) {
            if (!found || w > best) {
                best = w;
                best_mask = mask;
                found = true;
            }
            return;
        }
        const std::uint32_t bit = std::uint32_t{1} << v;
        if (!(blocked & bit))
            self(self, v + 1, mask | bit, blocked | nbr[v], w + weights[v]);
        self(self, v + 1, mask, blocked, w);
    };
    visit(visit, 0, 0, 0, 0);

    MwisSolution s;
    for (Vertex v = 0; v < n; ++v)
        if (best_mask >> v & 1U)
            s.chosen.push_back(v);
    s.weight = best;
    return s;
}

namespace detail {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}

    static Bitset full(std::size_t n)
    {
        Bitset b(n);
        for (std::size_t i = 0; i < n; ++i)
            b.set(i);
        return b;
    }

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1U; }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    std::size_t count_common(const Bitset& other) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    /// Lowest set index; the set must be non-empty.
    std::size_t first() const
    {
        std::size_t i = 0;
        while (!words_[i])
            ++i;
        return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }

    void intersect(const Bitset& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
    }

    void subtract(const Bitset& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                f(i * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

/// Branch and bound over candidate sets. Bound: current weight plus, for a
/// greedy partition of the candidates into cliques, the heaviest vertex of
/// each clique. Pivot: candidate with the most candidate neighbours.
class BranchBound {
public:
    explicit BranchBound(const WeightedInstance& inst) : weights_(inst.weights())
    {
        const Graph& g = inst.graph();
        const std::size_t n = g.vertex_count();
        nbr_.assign(n, Bitset(n));
        closed_.assign(n, Bitset(n));
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex w : g.neighbors(v))
                nbr_[v].set(w);
            closed_[v] = nbr_[v];
            closed_[v].set(v);
        }
    }

    /// Largest weight of an independent subset of `cand`, or 0 if it does not
    /// exceed `floor`. Stops early once `stop_at` is reached.
    Weight solve(const Bitset& cand, Weight floor, Weight stop_at)
    {
        best_ = floor;
        improved_ = false;
        stop_at_ = stop_at;
        search(cand, 0);
        return improved_ ? best_ : 0;
    }

private:
    Weight clique_cover_bound(Bitset left) const
    {
        Weight bound = 0;
        while (!left.none()) {
            const std::size_t v = left.first();
            left.reset(v);
            Weight top = weights_[v];
            Bitset common = left;
            common.intersect(nbr_[v]);
            while (!common.none()) {
                const std::size_t u = common.first();
                common.reset(u);
                common.intersect(nbr_[u]);
                left.reset(u);
                top = std::max(top, weights_[u]);
            }
            bound += top;
        }
        return bound;
    }

    void search(Bitset cand, Weight current)
    {
        if (improved_ && best_ >= stop_at_)
            return;
        if (current + clique_cover_bound(cand) <= best_)
            return;
        Weight total = current;
        std::size_t pivot = 0;
        std::size_t pivot_degree = 0;
        bool any = false;
        cand.for_each([&](std::size_t v) {
            total += weights_[v];
            const std::size_t d = cand.count_common(nbr_[v]);
            if (!any || d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
            any = true;
        });
        if (!any || pivot_degree == 0) {
            // Remaining candidates are pairwise non-adjacent.
            best_ = total;
            improved_ = true;
            return;
        }
        Bitset with = cand;
        with.subtract(closed_[pivot]);
        search(with, current + weights_[pivot]);
        cand.reset(pivot);
        search(cand, current);
    }

    std::span<const Weight> weights_;
    std::vector<Bitset> nbr_;
    std::vector<Bitset> closed_;
    Weight best_ = 0;
    Weight stop_at_ = 0;
    bool improved_ = false;
};

} // namespace detail

/// Exact solver for instances too large to enumerate. Finds the optimum
/// weight, then fixes vertices in index order to recover the preferred set.
inline MwisSolution mwis_branch_bound(const WeightedInstance& inst)
{
    const std::size_t n = inst.graph().vertex_count();
    const auto weights = inst.weights();
    detail::BranchBound bb(inst);
    constexpr Weight kNoStop = ~Weight{0};

    detail::Bitset cand = detail::Bitset::full(n);
    // solve() reports 0 when nothing beats the floor, which is the optimum then.
    Weight remaining = bb.solve(cand, 0, kNoStop);
    MwisSolution s;
    s.weight = remaining;

    for (Vertex v = 0; v < n; ++v) {
        if (!cand.test(v))
            continue;
        detail::Bitset rest = cand;
        for (Vertex w : inst.graph().neighbors(v))
            rest.reset(w);
        rest.reset(v);
        bool take = false;
        if (weights[v] <= remaining) {
            const Weight need = remaining - weights[v];
            // The rest reaches `need` iff it beats need - 1.
            take = need == 0 || bb.solve(rest, need - 1, need) >= need;
        }
        if (take) {
            s.chosen.push_back(v);
            remaining -= weights[v];
            cand = std::move(rest);
        } else {
            cand.reset(v);
        }
    }
    return s;
}

namespace detail {

/// Preferred optimum over vertices first..first+count-1 of a path power,
/// chosen indices pairwise more than r apart.
inline MwisSolution path_power_segment(std::span<const Weight> weights, std::size_t first, std::size_t count,
                                       std::size_t r)
{
    // best[i]: optimum over segment positions i..count-1.
    std::vector<Weight> best(count + 1, 0);
    for (std::size_t i = count; i-- > 0;) {
        const std::size_t next = i + r + 1;
        const Weight take = weights[first + i] + (next < count ? best[next] : 0);
        best[i] = std::max(take, best[i + 1]);
    }
    MwisSolution s;
    s.weight = best[0];
    std::size_t i = 0;
    while (i < count) {
        const std::size_t next = i + r + 1;
        const Weight take = weights[first + i] + (next < count ? best[next] : 0);
        if (take >= best[i + 1]) {
            s.chosen.push_back(static_cast<Vertex>(first + i));
            i = next;
        } else {
            ++i;
        }
    }
    return s;
}

inline void check_weights(std::size_t n, std::span<const Weight> weights)
{
    if (weights.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " weights, got " +
                                    std::to_string(weights.size()));
}

} // namespace detail

/// MWIS of the r-th power of the path on n vertices.
inline MwisSolution mwis_path_power(std::size_t n, std::size_t r, std::span<const Weight> weights)
{
    if (r == 0)
        throw std::invalid_argument("mwis_path_power requires r >= 1");
    detail::check_weights(n, weights);
    return detail::path_power_segment(weights, 0, n, r);
}

/// MWIS of the r-th power of the cycle on n vertices, 1 <= r < floor(n/2).
///
/// At most one of the vertices 0..r is chosen. Fixing that choice (or
/// choosing none of them) leaves a linear segment whose only conflicts are
/// index distances <= r, which the path routine solves.
inline MwisSolution mwis_cycle_power(std::size_t n, std::size_t r, std::span<const Weight> weights)
{
    if (r == 0 || r >= n / 2)
        throw std::domain_error("mwis_cycle_power requires 1 <= r < floor(n/2) (n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + "); the power is complete otherwise");
    detail::check_weights(n, weights);

    MwisSolution best = detail::path_power_segment(weights, r + 1, n - r - 1, r);
    for (std::size_t j = 0; j <= r; ++j) {
        const std::size_t first = j + r + 1;
        const std::size_t last = n + j - r; // exclusive
        MwisSolution cand = detail::path_power_segment(weights, first, last - first, r);
        cand.chosen.insert(cand.chosen.begin(), static_cast<Vertex>(j));
        cand.weight += weights[j];
        if (cand.weight > best.weight || (cand.weight == best.weight && preferred(cand.chosen, best.chosen)))
            best = std::move(cand);
    }
    return best;
}

} // namespace weakiasi
