#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "weakiasi/certificate.hpp"
#include "weakiasi/graph.hpp"
#include "weakiasi/set_label.hpp"

// Definitional search for the sparing number of tiny graphs: it looks at
// labelings directly and never uses the independent-set reduction.

namespace weakiasi {

class InfeasibleLabeling : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExhaustiveResult {
    std::size_t min_mono = 0;
    WeakIasiCertificate witness;
};

namespace detail {

inline void subsets_of_size(std::uint64_t universe_max, std::size_t k, std::vector<SetLabel::value_type>& current,
                            std::uint64_t next, std::vector<SetLabel>& out)
{
    if (current.size() == k) {
        out.emplace_back(current);
        return;
    }
    for (std::uint64_t x = next; x <= universe_max; ++x) {
        if (universe_max - x + 1 < k - current.size())
            break;
        current.push_back(x);
        subsets_of_size(universe_max, k, current, x + 1, out);
        current.pop_back();
    }
}

/// Searches for one labeling that realizes a fixed cardinality per vertex and
/// satisfies vertex injectivity, edge injectivity and the weak condition.
class PatternSearch {
public:
    PatternSearch(const Graph& g, const std::vector<std::vector<SetLabel>>& options_by_size)
        : g_(g), options_by_size_(options_by_size)
    {
    }

    std::optional<std::vector<SetLabel>> find(const std::vector<std::size_t>& cardinality)
    {
        const std::size_t n = g_.vertex_count();
        cardinality_ = cardinality;

        // Non-singletons first, and among them those with non-singleton
        // neighbours first, so hopeless patterns die near the root.
        order_.resize(n);
        for (Vertex v = 0; v < n; ++v)
            order_[v] = v;
        auto heavy_neighbours = [&](Vertex v) {
            std::size_t c = 0;
            for (Vertex w : g_.neighbors(v))
                c += cardinality_[w] > 1;
            return c;
        };
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            if (cardinality_[a] != cardinality_[b])
                return cardinality_[a] > cardinality_[b];
            return heavy_neighbours(a) > heavy_neighbours(b);
        });

        assigned_.assign(n, nullptr);
        used_vertex_labels_.clear();
        used_edge_labels_.clear();
        if (!descend(0))
            return std::nullopt;
        std::vector<SetLabel> out;
        out.reserve(n);
        for (Vertex v = 0; v < n; ++v)
            out.push_back(*assigned_[v]);
        return out;
    }

private:
    bool descend(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const Vertex v = order_[depth];
        for (const SetLabel& option : options_by_size_[cardinality_[v]]) {
            if (used_vertex_labels_.count(option))
                continue;
            std::vector<SetLabel> added;
            bool ok = true;
            for (Vertex w : g_.neighbors(v)) {
                if (!assigned_[w])
                    continue;
                SetLabel sum = sumset(option, *assigned_[w]);
                if (sum.size() != std::max(option.size(), assigned_[w]->size()) || used_edge_labels_.count(sum) ||
                    std::find(added.begin(), added.end(), sum) != added.end()) {
                    ok = false;
                    break;
                }
                added.push_back(std::move(sum));
            }
            if (!ok)
                continue;
            assigned_[v] = &option;
            used_vertex_labels_.insert(option);
            for (const auto& s : added)
                used_edge_labels_.insert(s);
            if (descend(depth + 1))
                return true;
            for (const auto& s : added)
                used_edge_labels_.erase(s);
            used_vertex_labels_.erase(option);
            assigned_[v] = nullptr;
        }
        return false;
    }

    const Graph& g_;
    const std::vector<std::vector<SetLabel>>& options_by_size_;
    std::vector<std::size_t> cardinality_;
    std::vector<Vertex> order_;
    std::vector<const SetLabel*> assigned_;
    std::set<SetLabel> used_vertex_labels_;
    std::set<SetLabel> used_edge_labels_;
};

struct Pattern {
    std::vector<std::size_t> cardinality;
    std::size_t mono = 0;
};

inline std::vector<Pattern> cardinality_patterns(const Graph& g, std::size_t max_card)
{
    const std::size_t n = g.vertex_count();
    std::vector<Pattern> patterns;
    std::vector<std::size_t> card(n, 1);
    while (true) {
        std::size_t mono = 0;
        for (const Edge& e : g.edges())
            mono += card[e.u] == 1 && card[e.v] == 1;
        patterns.push_back({card, mono});
        std::size_t i = 0;
        while (i < n && card[i] == max_card)
            card[i++] = 1;
        if (i == n)
            break;
        ++card[i];
    }
    std::stable_sort(patterns.begin(), patterns.end(),
                     [](const Pattern& a, const Pattern& b) { return a.mono < b.mono; });
    return patterns;
}

inline std::vector<std::vector<SetLabel>> label_options(std::uint64_t universe_max, std::size_t max_card)
{
    std::vector<std::vector<SetLabel>> options(max_card + 1);
    std::vector<SetLabel::value_type> scratch;
    for (std::size_t k = 1; k <= max_card; ++k)
        subsets_of_size(universe_max, k, scratch, 0, options[k]);
    return options;
}

inline void check_search_bounds(const Graph& g, std::size_t max_card)
{
    if (max_card == 0)
        throw std::invalid_argument("max_card must be >= 1");
    if (g.vertex_count() > 12)
        throw std::length_error("exhaustive labeling search is limited to 12 vertices");
}

} // namespace detail

/// Minimum number of mono-indexed edges over every weak IASI of g whose labels
/// are subsets of {0..universe_max} with at most max_card elements.
/// Throws InfeasibleLabeling when no such labeling exists.
inline ExhaustiveResult exhaustive_search(const Graph& g, std::uint64_t universe_max, std::size_t max_card)
{
    detail::check_search_bounds(g, max_card);
    const auto options = detail::label_options(universe_max, max_card);
    detail::PatternSearch search(g, options);
    for (const auto& pattern : detail::cardinality_patterns(g, max_card)) {
        if (auto labels = search.find(pattern.cardinality)) {
            auto cert = make_certificate(g, std::move(*labels));
            return {cert.mono_edge_count, std::move(cert)};
        }
    }
    throw InfeasibleLabeling("no weak IASI with labels inside {0.." + std::to_string(universe_max) +
                             "} of size <= " + std::to_string(max_card));
}

inline std::size_t exhaustive_min_mono(const Graph& g, std::uint64_t universe_max, std::size_t max_card)
{
    return exhaustive_search(g, universe_max, max_card).min_mono;
}

/// One witness labeling for every cardinality pattern that admits a weak IASI
/// in the given universe.
inline std::vector<WeakIasiCertificate> feasible_labelings(const Graph& g, std::uint64_t universe_max,
                                                           std::size_t max_card)
{
    detail::check_search_bounds(g, max_card);
    const auto options = detail::label_options(universe_max, max_card);
    detail::PatternSearch search(g, options);
    std::vector<WeakIasiCertificate> out;
    for (const auto& pattern : detail::cardinality_patterns(g, max_card))
        if (auto labels = search.find(pattern.cardinality))
            out.push_back(make_certificate(g, std::move(*labels)));
    return out;
}

} // namespace weakiasi
