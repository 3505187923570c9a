#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "weakiasi/certificate.hpp"
#include "weakiasi/families.hpp"
#include "weakiasi/graph.hpp"
#include "weakiasi/mwis.hpp"
#include "weakiasi/set_label.hpp"

namespace weakiasi {

/// First `count` terms of the Mian-Chowla sequence: start at 1, then always
/// take the smallest integer keeping every pairwise sum (a + a included)
/// distinct. 1, 2, 4, 8, 13, 21, 31, 45, ...
inline std::vector<std::uint64_t> mian_chowla(std::size_t count)
{
    std::vector<std::uint64_t> terms;
    std::unordered_set<std::uint64_t> sums;
    std::uint64_t candidate = 1;
    while (terms.size() < count) {
        bool clash = sums.count(2 * candidate) > 0;
        for (std::size_t i = 0; !clash && i < terms.size(); ++i)
            clash = sums.count(terms[i] + candidate) > 0;
        if (!clash) {
            for (auto t : terms)
                sums.insert(t + candidate);
            sums.insert(2 * candidate);
            terms.push_back(candidate);
        }
        ++candidate;
    }
    return terms;
}

class NotIndependent : public std::invalid_argument {
public:
    NotIndependent(const Edge& e)
        : std::invalid_argument("vertex set is not independent: edge {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "} lies inside it"),
          edge(e)
    {
    }

    Edge edge;
};

/// Weak IASI in which exactly the vertices of `independent_set` carry
/// non-singleton labels.
///
/// Vertices outside the set get Mian-Chowla singletons in vertex order. With
/// Q one more than the largest singleton, the j-th set vertex (in vertex
/// order) gets {0, Q, 2Q, ..., (j+1)Q}, so set sizes are 2, 3, 4, ...
inline WeakIasiCertificate construct_certificate(const Graph& g, std::vector<Vertex> independent_set)
{
    std::sort(independent_set.begin(), independent_set.end());
    independent_set.erase(std::unique(independent_set.begin(), independent_set.end()), independent_set.end());
    if (auto e = edge_within(g, independent_set))
        throw NotIndependent(*e);

    const std::size_t n = g.vertex_count();
    std::vector<bool> in_set(n, false);
    for (Vertex v : independent_set)
        in_set[v] = true;

    const auto sidon = mian_chowla(n - independent_set.size());
    const std::uint64_t q = 1 + (sidon.empty() ? 0 : sidon.back());

    std::vector<SetLabel> labels;
    labels.reserve(n);
    std::size_t next_single = 0;
    std::size_t next_multi = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (!in_set[v]) {
            labels.push_back(SetLabel::singleton(sidon[next_single++]));
            continue;
        }
        std::vector<SetLabel::value_type> progression;
        for (std::uint64_t m = 0; m <= next_multi + 1; ++m)
            progression.push_back(m * q);
        ++next_multi;
        labels.emplace_back(std::move(progression));
    }
    return make_certificate(g, std::move(labels));
}

struct SparingResult {
    std::size_t value = 0;
    std::vector<Vertex> witness_independent_set;
    WeakIasiCertificate certificate;
    std::string solver;
};

struct SparingOptions {
    /// Cross-check the primary solver against full enumeration when the
    /// graph has at most this many vertices. 0 disables the audit.
    std::size_t audit_vertex_limit = 24;
};

namespace detail {

inline SparingResult finish_sparing(const Graph& g, MwisSolution solution, std::string solver,
                                    const SparingOptions& options)
{
    const auto weights = degree_weights(g);
    if (options.audit_vertex_limit > 0 && g.vertex_count() <= std::min(options.audit_vertex_limit,
                                                                        kBitmaskVertexLimit)) {
        const auto reference = mwis_bitmask(WeightedInstance(g, weights));
        if (reference != solution)
            throw std::logic_error(solver + " disagrees with enumeration: weight " + std::to_string(solution.weight) +
                                   " vs " + std::to_string(reference.weight));
        solver += "+bitmask-audit";
    }
    if (!is_independent(g, solution.chosen) || total_weight(weights, solution.chosen) != solution.weight)
        throw std::logic_error(solver + " returned an inconsistent solution");

    // Isolated vertices carry no edges; keep them singleton.
    std::erase_if(solution.chosen, [&](Vertex v) { return g.degree(v) == 0; });

    SparingResult result;
    result.value = g.edge_count() - static_cast<std::size_t>(solution.weight);
    result.witness_independent_set = solution.chosen;
    result.certificate = construct_certificate(g, solution.chosen);
    result.solver = std::move(solver);

    const auto report = validate_certificate(result.certificate);
    if (!report.ok())
        throw std::logic_error("constructed certificate is invalid: " + report.summary());
    if (result.certificate.mono_edge_count != result.value)
        throw std::logic_error("certificate mono count " + std::to_string(result.certificate.mono_edge_count) +
                               " differs from the reduction value " + std::to_string(result.value));
    return result;
}

} // namespace detail

/// phi(g) = |E| - max over independent I of the degree sum over I.
inline SparingResult sparing_number(const Graph& g, const SparingOptions& options = {})
{
    auto solution = mwis_branch_bound(WeightedInstance(g, degree_weights(g)));
    return detail::finish_sparing(g, std::move(solution), "branch-bound", options);
}

/// Same value, using the interval structure of path and cycle powers.
inline SparingResult sparing_number(const FamilySpec& spec, const SparingOptions& options = {})
{
    const Graph g = instantiate(spec);
    const auto weights = degree_weights(g);
    if (spec.family == Family::Path)
        return detail::finish_sparing(g, mwis_path_power(spec.params[0], spec.power, weights), "path-power-dp",
                                      options);
    if (spec.family == Family::Cycle && spec.power < spec.params[0] / 2)
        return detail::finish_sparing(g, mwis_cycle_power(spec.params[0], spec.power, weights), "cycle-power-dp",
                                      options);
    return sparing_number(g, options);
}

} // namespace weakiasi
