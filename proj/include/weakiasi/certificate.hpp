#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weakiasi/graph.hpp"
#include "weakiasi/set_label.hpp"

namespace weakiasi {

/// A set label for every vertex of a graph.
struct VertexLabeling {
    Graph graph;
    std::vector<SetLabel> labels;
};

/// A vertex labeling together with its induced edge labels and the claimed
/// number of mono-indexed edges. edge_labels[i] belongs to graph.edges()[i].
struct WeakIasiCertificate {
    VertexLabeling labeling;
    std::vector<SetLabel> edge_labels;
    std::size_t mono_edge_count = 0;

    const Graph& graph() const noexcept { return labeling.graph; }
    std::vector<Edge> mono_edges() const
    {
        std::vector<Edge> out;
        const auto edges = graph().edges();
        for (std::size_t i = 0; i < edges.size() && i < edge_labels.size(); ++i)
            if (edge_labels[i].is_singleton())
                out.push_back(edges[i]);
        return out;
    }
    std::vector<Vertex> non_singleton_vertices() const
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < labeling.labels.size(); ++v)
            if (!labeling.labels[v].is_singleton())
                out.push_back(v);
        return out;
    }
};

/// Derives edge labels and the mono-indexed edge count from a vertex labeling.
inline WeakIasiCertificate make_certificate(Graph graph, std::vector<SetLabel> labels)
{
    if (labels.size() != graph.vertex_count())
        throw std::invalid_argument("labeling has " + std::to_string(labels.size()) + " labels for " +
                                    std::to_string(graph.vertex_count()) + " vertices");
    WeakIasiCertificate cert{{std::move(graph), std::move(labels)}, {}, 0};
    for (const Edge& e : cert.graph().edges()) {
        cert.edge_labels.push_back(sumset(cert.labeling.labels[e.u], cert.labeling.labels[e.v]));
        if (cert.edge_labels.back().is_singleton())
            ++cert.mono_edge_count;
    }
    return cert;
}

enum class ViolationKind {
    LabelCountMismatch,
    EdgeLabelCountMismatch,
    VertexLabelRepeated,
    EdgeLabelNotSumset,
    EdgeLabelRepeated,
    WeakConditionFailed,
    MonoCountMismatch,
    NonSingletonsAdjacent,
};

inline std::string_view violation_name(ViolationKind k) noexcept
{
    switch (k) {
    case ViolationKind::LabelCountMismatch: return "label-count-mismatch";
    case ViolationKind::EdgeLabelCountMismatch: return "edge-label-count-mismatch";
    case ViolationKind::VertexLabelRepeated: return "vertex-label-repeated";
    case ViolationKind::EdgeLabelNotSumset: return "edge-label-not-sumset";
    case ViolationKind::EdgeLabelRepeated: return "edge-label-repeated";
    case ViolationKind::WeakConditionFailed: return "weak-condition-failed";
    case ViolationKind::MonoCountMismatch: return "mono-count-mismatch";
    case ViolationKind::NonSingletonsAdjacent: return "non-singletons-adjacent";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::vector<Vertex> vertices; // offending vertices, or the two endpoints of an edge
    std::string detail;
};

/// Outcome of checking a certificate clause by clause.
struct ValidationReport {
    bool vertex_injective = true;
    bool edge_labels_match = true;
    bool edge_injective = true;
    bool weak_condition = true;
    bool mono_count_matches = true;
    bool non_singletons_independent = true;
    std::size_t recomputed_mono_count = 0;
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }

    bool has(ViolationKind k) const noexcept
    {
        for (const auto& v : violations)
            if (v.kind == k)
                return true;
        return false;
    }

    std::string summary() const
    {
        if (ok())
            return "valid";
        std::string out;
        for (const auto& v : violations) {
            if (!out.empty())
                out += "; ";
            out += std::string(violation_name(v.kind)) + ": " + v.detail;
        }
        return out;
    }
};

/// Recomputes everything a certificate claims from its vertex labels alone.
/// Never throws on a bad certificate; every failed clause is reported.
inline ValidationReport validate_certificate(const WeakIasiCertificate& cert)
{
    ValidationReport report;
    const Graph& g = cert.graph();
    const auto& labels = cert.labeling.labels;

    if (labels.size() != g.vertex_count()) {
        report.vertex_injective = report.edge_labels_match = report.edge_injective = report.weak_condition =
            report.mono_count_matches = report.non_singletons_independent = false;
        report.violations.push_back({ViolationKind::LabelCountMismatch, {},
                                     std::to_string(labels.size()) + " labels for " +
                                         std::to_string(g.vertex_count()) + " vertices"});
        return report;
    }

    std::map<SetLabel, Vertex> owner;
    for (Vertex v = 0; v < labels.size(); ++v) {
        auto [it, inserted] = owner.emplace(labels[v], v);
        if (!inserted) {
            report.vertex_injective = false;
            report.violations.push_back({ViolationKind::VertexLabelRepeated, {it->second, v},
                                         "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                                             " share " + labels[v].to_string()});
        }
    }

    const auto edges = g.edges();
    if (cert.edge_labels.size() != edges.size()) {
        report.edge_labels_match = false;
        report.violations.push_back({ViolationKind::EdgeLabelCountMismatch, {},
                                     std::to_string(cert.edge_labels.size()) + " edge labels for " +
                                         std::to_string(edges.size()) + " edges"});
    }

    auto edge_str = [](const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; };

    std::map<SetLabel, std::size_t> edge_owner;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        const SetLabel& a = labels[e.u];
        const SetLabel& b = labels[e.v];
        const SetLabel sum = sumset(a, b);

        if (i < cert.edge_labels.size() && cert.edge_labels[i] != sum) {
            report.edge_labels_match = false;
            report.violations.push_back({ViolationKind::EdgeLabelNotSumset, {e.u, e.v},
                                         "edge " + edge_str(e) + " carries " + cert.edge_labels[i].to_string() +
                                             ", sumset is " + sum.to_string()});
        }

        auto [it, inserted] = edge_owner.emplace(sum, i);
        if (!inserted) {
            report.edge_injective = false;
            report.violations.push_back({ViolationKind::EdgeLabelRepeated, {e.u, e.v},
                                         "edges " + edge_str(edges[it->second]) + " and " + edge_str(e) +
                                             " share " + sum.to_string()});
        }

        if (sum.size() != std::max(a.size(), b.size())) {
            report.weak_condition = false;
            report.violations.push_back({ViolationKind::WeakConditionFailed, {e.u, e.v},
                                         "edge " + edge_str(e) + ": |" + sum.to_string() + "| = " +
                                             std::to_string(sum.size()) + ", max endpoint size " +
                                             std::to_string(std::max(a.size(), b.size()))});
        }

        if (!a.is_singleton() && !b.is_singleton()) {
            report.non_singletons_independent = false;
            report.violations.push_back({ViolationKind::NonSingletonsAdjacent, {e.u, e.v},
                                         "edge " + edge_str(e) + " joins two non-singleton labels"});
        }

        if (a.is_singleton() && b.is_singleton())
            ++report.recomputed_mono_count;
    }

    if (report.recomputed_mono_count != cert.mono_edge_count) {
        report.mono_count_matches = false;
        report.violations.push_back({ViolationKind::MonoCountMismatch, {},
                                     "stated " + std::to_string(cert.mono_edge_count) + ", recomputed " +
                                         std::to_string(report.recomputed_mono_count)});
    }
    return report;
}

} // namespace weakiasi
