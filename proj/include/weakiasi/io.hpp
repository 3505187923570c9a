#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "weakiasi/certificate.hpp"
#include "weakiasi/graph.hpp"

namespace weakiasi {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::uint64_t> parse_line_integers(const std::string& line, std::size_t line_no)
{
    std::vector<std::uint64_t> out;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(line_no, "'" + tok + "' is not a non-negative integer");
        out.push_back(value);
    }
    return out;
}

inline bool blank(const std::string& line)
{
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace detail

/// Reads "n m" followed by m lines "u v" (0-based endpoints).
inline Graph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line))
        throw ParseError(1, "missing header \"n m\"");
    ++line_no;
    const auto header = detail::parse_line_integers(line, line_no);
    if (header.size() != 2)
        throw ParseError(line_no, "header must be \"n m\"");
    const std::uint64_t n = header[0], m = header[1];
    if (n > std::numeric_limits<Vertex>::max())
        throw ParseError(line_no, "vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        ++line_no;
        const auto uv = detail::parse_line_integers(line, line_no);
        if (uv.size() != 2)
            throw ParseError(line_no, "edge line must be \"u v\"");
        if (uv[0] >= n || uv[1] >= n)
            throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
        if (uv[0] == uv[1])
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(uv[0]));
        edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::blank(line))
            throw ParseError(line_no, "unexpected content after the last edge");
    }
    try {
        return Graph(static_cast<std::size_t>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

inline Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

/// {"vertices": [{"id", "label"}], "mono_edges": [[u, v]]}
inline nlohmann::json labeling_to_json(const WeakIasiCertificate& cert)
{
    nlohmann::json vertices = nlohmann::json::array();
    for (Vertex v = 0; v < cert.labeling.labels.size(); ++v) {
        const auto elems = cert.labeling.labels[v].elements();
        vertices.push_back({{"id", v}, {"label", std::vector<std::uint64_t>(elems.begin(), elems.end())}});
    }
    nlohmann::json mono = nlohmann::json::array();
    for (const Edge& e : cert.mono_edges())
        mono.push_back({e.u, e.v});
    return {{"vertices", vertices}, {"mono_edges", mono}};
}

/// Graphviz rendering: non-singleton vertices filled, mono-indexed edges dotted.
inline void write_dot(std::ostream& out, const WeakIasiCertificate& cert)
{
    out << "graph weak_iasi {\n";
    out << "  node [shape=circle];\n";
    const auto& labels = cert.labeling.labels;
    for (Vertex v = 0; v < labels.size(); ++v) {
        out << "  " << v << " [label=\"" << v << "\\n" << labels[v].to_string() << "\"";
        if (!labels[v].is_singleton())
            out << ", style=filled, fillcolor=lightgray";
        out << "];\n";
    }
    const auto edges = cert.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out << "  " << edges[i].u << " -- " << edges[i].v;
        if (i < cert.edge_labels.size() && cert.edge_labels[i].is_singleton())
            out << " [style=dotted]";
        out << ";\n";
    }
    out << "}\n";
}

} // namespace weakiasi
