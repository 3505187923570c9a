#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weakiasi/distance.hpp"
#include "weakiasi/graph.hpp"

namespace weakiasi {

enum class Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Wheel,
    Helm,
    CompleteSun,
    CompleteSplit,
    Ladder,
    Grid,
    Prism,
};

inline constexpr std::array kAllFamilies = {
    Family::Path,  Family::Cycle,         Family::Complete,      Family::CompleteBipartite,
    Family::Wheel, Family::Helm,          Family::CompleteSun,   Family::CompleteSplit,
    Family::Ladder, Family::Grid,         Family::Prism,
};

class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A named family member plus the power to raise it to.
struct FamilySpec {
    Family family = Family::Path;
    std::vector<std::uint32_t> params;
    std::uint32_t power = 1;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string_view family_name(Family f) noexcept
{
    switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::Wheel: return "wheel";
    case Family::Helm: return "helm";
    case Family::CompleteSun: return "sun";
    case Family::CompleteSplit: return "split";
    case Family::Ladder: return "ladder";
    case Family::Grid: return "grid";
    case Family::Prism: return "prism";
    }
    return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name) noexcept
{
    for (Family f : kAllFamilies)
        if (family_name(f) == name)
            return f;
    if (name == "bipartite" || name == "complete_bipartite")
        return Family::CompleteBipartite;
    if (name == "complete-sun" || name == "complete_sun")
        return Family::CompleteSun;
    if (name == "complete-split" || name == "complete_split")
        return Family::CompleteSplit;
    return std::nullopt;
}

/// Names of the integer parameters, in the order FamilySpec::params holds them.
inline std::vector<std::string_view> parameter_names(Family f)
{
    switch (f) {
    case Family::CompleteBipartite: return {"m", "n"};
    case Family::CompleteSplit: return {"r", "s"};
    case Family::Grid: return {"rows", "cols"};
    default: return {"n"};
    }
}

/// Smallest admissible value of each parameter.
inline std::vector<std::uint32_t> parameter_minimums(Family f)
{
    switch (f) {
    case Family::Cycle:
    case Family::Wheel:
    case Family::Helm:
    case Family::CompleteSun:
    case Family::Prism: return {3};
    case Family::Ladder: return {2};
    case Family::CompleteBipartite:
    case Family::CompleteSplit:
    case Family::Grid: return {1, 1};
    default: return {1};
    }
}

inline void validate(const FamilySpec& spec)
{
    const auto names = parameter_names(spec.family);
    const auto mins = parameter_minimums(spec.family);
    const std::string family(family_name(spec.family));
    if (spec.params.size() != names.size())
        throw InvalidParameter(family + " takes " + std::to_string(names.size()) + " parameter(s), got " +
                               std::to_string(spec.params.size()));
    for (std::size_t i = 0; i < names.size(); ++i)
        if (spec.params[i] < mins[i])
            throw InvalidParameter(family + ": " + std::string(names[i]) + " must be >= " +
                                   std::to_string(mins[i]) + ", got " + std::to_string(spec.params[i]));
    if (spec.power == 0)
        throw InvalidParameter(family + ": power must be >= 1");
}

inline std::string describe(const FamilySpec& spec)
{
    std::string out(family_name(spec.family));
    out += '(';
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(spec.params[i]);
    }
    out += ')';
    if (spec.power != 1)
        out += "^" + std::to_string(spec.power);
    return out;
}

namespace detail {

inline void add_cycle(std::vector<Edge>& edges, Vertex first, Vertex count)
{
    for (Vertex i = 0; i < count; ++i)
        edges.push_back({first + i, first + (i + 1) % count});
}

inline void add_path(std::vector<Edge>& edges, Vertex first, Vertex count)
{
    for (Vertex i = 0; i + 1 < count; ++i)
        edges.push_back({first + i, first + i + 1});
}

} // namespace detail

/// Builds the family member named by spec, ignoring spec.power.
///
/// Vertex numbering:
///   path, cycle        0..n-1 in path/cycle order
///   complete-bipartite parts 0..m-1 and m..m+n-1
///   wheel              rim 0..n-1, hub n
///   helm               rim 0..n-1, pendant n+i on rim i, hub 2n
///   sun                clique u_j = j, w_j = n+j adjacent to u_j and u_{(j+1) mod n}
///   split              clique 0..r-1, independent set r..r+s-1
///   ladder, prism      rails 0..n-1 and n..2n-1, rung i -- n+i
///   grid               row-major, vertex = row*cols + col
inline Graph generate(const FamilySpec& spec)
{
    validate(spec);
    const auto& p = spec.params;
    std::vector<Edge> edges;
    switch (spec.family) {
    case Family::Path:
        detail::add_path(edges, 0, p[0]);
        return Graph(p[0], edges);
    case Family::Cycle:
        detail::add_cycle(edges, 0, p[0]);
        return Graph(p[0], edges);
    case Family::Complete:
        return complete_graph(p[0]);
    case Family::CompleteBipartite: {
        const Vertex m = p[0], n = p[1];
        for (Vertex i = 0; i < m; ++i)
            for (Vertex j = 0; j < n; ++j)
                edges.push_back({i, m + j});
        return Graph(m + n, edges);
    }
    case Family::Wheel: {
        const Vertex n = p[0];
        detail::add_cycle(edges, 0, n);
        for (Vertex i = 0; i < n; ++i)
            edges.push_back({i, n});
        return Graph(n + 1, edges);
    }
    case Family::Helm: {
        const Vertex n = p[0];
        detail::add_cycle(edges, 0, n);
        for (Vertex i = 0; i < n; ++i) {
            edges.push_back({i, n + i});
            edges.push_back({i, 2 * n});
        }
        return Graph(2 * n + 1, edges);
    }
    case Family::CompleteSun: {
        const Vertex n = p[0];
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                edges.push_back({i, j});
        for (Vertex j = 0; j < n; ++j) {
            edges.push_back({j, n + j});
            edges.push_back({(j + 1) % n, n + j});
        }
        return Graph(2 * n, edges);
    }
    case Family::CompleteSplit: {
        const Vertex r = p[0], s = p[1];
        for (Vertex i = 0; i < r; ++i)
            for (Vertex j = i + 1; j < r; ++j)
                edges.push_back({i, j});
        for (Vertex i = 0; i < r; ++i)
            for (Vertex j = 0; j < s; ++j)
                edges.push_back({i, r + j});
        return Graph(r + s, edges);
    }
    case Family::Ladder:
    case Family::Prism: {
        const Vertex n = p[0];
        if (spec.family == Family::Ladder) {
            detail::add_path(edges, 0, n);
            detail::add_path(edges, n, n);
        } else {
            detail::add_cycle(edges, 0, n);
            detail::add_cycle(edges, n, n);
        }
        for (Vertex i = 0; i < n; ++i)
            edges.push_back({i, n + i});
        return Graph(2 * n, edges);
    }
    case Family::Grid: {
        const Vertex rows = p[0], cols = p[1];
        for (Vertex r = 0; r < rows; ++r)
            for (Vertex c = 0; c < cols; ++c) {
                const Vertex v = r * cols + c;
                if (c + 1 < cols)
                    edges.push_back({v, v + 1});
                if (r + 1 < rows)
                    edges.push_back({v, v + cols});
            }
        return Graph(rows * cols, edges);
    }
    }
    throw InvalidParameter("unknown family");
}

/// generate() followed by graph_power(spec.power).
inline Graph instantiate(const FamilySpec& spec) { return graph_power(generate(spec), spec.power); }

} // namespace weakiasi
