#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weakiasi/certificate.hpp"
#include "weakiasi/families.hpp"
#include "weakiasi/formulas.hpp"
#include "weakiasi/io.hpp"
#include "weakiasi/sparing.hpp"
#include "weakiasi/verify.hpp"

// Command-line front end. run() is the whole program; tools/weakiasi.cpp
// only forwards argv to it.

namespace weakiasi::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "7", "3..9" or "2,5,8".
inline std::vector<std::uint32_t> parse_range(const std::string& text)
{
    auto number = [&](const std::string& tok) -> std::uint32_t {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw UsageError("'" + text + "' is not an integer, range a..b or list a,b,c");
        return v;
    };
    std::vector<std::uint32_t> out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const auto lo = number(text.substr(0, dots));
        const auto hi = number(text.substr(dots + 2));
        if (lo > hi)
            throw UsageError("empty range '" + text + "'");
        for (std::uint32_t v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    }
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        out.push_back(number(tok));
    if (out.empty())
        throw UsageError("empty value");
    return out;
}

/// Family-selection flags shared by every subcommand.
struct FamilyArgs {
    std::vector<std::string> families;
    std::string n, m, r, s, rows, cols;
    std::string power = "1";
    std::string input;

    void attach(CLI::App* app, bool many_families)
    {
        if (many_families)
            app->add_option("--family", families, "graph family (repeatable)");
        else
            app->add_option("--family", families, "graph family")->expected(1);
        app->add_option("--n", n, "vertex/rim/clique count (first parameter for most families)");
        app->add_option("--m", m, "first part size of complete-bipartite");
        app->add_option("--r", r, "clique size of split");
        app->add_option("--s", s, "independent-set size of split");
        app->add_option("--rows", rows, "grid rows");
        app->add_option("--cols", cols, "grid columns");
        app->add_option("--power", power, "graph power r >= 1");
        app->add_option("--input", input, "edge-list file instead of a family");
    }

    const std::string& flag(std::string_view name) const
    {
        if (name == "n")
            return n;
        if (name == "m")
            return m;
        if (name == "r")
            return r;
        if (name == "s")
            return s;
        if (name == "rows")
            return rows;
        return cols;
    }

    /// Cartesian product of every parameter range (and the power range).
    std::vector<FamilySpec> expand() const
    {
        if (families.empty())
            throw UsageError("--family or --input is required");
        std::vector<FamilySpec> out;
        const auto powers = parse_range(power);
        for (const auto& name : families) {
            const auto family = parse_family(name);
            if (!family)
                throw UsageError("unknown family '" + name + "'");
            std::vector<std::vector<std::uint32_t>> ranges;
            for (auto param : parameter_names(*family)) {
                const std::string& value = flag(param);
                if (value.empty())
                    throw UsageError(std::string(family_name(*family)) + " requires --" + std::string(param));
                ranges.push_back(parse_range(value));
            }
            std::vector<std::size_t> idx(ranges.size(), 0);
            while (true) {
                for (auto p : powers) {
                    FamilySpec spec{*family, {}, p};
                    for (std::size_t k = 0; k < ranges.size(); ++k)
                        spec.params.push_back(ranges[k][idx[k]]);
                    validate(spec);
                    out.push_back(std::move(spec));
                }
                std::size_t k = ranges.size();
                while (k > 0 && ++idx[k - 1] == ranges[k - 1].size())
                    idx[--k] = 0;
                if (k == 0)
                    break;
            }
        }
        return out;
    }

    FamilySpec single() const
    {
        auto specs = expand();
        if (specs.size() != 1)
            throw UsageError("expected exactly one graph, the flags describe " + std::to_string(specs.size()));
        return specs.front();
    }

    std::uint32_t single_power() const
    {
        const auto p = parse_range(power);
        if (p.size() != 1 || p[0] == 0)
            throw UsageError("--power must be a single integer >= 1");
        return p[0];
    }

    /// The graph to work on, and its family description when it has one.
    std::pair<Graph, std::optional<FamilySpec>> load() const
    {
        if (!input.empty()) {
            if (!families.empty())
                throw UsageError("--input and --family are mutually exclusive");
            std::ifstream in(input);
            if (!in)
                throw std::runtime_error("cannot open " + input);
            return {graph_power(read_edge_list(in), single_power()), std::nullopt};
        }
        const auto spec = single();
        return {instantiate(spec), spec};
    }
};

inline void write_output(const std::string& path, std::ostream& fallback, const std::string& text)
{
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

inline std::string vertex_list(const std::vector<Vertex>& vs)
{
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        out += (i ? " " : "") + std::to_string(vs[i]);
    return out;
}

inline void check_certificate(const WeakIasiCertificate& cert, std::size_t expected_mono)
{
    const auto report = validate_certificate(cert);
    if (!report.ok())
        throw std::logic_error("certificate failed validation: " + report.summary());
    if (cert.mono_edge_count != expected_mono)
        throw std::logic_error("certificate mono count does not match the reported value");
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Sparing numbers of weak integer-additive set-indexed graphs and their powers", "weakiasi"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string out_path;
    std::string format;
    bool with_certificate = false;
    int seed = 0;

    // gen
    FamilyArgs gen_args;
    auto* gen = app.add_subcommand("gen", "write a family member (optionally powered) as an edge list");
    gen_args.attach(gen, false);
    gen->add_option("--out", out_path, "output path (stdout if omitted)");

    // power
    FamilyArgs power_args;
    auto* power = app.add_subcommand("power", "raise an edge-list graph or family member to a power");
    power_args.attach(power, false);
    power->add_option("--out", out_path, "output path (stdout if omitted)");

    // sparing
    FamilyArgs sparing_args;
    auto* sparing = app.add_subcommand("sparing", "exact sparing number with witness");
    sparing_args.attach(sparing, false);
    sparing->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sparing->add_flag("--certificate", with_certificate, "include the full labeling");
    sparing->add_option("--out", out_path, "output path (stdout if omitted)");

    // label
    FamilyArgs label_args;
    std::string set_text = "auto";
    auto* label = app.add_subcommand("label", "weak IASI labeling for a given or optimal independent set");
    label_args.attach(label, false);
    label->add_option("--set", set_text, "non-singleton vertices, e.g. 0,2; 'auto' picks an optimal set");
    label->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    label->add_option("--out", out_path, "output path (stdout if omitted)");

    // verify
    FamilyArgs verify_args;
    std::string preset;
    auto* verify = app.add_subcommand("verify", "compare closed-form formulas with the exact oracle");
    verify_args.attach(verify, true);
    verify->add_option("--preset", preset, "'audit' sweeps every family with a formula and the open problems")
        ->check(CLI::IsMember({"audit"}));
    verify->add_option("--out", out_path, "report prefix; writes <prefix>.json and <prefix>.csv")->required();
    verify->add_option("--format", format, "json, csv or both (default)")->check(CLI::IsMember({"json", "csv"}));

    for (auto* sub : {gen, power, sparing, label, verify})
        sub->add_option("--seed", seed, "reserved for randomized runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (gen->parsed()) {
            const auto spec = gen_args.single();
            write_output(out_path, out, to_edge_list(instantiate(spec)));
        } else if (power->parsed()) {
            write_output(out_path, out, to_edge_list(power_args.load().first));
        } else if (sparing->parsed()) {
            const auto [g, spec] = sparing_args.load();
            const SparingResult result = spec ? sparing_number(*spec) : sparing_number(g);
            check_certificate(result.certificate, result.value);
            nlohmann::json formula = nullptr;
            if (const auto f = spec ? evaluate_formula(*spec) : std::nullopt)
                formula = *f;
            if (format == "json") {
                nlohmann::json j = {
                    {"graph", spec ? describe(*spec) : sparing_args.input},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()},
                    {"value", result.value},
                    {"witness", result.witness_independent_set},
                    {"solver", result.solver},
                    {"formula", formula},
                };
                if (with_certificate)
                    j["certificate"] = labeling_to_json(result.certificate);
                write_output(out_path, out, j.dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << "graph: " << (spec ? describe(*spec) : sparing_args.input) << "  vertices=" << g.vertex_count()
                     << " edges=" << g.edge_count() << "\n";
                text << "sparing number: " << result.value << "\n";
                text << "non-singleton vertices: " << vertex_list(result.witness_independent_set) << "\n";
                text << "solver: " << result.solver << "\n";
                if (spec)
                    text << "formula: " << (formula.is_null() ? std::string("none") : formula.dump()) << "\n";
                if (with_certificate) {
                    for (Vertex v = 0; v < g.vertex_count(); ++v)
                        text << "  f(" << v << ") = " << result.certificate.labeling.labels[v].to_string() << "\n";
                    text << "mono-indexed edges:";
                    for (const Edge& e : result.certificate.mono_edges())
                        text << " " << e.u << "-" << e.v;
                    text << "\n";
                }
                write_output(out_path, out, text.str());
            }
        } else if (label->parsed()) {
            const auto [g, spec] = label_args.load();
            WeakIasiCertificate cert;
            if (set_text == "auto") {
                cert = (spec ? sparing_number(*spec) : sparing_number(g)).certificate;
            } else {
                std::vector<Vertex> set;
                if (!set_text.empty() && set_text != "none")
                    for (auto v : parse_range(set_text))
                        set.push_back(v);
                for (Vertex v : set)
                    if (v >= g.vertex_count())
                        throw UsageError("vertex " + std::to_string(v) + " is not in the graph");
                cert = construct_certificate(g, set);
            }
            check_certificate(cert, cert.mono_edge_count);
            if (format == "dot") {
                std::ostringstream dot;
                write_dot(dot, cert);
                write_output(out_path, out, dot.str());
            } else {
                write_output(out_path, out, labeling_to_json(cert).dump(2) + "\n");
            }
        } else if (verify->parsed()) {
            RunManifest manifest;
            std::vector<FamilySpec> specs;
            if (!preset.empty()) {
                specs = audit_sweep();
                manifest.sweep.push_back({{"preset", preset}});
            }
            if (!verify_args.families.empty()) {
                auto more = verify_args.expand();
                specs.insert(specs.end(), more.begin(), more.end());
                manifest.sweep.push_back({{"families", verify_args.families},
                                          {"n", verify_args.n},
                                          {"m", verify_args.m},
                                          {"r", verify_args.r},
                                          {"s", verify_args.s},
                                          {"rows", verify_args.rows},
                                          {"cols", verify_args.cols},
                                          {"power", verify_args.power}});
            }
            if (specs.empty())
                throw UsageError("verify needs --family or --preset");
            manifest.timestamp = utc_timestamp();
            manifest.records = verify_all(specs);
            if (format.empty() || format == "json")
                write_output(out_path + ".json", out, manifest.to_json().dump(2) + "\n");
            if (format.empty() || format == "csv") {
                std::ostringstream csv;
                write_csv(csv, manifest.records);
                write_output(out_path + ".csv", out, csv.str());
            }
            out << summary_line(summarize(manifest.records)) << "\n";
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParameter& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace weakiasi::cli
