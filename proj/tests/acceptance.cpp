// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "weakiasi/cli.hpp"
#include "weakiasi/weakiasi.hpp"

using namespace weakiasi;
namespace fs = std::filesystem;

namespace {

struct Check {
    bool ok = true;
    std::size_t cases = 0;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what)
    {
        ++cases;
        if (!cond) {
            if (ok)
                detail << what;
            ok = false;
        }
    }
};

// Certificates met in criteria 1-7; criterion 8 reports on these.
struct CertificateLog {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    void record(const std::string& name, const SparingResult& r)
    {
        ++checked;
        const auto report = validate_certificate(r.certificate);
        if (!report.ok() || r.certificate.mono_edge_count != r.value)
            failures.push_back(name + ": " + report.summary());
    }
} certs;

SparingResult phi(const FamilySpec& spec)
{
    auto r = sparing_number(spec);
    certs.record(describe(spec), r);
    return r;
}

SparingResult phi(const Graph& g, const std::string& name)
{
    auto r = sparing_number(g);
    certs.record(name, r);
    return r;
}

std::string str(std::int64_t expected, std::int64_t got)
{
    return "expected " + std::to_string(expected) + ", got " + std::to_string(got);
}

std::int64_t value(const FamilySpec& spec) { return static_cast<std::int64_t>(phi(spec).value); }

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "weakiasi");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json verify_records(const std::vector<std::string>& args, const fs::path& prefix, Check& c)
{
    auto full = args;
    full.insert(full.begin(), "verify");
    full.push_back("--out");
    full.push_back(prefix.string());
    const auto r = cli_run(full);
    c.expect(r.code == 0, "verify exited " + std::to_string(r.code) + ": " + r.err);
    if (r.code != 0)
        return nlohmann::json::array();
    std::ifstream in(prefix.string() + ".json");
    return nlohmann::json::parse(in).at("records");
}

// Each record's oracle value must be reproducible from its witness, and its
// certificate must have validated.
void check_record(const nlohmann::json& rec, Check& c)
{
    const FamilySpec spec{*parse_family(rec.at("family").get<std::string>()),
                          rec.at("params").get<std::vector<std::uint32_t>>(), rec.at("power").get<std::uint32_t>()};
    const Graph g = instantiate(spec);
    const auto witness = rec.at("witness").get<std::vector<Vertex>>();
    const auto oracle = rec.at("oracle").get<std::int64_t>();
    c.expect(is_independent(g, witness), describe(spec) + ": witness not independent");
    c.expect(oracle == static_cast<std::int64_t>(g.edge_count() - total_weight(degree_weights(g), witness)),
             describe(spec) + ": oracle does not match witness");
    c.expect(rec.at("certificate_valid").get<bool>(), describe(spec) + ": certificate invalid");
    ++certs.checked;
    if (!rec.at("certificate_valid").get<bool>())
        certs.failures.push_back(describe(spec));
    const auto& formula = rec.at("formula");
    const auto& delta = rec.at("delta");
    const std::string status = rec.at("status");
    if (formula.is_null()) {
        c.expect(status == "NoFormula" && delta.is_null(), describe(spec) + ": bad NoFormula row");
    } else {
        const std::int64_t d = formula.get<std::int64_t>() - oracle;
        c.expect(delta.get<std::int64_t>() == d, describe(spec) + ": wrong delta");
        c.expect(status == (d == 0 ? "Match" : "Mismatch"), describe(spec) + ": wrong status " + status);
    }
}

fs::path scratch_dir()
{
    const fs::path p = fs::temp_directory_path() / ("weakiasi-acceptance-" + std::to_string(std::random_device{}()));
    fs::create_directories(p);
    return p;
}

Check keystone()
{
    Check c;
    const auto start = std::chrono::steady_clock::now();
    for (const Graph& g : oracle::connected_graphs(5)) {
        std::ostringstream name;
        name << g.vertex_count() << "-vertex graph with edges";
        for (const Edge& e : g.edges())
            name << " " << e.u << "-" << e.v;
        const auto exhaustive = exhaustive_min_mono(g, 9, 2);
        const auto r = phi(g, name.str());
        c.expect(exhaustive == r.value, name.str() + ": " +
                                            str(static_cast<std::int64_t>(exhaustive),
                                                static_cast<std::int64_t>(r.value)));
    }
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 300, "took " + std::to_string(seconds) + " s");
    c.detail << (c.ok ? "" : "; ") << c.cases - 1 << " graphs in " << seconds << " s";
    return c;
}

Check base_families()
{
    Check c;
    for (std::uint32_t n = 3; n <= 10; ++n) {
        const std::int64_t expected = (n - 1) * (n - 2) / 2;
        c.expect(value({Family::Complete, {n}}) == expected, "K_" + std::to_string(n));
    }
    for (std::uint32_t n = 3; n <= 12; ++n)
        c.expect(value({Family::Cycle, {n}}) == n % 2, "C_" + std::to_string(n));
    std::size_t trees = 0;
    for (std::size_t n = 2; n <= 7; ++n)
        for (const Graph& t : oracle::labelled_trees(n)) {
            ++trees;
            c.expect(phi(t, "tree").value == 0, "tree on " + std::to_string(n) + " vertices");
        }
    c.detail << (c.ok ? "" : "; ") << trees << " labelled trees";
    return c;
}

Check cycle_powers()
{
    Check c;
    for (std::uint32_t n = 5; n <= 15; ++n) {
        const FamilySpec spec{Family::Cycle, {n}, 2};
        const auto f = evaluate_formula(spec);
        c.expect(f && *f == value(spec), describe(spec));
    }
    for (std::uint32_t n = 5; n <= 16; ++n)
        for (std::uint32_t r = 2; r < n / 2; ++r) {
            const FamilySpec spec{Family::Cycle, {n}, r};
            const auto f = evaluate_formula(spec);
            c.expect(f && *f == value(spec), describe(spec));
        }
    c.expect(value({Family::Cycle, {12}, 2}) == 8, "C_12^2");
    c.expect(value({Family::Cycle, {7}, 2}) == 6, "C_7^2");
    c.expect(value({Family::Cycle, {10}, 3}) == 18, "C_10^3");
    return c;
}

Check complete_reductions()
{
    Check c;
    for (std::uint32_t n = 3; n <= 10; ++n)
        c.expect(value({Family::Wheel, {n}, 2}) == n * (n - 1) / 2, "wheel " + std::to_string(n));
    for (std::uint32_t m = 1; m <= 6; ++m)
        for (std::uint32_t n = 1; n <= 6; ++n) {
            const std::int64_t k = m + n;
            const std::int64_t expected = (k - 1) * (k - 2) / 2;
            const std::int64_t sq = value({Family::CompleteBipartite, {m, n}, 2});
            c.expect(sq == expected, "K_{" + std::to_string(m) + "," + std::to_string(n) + "}^2 " + str(expected, sq));
            for (std::uint32_t r = 3; r <= 5; ++r)
                c.expect(value({Family::CompleteBipartite, {m, n}, r}) == sq, "K_{m,n}^r not constant");
        }
    for (std::uint32_t r = 1; r <= 5; ++r)
        for (std::uint32_t s = 1; s <= 5; ++s) {
            const std::int64_t k = r + s;
            c.expect(value({Family::CompleteSplit, {r, s}, 2}) == (k - 1) * (k - 2) / 2, "split square");
        }
    for (std::uint32_t n = 3; n <= 10; ++n)
        for (std::uint32_t r = 1; r <= 4; ++r) {
            c.expect(instantiate({Family::Complete, {n}, r}) == complete_graph(n), "K_n^r graph");
            c.expect(value({Family::Complete, {n}, r}) == (n - 1) * (n - 2) / 2, "K_n^r value");
        }
    return c;
}

Check sun_squares()
{
    Check c;
    for (std::uint32_t n : {3U, 5U, 7U})
        c.expect(value({Family::CompleteSun, {n}, 2}) == n * n + 1, "sun " + std::to_string(n));
    for (std::uint32_t n : {4U, 6U, 8U})
        c.expect(value({Family::CompleteSun, {n}, 2}) == n * (2 * n - 1) / 2, "sun " + std::to_string(n));
    return c;
}

Check helm_squares(const fs::path& dir)
{
    Check c;
    for (std::uint32_t n = 3; n <= 9; ++n)
        c.expect(value({Family::Helm, {n}, 2}) == n * (n + 1) / 2, "helm " + std::to_string(n));
    const auto records =
        verify_records({"--family", "helm", "--n", "10..11", "--power", "2"}, dir / "helm", c);
    c.expect(records.size() == 2, "expected 2 records");
    std::ostringstream seen;
    for (const auto& rec : records) {
        check_record(rec, c);
        seen << "; helm " << rec.at("params")[0] << ": formula " << rec.at("formula") << " oracle "
             << rec.at("oracle") << " " << rec.at("status").get<std::string>();
    }
    c.detail << seen.str().substr(c.ok ? 2 : 0);
    return c;
}

Check path_audit(const fs::path& dir)
{
    Check c;
    const auto records =
        verify_records({"--family", "path", "--n", "3..12", "--power", "2..3"}, dir / "path", c);
    c.expect(records.size() == 20, "expected 20 records");
    std::size_t mismatches = 0;
    bool p4 = false;
    for (const auto& rec : records) {
        check_record(rec, c);
        c.expect(!rec.at("formula").is_null(), "path record without formula");
        mismatches += rec.at("status") == "Mismatch";
        if (rec.at("params")[0] == 4 && rec.at("power") == 2) {
            p4 = rec.at("formula") == 2 && rec.at("oracle") == 1 && rec.at("delta") == 1 &&
                 rec.at("status") == "Mismatch";
        }
    }
    c.expect(p4, "P_4^2 not flagged with delta 1");
    const Graph p4sq = instantiate({Family::Path, {4}, 2});
    c.expect(exhaustive_min_mono(p4sq, 9, 2) == 1, "exhaustive P_4^2");
    c.detail << (c.ok ? "" : "; ") << mismatches << " of " << records.size() << " flagged Mismatch";
    return c;
}

Check certificates()
{
    Check c;
    for (const auto& f : certs.failures)
        c.expect(false, f);
    c.expect(certs.checked > 0, "nothing checked");
    c.detail << (c.ok ? "" : "; ") << certs.checked << " certificates";
    return c;
}

Check solver_equivalence()
{
    Check c;
    std::mt19937_64 rng(20241017);
    std::uniform_int_distribution<std::size_t> size(1, 16);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    std::uniform_int_distribution<Weight> weight(0, 10);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = oracle::random_graph(rng, size(rng), density(rng));
        std::vector<Weight> w(g.vertex_count());
        for (auto& x : w)
            x = weight(rng);
        const WeightedInstance inst(g, w);
        c.expect(mwis_branch_bound(inst) == mwis_bitmask(inst), "random trial " + std::to_string(trial));
    }
    for (std::uint32_t n = 1; n <= 14; ++n)
        for (std::uint32_t r = 1; r < std::max<std::uint32_t>(n, 2); ++r) {
            const Graph g = instantiate({Family::Path, {n}, r});
            const auto w = degree_weights(g);
            c.expect(mwis_path_power(n, r, w) == mwis_bitmask(WeightedInstance(g, w)),
                     "P_" + std::to_string(n) + "^" + std::to_string(r));
        }
    for (std::uint32_t n = 5; n <= 14; ++n)
        for (std::uint32_t r = 1; r < n / 2; ++r) {
            const Graph g = instantiate({Family::Cycle, {n}, r});
            const auto w = degree_weights(g);
            c.expect(mwis_cycle_power(n, r, w) == mwis_bitmask(WeightedInstance(g, w)),
                     "C_" + std::to_string(n) + "^" + std::to_string(r));
        }
    return c;
}

Check parity()
{
    Check c;
    std::size_t labelings = 0;
    for (std::uint32_t n : {3U, 5U, 7U, 9U}) {
        const Graph cyc = generate({Family::Cycle, {n}});
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            std::vector<Vertex> set;
            for (Vertex v = 0; v < n; ++v)
                if (mask >> v & 1U)
                    set.push_back(v);
            if (is_independent(cyc, set))
                c.expect((n - 2 * set.size()) % 2 == 1, "independent set parity on C_" + std::to_string(n));
        }
        for (const auto& cert : feasible_labelings(cyc, 9, 2)) {
            ++labelings;
            c.expect(validate_certificate(cert).ok(), "exhaustive certificate invalid");
            c.expect(cert.mono_edge_count % 2 == 1, "even mono count on C_" + std::to_string(n));
        }
    }
    c.detail << (c.ok ? "" : "; ") << labelings << " exhaustive certificates";
    return c;
}

Check open_sweep(const fs::path& dir)
{
    Check c;
    nlohmann::json all = nlohmann::json::array();
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--family", "ladder", "--n", "2..6", "--power", "2..3"},
             {"--family", "grid", "--rows", "1..3", "--cols", "1..4", "--power", "2..3"},
             {"--family", "prism", "--n", "3..6", "--power", "2..3"}}) {
        for (auto& rec : verify_records(args, dir / args[1], c))
            all.push_back(rec);
    }
    for (const auto& rec : all) {
        check_record(rec, c);
        c.expect(rec.at("status") == "NoFormula", "unexpected formula");
        c.expect(rec.at("oracle").is_number_integer(), "oracle missing");
    }
    c.expect(all.size() == 10 + 24 + 8, "expected 42 records");
    c.detail << (c.ok ? "" : "; ") << all.size() << " records";
    return c;
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    const fs::path dir = scratch_dir();

    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"1 keystone: exhaustive labelling = MWIS reduction on connected graphs up to 5 vertices", keystone},
        {"2 complete graphs, cycles and trees", base_families},
        {"3 cycle squares and powers", cycle_powers},
        {"4 diameter reductions to complete graphs", complete_reductions},
        {"5 complete sun squares", sun_squares},
        {"6 helm squares", [&] { return helm_squares(dir); }},
        {"7 path power audit through verify", [&] { return path_audit(dir); }},
        {"8 certificate validity", certificates},
        {"9 solver cross-equivalence", solver_equivalence},
        {"10 odd cycle parity", parity},
        {"11 ladder, grid and prism sweep", [&] { return open_sweep(dir); }},
    };

    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Check c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        failed += !c.ok;
        std::cout << (c.ok ? "PASS" : "FAIL") << "  " << name << "  (" << c.cases << " checks";
        if (const auto d = c.detail.str(); !d.empty())
            std::cout << "; " << d;
        std::cout << ")" << std::endl;
    }

    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "total " << seconds << " s" << (seconds < 600 ? "" : " (over the 10 minute budget)") << "\n";
    fs::remove_all(dir);
    return failed == 0 && seconds < 600 ? 0 : 1;
}
