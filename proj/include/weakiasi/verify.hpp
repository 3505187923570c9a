#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "weakiasi/families.hpp"
#include "weakiasi/formulas.hpp"
#include "weakiasi/sparing.hpp"

namespace weakiasi {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class RecordStatus { Match, Mismatch, NoFormula };

inline std::string_view status_name(RecordStatus s) noexcept
{
    switch (s) {
    case RecordStatus::Match: return "Match";
    case RecordStatus::Mismatch: return "Mismatch";
    case RecordStatus::NoFormula: return "NoFormula";
    }
    return "unknown";
}

/// One formula-versus-oracle comparison.
struct VerificationRecord {
    std::string family;
    std::vector<std::uint32_t> params;
    std::uint32_t power = 1;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::optional<std::int64_t> formula_value;
    std::int64_t oracle_value = 0;
    std::optional<std::int64_t> delta; // formula - oracle
    RecordStatus status = RecordStatus::NoFormula;

    std::string formula_id;
    std::vector<Vertex> witness;
    std::int64_t witness_weight = 0;
    bool certificate_valid = false;
    std::string note;
};

/// Extra context for the rows whose statement and derivation disagree.
inline std::string record_note(const FamilySpec& spec, std::size_t edges, std::optional<std::int64_t> formula)
{
    if (spec.family == Family::CompleteBipartite && spec.power == 2) {
        const std::int64_t k = std::int64_t{spec.params[0]} + spec.params[1] - 1;
        std::ostringstream note;
        note << "stated (m+n-1)(m+n-1)/2 = " << k * k << "/2";
        if (k * k % 2 == 0)
            note << " = " << k * k / 2;
        note << "; table uses (m+n-1)(m+n-2)/2";
        return note.str();
    }
    if (spec.family == Family::Helm && spec.power == 3 && formula)
        return "|E| - formula = " + std::to_string(static_cast<std::int64_t>(edges) - *formula) +
               " (formula counted as non-mono edges)";
    return {};
}

inline VerificationRecord verify_instance(const FamilySpec& spec, const SparingOptions& options = {})
{
    const SparingResult result = sparing_number(spec, options);
    const Graph& g = result.certificate.graph();

    VerificationRecord rec;
    rec.family = std::string(family_name(spec.family));
    rec.params = spec.params;
    rec.power = spec.power;
    rec.vertices = g.vertex_count();
    rec.edges = g.edge_count();
    rec.oracle_value = static_cast<std::int64_t>(result.value);
    rec.witness = result.witness_independent_set;
    rec.witness_weight = static_cast<std::int64_t>(total_weight(degree_weights(g), rec.witness));
    rec.certificate_valid = validate_certificate(result.certificate).ok() &&
                            result.certificate.mono_edge_count == result.value;

    if (const FormulaEntry* row = match_formula(spec)) {
        rec.formula_id = std::string(row->id);
        rec.formula_value = row->evaluate(spec.params, spec.power);
        rec.delta = *rec.formula_value - rec.oracle_value;
        rec.status = *rec.delta == 0 ? RecordStatus::Match : RecordStatus::Mismatch;
    }
    rec.note = record_note(spec, rec.edges, rec.formula_value);
    return rec;
}

inline std::vector<VerificationRecord> verify_all(const std::vector<FamilySpec>& specs,
                                                  const SparingOptions& options = {})
{
    std::vector<VerificationRecord> out;
    out.reserve(specs.size());
    for (const auto& spec : specs)
        out.push_back(verify_instance(spec, options));
    return out;
}

struct RecordSummary {
    std::size_t match = 0;
    std::size_t mismatch = 0;
    std::size_t no_formula = 0;
};

inline RecordSummary summarize(const std::vector<VerificationRecord>& records)
{
    RecordSummary s;
    for (const auto& r : records) {
        switch (r.status) {
        case RecordStatus::Match: ++s.match; break;
        case RecordStatus::Mismatch: ++s.mismatch; break;
        case RecordStatus::NoFormula: ++s.no_formula; break;
        }
    }
    return s;
}

inline std::string summary_line(const RecordSummary& s)
{
    return "records=" + std::to_string(s.match + s.mismatch + s.no_formula) + " Match=" + std::to_string(s.match) +
           " Mismatch=" + std::to_string(s.mismatch) + " NoFormula=" + std::to_string(s.no_formula);
}

inline std::string join_params(const std::vector<std::uint32_t>& params, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(params[i]);
    }
    return out;
}

inline constexpr std::string_view kCsvHeader = "family,params,power,vertices,edges,formula,oracle,delta,status";

/// Parameters are joined with ';' so every row keeps nine fields.
inline void write_csv(std::ostream& out, const std::vector<VerificationRecord>& records)
{
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.family << ',' << join_params(r.params, ';') << ',' << r.power << ',' << r.vertices << ','
            << r.edges << ',';
        if (r.formula_value)
            out << *r.formula_value;
        out << ',' << r.oracle_value << ',';
        if (r.delta)
            out << *r.delta;
        out << ',' << status_name(r.status) << '\n';
    }
}

inline nlohmann::json record_to_json(const VerificationRecord& r)
{
    nlohmann::json j = {
        {"family", r.family},
        {"params", r.params},
        {"power", r.power},
        {"vertices", r.vertices},
        {"edges", r.edges},
        {"formula", r.formula_value ? nlohmann::json(*r.formula_value) : nlohmann::json(nullptr)},
        {"oracle", r.oracle_value},
        {"delta", r.delta ? nlohmann::json(*r.delta) : nlohmann::json(nullptr)},
        {"status", status_name(r.status)},
        {"formula_id", r.formula_id},
        {"witness", r.witness},
        {"witness_weight", r.witness_weight},
        {"certificate_valid", r.certificate_valid},
    };
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

inline std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

/// Whole-run document: tool version, sweep description, timestamp, records.
struct RunManifest {
    std::string tool_version = std::string(kToolVersion);
    nlohmann::json sweep = nlohmann::json::array();
    std::string timestamp;
    std::vector<VerificationRecord> records;

    nlohmann::json to_json() const
    {
        nlohmann::json recs = nlohmann::json::array();
        for (const auto& r : records)
            recs.push_back(record_to_json(r));
        const auto s = summarize(records);
        return {
            {"tool", "weakiasi"},
            {"version", tool_version},
            {"timestamp", timestamp},
            {"sweep", sweep},
            {"summary", {{"match", s.match}, {"mismatch", s.mismatch}, {"no_formula", s.no_formula}}},
            {"records", recs},
        };
    }
};

/// Every family power with a closed form, plus the open-problem families,
/// over the ranges the audit covers.
inline std::vector<FamilySpec> audit_sweep()
{
    std::vector<FamilySpec> specs;
    auto add = [&](Family f, std::vector<std::uint32_t> params, std::uint32_t power) {
        specs.push_back({f, std::move(params), power});
    };
    for (std::uint32_t n = 3; n <= 10; ++n)
        for (std::uint32_t r = 1; r <= 3; ++r)
            add(Family::Complete, {n}, r);
    for (std::uint32_t n = 3; n <= 12; ++n)
        add(Family::Cycle, {n}, 1);
    for (std::uint32_t n = 3; n <= 15; ++n)
        add(Family::Cycle, {n}, 2);
    for (std::uint32_t n = 5; n <= 16; ++n)
        for (std::uint32_t r = 3; r < n / 2; ++r)
            add(Family::Cycle, {n}, r);
    for (std::uint32_t n = 2; n <= 7; ++n)
        add(Family::Path, {n}, 1);
    for (std::uint32_t r = 2; r <= 3; ++r)
        for (std::uint32_t n = 3; n <= 12; ++n)
            add(Family::Path, {n}, r);
    for (std::uint32_t r = 1; r <= 3; ++r)
        for (std::uint32_t m = 1; m <= 6; ++m)
            for (std::uint32_t n = 1; n <= 6; ++n)
                add(Family::CompleteBipartite, {m, n}, r);
    for (std::uint32_t n = 3; n <= 10; ++n)
        add(Family::Wheel, {n}, 2);
    for (std::uint32_t n = 3; n <= 11; ++n)
        add(Family::Helm, {n}, 2);
    for (std::uint32_t r = 3; r <= 4; ++r)
        for (std::uint32_t n = 3; n <= 8; ++n)
            add(Family::Helm, {n}, r);
    for (std::uint32_t n = 3; n <= 8; ++n)
        add(Family::CompleteSun, {n}, 2);
    for (std::uint32_t k = 2; k <= 3; ++k)
        for (std::uint32_t r = 1; r <= 5; ++r)
            for (std::uint32_t s = 1; s <= 5; ++s)
                add(Family::CompleteSplit, {r, s}, k);
    for (std::uint32_t p = 2; p <= 3; ++p) {
        for (std::uint32_t n = 2; n <= 6; ++n)
            add(Family::Ladder, {n}, p);
        for (std::uint32_t rows = 2; rows <= 3; ++rows)
            for (std::uint32_t cols = 2; cols <= 4; ++cols)
                add(Family::Grid, {rows, cols}, p);
        for (std::uint32_t n = 3; n <= 6; ++n)
            add(Family::Prism, {n}, p);
    }
    return specs;
}

} // namespace weakiasi
