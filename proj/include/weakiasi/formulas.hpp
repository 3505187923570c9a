#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weakiasi/families.hpp"

// Closed-form sparing numbers for the family powers with a known formula.
// The first row whose family matches and whose guard passes is used.

namespace weakiasi {

class FormulaConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct FormulaEntry {
    std::string_view id;
    Family family;
    std::string_view source;
    bool (*guard)(std::span<const std::uint32_t> params, std::uint32_t power);
    std::int64_t (*evaluate)(std::span<const std::uint32_t> params, std::uint32_t power);
};

namespace formula {

using P = std::span<const std::uint32_t>;

inline std::int64_t exact_div(std::int64_t num, std::int64_t den, std::string_view where)
{
    if (den == 0 || num % den != 0)
        throw FormulaConsistencyError(std::string(where) + ": " + std::to_string(num) + " is not divisible by " +
                                      std::to_string(den));
    return num / den;
}

/// (n-1)(n-2)/2, the sparing number of K_n.
inline std::int64_t complete(std::int64_t n) { return exact_div((n - 1) * (n - 2), 2, "complete"); }

inline std::int64_t cycle_power(std::int64_t n, std::int64_t r)
{
    const std::int64_t i = n % (r + 1);
    return exact_div(r * ((r - 1) * n + 2 * i), r + 1, "cycle-power");
}

inline std::int64_t path_power(std::int64_t n, std::int64_t r)
{
    const std::int64_t i = n % (r + 1);
    return exact_div((r - 1) * (r * (2 * n - 1 - r) + 2 * i), 2 * (r + 1), "path-power");
}

inline std::int64_t cycle_square(std::int64_t n)
{
    switch (n % 3) {
    case 0: return exact_div(2 * n, 3, "cycle-square");
    case 1: return exact_div(2 * (n + 2), 3, "cycle-square");
    default: return exact_div(2 * (n + 4), 3, "cycle-square");
    }
}

inline std::int64_t path_square(std::int64_t n)
{
    switch (n % 3) {
    case 0: return exact_div(2 * n - 3, 3, "path-square");
    case 1: return exact_div(2 * n - 2, 3, "path-square");
    default: return exact_div(2 * n - 1, 3, "path-square");
    }
}

inline const std::vector<FormulaEntry>& table()
{
    static const std::vector<FormulaEntry> rows = {
        {"complete-power", Family::Complete, "K_n^r = K_n; phi = (n-1)(n-2)/2",
         [](P, std::uint32_t) { return true; }, [](P p, std::uint32_t) { return complete(p[0]); }},

        {"cycle", Family::Cycle, "phi(C_n) = 1 for odd n, 0 for even n",
         [](P, std::uint32_t r) { return r == 1; }, [](P p, std::uint32_t) -> std::int64_t { return p[0] % 2; }},
        {"cycle-saturated", Family::Cycle, "C_n^r complete for r >= floor(n/2); phi = (n-1)(n-2)/2",
         [](P p, std::uint32_t r) { return r >= p[0] / 2; }, [](P p, std::uint32_t) { return complete(p[0]); }},
        {"cycle-square", Family::Cycle, "phi(C_n^2) = 2n/3, 2(n+2)/3, 2(n+4)/3 by n mod 3",
         [](P p, std::uint32_t r) { return r == 2 && p[0] >= 5; },
         [](P p, std::uint32_t) { return cycle_square(p[0]); }},
        {"cycle-power", Family::Cycle, "phi(C_n^r) = r((r-1)n + 2i)/(r+1), i = n mod (r+1), r < floor(n/2)",
         [](P p, std::uint32_t r) { return r >= 2 && r < p[0] / 2; },
         [](P p, std::uint32_t r) { return cycle_power(p[0], r); }},

        {"path-bipartite", Family::Path, "paths are bipartite; phi = 0",
         [](P, std::uint32_t r) { return r == 1; }, [](P, std::uint32_t) -> std::int64_t { return 0; }},
        {"path-saturated", Family::Path, "P_n^r complete for r >= n-1; phi = (n-1)(n-2)/2",
         [](P p, std::uint32_t r) { return r + 1 >= p[0]; }, [](P p, std::uint32_t) { return complete(p[0]); }},
        {"path-square", Family::Path, "phi(P_n^2) = (2n-3)/3, (2n-2)/3, (2n-1)/3 by n mod 3",
         [](P, std::uint32_t r) { return r == 2; }, [](P p, std::uint32_t) { return path_square(p[0]); }},
        {"path-power", Family::Path, "phi(P_n^r) = (r-1)(r(2n-1-r) + 2i)/(2(r+1)), i = n mod (r+1)",
         [](P p, std::uint32_t r) { return r >= 2 && r + 1 < p[0]; },
         [](P p, std::uint32_t r) { return path_power(p[0], r); }},

        {"complete-bipartite", Family::CompleteBipartite, "bipartite; phi = 0",
         [](P, std::uint32_t r) { return r == 1; }, [](P, std::uint32_t) -> std::int64_t { return 0; }},
        {"balanced-bipartite-square", Family::CompleteBipartite, "phi(K_{n,n}^2) = (n-1)(2n-1)",
         [](P p, std::uint32_t r) { return r == 2 && p[0] == p[1]; },
         [](P p, std::uint32_t) -> std::int64_t { return (std::int64_t{p[0]} - 1) * (2 * std::int64_t{p[0]} - 1); }},
        {"complete-bipartite-square", Family::CompleteBipartite, "phi(K_{m,n}^2) = (m+n-1)(m+n-2)/2",
         [](P, std::uint32_t r) { return r == 2; },
         [](P p, std::uint32_t) { return complete(std::int64_t{p[0]} + p[1]); }},
        {"complete-bipartite-power", Family::CompleteBipartite, "phi(K_{m,n}^r) = (m+n-1)(m+n-2)/2 for r >= 2",
         [](P, std::uint32_t r) { return r >= 2; },
         [](P p, std::uint32_t) { return complete(std::int64_t{p[0]} + p[1]); }},

        {"wheel-square", Family::Wheel, "phi(W_{n+1}^2) = n(n-1)/2", [](P, std::uint32_t r) { return r == 2; },
         [](P p, std::uint32_t) { return exact_div(std::int64_t{p[0]} * (p[0] - 1), 2, "wheel-square"); }},

        {"helm-square", Family::Helm, "phi(H_n^2) = n(n+1)/2", [](P, std::uint32_t r) { return r == 2; },
         [](P p, std::uint32_t) { return exact_div(std::int64_t{p[0]} * (p[0] + 1), 2, "helm-square"); }},
        {"helm-cube", Family::Helm, "phi(H_n^3) = floor(n/2)(n+3)", [](P, std::uint32_t r) { return r == 3; },
         [](P p, std::uint32_t) -> std::int64_t { return std::int64_t{p[0] / 2} * (p[0] + 3); }},
        {"helm-saturated", Family::Helm, "phi(H_n^r) = n(2n-1) for r >= 4", [](P, std::uint32_t r) { return r >= 4; },
         [](P p, std::uint32_t) -> std::int64_t { return std::int64_t{p[0]} * (2 * std::int64_t{p[0]} - 1); }},

        {"sun-square", Family::CompleteSun, "phi(S_n^2) = n^2+1 (n odd), n(2n-1)/2 (n even)",
         [](P, std::uint32_t r) { return r == 2; },
         [](P p, std::uint32_t) -> std::int64_t {
             const std::int64_t n = p[0];
             return n % 2 ? n * n + 1 : exact_div(n * (2 * n - 1), 2, "sun-square");
         }},

        {"split-square", Family::CompleteSplit, "phi(K_S(r,s)^2) = (r+s-1)(r+s-2)/2",
         [](P, std::uint32_t r) { return r == 2; },
         [](P p, std::uint32_t) { return complete(std::int64_t{p[0]} + p[1]); }},
        {"split-power", Family::CompleteSplit, "phi(K_S(r,s)^k) = (r+s-1)(r+s-2)/2 for k >= 3",
         [](P, std::uint32_t r) { return r >= 3; },
         [](P p, std::uint32_t) { return complete(std::int64_t{p[0]} + p[1]); }},
    };
    return rows;
}

} // namespace formula

/// The table row that applies to spec, if any.
inline const FormulaEntry* match_formula(const FamilySpec& spec)
{
    validate(spec);
    for (const auto& row : formula::table())
        if (row.family == spec.family && row.guard(spec.params, spec.power))
            return &row;
    return nullptr;
}

/// Closed-form sparing number of the given family power, or nullopt where
/// no formula is known (ladders, grids, prisms, unlisted powers).
inline std::optional<std::int64_t> evaluate_formula(const FamilySpec& spec)
{
    if (const FormulaEntry* row = match_formula(spec))
        return row->evaluate(spec.params, spec.power);
    return std::nullopt;
}

} // namespace weakiasi
