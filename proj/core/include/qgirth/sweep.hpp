#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgirth/family.hpp"
#include "qgirth/graph.hpp"
#include "qgirth/projective.hpp"

namespace qgirth {

/// X: primes with legendre(p,q) = -1 (bipartite branch);
/// Y: primes with legendre(p,q) = +1 (non-bipartite branch).
enum class Branch { X, Y };

std::string to_string(Branch b);

struct FamilyQuery {
    std::uint64_t d = 0;
    std::uint64_t q_min = 3;
    std::uint64_t q_max = 0;
    Branch branch = Branch::X;
    bool enforce_regime = false;
};

/// All admissible members of the family: primes q in [q_min, q_max]
/// with q != p, q > 2*sqrt(p) and the branch's Legendre sign, resolved
/// to full GraphSpecs (optionally restricted to the q > Q_d(p) regime).
std::vector<GraphSpec> list_family(const FamilyQuery& fq);

struct GridOutcome {
    std::vector<GraphReport> reports;          // ordered by q
    std::vector<std::string> failures;         // human-readable invariant breaches
    bool all_ok = false;
};

/// Builds and verifies every listed instance. Per-instance errors are
/// collected, not fatal. jobs > 1 runs instances in a small worker
/// pool; results are merged back in (d,p,q) order either way.
GridOutcome run_grid(const FamilyQuery& fq, double memory_gib = 8.0, unsigned jobs = 1);

std::string reports_csv(const std::vector<GraphReport>& reports);
std::vector<GraphReport> parse_reports_csv(const std::string& csv);

std::string c_table_csv(const std::vector<CTableRow>& rows);
std::vector<CTableRow> parse_c_table_csv(const std::string& csv);

std::string params_kv(const FamilyParams& p);

} // namespace qgirth
