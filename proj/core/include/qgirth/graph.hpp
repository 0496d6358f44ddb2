#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgirth/family.hpp"
#include "qgirth/projective.hpp"
#include "qgirth/words.hpp"

namespace qgirth {

/// Plain CSR adjacency; also used for the small test fixtures.
struct SimpleGraph {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> offsets; // size n+1
    std::vector<std::uint32_t> adj;

    static SimpleGraph from_edges(std::uint32_t n,
                                  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

    std::uint32_t degree(std::uint32_t v) const { return offsets[v + 1] - offsets[v]; }
};

bool is_connected(const SimpleGraph& g, std::uint32_t root = 0);

struct TwoColoring {
    bool bipartite = false;
    std::vector<std::uint8_t> side; // meaningful when bipartite
};

TwoColoring two_color(const SimpleGraph& g);

/// Exact girth for vertex-transitive graphs from a single BFS root
/// (every vertex lies on some shortest cycle). nullopt when the root's
/// component is acyclic.
std::optional<std::uint32_t> girth_bfs(const SimpleGraph& g, std::uint32_t root = 0);

/// Counting upper bound on the girth of a degree-regular graph of n
/// vertices, by parity of the girth.
double moore_bound(std::uint32_t degree, std::uint64_t n, bool even_girth);

struct CayleyGraph {
    GraphSpec spec;
    GroupTable table;
    SimpleGraph g;
    std::uint32_t degree = 0; // d+1
    std::uint32_t identity = 0;
};

/// Builds Cayl(group, generator images): vertex set from the group
/// enumeration, edges {g, g*s}. Throws std::runtime_error when the
/// estimated footprint exceeds memory_gib.
CayleyGraph build_graph(const GraphSpec& spec, double memory_gib = 8.0);

/// Lower-level builder for ad-hoc generator image sets (fixtures).
CayleyGraph build_cayley(const std::vector<ProjElement>& images, std::uint64_t q, GroupKind kind,
                         double memory_gib = 8.0);

struct GraphReport {
    std::uint64_t d = 0, p = 0, q = 0;
    std::uint64_t n = 0;
    std::uint32_t degree = 0;
    bool connected = false;
    bool bipartite = false;
    std::uint32_t girth = 0;
    bool girth_method_agreement = false;
    double main_inequality_rhs = 0.0;
    bool main_inequality_ok = false;
    double moore_rhs = 0.0;
    bool moore_ok = false;
    double girth_ratio = 0.0;
    int legendre_pq = 0;
    bool theoretical_regime = false;
};

/// Runs every check on a built graph: connectivity, bipartiteness,
/// girth by both engines, the girth lower bound by branch and the
/// counting upper bound.
GraphReport verify_report(const CayleyGraph& graph, const FamilyParams& params,
                          double memory_gib = 8.0);

std::string report_kv(const GraphReport& r);

/// Edge list with '#' header lines (d, p, q, group, legendre, n) and
/// one "u v" pair per line, u < v, ascending.
void write_edge_list(std::ostream& os, const CayleyGraph& graph);

/// DOT output, guarded to n <= 10^4.
void write_dot(std::ostream& os, const CayleyGraph& graph);

} // namespace qgirth
