#include "qgirth/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <stdexcept>

#include "qgirth/word_girth.hpp"

namespace qgirth {

SimpleGraph SimpleGraph::from_edges(
    std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    SimpleGraph g;
    g.n = n;
    g.offsets.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets[u + 1];
        ++g.offsets[v + 1];
    }
    for (std::uint32_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
    g.adj.resize(g.offsets[n]);
    std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj[cursor[u]++] = v;
        g.adj[cursor[v]++] = u;
    }
    return g;
}

bool is_connected(const SimpleGraph& g, std::uint32_t root) {
    if (g.n == 0) return true;
    std::vector<std::uint8_t> seen(g.n, 0);
    std::vector<std::uint32_t> stack{root};
    seen[root] = 1;
    std::uint64_t count = 1;
    while (!stack.empty()) {
        const std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
            const std::uint32_t v = g.adj[i];
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == g.n;
}

TwoColoring two_color(const SimpleGraph& g) {
    TwoColoring result;
    result.side.assign(g.n, 2); // 2 = unvisited
    for (std::uint32_t start = 0; start < g.n; ++start) {
        if (result.side[start] != 2) continue;
        result.side[start] = 0;
        std::deque<std::uint32_t> queue{start};
        while (!queue.empty()) {
            const std::uint32_t u = queue.front();
            queue.pop_front();
            for (std::uint32_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
                const std::uint32_t v = g.adj[i];
                if (result.side[v] == 2) {
                    result.side[v] = static_cast<std::uint8_t>(1 - result.side[u]);
                    queue.push_back(v);
                } else if (result.side[v] == result.side[u]) {
                    result.bipartite = false;
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    return result;
}

std::optional<std::uint32_t> girth_bfs(const SimpleGraph& g, std::uint32_t root) {
    constexpr std::uint32_t NONE = UINT32_MAX;
    std::vector<std::uint32_t> dist(g.n, NONE), parent(g.n, NONE);
    std::deque<std::uint32_t> queue{root};
    dist[root] = 0;
    std::uint64_t best = UINT64_MAX;
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        if (2ull * dist[u] >= best) break; // later candidates cannot beat best
        for (std::uint32_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
            const std::uint32_t v = g.adj[i];
            if (dist[v] == NONE) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            } else if (v != parent[u]) {
                best = std::min(best, static_cast<std::uint64_t>(dist[u]) + dist[v] + 1);
            }
        }
    }
    if (best == UINT64_MAX) return std::nullopt;
    return static_cast<std::uint32_t>(best);
}

double moore_bound(std::uint32_t degree, std::uint64_t n, bool even_girth) {
    if (degree < 3) throw std::invalid_argument("qgirth: moore_bound requires degree >= 3");
    const double base = std::log(static_cast<double>(degree - 1));
    const double l = std::log(static_cast<double>(n)) / base;
    if (even_girth) return 2.0 * l + 2.0 - 2.0 * std::log(2.0) / base;
    return 2.0 * l + 1.0;
}

namespace {

void check_budget(std::uint64_t q, std::uint64_t n, std::uint64_t degree, double memory_gib) {
    const std::uint64_t bytes = (q * q * q + q * q) * 4 // code -> index
                                + n * 16                // canonical elements
                                + n * (degree)*4        // adjacency
                                + n * 9;                // BFS scratch
    const double gib = static_cast<double>(bytes) / (1024.0 * 1024.0 * 1024.0);
    if (gib > memory_gib)
        throw std::runtime_error("qgirth: graph needs " + std::to_string(gib) +
                                 " GiB, budget is " + std::to_string(memory_gib) + " GiB");
}

} // namespace

CayleyGraph build_cayley(const std::vector<ProjElement>& images, std::uint64_t q, GroupKind kind,
                         double memory_gib) {
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] == proj_identity())
            throw std::invalid_argument("qgirth: a generator image is the identity (loop edge)");
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] == images[j])
                throw std::invalid_argument("qgirth: duplicate generator images (parallel edges)");
    }
    const std::uint64_t order = kind == GroupKind::pgl2 ? q * q * q - q : (q * q * q - q) / 2;
    check_budget(q, order, images.size(), memory_gib);

    CayleyGraph graph;
    graph.table = enumerate_group(q, kind);
    graph.degree = static_cast<std::uint32_t>(images.size());
    graph.identity = graph.table.identity_index;

    const std::uint32_t n = static_cast<std::uint32_t>(graph.table.size());
    graph.g.n = n;
    graph.g.offsets.resize(n + 1ull);
    for (std::uint32_t v = 0; v <= n; ++v)
        graph.g.offsets[v] = v * graph.degree;
    graph.g.adj.resize(static_cast<std::uint64_t>(n) * graph.degree);
    for (std::uint32_t v = 0; v < n; ++v) {
        const ProjElement& e = graph.table.elements[v];
        for (std::uint32_t s = 0; s < graph.degree; ++s) {
            const ProjElement w = proj_mul(e, images[s], q);
            graph.g.adj[static_cast<std::uint64_t>(v) * graph.degree + s] = graph.table.index_of(w);
        }
    }
    return graph;
}

CayleyGraph build_graph(const GraphSpec& spec, double memory_gib) {
    CayleyGraph graph = build_cayley(spec.generator_images, spec.q, spec.group_kind, memory_gib);
    graph.spec = spec;
    return graph;
}

GraphReport verify_report(const CayleyGraph& graph, const FamilyParams& params,
                          double memory_gib) {
    if (graph.spec.generator_images.empty())
        throw std::invalid_argument("qgirth: verify_report needs a spec-built graph");
    GraphReport r;
    r.d = graph.spec.d;
    r.p = graph.spec.p;
    r.q = graph.spec.q;
    r.n = graph.g.n;
    r.degree = graph.degree;
    r.legendre_pq = graph.spec.legendre_pq;
    r.theoretical_regime = graph.spec.theoretical_regime;
    r.connected = is_connected(graph.g, graph.identity);
    r.bipartite = two_color(graph.g).bipartite;

    const auto bfs = girth_bfs(graph.g, graph.identity);
    if (!bfs) throw std::logic_error("qgirth: Cayley graph reported acyclic");
    r.girth = *bfs;
    const auto words = girth_words(graph.spec, r.girth, memory_gib);
    r.girth_method_agreement = words.girth && *words.girth == r.girth;

    const double logd_n = std::log(static_cast<double>(r.n)) /
                          std::log(static_cast<double>(params.d));
    if (r.legendre_pq == 1) {
        r.main_inequality_rhs = 2.0 / (3.0 * params.kappa) * logd_n;
    } else {
        r.main_inequality_rhs = 4.0 / (3.0 * params.kappa) * logd_n -
                                std::log(4.0) / std::log(static_cast<double>(params.p));
    }
    r.main_inequality_ok = static_cast<double>(r.girth) >= r.main_inequality_rhs - 1e-9;
    r.moore_rhs = moore_bound(r.degree, r.n, r.girth % 2 == 0);
    r.moore_ok = static_cast<double>(r.girth) <= r.moore_rhs + 1e-9;
    r.girth_ratio = static_cast<double>(r.girth) / logd_n;
    return r;
}

std::string report_kv(const GraphReport& r) {
    std::string out;
    auto kv = [&out](const std::string& key, const std::string& value) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    };
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    kv("d", std::to_string(r.d));
    kv("p", std::to_string(r.p));
    kv("q", std::to_string(r.q));
    kv("n", std::to_string(r.n));
    kv("degree", std::to_string(r.degree));
    kv("connected", r.connected ? "true" : "false");
    kv("bipartite", r.bipartite ? "true" : "false");
    kv("girth", std::to_string(r.girth));
    kv("girth_method_agreement", r.girth_method_agreement ? "true" : "false");
    kv("main_inequality_rhs", fmt(r.main_inequality_rhs));
    kv("main_inequality_ok", r.main_inequality_ok ? "true" : "false");
    kv("moore_rhs", fmt(r.moore_rhs));
    kv("moore_ok", r.moore_ok ? "true" : "false");
    kv("girth_ratio", fmt(r.girth_ratio));
    kv("legendre_pq", std::to_string(r.legendre_pq));
    kv("theoretical_regime", r.theoretical_regime ? "true" : "false");
    return out;
}

void write_edge_list(std::ostream& os, const CayleyGraph& graph) {
    os << "# qgirth cayley edge list\n";
    os << "# d " << graph.spec.d << "\n";
    os << "# p " << graph.spec.p << "\n";
    os << "# q " << graph.spec.q << "\n";
    os << "# group " << to_string(graph.spec.group_kind) << "\n";
    os << "# legendre " << graph.spec.legendre_pq << "\n";
    os << "# n " << graph.g.n << "\n";
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(static_cast<std::size_t>(graph.g.n) * graph.degree / 2);
    for (std::uint32_t u = 0; u < graph.g.n; ++u) {
        for (std::uint32_t i = graph.g.offsets[u]; i < graph.g.offsets[u + 1]; ++i) {
            const std::uint32_t v = graph.g.adj[i];
            if (u < v) edges.emplace_back(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
}

void write_dot(std::ostream& os, const CayleyGraph& graph) {
    if (graph.g.n > 10'000)
        throw std::invalid_argument("qgirth: DOT export limited to 10^4 vertices");
    os << "graph qgirth {\n";
    for (std::uint32_t u = 0; u < graph.g.n; ++u) {
        for (std::uint32_t i = graph.g.offsets[u]; i < graph.g.offsets[u + 1]; ++i) {
            const std::uint32_t v = graph.g.adj[i];
            if (u < v) os << "  " << u << " -- " << v << ";\n";
        }
    }
    os << "}\n";
}

} // namespace qgirth
