#include "qgirth/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qgirth/primes.hpp"

namespace qgirth {

std::string to_string(Branch b) { return b == Branch::X ? "x" : "y"; }

std::vector<GraphSpec> list_family(const FamilyQuery& fq) {
    const FamilyParams params = family_params(fq.d);
    const int want = fq.branch == Branch::X ? -1 : 1;
    GeneratorSet gens = select_generators(fq.d, build_basis(params.p));

    std::vector<GraphSpec> specs;
    for (std::uint64_t q = std::max<std::uint64_t>(fq.q_min, 3); q <= fq.q_max; ++q) {
        if (!is_prime(q) || q % 2 == 0 || q == params.p) continue;
        if (q * q <= 4 * params.p) continue;
        if (legendre(static_cast<std::int64_t>(params.p), q) != want) continue;
        if (fq.enforce_regime && !params.regime(q)) continue;
        specs.push_back(image_generators(gens, q));
    }
    return specs;
}

namespace {

void audit(const GraphReport& r, std::vector<std::string>& failures) {
    auto blame = [&](const std::string& what) {
        failures.push_back("d=" + std::to_string(r.d) + " p=" + std::to_string(r.p) +
                           " q=" + std::to_string(r.q) + ": " + what);
    };
    if (!r.connected) blame("not connected");
    if (r.bipartite != (r.legendre_pq == -1)) blame("bipartiteness disagrees with legendre(p,q)");
    if (r.bipartite && r.girth % 2 != 0) blame("bipartite graph with odd girth");
    if (!r.girth_method_agreement) blame("girth engines disagree");
    if (r.connected && !r.main_inequality_ok) blame("girth below the guaranteed lower bound");
    if (!r.moore_ok) blame("girth above the Moore bound");
}

} // namespace

GridOutcome run_grid(const FamilyQuery& fq, double memory_gib, unsigned jobs) {
    const std::vector<GraphSpec> specs = list_family(fq);
    const FamilyParams params = family_params(fq.d);

    GridOutcome out;
    out.reports.resize(specs.size());
    std::vector<std::string> errors(specs.size());

    auto work = [&](std::size_t i) {
        try {
            const CayleyGraph graph = build_graph(specs[i], memory_gib);
            out.reports[i] = verify_report(graph, params, memory_gib);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

    if (jobs <= 1 || specs.size() <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned count = std::min<std::size_t>(jobs, specs.size());
        for (unsigned w = 0; w < count; ++w) {
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1))
                    work(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!errors[i].empty()) {
            out.failures.push_back("d=" + std::to_string(specs[i].d) +
                                   " q=" + std::to_string(specs[i].q) + ": " + errors[i]);
            continue;
        }
        audit(out.reports[i], out.failures);
    }
    out.all_ok = out.failures.empty();
    return out;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("qgirth: bad boolean field '" + s + "'");
}

} // namespace

std::string reports_csv(const std::vector<GraphReport>& reports) {
    std::string out =
        "d,p,q,n,degree,connected,bipartite,girth,girth_method_agreement,"
        "main_inequality_rhs,main_inequality_ok,moore_rhs,moore_ok,girth_ratio,"
        "legendre_pq,theoretical_regime\n";
    for (const GraphReport& r : reports) {
        out += std::to_string(r.d) + ',' + std::to_string(r.p) + ',' + std::to_string(r.q) + ',' +
               std::to_string(r.n) + ',' + std::to_string(r.degree) + ',' +
               (r.connected ? "true" : "false") + ',' + (r.bipartite ? "true" : "false") + ',' +
               std::to_string(r.girth) + ',' + (r.girth_method_agreement ? "true" : "false") + ',' +
               fmt_double(r.main_inequality_rhs) + ',' + (r.main_inequality_ok ? "true" : "false") +
               ',' + fmt_double(r.moore_rhs) + ',' + (r.moore_ok ? "true" : "false") + ',' +
               fmt_double(r.girth_ratio) + ',' + std::to_string(r.legendre_pq) + ',' +
               (r.theoretical_regime ? "true" : "false") + '\n';
    }
    return out;
}

std::vector<GraphReport> parse_reports_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::vector<GraphReport> reports;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) { header = false; continue; }
        const auto f = split(line, ',');
        if (f.size() != 16) throw std::invalid_argument("qgirth: bad report row: " + line);
        GraphReport r;
        r.d = std::stoull(f[0]);
        r.p = std::stoull(f[1]);
        r.q = std::stoull(f[2]);
        r.n = std::stoull(f[3]);
        r.degree = static_cast<std::uint32_t>(std::stoul(f[4]));
        r.connected = parse_bool(f[5]);
        r.bipartite = parse_bool(f[6]);
        r.girth = static_cast<std::uint32_t>(std::stoul(f[7]));
        r.girth_method_agreement = parse_bool(f[8]);
        r.main_inequality_rhs = std::stod(f[9]);
        r.main_inequality_ok = parse_bool(f[10]);
        r.moore_rhs = std::stod(f[11]);
        r.moore_ok = parse_bool(f[12]);
        r.girth_ratio = std::stod(f[13]);
        r.legendre_pq = std::stoi(f[14]);
        r.theoretical_regime = parse_bool(f[15]);
        reports.push_back(r);
    }
    return reports;
}

std::string c_table_csv(const std::vector<CTableRow>& rows) {
    std::string out = "d,p,kappa,c_d,bracket,meets_bracket,prime_power\n";
    for (const CTableRow& r : rows) {
        out += std::to_string(r.d) + ',' + std::to_string(r.p) + ',' + fmt_double(r.kappa) + ',' +
               fmt_double(r.c_d) + ',' + (r.bracket ? fmt_double(*r.bracket) : std::string()) +
               ',' + (r.meets_bracket ? "true" : "false") + ',' +
               (r.prime_power ? "true" : "false") + '\n';
    }
    return out;
}

std::vector<CTableRow> parse_c_table_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::vector<CTableRow> rows;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) { header = false; continue; }
        const auto f = split(line, ',');
        if (f.size() != 7) throw std::invalid_argument("qgirth: bad c-table row: " + line);
        CTableRow r;
        r.d = std::stoull(f[0]);
        r.p = std::stoull(f[1]);
        r.kappa = std::stod(f[2]);
        r.c_d = std::stod(f[3]);
        if (!f[4].empty()) r.bracket = std::stod(f[4]);
        r.meets_bracket = parse_bool(f[5]);
        r.prime_power = parse_bool(f[6]);
        rows.push_back(r);
    }
    return rows;
}

std::string params_kv(const FamilyParams& p) {
    std::string out;
    out += "d=" + std::to_string(p.d) + '\n';
    out += "p=" + std::to_string(p.p) + '\n';
    out += "kappa=" + fmt_double(p.kappa) + '\n';
    out += "c_d=" + fmt_double(p.c_d) + '\n';
    out += "Q=" + (p.Q_saturated ? std::string(">=2^128") : u128_to_string(p.Q)) + '\n';
    out += "parity_rule=" + to_string(p.parity_rule) + '\n';
    return out;
}

} // namespace qgirth
