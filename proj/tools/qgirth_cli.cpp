// qgirth command line: constructs the quaternion generator sets, the
// Cayley graphs on PGL2/PSL2, and runs the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qgirth/basis.hpp"
#include "qgirth/family.hpp"
#include "qgirth/graph.hpp"
#include "qgirth/primes.hpp"
#include "qgirth/projective.hpp"
#include "qgirth/sweep.hpp"
#include "qgirth/word_girth.hpp"
#include "qgirth/words.hpp"

namespace {

using namespace qgirth;

constexpr int EXIT_INVARIANT = 1;
constexpr int EXIT_USAGE = 2;

double default_memory_gib() {
    if (const char* env = std::getenv("QGIRTH_MEMORY_GIB")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed QGIRTH_MEMORY_GIB\n";
        }
    }
    return 8.0;
}

// output goes to --out when given, else stdout
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& out() { return *os; }
};

Quaternion parse_csv_quaternion(const std::string& text) {
    std::istringstream in(text);
    std::string part;
    std::int64_t coord[4];
    for (int i = 0; i < 4; ++i) {
        if (!std::getline(in, part, ',')) throw CLI::ValidationError("--quaternion needs a0,a1,a2,a3");
        coord[i] = std::stoll(part);
    }
    if (std::getline(in, part, ',')) throw CLI::ValidationError("--quaternion needs exactly 4 coordinates");
    return Quaternion{coord[0], coord[1], coord[2], coord[3]};
}

std::uint64_t pick_p(std::uint64_t d, std::optional<std::uint64_t> p_flag) {
    if (p_flag) return *p_flag;
    return family_params(d).p;
}

FamilyParams params_for(std::uint64_t d, std::optional<std::uint64_t> p_flag) {
    if (!p_flag) return family_params(d);
    const FamilyParams rule = family_params(d);
    if (*p_flag == rule.p) return rule;
    return family_params_for(d, *p_flag);
}

void print_spec(std::ostream& os, const GraphSpec& spec) {
    os << "d=" << spec.d << "\np=" << spec.p << "\nq=" << spec.q << "\nlegendre_pq="
       << spec.legendre_pq << "\ngroup=" << to_string(spec.group_kind)
       << "\ntheoretical_regime=" << (spec.theoretical_regime ? "true" : "false")
       << "\nsplitting_x=" << spec.ctx.x << "\nsplitting_y=" << spec.ctx.y << "\n";
    for (std::size_t i = 0; i < spec.generator_images.size(); ++i) {
        const auto& m = spec.generator_images[i].m;
        os << "generator_" << i << "=" << to_string(spec.gens.elements[i]) << " -> [" << m[0]
           << ' ' << m[1] << "; " << m[2] << ' ' << m[3] << "]\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"large-girth Cayley graphs on PGL2(F_q) from integral quaternions"};
    app.require_subcommand(1);
    app.fallthrough(); // --memory-gib/--jobs may follow the subcommand

    double memory_gib = default_memory_gib();
    unsigned jobs = 1;
    app.add_option("--memory-gib", memory_gib, "memory budget in GiB (env QGIRTH_MEMORY_GIB)")
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for family runs")->capture_default_str();

    // params --d
    auto* cmd_params = app.add_subcommand("params", "family parameters for a degree");
    std::uint64_t params_d = 0;
    std::string params_out, params_format = "kv";
    cmd_params->add_option("--d", params_d, "tree degree d (graphs are (d+1)-regular)")->required();
    cmd_params->add_option("--out", params_out, "output path (default stdout)");
    cmd_params->add_option("--format", params_format)->check(CLI::IsMember({"kv", "csv"}));

    // basis --p
    auto* cmd_basis = app.add_subcommand("basis", "canonical norm-p quaternions, one per unit orbit");
    std::uint64_t basis_p = 0;
    std::string basis_out;
    cmd_basis->add_option("--p", basis_p, "odd prime")->required();
    cmd_basis->add_option("--out", basis_out, "output path (default stdout)");

    // factor --p --quaternion
    auto* cmd_factor = app.add_subcommand("factor", "unique factorization of a norm-p^k quaternion");
    std::uint64_t factor_p = 0;
    std::string factor_q, factor_out;
    cmd_factor->add_option("--p", factor_p, "odd prime")->required();
    cmd_factor->add_option("--quaternion", factor_q, "coordinates a0,a1,a2,a3")->required();
    cmd_factor->add_option("--out", factor_out, "output path (default stdout)");

    // reduce --d [--p] --q
    auto* cmd_reduce = app.add_subcommand("reduce", "generator images in PGL2(F_q)");
    std::uint64_t reduce_d = 0, reduce_q = 0;
    std::optional<std::uint64_t> reduce_p;
    std::string reduce_out;
    cmd_reduce->add_option("--d", reduce_d)->required();
    cmd_reduce->add_option("--p", reduce_p, "override the auxiliary prime");
    cmd_reduce->add_option("--q", reduce_q)->required();
    cmd_reduce->add_option("--out", reduce_out, "output path (default stdout)");

    // graph build|girth|verify
    auto* cmd_graph = app.add_subcommand("graph", "build or measure one Cayley graph");
    cmd_graph->require_subcommand(1);
    std::uint64_t graph_d = 0, graph_q = 0;
    std::optional<std::uint64_t> graph_p;
    std::uint32_t graph_max_len = 20;
    std::string graph_out, graph_format = "edgelist", graph_engine = "both";
    auto add_graph_opts = [&](CLI::App* sub) {
        sub->add_option("--d", graph_d)->required();
        sub->add_option("--p", graph_p, "override the auxiliary prime");
        sub->add_option("--q", graph_q)->required();
        sub->add_option("--out", graph_out, "output path (default stdout)");
    };
    auto* cmd_graph_build = cmd_graph->add_subcommand("build", "emit the graph");
    add_graph_opts(cmd_graph_build);
    cmd_graph_build->add_option("--format", graph_format)->check(CLI::IsMember({"edgelist", "dot"}));
    auto* cmd_graph_girth = cmd_graph->add_subcommand("girth", "compute the girth");
    add_graph_opts(cmd_graph_girth);
    cmd_graph_girth->add_option("--max-len", graph_max_len, "word search bound");
    cmd_graph_girth->add_option("--engine", graph_engine)->check(CLI::IsMember({"both", "bfs", "words"}));
    auto* cmd_graph_verify = cmd_graph->add_subcommand("verify", "full verification report");
    add_graph_opts(cmd_graph_verify);

    // family list|run
    auto* cmd_family = app.add_subcommand("family", "sweep a graph family over q");
    cmd_family->require_subcommand(1);
    std::uint64_t fam_d = 0, fam_qmin = 3, fam_qmax = 0;
    std::string fam_branch = "x", fam_out, fam_format = "csv";
    bool fam_regime = false;
    auto add_family_opts = [&](CLI::App* sub) {
        sub->add_option("--d", fam_d)->required();
        sub->add_option("--q-min", fam_qmin)->capture_default_str();
        sub->add_option("--q-max", fam_qmax)->required();
        sub->add_option("--branch", fam_branch)->check(CLI::IsMember({"x", "y"}));
        sub->add_flag("--enforce-regime", fam_regime, "keep only q > Q_d(p)");
        sub->add_option("--out", fam_out, "output path (default stdout)");
    };
    auto* cmd_family_list = cmd_family->add_subcommand("list", "list admissible members");
    add_family_opts(cmd_family_list);
    auto* cmd_family_run = cmd_family->add_subcommand("run", "build and verify every member");
    add_family_opts(cmd_family_run);
    cmd_family_run->add_option("--format", fam_format)->check(CLI::IsMember({"csv", "kv"}));

    // table c
    auto* cmd_table = app.add_subcommand("table", "constant tables");
    cmd_table->require_subcommand(1);
    auto* cmd_table_c = cmd_table->add_subcommand("c", "girth constants c(d) over a degree range");
    std::uint64_t tab_dmin = 10, tab_dmax = 0;
    bool tab_all = false;
    std::string tab_out;
    cmd_table_c->add_option("--d-min", tab_dmin)->capture_default_str();
    cmd_table_c->add_option("--d-max", tab_dmax)->required();
    cmd_table_c->add_flag("--all", tab_all, "include prime-power degrees");
    cmd_table_c->add_option("--out", tab_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        if (*cmd_params) {
            Sink sink(params_out);
            const FamilyParams p = family_params(params_d);
            if (params_format == "csv") {
                sink.out() << "d,p,kappa,c_d,parity_rule\n"
                           << p.d << ',' << p.p << ',' << p.kappa << ',' << p.c_d << ','
                           << to_string(p.parity_rule) << '\n';
            } else {
                sink.out() << params_kv(p);
            }
        } else if (*cmd_basis) {
            Sink sink(basis_out);
            const PrimeBasis basis = build_basis(basis_p);
            sink.out() << "# p " << basis.p << "  size " << basis.elements.size() << "  s "
                       << basis.paired_count << "  t " << basis.pure_count << '\n';
            sink.out() << "# index  quaternion  class  partner\n";
            for (std::size_t i = 0; i < basis.elements.size(); ++i) {
                sink.out() << i << "  " << to_string(basis.elements[i]) << "  "
                           << (basis.pure_at(i) ? "nu" : "mu") << "  " << basis.partner[i] << '\n';
            }
        } else if (*cmd_factor) {
            Sink sink(factor_out);
            const PrimeBasis basis = build_basis(factor_p);
            const Factorization f = factor(parse_csv_quaternion(factor_q), basis);
            sink.out() << "content_exponent=" << f.content_exponent << '\n'
                       << "unit=" << to_string(f.unit) << '\n';
            sink.out() << "word=";
            for (std::size_t i = 0; i < f.factors.size(); ++i)
                sink.out() << (i ? " " : "") << to_string(f.factors[i]);
            sink.out() << '\n';
        } else if (*cmd_reduce) {
            Sink sink(reduce_out);
            const std::uint64_t p = pick_p(reduce_d, reduce_p);
            const GeneratorSet gens = select_generators(reduce_d, build_basis(p));
            print_spec(sink.out(), image_generators(gens, reduce_q));
        } else if (*cmd_graph) {
            const std::uint64_t p = pick_p(graph_d, graph_p);
            const GeneratorSet gens = select_generators(graph_d, build_basis(p));
            const GraphSpec spec = image_generators(gens, graph_q);
            if (*cmd_graph_build) {
                Sink sink(graph_out);
                const CayleyGraph graph = build_graph(spec, memory_gib);
                if (graph_format == "dot")
                    write_dot(sink.out(), graph);
                else
                    write_edge_list(sink.out(), graph);
            } else if (*cmd_graph_girth) {
                Sink sink(graph_out);
                std::optional<std::uint32_t> via_bfs;
                if (graph_engine != "words") {
                    const CayleyGraph graph = build_graph(spec, memory_gib);
                    via_bfs = girth_bfs(graph.g, graph.identity);
                    sink.out() << "girth_bfs=" << (via_bfs ? std::to_string(*via_bfs) : "none")
                               << '\n';
                }
                if (graph_engine != "bfs") {
                    const auto words = girth_words(spec, graph_max_len, memory_gib);
                    sink.out() << "girth_words="
                               << (words.girth ? std::to_string(*words.girth) : "none") << '\n'
                               << "max_len=" << words.max_len << '\n';
                    if (words.girth) {
                        sink.out() << "witness=";
                        for (std::size_t i = 0; i < words.witness.size(); ++i)
                            sink.out() << (i ? " " : "") << words.witness[i];
                        sink.out() << '\n';
                    }
                    if (graph_engine == "both" && via_bfs) {
                        const bool agree = words.girth && *words.girth == *via_bfs;
                        sink.out() << "agreement=" << (agree ? "true" : "false") << '\n';
                        if (!agree) return EXIT_INVARIANT;
                    }
                }
            } else {
                Sink sink(graph_out);
                const CayleyGraph graph = build_graph(spec, memory_gib);
                const GraphReport report = verify_report(graph, params_for(graph_d, graph_p), memory_gib);
                sink.out() << report_kv(report);
                const bool ok = report.girth_method_agreement && report.moore_ok &&
                                (!report.connected || report.main_inequality_ok);
                if (!ok) return EXIT_INVARIANT;
            }
        } else if (*cmd_family) {
            FamilyQuery fq;
            fq.d = fam_d;
            fq.q_min = fam_qmin;
            fq.q_max = fam_qmax;
            fq.branch = fam_branch == "x" ? Branch::X : Branch::Y;
            fq.enforce_regime = fam_regime;
            if (*cmd_family_list) {
                Sink sink(fam_out);
                sink.out() << "d,p,q,legendre_pq,group,theoretical_regime\n";
                for (const GraphSpec& spec : list_family(fq)) {
                    sink.out() << spec.d << ',' << spec.p << ',' << spec.q << ','
                               << spec.legendre_pq << ',' << to_string(spec.group_kind) << ','
                               << (spec.theoretical_regime ? "true" : "false") << '\n';
                }
            } else {
                Sink sink(fam_out);
                const GridOutcome outcome = run_grid(fq, memory_gib, jobs);
                if (fam_format == "kv") {
                    for (const GraphReport& r : outcome.reports)
                        sink.out() << report_kv(r) << '\n';
                } else {
                    sink.out() << reports_csv(outcome.reports);
                }
                for (const std::string& f : outcome.failures) std::cerr << "FAIL " << f << '\n';
                if (!outcome.all_ok) return EXIT_INVARIANT;
            }
        } else if (*cmd_table) {
            Sink sink(tab_out);
            sink.out() << c_table_csv(c_table(tab_dmin, tab_dmax, tab_all));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_INVARIANT;
    }
    return 0;
}
