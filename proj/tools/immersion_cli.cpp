// Command-line front end: generate graphs and products, build and verify
// immersion certificates, run the exact search and the conjecture scanner,
// print colorings, and export DOT drawings.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "immersion/catalog.hpp"
#include "immersion/colorings.hpp"
#include "immersion/constructions.hpp"
#include "immersion/dot.hpp"
#include "immersion/search.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

imm::Graph load_graph(const std::string& path) { return imm::read_graph(slurp(path)); }

imm::FactorWitness load_witness(const std::string& gpath, const std::string& cpath) {
    return imm::make_witness(load_graph(gpath), imm::read_certificate(slurp(cpath)));
}

imm::SearchBudget budget_from(long long nodes, double seconds) {
    imm::SearchBudget b;
    if (nodes > 0) {
        b.max_nodes = nodes;
    } else if (const char* env = std::getenv("IMMERSION_BUDGET_NODES")) {
        b.max_nodes = std::atoll(env);
    }
    if (seconds > 0) b.max_seconds = seconds;
    return b;
}

void print_assignment(const imm::CliqueAssignment& a) {
    std::cout << (a.mode == imm::CliqueAssignment::Mode::odd ? "odd" : "even")
              << " clique assignment on K_" << a.clique_order << " colors";
    for (int c : a.colors) std::cout << " " << c;
    std::cout << "\n";
    for (int v = 0; v < a.clique_order; ++v) {
        std::cout << "vertex " << v << " label " << a.vertex_label[v] << " missing";
        for (int c : a.missing[v]) std::cout << " " << c;
        std::cout << "\n";
    }
    for (int u = 0; u < a.clique_order; ++u)
        for (int v = u + 1; v < a.clique_order; ++v)
            std::cout << "edge " << u << " " << v << " color " << a.edge_color[u][v] << "\n";
}

int dispatch(int argc, char** argv) {
    CLI::App app{"clique immersions in graphs and graph products"};
    app.require_subcommand(1);
    std::function<int()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named family graph");
    static std::string gen_family, gen_out;
    static std::vector<int> gen_params;
    gen->add_option("family", gen_family)->required();
    gen->add_option("params", gen_params);
    gen->add_option("-o,--out", gen_out);
    gen->callback([&] {
        action = [] {
            emit(gen_out, imm::write_graph(imm::generate(gen_family, gen_params)));
            return 0;
        };
    });

    // product / power
    static std::string pr_kind, pr_a, pr_b, pr_out;
    static int pw_d = 1;
    static bool pr_labels = false;
    auto* prod = app.add_subcommand("product", "product of two graph files");
    prod->add_option("--kind", pr_kind)->required();
    prod->add_option("a", pr_a)->required();
    prod->add_option("b", pr_b)->required();
    prod->add_option("-o,--out", pr_out);
    prod->add_flag("--labels", pr_labels, "emit coordinate labels as comments");
    prod->callback([&] {
        action = [] {
            auto g = imm::product(imm::product_kind_from_name(pr_kind), load_graph(pr_a),
                                  load_graph(pr_b));
            emit(pr_out, imm::write_graph(g, pr_labels));
            return 0;
        };
    });
    auto* pow = app.add_subcommand("power", "iterated product of a graph file with itself");
    pow->add_option("--kind", pr_kind)->required();
    pow->add_option("a", pr_a)->required();
    pow->add_option("d", pw_d)->required();
    pow->add_option("-o,--out", pr_out);
    pow->add_flag("--labels", pr_labels, "emit coordinate labels as comments");
    pow->callback([&] {
        action = [] {
            auto g = imm::power(imm::product_kind_from_name(pr_kind), load_graph(pr_a), pw_d);
            emit(pr_out, imm::write_graph(g, pr_labels));
            return 0;
        };
    });

    // construct
    static std::string c_method, c_ga, c_ca, c_gb, c_cb, c_out, c_host_out;
    static int c_n = 0, c_t = 0, c_r = 0;
    auto* con = app.add_subcommand("construct", "build a product certificate from factor witnesses");
    con->add_option("--method", c_method,
                    "lex|cartesian|cartesian-path|direct-clique|direct-gkr|direct-parity|direct-semiparity")
        ->required();
    con->add_option("--graph-a", c_ga);
    con->add_option("--cert-a", c_ca);
    con->add_option("--graph-b", c_gb);
    con->add_option("--cert-b", c_cb);
    con->add_option("--n", c_n, "path length for cartesian-path");
    con->add_option("--t", c_t, "first clique order for direct-clique");
    con->add_option("--r", c_r, "second clique order (direct-clique, direct-gkr)");
    con->add_option("-o,--out", c_out, "certificate output");
    con->add_option("--host-out", c_host_out, "write the product graph as well");
    con->callback([&] {
        action = [] {
            imm::FactorWitness result;
            auto a = [&] { return load_witness(c_ga, c_ca); };
            auto b = [&] { return load_witness(c_gb, c_cb); };
            if (c_method == "lex")
                result = imm::lex_construct(a(), b());
            else if (c_method == "cartesian")
                result = imm::cartesian_construct(a(), b());
            else if (c_method == "cartesian-path")
                result = imm::cartesian_path_construct(a(), c_n);
            else if (c_method == "direct-clique")
                result = imm::direct_complete_construct(c_t, c_r);
            else if (c_method == "direct-gkr")
                result = imm::direct_gkr_construct(a(), c_r);
            else if (c_method == "direct-parity")
                result = imm::direct_parity_construct(a(), b());
            else if (c_method == "direct-semiparity")
                result = imm::direct_semiparity_construct(a(), b());
            else
                throw CLI::ValidationError("--method", "unknown method '" + c_method + "'");
            auto check = imm::verify(result.graph, result.cert);
            if (!check.ok) {
                std::cout << "INVALID: " << check.message << "\n";
                return 1;
            }
            if (!c_out.empty()) emit(c_out, imm::write_certificate(result.cert));
            if (!c_host_out.empty()) emit(c_host_out, imm::write_graph(result.graph));
            std::cout << "VALID order=" << result.cert.order << "\n";
            return 0;
        };
    });

    // verify
    static std::string v_graph, v_cert;
    auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
    ver->add_option("--graph", v_graph)->required();
    ver->add_option("--cert", v_cert)->required();
    ver->callback([&] {
        action = [] {
            auto g = load_graph(v_graph);
            auto c = imm::read_certificate(slurp(v_cert));
            auto res = imm::verify(g, c);
            for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
            if (!res.ok) {
                std::cout << "INVALID: " << res.message << "\n";
                return 1;
            }
            std::cout << "VALID order=" << c.order << "\n";
            return 0;
        };
    });

    // search
    static std::string s_graph, s_cert_out;
    static long long s_nodes = 0;
    static double s_seconds = 0;
    static bool s_exact = false, s_bounds = false;
    auto* sea = app.add_subcommand("search", "exact immersion number of a graph file");
    sea->add_option("--graph", s_graph)->required();
    sea->add_flag("--exact", s_exact, "full downward search (default)");
    sea->add_flag("--bounds", s_bounds, "report cheap bounds only");
    sea->add_option("--nodes", s_nodes, "backtracking node budget per order");
    sea->add_option("--seconds", s_seconds, "time budget per order");
    sea->add_option("--cert-out", s_cert_out, "store the certificate backing the lower bound");
    sea->callback([&] {
        action = [] {
            auto g = load_graph(s_graph);
            imm::SearchReport rep;
            if (s_bounds && !s_exact) {
                imm::SearchBudget tiny;
                tiny.max_nodes = 0;
                tiny.max_seconds = 0.001;
                rep = imm::exact_immersion_number(g, tiny, s_graph);
            } else {
                rep = imm::exact_immersion_number(g, budget_from(s_nodes, s_seconds), s_graph);
            }
            std::cout << "search graph=" << s_graph << " n=" << g.order() << " m=" << g.edge_count()
                      << "\n";
            std::cout << "result lower=" << rep.lower << " upper=" << rep.upper
                      << " exact=" << (rep.exact ? 1 : 0) << " nodes=" << rep.nodes << " time_ms="
                      << static_cast<long long>(rep.elapsed_seconds * 1000)
                      << " lower_provenance=\"" << rep.lower_provenance << "\" upper_provenance=\""
                      << rep.upper_provenance << "\"\n";
            if (!s_cert_out.empty() && rep.certificate)
                emit(s_cert_out, imm::write_certificate(*rep.certificate));
            return 0;
        };
    });

    // scan
    static std::string sc_kind = "direct", sc_families, sc_ledger, sc_artifacts;
    static long long sc_nodes = 0;
    static double sc_seconds = 0;
    auto* sca = app.add_subcommand("scan", "conjecture scan over family pairs");
    sca->add_option("--kind", sc_kind, "direct|strong");
    sca->add_option("--families", sc_families, "e.g. \"cycles:3..8,completes:2..5\"")->required();
    sca->add_option("--ledger", sc_ledger, "write the TSV ledger here");
    sca->add_option("--artifacts", sc_artifacts, "directory for violation dumps");
    sca->add_option("--nodes", sc_nodes);
    sca->add_option("--seconds", sc_seconds);
    sca->callback([&] {
        action = [] {
            auto comma = sc_families.find(',');
            if (comma == std::string::npos)
                throw CLI::ValidationError("--families", "expected two comma-separated specs");
            auto left = imm::parse_family_spec(sc_families.substr(0, comma));
            auto right = imm::parse_family_spec(sc_families.substr(comma + 1));
            imm::ScanOptions opt;
            opt.kind = imm::product_kind_from_name(sc_kind);
            opt.budget = budget_from(sc_nodes, sc_seconds);
            opt.artifact_dir = sc_artifacts;
            auto rows = imm::conjecture_scan(left, right, opt);
            auto tsv = imm::scan_ledger_tsv(rows);
            std::cout << tsv;
            if (!sc_ledger.empty()) emit(sc_ledger, tsv);
            bool violated = false;
            for (const auto& r : rows) violated |= r.status == imm::ScanStatus::violation;
            return violated ? 1 : 0;
        };
    });

    // coloring
    static std::string col_kind;
    static int col_n = 0;
    auto* col = app.add_subcommand("coloring", "print a clique/bipartite coloring table");
    col->add_option("kind", col_kind, "odd|even|latin|bipartite")->required();
    col->add_option("n", col_n)->required();
    col->callback([&] {
        action = [] {
            if (col_kind == "odd")
                print_assignment(imm::odd_clique_assignment(col_n));
            else if (col_kind == "even")
                print_assignment(imm::even_clique_assignment(col_n));
            else if (col_kind == "latin") {
                auto sq = imm::idempotent_latin_square(col_n);
                for (int i = 0; i < sq.order; ++i) {
                    for (int j = 0; j < sq.order; ++j) std::cout << (j ? " " : "") << sq.at(i, j);
                    std::cout << "\n";
                }
            } else if (col_kind == "bipartite") {
                auto bc = imm::bipartite_r_coloring(col_n);
                for (int p = 0; p < col_n; ++p)
                    for (int q = 0; q < col_n; ++q)
                        std::cout << "edge L" << p << " R" << q << " color " << bc.color(p, q)
                                  << "\n";
            } else {
                throw CLI::ValidationError("kind", "expected odd|even|latin|bipartite");
            }
            return 0;
        };
    });

    // catalog
    static std::string cat_cmd, cat_name, cat_graph_out, cat_cert_out;
    static std::vector<int> cat_params;
    auto* cat = app.add_subcommand("catalog", "list or build the stored certificate families");
    cat->add_option("command", cat_cmd, "list|build")->required();
    cat->add_option("name", cat_name);
    cat->add_option("params", cat_params);
    cat->add_option("-o,--out", cat_graph_out, "graph output");
    cat->add_option("-c,--cert", cat_cert_out, "certificate output");
    cat->callback([&] {
        action = [] {
            if (cat_cmd == "list") {
                for (const auto& e : imm::catalog_entries())
                    std::cout << e.name << (e.params.empty() ? "" : " ") << e.params << " -- "
                              << e.description << "\n";
                return 0;
            }
            if (cat_cmd != "build") throw CLI::ValidationError("command", "expected list|build");
            if (cat_name.empty()) throw CLI::ValidationError("name", "catalog build needs a name");
            auto res = imm::catalog_certificate(cat_name, cat_params);
            if (!cat_graph_out.empty()) emit(cat_graph_out, imm::write_graph(res.graph));
            if (!cat_cert_out.empty()) emit(cat_cert_out, imm::write_certificate(res.cert));
            std::cout << "VALID order=" << res.cert.order << " claimed=" << res.claimed_value
                      << " exact=" << (res.exact ? 1 : 0) << "\n";
            return 0;
        };
    });

    // dot
    static std::string d_graph, d_cert, d_out;
    auto* dot = app.add_subcommand("dot", "Graphviz export, optionally highlighting a certificate");
    dot->add_option("--graph", d_graph)->required();
    dot->add_option("--cert", d_cert);
    dot->add_option("-o,--out", d_out);
    dot->callback([&] {
        action = [] {
            auto g = load_graph(d_graph);
            if (d_cert.empty()) {
                emit(d_out, imm::export_dot(g));
                return 0;
            }
            auto c = imm::read_certificate(slurp(d_cert));
            auto res = imm::verify(g, c);
            if (!res.ok) {
                std::cout << "INVALID: " << res.message << "\n";
                return 1;
            }
            emit(d_out, imm::export_dot(g, &c));
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return action ? action() : 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const imm::hypothesis_error& e) {
        std::cout << "HYPOTHESIS: " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
