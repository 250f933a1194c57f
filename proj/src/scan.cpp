#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "immersion/constructions.hpp"
#include "immersion/search.hpp"

namespace imm {

namespace {

int family_im(const std::string& family, int param) {
    if (family == "complete") return param;
    if (family == "cycle") return 3;
    if (family == "path") return param >= 2 ? 2 : 1;
    if (family == "hypercube") return param + 1;
    throw std::invalid_argument("unknown scan family '" + family + "'");
}

FactorWitness hypercube_witness(int d) {
    FactorWitness w = complete_witness(2);
    for (int i = 1; i < d; ++i) w = cartesian_construct(w, complete_witness(2));
    return w;
}

// Preferred witness of each parity; nullopt when the factor cannot supply it.
std::optional<FactorWitness> witness_with(const ScanFactor& f, ParitySummary want) {
    if (f.family == "file") {
        if (f.witness_cert && parity_profile(*f.witness_cert).summary == want)
            return make_witness(f.graph, *f.witness_cert);
        return std::nullopt;
    }
    if (f.family == "complete") {
        if (want == ParitySummary::all_even) return complete_witness(f.param);
        return std::nullopt;
    }
    if (f.family == "cycle") {
        int n = f.param;
        if (want == ParitySummary::all_even && n % 2 == 1) return cycle_arc_witness(n, {0, 1, 2});
        if (want == ParitySummary::all_odd && n % 2 == 0 && n >= 6)
            return cycle_arc_witness(n, {0, 2, 4});
        return std::nullopt;
    }
    if (f.family == "path") {
        int n = f.param;
        if (n < 2) return std::nullopt;
        if (want == ParitySummary::all_even) {
            ImmersionCertificate c;
            c.order = 2;
            c.terminals = {0, 1};
            c.trails[{0, 1}] = {0, 1};
            c.host_order = n;
            Graph g = generate("path", {n});
            c.host_edges_hash = edges_hash_hex(g);
            return make_witness(std::move(g), std::move(c));
        }
        if (n >= 3) {
            ImmersionCertificate c;
            c.order = 2;
            c.terminals = {0, 2};
            c.trails[{0, 1}] = {0, 1, 2};
            c.host_order = n;
            Graph g = generate("path", {n});
            c.host_edges_hash = edges_hash_hex(g);
            return make_witness(std::move(g), std::move(c));
        }
        return std::nullopt;
    }
    return std::nullopt;
}

FactorWitness witness_any(const ScanFactor& f) {
    if (f.family == "complete") return complete_witness(f.param);
    if (f.family == "cycle") return cycle_arc_witness(f.param);
    if (f.family == "path") return path_witness(f.param);
    if (f.family == "hypercube") return hypercube_witness(f.param);
    if (f.witness_cert) return make_witness(f.graph, *f.witness_cert);
    throw std::invalid_argument("scan factor '" + f.name + "' has no witness");
}

ImmersionCertificate trivial_cert_on_complete(const Graph& host) {
    ImmersionCertificate c;
    c.order = host.order();
    c.host_order = host.order();
    c.host_edges_hash = edges_hash_hex(host);
    for (int v = 0; v < host.order(); ++v) c.terminals.push_back(v);
    for (int i = 0; i < host.order(); ++i)
        for (int j = i + 1; j < host.order(); ++j) c.trails[{i, j}] = {i, j};
    return c;
}

// A construction certificate for the pair, already on product(kind, g, h),
// or nullopt when no construction applies.
std::optional<ImmersionCertificate> construction_for(const ScanFactor& gf, const ScanFactor& hf,
                                                     ProductKind kind, int target) {
    const int t = gf.im_value, r = hf.im_value;
    auto complete_factor = [](const ScanFactor& f) {
        return f.graph.order() >= 1 && f.im_value == f.graph.order() &&
               2LL * f.graph.edge_count() == 1LL * f.graph.order() * (f.graph.order() - 1);
    };
    bool g_complete = complete_factor(gf);
    bool h_complete = complete_factor(hf);
    Graph host = product(kind, gf.graph, hf.graph);

    if (kind == ProductKind::strong) {
        if (g_complete && h_complete) return trivial_cert_on_complete(host);
        return std::nullopt;
    }

    auto swapped_onto_host = [&](const FactorWitness& w) {
        return map_certificate(w.cert, coordinate_swap_map(hf.graph.order(), gf.graph.order()),
                               host);
    };
    std::optional<ImmersionCertificate> result;
    if (g_complete && h_complete) {
        result = direct_complete_construct(t, r).cert;
    } else if (h_complete && r >= 3) {
        result = direct_gkr_construct(witness_any(gf), r).cert;
    } else if (g_complete && t >= 3) {
        result = swapped_onto_host(direct_gkr_construct(witness_any(hf), t));
    } else {
        auto ge = witness_with(gf, ParitySummary::all_even);
        auto he = witness_with(hf, ParitySummary::all_even);
        auto go = witness_with(gf, ParitySummary::all_odd);
        auto ho = witness_with(hf, ParitySummary::all_odd);
        if (ge && he)
            result = direct_parity_construct(*ge, *he).cert;
        else if (go && ho)
            result = direct_parity_construct(*go, *ho).cert;
        else if (he && r >= 3)
            result = direct_semiparity_construct(witness_any(gf), *he).cert;
        else if (ge && t >= 3)
            result = swapped_onto_host(direct_semiparity_construct(witness_any(hf), *ge));
    }
    if (!result) return std::nullopt;
    if (result->order != target)
        throw std::logic_error("scan construction order mismatch for " + gf.name + " x " + hf.name);
    auto check = verify(host, *result);
    if (!check.ok)
        throw std::logic_error("scan construction failed verification: " + check.message);
    return result;
}

void dump_violation(const std::string& dir, const ScanFactor& gf, const ScanFactor& hf,
                    const Graph& host, const SearchReport& rep) {
    namespace fs = std::filesystem;
    if (dir.empty()) return;
    fs::create_directories(dir);
    std::string base = dir + "/" + gf.name + "_x_" + hf.name;
    std::ofstream(base + ".g") << write_graph(host, true);
    std::ofstream(base + "_g.g") << write_graph(gf.graph);
    std::ofstream(base + "_h.g") << write_graph(hf.graph);
    if (rep.certificate) std::ofstream(base + ".cert.json") << write_certificate(*rep.certificate);
    std::ofstream report(base + ".report.txt");
    report << "graph=" << rep.graph_id << "\nlower=" << rep.lower << " (" << rep.lower_provenance
           << ")\nupper=" << rep.upper << " (" << rep.upper_provenance << ")\nexact=" << rep.exact
           << "\nnodes=" << rep.nodes << "\n";
}

}  // namespace

ScanFactor scan_factor_from_graph(const std::string& name, Graph g, const SearchBudget& budget) {
    ScanFactor f;
    f.name = name;
    for (auto& ch : f.name)
        if (ch == '\t' || ch == '\n') ch = '_';
    f.family = "file";
    auto rep = exact_immersion_number(g, budget, name);
    if (!rep.exact)
        throw std::runtime_error("scan factor '" + name + "': immersion number not decided within budget");
    f.im_value = rep.lower;
    f.witness_cert = rep.certificate;
    f.graph = std::move(g);
    return f;
}

std::vector<ScanFactor> parse_family_spec(const std::string& spec) {
    if (spec.rfind("files:", 0) == 0) {
        std::vector<ScanFactor> out;
        std::string rest = spec.substr(6);
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto semi = rest.find(';', start);
            std::string path =
                semi == std::string::npos ? rest.substr(start) : rest.substr(start, semi - start);
            if (path.empty()) throw std::invalid_argument("files spec: empty path");
            std::ifstream in(path, std::ios::binary);
            if (!in) throw std::invalid_argument("files spec: cannot open '" + path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            out.push_back(scan_factor_from_graph(path, read_graph(ss.str())));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        return out;
    }
    auto colon = spec.find(':');
    auto dots = spec.find("..");
    if (colon == std::string::npos || dots == std::string::npos || dots < colon)
        throw std::invalid_argument("family spec must look like 'cycles:3..8' or 'files:a.g;b.g'");
    std::string family = spec.substr(0, colon);
    int lo = std::stoi(spec.substr(colon + 1, dots - colon - 1));
    int hi = std::stoi(spec.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("family spec range is empty");
    std::string singular;
    if (family == "cycles")
        singular = "cycle";
    else if (family == "completes")
        singular = "complete";
    else if (family == "paths")
        singular = "path";
    else if (family == "hypercubes")
        singular = "hypercube";
    else
        throw std::invalid_argument("unknown family '" + family + "' in spec");
    if (singular == "cycle" && lo < 3) throw std::invalid_argument("cycles need n >= 3");
    std::vector<ScanFactor> out;
    for (int p = lo; p <= hi; ++p) {
        ScanFactor f;
        f.family = singular;
        f.param = p;
        f.name = singular + std::to_string(p);
        f.graph = generate(singular, {p});
        f.im_value = family_im(singular, p);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<ScanRow> conjecture_scan(const std::vector<ScanFactor>& left,
                                     const std::vector<ScanFactor>& right,
                                     const ScanOptions& options) {
    if (options.kind != ProductKind::direct && options.kind != ProductKind::strong)
        throw std::invalid_argument("conjecture_scan: kind must be direct or strong");
    std::vector<ScanRow> rows;
    for (const auto& gf : left)
        for (const auto& hf : right) {
            auto start = std::chrono::steady_clock::now();
            ScanRow row;
            row.g_name = gf.name;
            row.h_name = hf.name;
            row.t = gf.im_value;
            row.r = hf.im_value;
            row.target = options.kind == ProductKind::direct
                             ? (row.t - 1) * (row.r - 1) + 1
                             : row.t * row.r;
            auto built = construction_for(gf, hf, options.kind, row.target);
            if (built) {
                row.status = ScanStatus::construction_met;
                row.value = built->order;
            } else {
                Graph host = product(options.kind, gf.graph, hf.graph);
                auto rep = exact_immersion_number(host, options.budget, gf.name + "x" + hf.name);
                row.value = rep.lower;
                if (rep.exact)
                    row.status = rep.lower >= row.target ? ScanStatus::search_met
                                                         : ScanStatus::violation;
                else
                    row.status = rep.lower >= row.target ? ScanStatus::search_met
                                                         : ScanStatus::open_within_budget;
                if (row.status == ScanStatus::violation)
                    dump_violation(options.artifact_dir, gf, hf, host, rep);
            }
            row.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
            rows.push_back(std::move(row));
        }
    return rows;
}

std::string scan_ledger_tsv(const std::vector<ScanRow>& rows) {
    std::string out = "# g\th\tt\tr\ttarget\tstatus\tvalue\ttime_ms\n";
    for (const auto& r : rows) {
        out += r.g_name + "\t" + r.h_name + "\t" + std::to_string(r.t) + "\t" +
               std::to_string(r.r) + "\t" + std::to_string(r.target) + "\t" +
               scan_status_name(r.status) + "\t" + std::to_string(r.value) + "\t" +
               std::to_string(r.time_ms) + "\n";
    }
    return out;
}

}  // namespace imm
