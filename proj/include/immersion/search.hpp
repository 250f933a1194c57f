#pragma once

#include <optional>
#include <string>
#include <vector>

#include "immersion/certificate.hpp"
#include "immersion/graph.hpp"
#include "immersion/products.hpp"

namespace imm {

/// Per-(graph, t) limits for the exact decider.
struct SearchBudget {
    long long max_nodes = 1'000'000;
    double max_seconds = 60.0;
};

/// Exact value or verified bounds for im(g). Every reported lower bound is
/// backed by a stored certificate that the certificates module accepts.
struct SearchReport {
    std::string graph_id;
    int lower = 0;
    std::string lower_provenance;
    int upper = 0;
    std::string upper_provenance;
    bool exact = false;
    double elapsed_seconds = 0.0;
    long long nodes = 0;
    std::optional<ImmersionCertificate> certificate;
};

/// im(g) <= max degree + 1; 0 for the empty graph by convention.
int degree_upper_bound(const Graph& g);

/// Corner separating bound: a placement with k and j terminals on opposite
/// sides of an edge cut C is feasible only when |C| >= k*j.
struct CutBoundQuery {
    int cut_size = 0;
    int k = 0;
    int j = 0;
};

bool cut_bound_feasible(const CutBoundQuery& q);

/// Iterates t downward from the degree bound, enumerating terminal sets of
/// sufficient degree in lexicographic order and packing edge-disjoint trails
/// by deterministic shortest-first backtracking. Pruned by residual degrees,
/// residual connectivity, and cut bounds: bridges, the coordinate layer cuts
/// reconstructed from product vertex labels when present, and small s-t
/// minimum cuts. Budget exhaustion returns bounds with exact=false.
SearchReport exact_immersion_number(const Graph& g, const SearchBudget& budget = {},
                                    const std::string& graph_id = "");

struct SplitoffLimits {
    int max_vertices = 10;
    int max_edges = 15;
};

/// True iff some subgraph of g admits a sequence of simple-graph-preserving
/// split-offs reaching a graph with a K_t subgraph. Exhaustive depth-first
/// search with memoization on the edge-set encoding; interleaved edge
/// deletions stand in for the initial subgraph choice (any delete can be
/// commuted to the front of the sequence). Throws when the size guard is
/// exceeded.
bool splitoff_oracle(const Graph& g, int t, const SplitoffLimits& limits = {});

// ---- Conjecture scanner ------------------------------------------------

enum class ScanStatus { construction_met, search_met, open_within_budget, violation };

const char* scan_status_name(ScanStatus s);

/// One factor of a scan pair, with enough family knowledge to build
/// witnesses and know im exactly. File-backed factors carry the certificate
/// their exact search produced instead of family knowledge.
struct ScanFactor {
    std::string name;
    std::string family;  // complete | cycle | path | hypercube | file
    int param = 0;
    Graph graph;
    int im_value = 0;
    std::optional<ImmersionCertificate> witness_cert;
};

/// "cycles:3..8" | "completes:2..5" | "paths:2..6" | "hypercubes:1..3",
/// or "files:a.g;b.g" to load graph files (their im is decided exactly up
/// front; an inconclusive search is an error).
std::vector<ScanFactor> parse_family_spec(const std::string& spec);

/// File-style factor for an arbitrary graph.
ScanFactor scan_factor_from_graph(const std::string& name, Graph g,
                                  const SearchBudget& budget = {});

struct ScanRow {
    std::string g_name;
    std::string h_name;
    int t = 0;
    int r = 0;
    int target = 0;
    ScanStatus status = ScanStatus::open_within_budget;
    int value = 0;
    long long time_ms = 0;
};

struct ScanOptions {
    ProductKind kind = ProductKind::direct;
    SearchBudget budget;
    std::string artifact_dir;  // violation dumps land here when nonempty
};

/// For each (g, h) pair: try the applicable constructions first, then exact
/// search within budget. A violation requires an exhausted exact search
/// strictly below the target.
std::vector<ScanRow> conjecture_scan(const std::vector<ScanFactor>& left,
                                     const std::vector<ScanFactor>& right,
                                     const ScanOptions& options);

std::string scan_ledger_tsv(const std::vector<ScanRow>& rows);

}  // namespace imm
