#pragma once

#include <array>
#include <stdexcept>

#include "immersion/certificate.hpp"
#include "immersion/graph.hpp"
#include "immersion/products.hpp"

namespace imm {

/// A construction precondition (a theorem hypothesis) does not hold for the
/// given witnesses. Distinct from verification failure.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A graph together with a verified clique-immersion certificate on it.
/// Every construction consumes fixed factor witnesses and returns one, so
/// constructions compose (e.g. iterated Cartesian products).
struct FactorWitness {
    Graph graph;
    ImmersionCertificate cert;

    int order() const { return cert.order; }
};

/// Verifies the certificate against the graph; throws std::invalid_argument
/// when it does not hold.
FactorWitness make_witness(Graph graph, ImmersionCertificate cert);

/// K_t with all vertices as terminals and single-edge trails.
FactorWitness complete_witness(int t);

/// Order-3 witness on C_n: the three arcs between the given terminals
/// (sorted, distinct). Default terminals {0, n/3, 2n/3}.
FactorWitness cycle_arc_witness(int n, std::array<int, 3> terminals);
FactorWitness cycle_arc_witness(int n);

/// Order-2 witness on P_n: terminals {0, n-1} joined by the whole path
/// (order-1 witness when n == 1).
FactorWitness path_witness(int n);

/// Order-tr witness on the lexicographic product: terminals are the
/// (G-terminal, H-terminal) pairs; copies of H's immersion serve the
/// same-copy pairs, and cross-copy pairs ride a fixed r-coloring of the
/// K_{r,r} joins along G's trails (the first hop from position i uses any
/// of the r edges leaving it).
FactorWitness lex_construct(const FactorWitness& gw, const FactorWitness& hw);

/// Order-(t+r-1) witness on the Cartesian product: G's immersion inside the
/// first H-terminal's layer, H's immersion along the first G-terminal's
/// column, mixed pairs via an H-trail then a G-trail.
FactorWitness cartesian_construct(const FactorWitness& gw, const FactorWitness& hw);

/// Order-(t+2) witness on G x P_n (Cartesian), n >= 5, for connected G with
/// a non-terminal vertex. The long trail detours through the first and
/// fifth path layers and the column of the smallest-index non-terminal.
FactorWitness cartesian_path_construct(const FactorWitness& gw, int n);

/// Order-((t-1)(r-1)+1) witness on K_t x K_r (direct), t, r >= 2; the
/// two-disjoint-edges case t == r == 2 yields order 2. Terminals are (1,1)
/// and its neighbors; same-row and same-column pairs are routed through the
/// clique assignments (three parity cases).
FactorWitness direct_complete_construct(int t, int r);

/// Order-((t-1)(r-1)+1) witness on G x K_r, r >= 3: the clique plan with
/// clique rows replaced by G-terminals, each plan edge expanded along G's
/// trails. Odd-peg expansions draw a third color from the odd-clique
/// coloring (r odd) or an idempotent Latin square (r even).
FactorWitness direct_gkr_construct(const FactorWitness& gw, int r);

/// Order-((t-1)(r-1)+1) witness on G x H for witnesses whose trails all
/// have the same peg parity in both factors (all even or all odd).
FactorWitness direct_parity_construct(const FactorWitness& gw, const FactorWitness& hw);

/// Order-((t-1)(r-1)+1) witness on G x H when H's witness has all-even peg
/// counts and r >= 3; expands each G x K_r plan edge by zigzagging over the
/// corresponding H-trail.
FactorWitness direct_semiparity_construct(const FactorWitness& gw, const FactorWitness& hw);

}  // namespace imm
