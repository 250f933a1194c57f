#pragma once

#include <vector>

#include "immersion/graph.hpp"

namespace imm {

/// Proper edge coloring of a clique together with the per-vertex missing
/// colors. These are the routing tables for the direct-product
/// constructions, so the invariants matter more than the concrete table:
///
///  - odd mode (clique order m odd, colors {2..m+1}): every color is missing
///    at exactly one vertex, and vertex_label[v] is that color;
///  - even mode (m even, colors {1..m+1}): color 1 is present at every
///    vertex (its class is a perfect matching), every other color is missing
///    at exactly two vertices, and each vertex misses exactly two colors,
///    one of which is its vertex_label.
struct CliqueAssignment {
    enum class Mode { odd, even };

    Mode mode = Mode::odd;
    int clique_order = 0;                          // m; vertices 0..m-1
    std::vector<int> colors;                       // ascending
    std::vector<std::vector<int>> edge_color;      // m x m, -1 on the diagonal
    std::vector<int> vertex_label;                 // designated missing color
    std::vector<std::vector<int>> missing;         // per vertex, ascending

    int color(int u, int v) const { return edge_color[u][v]; }
    /// Even mode only: the missing color at v other than vertex_label[v].
    int second_missing(int v) const;
};

/// Assignment on K_{t-1} (t even, t >= 2) with colors {2..t}.
CliqueAssignment odd_clique_assignment(int t);

/// Assignment on K_{r-1} (r odd, r >= 3) with colors {1..r}, built by
/// coloring K_r round-robin, relabeling colors so the removed vertex misses
/// color 1, and labeling each survivor with the color of its removed edge.
CliqueAssignment even_clique_assignment(int r);

struct LatinSquare {
    int order = 0;
    std::vector<std::vector<int>> cells;  // symbols 0..order-1

    int at(int row, int col) const { return cells[row][col]; }
};

/// Order-r idempotent Latin square (cell(h,h) == h), r >= 3. Odd r uses the
/// closed form ((i+j)(r+1)/2) mod r; even r is found by deterministic
/// backtracking with lexicographic value order, cached per order. There is
/// no order-2 idempotent Latin square, so r <= 2 is an error.
LatinSquare idempotent_latin_square(int r);

/// Proper r-edge-coloring of K_{r,r}: the left-p to right-q edge gets color
/// (p+q) mod r, so every color class is a perfect matching.
struct BipartiteColoring {
    int r = 0;
    int color(int p, int q) const { return (p + q) % r; }
};

BipartiteColoring bipartite_r_coloring(int r);

}  // namespace imm
