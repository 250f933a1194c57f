#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace imm {

// Vertices are plain ints in [0, order()). An edge is an unordered pair,
// stored canonically as (min, max).
using Edge = std::pair<int, int>;

/// Finite simple undirected graph. Immutable after construction; the edge
/// list is kept sorted so that serialization is byte-stable.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on loops, out-of-range endpoints or
    /// duplicate edges. Labels, when given, must have one entry per vertex.
    Graph(int order, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;

    /// Copy of this graph with the given labels attached (or stripped, when
    /// empty). The only "mutation" offered, and it returns a new value.
    Graph with_labels(std::vector<std::string> labels) const;

    /// FNV-1a over the canonical edge list; identifies a host graph inside
    /// certificate files.
    std::uint64_t edges_hash() const;

    bool operator==(const Graph& o) const { return order_ == o.order_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int order_ = 0;
    std::vector<Edge> edges_;            // sorted (min,max) pairs
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    std::vector<std::string> labels_;    // empty, or one per vertex
};

/// Named family generators. Families:
///   complete t | path n | cycle n (n>=3) | complete_bipartite a b |
///   hypercube d | hamming n d | grid_power n d
/// All parameters must be >= 1. Generated vertices carry 1-based labels
/// ("1".."n", or coordinate tuples for the power families).
Graph generate(const std::string& family, const std::vector<int>& params);

/// Text format: first line "n", then one "u v" line per edge with
/// 0 <= u < v < n; '#' starts a comment line; blank lines are ignored.
/// Parse errors report the offending line number.
Graph read_graph(const std::string& text);

/// Canonical writer: header, edges in sorted order, '\n' separators, no
/// trailing newline. With label_comments, "# v: label" lines follow the
/// header (the reader skips them).
std::string write_graph(const Graph& g, bool label_comments = false);

/// edges_hash() as 16 lowercase hex digits.
std::string edges_hash_hex(const Graph& g);

}  // namespace imm
