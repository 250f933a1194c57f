#include "immersion/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace imm {

namespace {

std::string edge_str(int u, int v) {
    return std::to_string(u) + "-" + std::to_string(v);
}

}  // namespace

Graph::Graph(int order, std::vector<Edge> edges, std::vector<std::string> labels)
    : order_(order) {
    if (order < 0) throw std::invalid_argument("graph order must be >= 0");
    if (!labels.empty() && static_cast<int>(labels.size()) != order)
        throw std::invalid_argument("label count does not match order");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u < 0 || v >= order)
            throw std::invalid_argument("edge endpoint out of range: " + edge_str(u, v));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("duplicate edge " + edge_str(edges[i].first, edges[i].second));
    edges_ = std::move(edges);
    labels_ = std::move(labels);
    adj_.assign(order_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= order_) throw std::invalid_argument("vertex out of range");
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= order_ || v < 0 || v >= order_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::string Graph::label(int v) const {
    if (v < 0 || v >= order_) throw std::invalid_argument("vertex out of range");
    if (labels_.empty()) return std::to_string(v + 1);
    return labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    return Graph(order_, edges_, std::move(labels));
}

std::uint64_t Graph::edges_hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint32_t x) {
        for (int b = 0; b < 4; ++b) {
            h ^= (x >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [u, v] : edges_) {
        mix(static_cast<std::uint32_t>(u));
        mix(static_cast<std::uint32_t>(v));
    }
    return h;
}

std::string edges_hash_hex(const Graph& g) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = g.edges_hash();
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

namespace {

std::vector<std::string> index_labels(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(std::to_string(i + 1));
    return out;
}

// Vertices of hamming/grid powers are d-digit base-n numbers, most
// significant digit first; this matches the flat index of the iterated
// Cartesian product.
std::vector<int> digits_of(int v, int base, int d) {
    std::vector<int> ds(d);
    for (int i = d - 1; i >= 0; --i) {
        ds[i] = v % base;
        v /= base;
    }
    return ds;
}

std::string tuple_label(const std::vector<int>& ds) {
    std::string s = "(";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ds[i] + 1);
    }
    return s + ")";
}

Graph digit_power_graph(int base, int d, bool adjacent_digits_only) {
    long long total = 1;
    for (int i = 0; i < d; ++i) {
        total *= base;
        if (total > 1'000'000'000) throw std::invalid_argument("power graph too large");
    }
    int n = static_cast<int>(total);
    std::vector<Edge> edges;
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) {
        auto ds = digits_of(v, base, d);
        labels[v] = tuple_label(ds);
        long long step = 1;
        for (int pos = d - 1; pos >= 0; --pos) {
            for (int other = ds[pos] + 1; other < base; ++other) {
                if (adjacent_digits_only && other != ds[pos] + 1) break;
                edges.emplace_back(v, v + static_cast<int>((other - ds[pos]) * step));
            }
            step *= base;
        }
    }
    return Graph(n, std::move(edges), std::move(labels));
}

}  // namespace

Graph generate(const std::string& family, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + family + "' expects " + std::to_string(k) +
                                        " parameter(s)");
        for (int p : params)
            if (p < 1) throw std::invalid_argument("family parameters must be >= 1");
    };
    if (family == "complete") {
        need(1);
        int t = params[0];
        std::vector<Edge> edges;
        for (int u = 0; u < t; ++u)
            for (int v = u + 1; v < t; ++v) edges.emplace_back(u, v);
        return Graph(t, std::move(edges), index_labels(t));
    }
    if (family == "path") {
        need(1);
        int n = params[0];
        std::vector<Edge> edges;
        for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
        return Graph(n, std::move(edges), index_labels(n));
    }
    if (family == "cycle") {
        need(1);
        int n = params[0];
        if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
        std::vector<Edge> edges;
        for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
        edges.emplace_back(0, n - 1);
        return Graph(n, std::move(edges), index_labels(n));
    }
    if (family == "complete_bipartite") {
        need(2);
        int a = params[0], b = params[1];
        std::vector<Edge> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
        return Graph(a + b, std::move(edges), index_labels(a + b));
    }
    if (family == "hypercube") {
        need(1);
        return digit_power_graph(2, params[0], false);
    }
    if (family == "hamming") {
        need(2);
        return digit_power_graph(params[0], params[1], false);
    }
    if (family == "grid_power") {
        need(2);
        return digit_power_graph(params[0], params[1], true);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

Graph read_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            long long hdr;
            std::string extra;
            if (!(ls >> hdr) || (ls >> extra) || hdr < 0 || hdr > 1'000'000'000)
                throw std::runtime_error("line " + std::to_string(lineno) + ": malformed header");
            n = static_cast<int>(hdr);
            continue;
        }
        long long u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw std::runtime_error("line " + std::to_string(lineno) + ": expected 'u v'");
        if (u == v)
            throw std::runtime_error("line " + std::to_string(lineno) + ": loop at vertex " +
                                     std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("line " + std::to_string(lineno) + ": endpoint out of range");
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second)
            throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate edge " +
                                     edge_str(e.first, e.second));
        edges.push_back(e);
    }
    if (n < 0) throw std::runtime_error("line " + std::to_string(lineno) + ": malformed header");
    return Graph(n, std::move(edges));
}

std::string write_graph(const Graph& g, bool label_comments) {
    std::string out = std::to_string(g.order());
    if (label_comments && g.has_labels())
        for (int v = 0; v < g.order(); ++v)
            out += "\n# " + std::to_string(v) + ": " + g.labels()[v];
    for (const auto& [u, v] : g.edges())
        out += "\n" + std::to_string(u) + " " + std::to_string(v);
    return out;
}

}  // namespace imm
