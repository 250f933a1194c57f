#include "immersion/colorings.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace imm {

int CliqueAssignment::second_missing(int v) const {
    for (int c : missing[v])
        if (c != vertex_label[v]) return c;
    throw std::logic_error("second_missing: vertex has a single missing color");
}

namespace {

void fill_missing(CliqueAssignment& a) {
    int m = a.clique_order;
    a.missing.assign(m, {});
    for (int v = 0; v < m; ++v) {
        for (int c : a.colors) {
            bool present = false;
            for (int u = 0; u < m && !present; ++u) present = u != v && a.edge_color[v][u] == c;
            if (!present) a.missing[v].push_back(c);
        }
    }
}

}  // namespace

CliqueAssignment odd_clique_assignment(int t) {
    if (t < 2 || t % 2 != 0)
        throw std::invalid_argument("odd_clique_assignment: t must be even and >= 2");
    int m = t - 1;  // odd clique
    CliqueAssignment a;
    a.mode = CliqueAssignment::Mode::odd;
    a.clique_order = m;
    for (int c = 2; c <= t; ++c) a.colors.push_back(c);
    a.edge_color.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) a.edge_color[i][j] = (i + j) % m + 2;
    a.vertex_label.resize(m);
    for (int v = 0; v < m; ++v) a.vertex_label[v] = (2 * v) % m + 2;
    fill_missing(a);
    return a;
}

CliqueAssignment even_clique_assignment(int r) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("even_clique_assignment: r must be odd and >= 3");
    int m = r - 1;  // even clique; vertex u here is vertex u+1 of the round-robin K_r
    CliqueAssignment a;
    a.mode = CliqueAssignment::Mode::even;
    a.clique_order = m;
    for (int c = 1; c <= r; ++c) a.colors.push_back(c);
    a.edge_color.assign(m, std::vector<int>(m, -1));
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            if (u != v) a.edge_color[u][v] = (u + v + 2) % r + 1;
    a.vertex_label.resize(m);
    for (int u = 0; u < m; ++u) a.vertex_label[u] = u + 2;  // color of the removed edge
    fill_missing(a);
    return a;
}

namespace {

bool fill_latin(LatinSquare& sq, int idx) {
    int r = sq.order;
    if (idx == r * r) return true;
    int row = idx / r, col = idx % r;
    if (row == col) return fill_latin(sq, idx + 1);
    for (int v = 0; v < r; ++v) {
        bool ok = v != row && v != col;  // row v is taken by the diagonal of row; same for col
        for (int k = 0; k < r && ok; ++k) {
            if (sq.cells[row][k] == v) ok = false;
            if (sq.cells[k][col] == v) ok = false;
        }
        if (!ok) continue;
        sq.cells[row][col] = v;
        if (fill_latin(sq, idx + 1)) return true;
        sq.cells[row][col] = -1;
    }
    return false;
}

}  // namespace

LatinSquare idempotent_latin_square(int r) {
    if (r <= 2) throw std::invalid_argument("no idempotent Latin square of order " + std::to_string(r));
    if (r % 2 == 1) {
        LatinSquare sq;
        sq.order = r;
        sq.cells.assign(r, std::vector<int>(r));
        int half = (r + 1) / 2;  // inverse of 2 mod r
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sq.cells[i][j] = (i + j) % r * half % r;
        return sq;
    }
    static std::map<int, LatinSquare> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    LatinSquare sq;
    sq.order = r;
    sq.cells.assign(r, std::vector<int>(r, -1));
    for (int h = 0; h < r; ++h) sq.cells[h][h] = h;
    if (!fill_latin(sq, 0))
        throw std::logic_error("latin square backtracking failed for order " + std::to_string(r));
    cache[r] = sq;
    return sq;
}

BipartiteColoring bipartite_r_coloring(int r) {
    if (r < 1) throw std::invalid_argument("bipartite_r_coloring: r must be >= 1");
    return BipartiteColoring{r};
}

}  // namespace imm
