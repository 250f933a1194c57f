#include "immersion/constructions.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "immersion/colorings.hpp"

namespace imm {

namespace {

std::string pair_str(int i, int j) {
    return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

// Accumulates trails against a fixed host and terminal list. Edge reuse and
// endpoint mismatches are construction bugs, reported at insertion time to
// localize the failure; finish() still re-verifies the whole certificate.
class CertBuilder {
public:
    CertBuilder(Graph host, std::vector<int> terminals) : host_(std::move(host)) {
        cert_.order = static_cast<int>(terminals.size());
        cert_.terminals = std::move(terminals);
        cert_.host_order = host_.order();
        cert_.host_edges_hash = edges_hash_hex(host_);
    }

    void add(int i, int j, std::vector<int> walk) {
        if (i > j) std::swap(i, j);
        auto key = std::make_pair(i, j);
        int a = cert_.terminals[i], b = cert_.terminals[j];
        if (!((walk.front() == a && walk.back() == b) || (walk.front() == b && walk.back() == a)))
            throw std::logic_error("construction bug: trail " + pair_str(i, j) +
                                   " does not join its terminals");
        for (std::size_t s = 0; s + 1 < walk.size(); ++s) {
            Edge e{std::min(walk[s], walk[s + 1]), std::max(walk[s], walk[s + 1])};
            auto [it, fresh] = used_.emplace(e, key);
            if (!fresh)
                throw std::logic_error("construction bug: edge " + std::to_string(e.first) + "-" +
                                       std::to_string(e.second) + " reused by trails " +
                                       pair_str(it->second.first, it->second.second) + " and " +
                                       pair_str(i, j));
        }
        if (!cert_.trails.emplace(key, std::move(walk)).second)
            throw std::logic_error("construction bug: duplicate trail " + pair_str(i, j));
    }

    FactorWitness finish() {
        auto res = verify(host_, cert_);
        if (!res.ok)
            throw std::logic_error("construction produced an invalid certificate: " + res.message);
        return FactorWitness{std::move(host_), std::move(cert_)};
    }

private:
    Graph host_;
    ImmersionCertificate cert_;
    std::map<Edge, std::pair<int, int>> used_;
};

void require_verified(const FactorWitness& w, const char* which) {
    auto res = verify(w.graph, w.cert);
    if (!res.ok)
        throw std::invalid_argument(std::string(which) + " witness fails verification: " + res.message);
}

std::vector<int> bfs_path(const Graph& g, int from, int to) {
    std::vector<int> parent(g.order(), -1);
    std::queue<int> q;
    q.push(from);
    parent[from] = from;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to) break;
        for (int nb : g.neighbors(v))
            if (parent[nb] < 0) {
                parent[nb] = v;
                q.push(nb);
            }
    }
    if (parent[to] < 0) throw std::invalid_argument("graph is not connected");
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

FactorWitness make_witness(Graph graph, ImmersionCertificate cert) {
    auto res = verify(graph, cert);
    if (!res.ok) throw std::invalid_argument("witness fails verification: " + res.message);
    return FactorWitness{std::move(graph), std::move(cert)};
}

FactorWitness complete_witness(int t) {
    Graph g = t == 0 ? Graph() : generate("complete", {t});
    ImmersionCertificate c;
    c.order = t;
    c.host_order = t;
    c.host_edges_hash = edges_hash_hex(g);
    for (int v = 0; v < t; ++v) c.terminals.push_back(v);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) c.trails[{i, j}] = {i, j};
    return FactorWitness{std::move(g), std::move(c)};
}

FactorWitness cycle_arc_witness(int n, std::array<int, 3> terminals) {
    Graph g = generate("cycle", {n});
    std::sort(terminals.begin(), terminals.end());
    if (terminals[0] == terminals[1] || terminals[1] == terminals[2])
        throw std::invalid_argument("cycle_arc_witness: terminals must be distinct");
    if (terminals[0] < 0 || terminals[2] >= n)
        throw std::invalid_argument("cycle_arc_witness: terminal out of range");
    auto arc = [n](int from, int to) {
        std::vector<int> walk{from};
        for (int v = from; v != to;) {
            v = (v + 1) % n;
            walk.push_back(v);
        }
        return walk;
    };
    ImmersionCertificate c;
    c.order = 3;
    c.host_order = n;
    c.host_edges_hash = edges_hash_hex(g);
    c.terminals = {terminals[0], terminals[1], terminals[2]};
    c.trails[{0, 1}] = arc(terminals[0], terminals[1]);
    c.trails[{1, 2}] = arc(terminals[1], terminals[2]);
    c.trails[{0, 2}] = arc(terminals[2], terminals[0]);
    return make_witness(std::move(g), std::move(c));
}

FactorWitness cycle_arc_witness(int n) {
    return cycle_arc_witness(n, {0, n / 3, 2 * n / 3});
}

FactorWitness path_witness(int n) {
    Graph g = generate("path", {n});
    ImmersionCertificate c;
    c.host_order = n;
    c.host_edges_hash = edges_hash_hex(g);
    if (n == 1) {
        c.order = 1;
        c.terminals = {0};
    } else {
        c.order = 2;
        c.terminals = {0, n - 1};
        std::vector<int> walk(n);
        for (int v = 0; v < n; ++v) walk[v] = v;
        c.trails[{0, 1}] = std::move(walk);
    }
    return make_witness(std::move(g), std::move(c));
}

FactorWitness lex_construct(const FactorWitness& gw, const FactorWitness& hw) {
    require_verified(gw, "G");
    require_verified(hw, "H");
    const int t = gw.order(), r = hw.order();
    Graph host = product(ProductKind::lexicographic, gw.graph, hw.graph);
    ProductIndex ix{gw.graph.order(), hw.graph.order()};
    const auto& gt = gw.cert.terminals;
    const auto& ht = hw.cert.terminals;

    std::vector<int> terms;
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < r; ++b) terms.push_back(ix.flat(gt[a], ht[b]));
    CertBuilder bld(std::move(host), std::move(terms));

    // Same copy: reuse H's immersion inside the copy over each G-terminal.
    for (int a = 0; a < t; ++a)
        for (int b1 = 0; b1 < r; ++b1)
            for (int b2 = b1 + 1; b2 < r; ++b2) {
                std::vector<int> walk;
                for (int y : oriented_trail(hw.cert, b1, b2)) walk.push_back(ix.flat(gt[a], y));
                bld.add(a * r + b1, a * r + b2, std::move(walk));
            }

    // Cross copies: ride the joins along G's trail. A single-edge trail gives
    // the full K_{r,r} between terminal positions; otherwise the first hop
    // leaves position i freely and the rest follow the color-i matching
    // q -> (i - q) mod r of the fixed K_{r,r} coloring.
    for (int a1 = 0; a1 < t; ++a1)
        for (int a2 = a1 + 1; a2 < t; ++a2) {
            auto P = oriented_trail(gw.cert, a1, a2);
            int pegs = static_cast<int>(P.size()) - 2;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    std::vector<int> walk{ix.flat(P.front(), ht[i])};
                    if (pegs > 0) {
                        int q = pegs % 2 == 0 ? j : ((i - j) % r + r) % r;
                        for (int s = 1; s <= pegs; ++s) {
                            walk.push_back(ix.flat(P[s], ht[q]));
                            q = ((i - q) % r + r) % r;
                        }
                    }
                    walk.push_back(ix.flat(P.back(), ht[j]));
                    bld.add(a1 * r + i, a2 * r + j, std::move(walk));
                }
        }
    return bld.finish();
}

FactorWitness cartesian_construct(const FactorWitness& gw, const FactorWitness& hw) {
    require_verified(gw, "G");
    require_verified(hw, "H");
    const int t = gw.order(), r = hw.order();
    if (t < 1 || r < 1)
        throw std::invalid_argument("cartesian_construct: both witnesses need order >= 1");
    Graph host = product(ProductKind::cartesian, gw.graph, hw.graph);
    ProductIndex ix{gw.graph.order(), hw.graph.order()};
    const auto& gt = gw.cert.terminals;
    const auto& ht = hw.cert.terminals;

    // Positions 0..t-1: (u_i, v_0) in the first H-terminal's layer;
    // positions t..t+r-2: (u_0, v_j) along the first G-terminal's column.
    std::vector<int> terms;
    for (int i = 0; i < t; ++i) terms.push_back(ix.flat(gt[i], ht[0]));
    for (int j = 1; j < r; ++j) terms.push_back(ix.flat(gt[0], ht[j]));
    CertBuilder bld(std::move(host), std::move(terms));

    for (int i1 = 0; i1 < t; ++i1)
        for (int i2 = i1 + 1; i2 < t; ++i2) {
            std::vector<int> walk;
            for (int x : oriented_trail(gw.cert, i1, i2)) walk.push_back(ix.flat(x, ht[0]));
            bld.add(i1, i2, std::move(walk));
        }
    for (int j1 = 1; j1 < r; ++j1)
        for (int j2 = j1 + 1; j2 < r; ++j2) {
            std::vector<int> walk;
            for (int y : oriented_trail(hw.cert, j1, j2)) walk.push_back(ix.flat(gt[0], y));
            bld.add(t - 1 + j1, t - 1 + j2, std::move(walk));
        }
    // Mixed: H-trail in column u_i, then G-trail inside layer v_j.
    for (int i = 0; i < t; ++i)
        for (int j = 1; j < r; ++j) {
            std::vector<int> walk;
            for (int y : oriented_trail(hw.cert, 0, j)) walk.push_back(ix.flat(gt[i], y));
            if (i != 0) {
                auto P = oriented_trail(gw.cert, i, 0);
                for (std::size_t s = 1; s < P.size(); ++s) walk.push_back(ix.flat(P[s], ht[j]));
            }
            bld.add(i, t - 1 + j, std::move(walk));
        }
    return bld.finish();
}

FactorWitness cartesian_path_construct(const FactorWitness& gw, int n) {
    require_verified(gw, "G");
    if (n < 5) throw std::invalid_argument("cartesian_path_construct: n must be >= 5");
    const int t = gw.order();
    if (t < 1) throw std::invalid_argument("cartesian_path_construct: G witness needs order >= 1");
    const Graph& g = gw.graph;
    const auto& gt = gw.cert.terminals;
    std::set<int> term_set(gt.begin(), gt.end());
    int x = -1;
    for (int v = 0; v < g.order() && x < 0; ++v)
        if (!term_set.count(v)) x = v;
    if (x < 0)
        throw std::invalid_argument(
            "cartesian_path_construct: every vertex of G is a terminal (G complete on its terminals)");
    bfs_path(g, 0, g.order() - 1);  // connectivity probe; throws when disconnected
    Graph host = product(ProductKind::cartesian, g, generate("path", {n}));
    ProductIndex ix{g.order(), n};

    std::vector<int> terms;
    for (int i = 0; i < t; ++i) terms.push_back(ix.flat(gt[i], 2));
    terms.push_back(ix.flat(gt[0], 1));
    terms.push_back(ix.flat(gt[0], 3));
    CertBuilder bld(std::move(host), std::move(terms));

    for (int i1 = 0; i1 < t; ++i1)
        for (int i2 = i1 + 1; i2 < t; ++i2) {
            std::vector<int> walk;
            for (int v : oriented_trail(gw.cert, i1, i2)) walk.push_back(ix.flat(v, 2));
            bld.add(i1, i2, std::move(walk));
        }
    // (v_1, u_2) and (v_1, u_4) reach each (v_i, u_3) inside their own layer,
    // then hop to the middle layer.
    for (int side = 0; side < 2; ++side) {
        int layer = side == 0 ? 1 : 3;
        int pos = t + side;
        for (int i = 0; i < t; ++i) {
            std::vector<int> walk;
            if (i == 0)
                walk = {ix.flat(gt[0], layer)};
            else
                for (int v : oriented_trail(gw.cert, 0, i)) walk.push_back(ix.flat(v, layer));
            walk.push_back(ix.flat(gt[i], 2));
            bld.add(pos, i, std::move(walk));
        }
    }
    // The long trail between (v_1, u_2) and (v_1, u_4): down into the first
    // layer, across to the non-terminal x, along x's column to the fifth
    // layer, and back.
    {
        std::vector<int> walk{ix.flat(gt[0], 1), ix.flat(gt[0], 0)};
        auto p0 = bfs_path(g, gt[0], x);
        for (std::size_t s = 1; s < p0.size(); ++s) walk.push_back(ix.flat(p0[s], 0));
        for (int layer = 1; layer <= 4; ++layer) walk.push_back(ix.flat(x, layer));
        auto p4 = bfs_path(g, x, gt[0]);
        for (std::size_t s = 1; s < p4.size(); ++s) walk.push_back(ix.flat(p4[s], 4));
        walk.push_back(ix.flat(gt[0], 3));
        bld.add(t, t + 1, std::move(walk));
    }
    return bld.finish();
}

namespace {

using Coord = std::pair<int, int>;  // 1-based (row, column)
using RouteMap = std::map<std::pair<Coord, Coord>, std::vector<Coord>>;

void add_route(RouteMap& rm, std::vector<Coord> path) {
    Coord a = path.front(), b = path.back();
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!rm.emplace(key, std::move(path)).second)
        throw std::logic_error("clique plan: duplicate route");
}

// Odd-clique colors indexed by the names 2..t the routes use; name i is the
// vertex whose missing color is i.
struct OddTable {
    CliqueAssignment a;
    std::vector<int> inv;

    explicit OddTable(int t) : a(odd_clique_assignment(t)), inv(t + 1, -1) {
        for (int v = 0; v < a.clique_order; ++v) inv[a.vertex_label[v]] = v;
    }
    int color(int i, int k) const { return a.edge_color[inv[i]][inv[k]]; }
};

// Even-clique colors for names 2..r; here the label of vertex u is u+2, so
// the name maps straight onto the vertex.
struct EvenTable {
    CliqueAssignment a;

    explicit EvenTable(int r) : a(even_clique_assignment(r)) {}
    int color(int j, int k) const { return a.edge_color[j - 2][k - 2]; }
    int second(int j) const { return a.second_missing(j - 2); }
};

// Routes for the K_t x K_r plan, t even. Cases 1 (r even) and 2 (r odd).
RouteMap clique_routes(int t, int r) {
    RouteMap routes;
    for (int i = 2; i <= t; ++i)
        for (int j = 2; j <= r; ++j) add_route(routes, {{1, 1}, {i, j}});
    // Pairs differing in both coordinates are product edges.
    for (int i = 2; i <= t; ++i)
        for (int j = 2; j <= r; ++j)
            for (int k = i + 1; k <= t; ++k)
                for (int l = 2; l <= r; ++l)
                    if (l != j) add_route(routes, {{i, j}, {k, l}});
    if (t >= 4) {
        OddTable col_rows(t);
        for (int j = 2; j <= r; ++j)
            for (int i = 2; i <= t; ++i)
                for (int k = i + 1; k <= t; ++k) {
                    int a = col_rows.color(i, k);
                    add_route(routes, {{i, j}, {a, 1}, {k, j}});
                }
    }
    if (r >= 3) {
        if (r % 2 == 0) {
            OddTable col_cols(r);
            for (int i = 2; i <= t; ++i)
                for (int j = 2; j <= r; ++j)
                    for (int k = j + 1; k <= r; ++k) {
                        int b = col_cols.color(j, k);
                        add_route(routes, {{i, j}, {1, b}, {i, k}});
                    }
        } else {
            EvenTable col_cols(r);
            for (int i = 2; i <= t; ++i)
                for (int j = 2; j <= r; ++j)
                    for (int k = j + 1; k <= r; ++k) {
                        int b = col_cols.color(j, k);
                        if (b != 1)
                            add_route(routes, {{i, j}, {1, b}, {i, k}});
                        else
                            add_route(routes,
                                      {{i, j}, {1, col_cols.second(j)}, {i, 1},
                                       {1, col_cols.second(k)}, {i, k}});
                    }
        }
    }
    return routes;
}

// Case 3 (t, r both odd): apply the t even case to t-1 rows, replace its
// length-4 detours by hops through (t,1), then route everything touching
// row t through the halves those detours freed up.
RouteMap clique_routes_both_odd(int t, int r) {
    RouteMap routes = clique_routes(t - 1, r);
    EvenTable col_cols(r);
    for (auto& [key, path] : routes) {
        if (path.size() != 5) continue;
        Coord from = key.first, to = key.second;
        path = {from, {t, 1}, to};
    }
    for (int j = 2; j <= r; ++j) {
        add_route(routes, {{1, 1}, {t, j}});
        for (int i = 2; i <= t - 1; ++i) {
            add_route(routes, {{t, j}, {i, 1}, {1, col_cols.second(j)}, {i, j}});
            for (int k = 2; k <= r; ++k)
                if (k != j) add_route(routes, {{i, k}, {t, j}});
        }
        for (int k = j + 1; k <= r; ++k) {
            int b = col_cols.color(j, k);
            if (b != 1)
                add_route(routes, {{t, j}, {1, b}, {t, k}});
            else
                add_route(routes, {{t, j}, {1, col_cols.second(j)}, {t, 1},
                                   {1, col_cols.second(k)}, {t, k}});
        }
    }
    return routes;
}

FactorWitness materialize_clique_plan(int t, int r, const RouteMap& routes) {
    Graph host = product(ProductKind::direct, generate("complete", {t}), generate("complete", {r}));
    ProductIndex ix{t, r};
    auto flat1 = [&ix](Coord c) { return ix.flat(c.first - 1, c.second - 1); };
    auto pos_of = [r](Coord c) {
        return c == Coord{1, 1} ? 0 : 1 + (c.first - 2) * (r - 1) + (c.second - 2);
    };
    std::vector<int> terms{flat1({1, 1})};
    for (int i = 2; i <= t; ++i)
        for (int j = 2; j <= r; ++j) terms.push_back(flat1({i, j}));
    CertBuilder bld(std::move(host), std::move(terms));
    for (const auto& [key, path] : routes) {
        std::vector<int> walk;
        for (Coord c : path) walk.push_back(flat1(c));
        bld.add(pos_of(key.first), pos_of(key.second), std::move(walk));
    }
    return bld.finish();
}

}  // namespace

FactorWitness direct_complete_construct(int t, int r) {
    if (t < 2 || r < 2) throw std::invalid_argument("direct_complete_construct: t, r must be >= 2");
    if (t == 2 && r == 2) {
        // K_2 x K_2 is two disjoint edges; one of them is a K_2-immersion.
        Graph host = product(ProductKind::direct, generate("complete", {2}), generate("complete", {2}));
        ProductIndex ix{2, 2};
        CertBuilder bld(std::move(host), {ix.flat(0, 0), ix.flat(1, 1)});
        bld.add(0, 1, {ix.flat(0, 0), ix.flat(1, 1)});
        return bld.finish();
    }
    if (t % 2 == 0) return materialize_clique_plan(t, r, clique_routes(t, r));
    if (r % 2 == 0) {
        // Canonicalize "exactly one odd" to even-by-odd, then swap back.
        FactorWitness swapped = direct_complete_construct(r, t);
        Graph host =
            product(ProductKind::direct, generate("complete", {t}), generate("complete", {r}));
        auto cert = map_certificate(swapped.cert, coordinate_swap_map(r, t), host);
        return make_witness(std::move(host), std::move(cert));
    }
    return materialize_clique_plan(t, r, clique_routes_both_odd(t, r));
}

namespace {

// Third color for odd-peg expansions in G x K_r, r odd: the round-robin
// coloring of K_r in which color k is missing exactly at vertex k (1-based).
int odd_kr_color(int m, int n, int r) {
    int half = (r + 1) / 2;
    return (m + n - 2) % r * half % r + 1;
}

}  // namespace

FactorWitness direct_gkr_construct(const FactorWitness& gw, int r) {
    if (r < 3)
        throw std::invalid_argument(
            "direct_gkr_construct: r must be >= 3 (no 2x2 idempotent Latin square)");
    require_verified(gw, "G");
    const int t = gw.order();
    Graph host = product(ProductKind::direct, gw.graph, generate("complete", {r}));
    ProductIndex ix{gw.graph.order(), r};
    const auto& gt = gw.cert.terminals;

    if (t <= 1) {
        ImmersionCertificate c;
        c.order = t;
        if (t == 1) c.terminals = {ix.flat(gt[0], 0)};
        c.host_order = host.order();
        c.host_edges_hash = edges_hash_hex(host);
        return make_witness(std::move(host), std::move(c));
    }

    FactorWitness plan = direct_complete_construct(t, r);
    ProductIndex pix{t, r};
    LatinSquare latin;
    if (r % 2 == 0) latin = idempotent_latin_square(r);

    // One plan edge between rows i < k with colors (m at i, n at k) becomes a
    // host path along G's trail P_{i,k}; the traversal direction is
    // canonicalized to low row -> high row so expansions over a shared trail
    // stay aligned.
    auto expand_forward = [&](int i, int m, int k, int n) {
        auto P = oriented_trail(gw.cert, i - 1, k - 1);
        int pegs = static_cast<int>(P.size()) - 2;
        std::vector<int> walk{ix.flat(P.front(), m - 1)};
        if (pegs > 0) {
            int other;
            if (pegs % 2 == 0)
                other = n;
            else if (r % 2 == 1)
                other = odd_kr_color(m, n, r);
            else
                other = latin.at(m - 1, n - 1) + 1;
            for (int s = 1; s <= pegs; ++s)
                walk.push_back(ix.flat(P[s], (s % 2 == 1 ? other : m) - 1));
        }
        walk.push_back(ix.flat(P.back(), n - 1));
        return walk;
    };
    auto expand_hop = [&](int i, int m, int k, int n) {
        if (i < k) return expand_forward(i, m, k, n);
        auto walk = expand_forward(k, n, i, m);
        std::reverse(walk.begin(), walk.end());
        return walk;
    };

    std::vector<int> terms;
    for (int pt : plan.cert.terminals) {
        auto [row, col] = pix.unflat(pt);
        terms.push_back(ix.flat(gt[row], col));
    }
    CertBuilder bld(std::move(host), std::move(terms));
    for (const auto& [key, plan_walk] : plan.cert.trails) {
        std::vector<int> walk;
        for (std::size_t s = 0; s + 1 < plan_walk.size(); ++s) {
            auto [x1, y1] = pix.unflat(plan_walk[s]);
            auto [x2, y2] = pix.unflat(plan_walk[s + 1]);
            auto seg = expand_hop(x1 + 1, y1 + 1, x2 + 1, y2 + 1);
            if (walk.empty())
                walk = std::move(seg);
            else
                walk.insert(walk.end(), seg.begin() + 1, seg.end());
        }
        bld.add(key.first, key.second, std::move(walk));
    }
    return bld.finish();
}

namespace {

// Diagonal route between (P.front(), Q.front()) and (P.back(), Q.back()),
// zigzagging the factor with fewer pegs once its trail is exhausted. Peg
// counts must agree mod 2.
std::vector<int> diag_zigzag(const std::vector<int>& P, const std::vector<int>& Q,
                             const ProductIndex& ix) {
    int k = static_cast<int>(P.size()) - 2;
    int l = static_cast<int>(Q.size()) - 2;
    std::vector<int> route{ix.flat(P.front(), Q.front())};
    if (k <= l) {
        for (int s = 1; s <= k; ++s) route.push_back(ix.flat(P[s], Q[s]));
        int odd_v = k == 0 ? P[1] : P[k - 1];
        int even_v = k == 0 ? P[0] : P[k];
        for (int s = k + 1; s <= l; ++s)
            route.push_back(ix.flat((s - k) % 2 == 1 ? odd_v : even_v, Q[s]));
    } else {
        for (int s = 1; s <= l; ++s) route.push_back(ix.flat(P[s], Q[s]));
        int odd_v = l == 0 ? Q[1] : Q[l - 1];
        int even_v = l == 0 ? Q[0] : Q[l];
        for (int s = l + 1; s <= k; ++s)
            route.push_back(ix.flat(P[s], (s - l) % 2 == 1 ? odd_v : even_v));
    }
    route.push_back(ix.flat(P.back(), Q.back()));
    return route;
}

}  // namespace

FactorWitness direct_parity_construct(const FactorWitness& gw, const FactorWitness& hw) {
    require_verified(gw, "G");
    require_verified(hw, "H");
    auto pg = parity_profile(gw.cert);
    auto ph = parity_profile(hw.cert);
    if (pg.summary == ParitySummary::mixed || ph.summary == ParitySummary::mixed ||
        pg.summary != ph.summary)
        throw hypothesis_error(std::string("peg parities must be uniform and equal: G witness is ") +
                               parity_summary_name(pg.summary) + ", H witness is " +
                               parity_summary_name(ph.summary));
    const int t = gw.order(), r = hw.order();
    if (t < 1 || r < 1)
        throw std::invalid_argument("direct_parity_construct: both witnesses need order >= 1");
    Graph host = product(ProductKind::direct, gw.graph, hw.graph);
    ProductIndex ix{gw.graph.order(), hw.graph.order()};
    const auto& gt = gw.cert.terminals;
    const auto& ht = hw.cert.terminals;

    if (t == 1 || r == 1) {
        ImmersionCertificate c;
        c.order = 1;
        c.terminals = {ix.flat(gt[0], ht[0])};
        c.host_order = host.order();
        c.host_edges_hash = edges_hash_hex(host);
        return make_witness(std::move(host), std::move(c));
    }

    auto diag_route = [&](Coord from, Coord to) {
        bool fwd = from.first < to.first;
        Coord lo = fwd ? from : to, hi = fwd ? to : from;
        auto route = diag_zigzag(oriented_trail(gw.cert, lo.first - 1, hi.first - 1),
                                 oriented_trail(hw.cert, lo.second - 1, hi.second - 1), ix);
        if (!fwd) std::reverse(route.begin(), route.end());
        return route;
    };

    if (pg.summary == ParitySummary::all_even) {
        // Replace every edge of the K_t x K_r plan by a diagonal route. The
        // plan's own terminal order defines the positions (it differs from
        // grid order when the plan was coordinate-swapped).
        FactorWitness plan = direct_complete_construct(t, r);
        ProductIndex pix{t, r};
        std::vector<int> terms;
        for (int pt : plan.cert.terminals) {
            auto [x, y] = pix.unflat(pt);
            terms.push_back(ix.flat(gt[x], ht[y]));
        }
        CertBuilder bld(std::move(host), std::move(terms));
        for (const auto& [key, plan_walk] : plan.cert.trails) {
            std::vector<int> walk;
            for (std::size_t s = 0; s + 1 < plan_walk.size(); ++s) {
                auto [x1, y1] = pix.unflat(plan_walk[s]);
                auto [x2, y2] = pix.unflat(plan_walk[s + 1]);
                auto seg = diag_route({x1 + 1, y1 + 1}, {x2 + 1, y2 + 1});
                if (walk.empty())
                    walk = std::move(seg);
                else
                    walk.insert(walk.end(), seg.begin() + 1, seg.end());
            }
            bld.add(key.first, key.second, std::move(walk));
        }
        return bld.finish();
    }

    std::vector<int> terms{ix.flat(gt[0], ht[0])};
    for (int i = 2; i <= t; ++i)
        for (int j = 2; j <= r; ++j) terms.push_back(ix.flat(gt[i - 1], ht[j - 1]));
    CertBuilder bld(std::move(host), std::move(terms));
    auto pos_of = [r](Coord c) {
        return c == Coord{1, 1} ? 0 : 1 + (c.first - 2) * (r - 1) + (c.second - 2);
    };

    // All odd: route terminal pairs directly. Same-coordinate pairs
    // alternate against the last peg of the trail back to terminal 1.
    std::vector<Coord> coords{{1, 1}};
    for (int i = 2; i <= t; ++i)
        for (int j = 2; j <= r; ++j) coords.push_back({i, j});
    for (std::size_t p = 0; p < coords.size(); ++p)
        for (std::size_t q = p + 1; q < coords.size(); ++q) {
            Coord a = coords[p], b = coords[q];
            std::vector<int> walk;
            if (a.first != b.first && a.second != b.second) {
                walk = diag_route(a, b);
            } else if (a.first == b.first) {
                int row = a.first;
                auto back = oriented_trail(gw.cert, 0, row - 1);
                int w = back[back.size() - 2];
                auto Q = oriented_trail(hw.cert, a.second - 1, b.second - 1);
                int l = static_cast<int>(Q.size()) - 2;
                walk.push_back(ix.flat(gt[row - 1], Q.front()));
                for (int s = 1; s <= l; ++s)
                    walk.push_back(ix.flat(s % 2 == 1 ? w : gt[row - 1], Q[s]));
                walk.push_back(ix.flat(gt[row - 1], Q.back()));
            } else {
                int col = a.second;
                auto back = oriented_trail(hw.cert, 0, col - 1);
                int z = back[back.size() - 2];
                auto P = oriented_trail(gw.cert, a.first - 1, b.first - 1);
                int kk = static_cast<int>(P.size()) - 2;
                walk.push_back(ix.flat(P.front(), ht[col - 1]));
                for (int s = 1; s <= kk; ++s)
                    walk.push_back(ix.flat(P[s], s % 2 == 1 ? z : ht[col - 1]));
                walk.push_back(ix.flat(P.back(), ht[col - 1]));
            }
            bld.add(pos_of(a), pos_of(b), std::move(walk));
        }
    return bld.finish();
}

FactorWitness direct_semiparity_construct(const FactorWitness& gw, const FactorWitness& hw) {
    require_verified(gw, "G");
    require_verified(hw, "H");
    const int r = hw.order();
    if (r < 3) throw std::invalid_argument("direct_semiparity_construct: r must be >= 3");
    if (parity_profile(hw.cert).summary != ParitySummary::all_even)
        throw hypothesis_error("H witness must have all-even peg counts");

    FactorWitness plan = direct_gkr_construct(gw, r);
    Graph host = product(ProductKind::direct, gw.graph, hw.graph);
    ProductIndex ix{gw.graph.order(), hw.graph.order()};
    ProductIndex gix{gw.graph.order(), r};
    const auto& ht = hw.cert.terminals;

    std::vector<int> terms;
    for (int pt : plan.cert.terminals) {
        auto [x, y] = gix.unflat(pt);
        terms.push_back(ix.flat(x, ht[y]));
    }
    CertBuilder bld(std::move(host), std::move(terms));
    for (const auto& [key, plan_walk] : plan.cert.trails) {
        std::vector<int> walk;
        for (std::size_t s = 0; s + 1 < plan_walk.size(); ++s) {
            auto [x1, y1] = gix.unflat(plan_walk[s]);
            auto [x2, y2] = gix.unflat(plan_walk[s + 1]);
            auto Q = oriented_trail(hw.cert, y1, y2);
            int l = static_cast<int>(Q.size()) - 2;
            std::vector<int> seg{ix.flat(x1, Q.front())};
            for (int u = 1; u <= l; ++u) seg.push_back(ix.flat(u % 2 == 1 ? x2 : x1, Q[u]));
            seg.push_back(ix.flat(x2, Q.back()));
            if (walk.empty())
                walk = std::move(seg);
            else
                walk.insert(walk.end(), seg.begin() + 1, seg.end());
        }
        bld.add(key.first, key.second, std::move(walk));
    }
    return bld.finish();
}

}  // namespace imm
