#include "immersion/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace imm {

namespace {

// The transcribed trail lists below use the 1-based vertex coordinates of
// their sources; this is the one place they are mapped to 0-based flat
// indices. The first coordinate wraps mod m (cycle families).
struct CoordCert {
    int m;                       // first factor order (cycle)
    ProductIndex ix;             // {m, second factor order}
    std::vector<std::pair<int, int>> terminals;       // 1-based coords
    std::vector<std::vector<std::pair<int, int>>> trails;  // 1-based walks

    int flat(std::pair<int, int> c) const {
        int a = ((c.first - 1) % m + m) % m;
        return ix.flat(a, c.second - 1);
    }

    ImmersionCertificate build(const Graph& host) const {
        ImmersionCertificate cert;
        cert.order = static_cast<int>(terminals.size());
        cert.host_order = host.order();
        cert.host_edges_hash = edges_hash_hex(host);
        std::map<int, int> pos;
        for (const auto& tcoord : terminals) {
            int v = flat(tcoord);
            pos[v] = static_cast<int>(cert.terminals.size());
            cert.terminals.push_back(v);
        }
        for (const auto& walk_coords : trails) {
            std::vector<int> walk;
            for (auto c : walk_coords) walk.push_back(flat(c));
            int i = pos.at(walk.front()), j = pos.at(walk.back());
            if (i > j) std::reverse(walk.begin(), walk.end()), std::swap(i, j);
            if (!cert.trails.emplace(std::make_pair(i, j), std::move(walk)).second)
                throw std::logic_error("catalog: duplicate trail");
        }
        return cert;
    }
};

CatalogResult exact_result(FactorWitness w, int value) {
    if (w.cert.order != value)
        throw std::logic_error("catalog: certificate order " + std::to_string(w.cert.order) +
                               " does not match claimed value " + std::to_string(value));
    return CatalogResult{std::move(w.graph), std::move(w.cert), value, true};
}

CatalogResult k3_lex_c5() {
    Graph host = product(ProductKind::lexicographic, generate("complete", {3}), generate("cycle", {5}));
    ProductIndex ix{3, 5};
    // Terminals: every vertex except (v_2,u_1) and (v_3,u_1).
    std::vector<int> terms;
    std::map<int, int> pos;
    for (int v = 0; v < 3; ++v)
        for (int u = 0; u < 5; ++u) {
            if (v > 0 && u == 0) continue;
            pos[ix.flat(v, u)] = static_cast<int>(terms.size());
            terms.push_back(ix.flat(v, u));
        }
    // The nine connector paths, plus the two intra-copy arcs through the
    // unused (v,u_1) vertices that the remaining same-copy pairs force.
    std::vector<std::vector<std::pair<int, int>>> paths = {
        {{0, 0}, {1, 0}, {0, 3}},
        {{0, 1}, {1, 0}, {0, 4}},
        {{0, 1}, {2, 0}, {0, 3}},
        {{0, 2}, {2, 0}, {0, 4}},
        {{0, 0}, {2, 0}, {1, 0}, {0, 2}},
        {{1, 1}, {2, 0}, {1, 3}},
        {{1, 2}, {2, 0}, {1, 4}},
        {{2, 1}, {1, 0}, {2, 3}},
        {{2, 2}, {1, 0}, {2, 4}},
        {{1, 1}, {1, 0}, {1, 4}},
        {{2, 1}, {2, 0}, {2, 4}},
    };
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (const auto& p : paths) {
        std::vector<int> walk;
        for (auto [v, u] : p) walk.push_back(ix.flat(v, u));
        int i = pos.at(walk.front()), j = pos.at(walk.back());
        if (i > j) std::reverse(walk.begin(), walk.end()), std::swap(i, j);
        by_pair[{i, j}] = std::move(walk);
    }
    ImmersionCertificate cert;
    cert.order = 13;
    cert.terminals = terms;
    cert.host_order = host.order();
    cert.host_edges_hash = edges_hash_hex(host);
    const Graph& cycle5 = generate("cycle", {5});
    for (int i = 0; i < 13; ++i)
        for (int j = i + 1; j < 13; ++j) {
            auto [vi, ui] = ix.unflat(terms[i]);
            auto [vj, uj] = ix.unflat(terms[j]);
            if (vi != vj || cycle5.has_edge(ui, uj)) {
                cert.trails[{i, j}] = {terms[i], terms[j]};
            } else {
                auto it = by_pair.find({i, j});
                if (it == by_pair.end()) throw std::logic_error("k3_lex_c5: missing connector path");
                cert.trails[{i, j}] = it->second;
            }
        }
    auto w = make_witness(std::move(host), std::move(cert));
    return exact_result(std::move(w), 13);
}

CatalogResult p6_squared() {
    Graph host = power(ProductKind::cartesian, generate("path", {6}), 2);
    CoordCert c;
    c.m = 6;
    c.ix = {6, 6};
    c.terminals = {{2, 3}, {3, 2}, {3, 3}, {3, 4}, {4, 3}};
    c.trails = {
        {{3, 3}, {2, 3}},
        {{3, 3}, {3, 2}},
        {{3, 3}, {3, 4}},
        {{3, 3}, {4, 3}},
        {{2, 3}, {2, 2}, {3, 2}},
        {{3, 2}, {4, 2}, {4, 3}},
        {{4, 3}, {4, 4}, {3, 4}},
        {{3, 4}, {2, 4}, {2, 3}},
        {{2, 3}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}, {5, 5}, {5, 4}, {5, 3}, {4, 3}},
        {{3, 2}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}, {6, 6},
         {5, 6}, {4, 6}, {3, 6}, {3, 5}, {3, 4}},
    };
    auto cert = c.build(host);
    return exact_result(make_witness(std::move(host), std::move(cert)), 5);
}

CatalogResult swap_factors(CatalogResult r, const Graph& a, const Graph& b, ProductKind kind) {
    // r lives on b x a; push it through the coordinate swap onto a x b.
    Graph host = product(kind, a, b);
    auto cert = map_certificate(r.cert, coordinate_swap_map(b.order(), a.order()), host);
    auto w = make_witness(std::move(host), std::move(cert));
    return CatalogResult{std::move(w.graph), std::move(w.cert), r.claimed_value, r.exact};
}

CatalogResult cm_cn_even_even_n4(int m, const Graph& second, int second_order) {
    // Also the m even case of C_m x P_4: the trails never cross the 4-1
    // second-coordinate edge.
    Graph host = product(ProductKind::direct, generate("cycle", {m}), second);
    CoordCert c;
    c.m = m;
    c.ix = {m, second_order};
    c.terminals = {{2, 2}, {4, 2}, {6, 2}, {1, 3}, {3, 3}};
    std::vector<std::pair<int, int>> t2 = {{2, 2}, {1, 1}};
    for (int j = m; j >= 6; --j) t2.push_back({j, j % 2 == 0 ? 2 : 3});
    std::vector<std::pair<int, int>> t6 = {{4, 2}};
    for (int j = 5; j <= m; ++j) t6.push_back({j, j % 2 == 1 ? 3 : 4});
    t6.push_back({1, 3});
    std::vector<std::pair<int, int>> t9 = {{6, 2}};
    for (int j = 7; j <= m; ++j) t9.push_back({j, j % 2 == 1 ? 1 : 2});
    t9.push_back({1, 3});
    c.trails = {
        {{2, 2}, {3, 1}, {4, 2}},
        t2,
        {{2, 2}, {1, 3}},
        {{2, 2}, {3, 3}},
        {{4, 2}, {5, 1}, {6, 2}},
        t6,
        {{4, 2}, {3, 3}},
        {{6, 2}, {5, 3}, {4, 4}, {3, 3}},
        t9,
        {{1, 3}, {2, 4}, {3, 3}},
    };
    auto cert = c.build(host);
    return exact_result(make_witness(std::move(host), std::move(cert)), 5);
}

CatalogResult cm_cn(int m, int n) {
    if (m < 3 || n < 3) throw std::invalid_argument("cm_cn: m, n must be >= 3");
    if (n % 2 == 1) {
        // Odd n: C_n immerses K_3 on three consecutive vertices with all-even
        // peg counts; expand the C_m x K_3 plan.
        auto w = direct_semiparity_construct(cycle_arc_witness(m), cycle_arc_witness(n, {0, 1, 2}));
        return exact_result(std::move(w), 5);
    }
    if (m % 2 == 1)
        return swap_factors(cm_cn(n, m), generate("cycle", {m}), generate("cycle", {n}),
                            ProductKind::direct);
    if (m >= 6 && n >= 6) {
        auto w = direct_parity_construct(cycle_arc_witness(m, {0, 2, 4}),
                                         cycle_arc_witness(n, {0, 2, 4}));
        return exact_result(std::move(w), 5);
    }
    if (m == 4 && n == 4) {
        Graph host = product(ProductKind::direct, generate("cycle", {4}), generate("cycle", {4}));
        CoordCert c;
        c.m = 4;
        c.ix = {4, 4};
        c.terminals = {{2, 2}, {4, 2}, {1, 3}, {3, 3}, {1, 1}};
        c.trails = {
            {{2, 2}, {3, 1}, {4, 2}},
            {{2, 2}, {1, 3}},
            {{2, 2}, {3, 3}},
            {{2, 2}, {1, 1}},
            {{4, 2}, {1, 3}},
            {{4, 2}, {3, 3}},
            {{4, 2}, {1, 1}},
            {{1, 3}, {2, 4}, {3, 3}},
            {{1, 3}, {4, 4}, {3, 1}, {2, 4}, {1, 1}},
            {{3, 3}, {4, 4}, {1, 1}},
        };
        auto cert = c.build(host);
        return exact_result(make_witness(std::move(host), std::move(cert)), 5);
    }
    if (n == 4 && m >= 6) return cm_cn_even_even_n4(m, generate("cycle", {4}), 4);
    return swap_factors(cm_cn(n, m), generate("cycle", {4}), generate("cycle", {n}),
                        ProductKind::direct);
}

CatalogResult cm_p4(int m) {
    if (m < 5) throw std::invalid_argument("cm_p4: m must be >= 5");
    if (m % 2 == 0) return cm_cn_even_even_n4(m, generate("path", {4}), 4);
    Graph host = product(ProductKind::direct, generate("cycle", {m}), generate("path", {4}));
    CoordCert c;
    c.m = m;
    c.ix = {m, 4};
    c.terminals = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
    std::vector<std::pair<int, int>> t1 = {{1, 2}};
    for (int j = m; j >= 2; --j) t1.push_back({j, j % 2 == 1 ? 3 : 4});
    t1.push_back({1, 3});
    std::vector<std::pair<int, int>> t2 = {{1, 2}};
    for (int j = m; j >= 3; --j) t2.push_back({j, j % 2 == 1 ? 1 : 2});
    t2.push_back({2, 2});
    std::vector<std::pair<int, int>> t6 = {{1, 3}};
    for (int j = m; j >= 2; --j) t6.push_back({j, j % 2 == 1 ? 4 : 3});
    std::vector<std::pair<int, int>> t7 = {{1, 3}};
    for (int j = m; j >= 3; --j) t7.push_back({j, j % 2 == 1 ? 2 : 3});
    std::vector<std::pair<int, int>> t8 = {{2, 2}};
    for (int j = 3; j <= m; ++j) t8.push_back({j, j % 2 == 1 ? 3 : 2});
    t8.push_back({1, 4});
    t8.push_back({2, 3});
    std::vector<std::pair<int, int>> t9 = {{2, 2}, {1, 1}};
    for (int j = m; j >= 4; --j) t9.push_back({j, j % 2 == 1 ? 2 : 1});
    t9.push_back({3, 2});
    c.trails = {
        t1,
        t2,
        {{1, 2}, {2, 3}},
        {{1, 2}, {2, 1}, {3, 2}},
        {{1, 3}, {2, 2}},
        t6,
        t7,
        t8,
        t9,
        {{2, 3}, {3, 2}},
    };
    auto cert = c.build(host);
    return exact_result(make_witness(std::move(host), std::move(cert)), 5);
}

}  // namespace

CatalogResult catalog_certificate(const std::string& name, const std::vector<int>& params) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            throw std::invalid_argument("catalog entry '" + name + "': wrong parameter count");
    };
    if (name == "complete_trivial") {
        need(1, 1);
        if (params[0] < 1) throw std::invalid_argument("complete_trivial: t must be >= 1");
        return exact_result(complete_witness(params[0]), params[0]);
    }
    if (name == "cycle_k3") {
        need(1, 4);
        int n = params[0];
        if (n < 3) throw std::invalid_argument("cycle_k3: n must be >= 3");
        auto w = params.size() == 4 ? cycle_arc_witness(n, {params[1], params[2], params[3]})
                                    : cycle_arc_witness(n);
        return exact_result(std::move(w), 3);
    }
    if (name == "k3_lex_c5") {
        need(0, 0);
        return k3_lex_c5();
    }
    if (name == "p6_squared") {
        need(0, 0);
        return p6_squared();
    }
    if (name == "cm_kr") {
        need(2, 2);
        int m = params[0], r = params[1];
        if (m < 3 || r < 3) throw std::invalid_argument("cm_kr: needs m >= 3 and r >= 3");
        auto w = direct_gkr_construct(cycle_arc_witness(m), r);
        return exact_result(std::move(w), 2 * r - 1);
    }
    if (name == "cm_cn") {
        need(2, 2);
        return cm_cn(params[0], params[1]);
    }
    if (name == "cm_p4") {
        need(1, 1);
        return cm_p4(params[0]);
    }
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

std::vector<CatalogEntryInfo> catalog_entries() {
    return {
        {"complete_trivial", "t", "K_t with every vertex a terminal; im = t"},
        {"cycle_k3", "n [a b c]", "three arcs of C_n between the given terminals; im = 3"},
        {"k3_lex_c5", "", "order-13 certificate on K_3 o C_5; im = 13"},
        {"p6_squared", "", "order-5 certificate on P_6^2; im = 5"},
        {"cm_kr", "m r", "order-(2r-1) certificate on C_m x K_r, r >= 3"},
        {"cm_cn", "m n", "order-5 certificate on C_m x C_n, m, n >= 3"},
        {"cm_p4", "m", "order-5 certificate on C_m x P_4, m >= 5"},
    };
}

}  // namespace imm
