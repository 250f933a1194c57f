#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "immersion/products.hpp"
#include "testutil.hpp"

using namespace imm;

namespace {

bool is_complete(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

Graph apply_map(const Graph& g, const std::vector<int>& map) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(map[u], map[v]);
    return Graph(g.order(), std::move(edges));
}

int component_count(const Graph& g) {
    std::vector<char> seen(g.order(), 0);
    int comps = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int nb : g.neighbors(v))
                if (!seen[nb]) {
                    seen[nb] = 1;
                    stack.push_back(nb);
                }
        }
    }
    return comps;
}

}  // namespace

TEST_CASE("product examples") {
    auto d22 = product(ProductKind::direct, generate("complete", {2}), generate("complete", {2}));
    CHECK(d22.order() == 4);
    CHECK(d22.edges() == std::vector<Edge>{{0, 3}, {1, 2}});

    auto c34 = product(ProductKind::cartesian, generate("complete", {3}), generate("complete", {4}));
    CHECK(c34.order() == 12);
    CHECK(c34.edge_count() == 30);

    auto s34 = product(ProductKind::strong, generate("complete", {3}), generate("complete", {4}));
    CHECK(is_complete(s34));

    auto lex = product(ProductKind::lexicographic, generate("complete", {2}), generate("path", {3}));
    CHECK(lex.edge_count() == 2 * 2 + 9);
    CHECK(lex.label(4) == "(2,2)");
}

TEST_CASE("power") {
    CHECK(power(ProductKind::cartesian, generate("complete", {2}), 3) == generate("hypercube", {3}));
    CHECK(power(ProductKind::cartesian, generate("complete", {3}), 2) == generate("hamming", {3, 2}));
    auto p6sq = power(ProductKind::cartesian, generate("path", {6}), 2);
    CHECK(p6sq.order() == 36);
    CHECK(p6sq.max_degree() == 4);
    CHECK(power(ProductKind::cartesian, generate("path", {6}), 2) ==
          generate("grid_power", {6, 2}));
    auto g = generate("cycle", {5});
    CHECK(power(ProductKind::direct, g, 1) == g);
    CHECK_THROWS_AS(power(ProductKind::direct, g, 0), std::invalid_argument);
}

TEST_CASE("product index mapping") {
    ProductIndex ix{4, 7};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 7; ++b) {
            auto [x, y] = ix.unflat(ix.flat(a, b));
            CHECK(x == a);
            CHECK(y == b);
        }
}

TEST_CASE("degree and edge-count identities on random factor pairs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> size(1, 7);
        auto g = testutil::random_graph(size(rng), 0.5, rng);
        auto h = testutil::random_graph(size(rng), 0.5, rng);
        long long vg = g.order(), vh = h.order(), eg = g.edge_count(), eh = h.edge_count();
        int dg = g.max_degree(), dh = h.max_degree();

        auto cart = product(ProductKind::cartesian, g, h);
        CHECK(cart.edge_count() == vg * eh + vh * eg);
        if (vg && vh) CHECK(cart.max_degree() == dg + dh);

        auto dir = product(ProductKind::direct, g, h);
        CHECK(dir.edge_count() == 2 * eg * eh);
        if (vg && vh) CHECK(dir.max_degree() == dg * dh);

        auto strong = product(ProductKind::strong, g, h);
        CHECK(strong.edge_count() == cart.edge_count() + dir.edge_count());
        if (vg && vh) CHECK(strong.max_degree() == dg * dh + dg + dh);

        if (eg >= 1) {
            auto lex = product(ProductKind::lexicographic, g, h);
            CHECK(lex.max_degree() == dh + vh * dg);
            CHECK(lex.edge_count() == vg * eh + eg * vh * vh);
        }
    }
}

TEST_CASE("coordinate swap is an isomorphism for the commutative products") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = testutil::random_graph(4, 0.5, rng);
        auto h = testutil::random_graph(3, 0.6, rng);
        auto map = coordinate_swap_map(g.order(), h.order());
        for (auto kind : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong}) {
            auto gh = product(kind, g, h);
            auto hg = product(kind, h, g);
            CHECK(apply_map(gh, map) == hg);
        }
    }
}

TEST_CASE("lexicographic product is not commutative") {
    auto a = product(ProductKind::lexicographic, generate("path", {2}), generate("path", {3}));
    auto b = product(ProductKind::lexicographic, generate("path", {3}), generate("path", {2}));
    CHECK(degree_sequence(a) != degree_sequence(b));
}

TEST_CASE("direct product of bipartite factors is disconnected") {
    std::vector<Graph> bip = {generate("path", {3}), generate("cycle", {4}), generate("cycle", {6}),
                              generate("complete_bipartite", {2, 3}), generate("hypercube", {2})};
    for (const auto& g : bip)
        for (const auto& h : bip) CHECK(component_count(product(ProductKind::direct, g, h)) >= 2);
}

TEST_CASE("overflow guard") {
    Graph big(100000, {});
    CHECK_THROWS_AS(product(ProductKind::cartesian, big, big), std::invalid_argument);
}
