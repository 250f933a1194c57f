#include "immersion/products.hpp"

#include <climits>
#include <stdexcept>

namespace imm {

ProductKind product_kind_from_name(const std::string& name) {
    if (name == "lexicographic" || name == "lex") return ProductKind::lexicographic;
    if (name == "cartesian" || name == "box") return ProductKind::cartesian;
    if (name == "direct" || name == "tensor") return ProductKind::direct;
    if (name == "strong") return ProductKind::strong;
    throw std::invalid_argument("unknown product kind '" + name + "'");
}

std::string product_kind_name(ProductKind kind) {
    switch (kind) {
        case ProductKind::lexicographic: return "lexicographic";
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::direct: return "direct";
        case ProductKind::strong: return "strong";
    }
    return "?";
}

Graph product(ProductKind kind, const Graph& g, const Graph& h) {
    long long n = static_cast<long long>(g.order()) * h.order();
    if (n > INT_MAX) throw std::invalid_argument("product: flat index space overflow");
    ProductIndex ix{g.order(), h.order()};

    std::vector<Edge> edges;
    bool cart = kind == ProductKind::cartesian || kind == ProductKind::strong;
    bool dir = kind == ProductKind::direct || kind == ProductKind::strong;

    if (kind == ProductKind::lexicographic) {
        for (int a = 0; a < g.order(); ++a)
            for (const auto& [x, y] : h.edges()) edges.emplace_back(ix.flat(a, x), ix.flat(a, y));
        for (const auto& [a, b] : g.edges())
            for (int x = 0; x < h.order(); ++x)
                for (int y = 0; y < h.order(); ++y) edges.emplace_back(ix.flat(a, x), ix.flat(b, y));
    }
    if (cart) {
        for (int a = 0; a < g.order(); ++a)
            for (const auto& [x, y] : h.edges()) edges.emplace_back(ix.flat(a, x), ix.flat(a, y));
        for (const auto& [a, b] : g.edges())
            for (int x = 0; x < h.order(); ++x) edges.emplace_back(ix.flat(a, x), ix.flat(b, x));
    }
    if (dir) {
        for (const auto& [a, b] : g.edges())
            for (const auto& [x, y] : h.edges()) {
                edges.emplace_back(ix.flat(a, x), ix.flat(b, y));
                edges.emplace_back(ix.flat(a, y), ix.flat(b, x));
            }
    }

    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int a = 0; a < g.order(); ++a)
        for (int x = 0; x < h.order(); ++x)
            labels[ix.flat(a, x)] = "(" + g.label(a) + "," + h.label(x) + ")";
    return Graph(static_cast<int>(n), std::move(edges), std::move(labels));
}

Graph power(ProductKind kind, const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("power: d must be >= 1");
    Graph acc = g;
    for (int i = 1; i < d; ++i) acc = product(kind, acc, g);
    return acc;
}

std::vector<int> coordinate_swap_map(int g_order, int h_order) {
    ProductIndex from{g_order, h_order};
    ProductIndex to{h_order, g_order};
    std::vector<int> map(static_cast<std::size_t>(g_order) * h_order);
    for (int a = 0; a < g_order; ++a)
        for (int x = 0; x < h_order; ++x) map[from.flat(a, x)] = to.flat(x, a);
    return map;
}

}  // namespace imm
