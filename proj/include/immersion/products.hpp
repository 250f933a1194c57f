#pragma once

#include <string>
#include <utility>

#include "immersion/graph.hpp"

namespace imm {

enum class ProductKind { lexicographic, cartesian, direct, strong };

ProductKind product_kind_from_name(const std::string& name);
std::string product_kind_name(ProductKind kind);

/// Row-major pairing between factor coordinates and product vertices:
/// flat(g, h) = g * h_order + h.
struct ProductIndex {
    int g_order = 0;
    int h_order = 0;

    int flat(int g, int h) const { return g * h_order + h; }
    std::pair<int, int> unflat(int v) const { return {v / h_order, v % h_order}; }
};

/// The four standard products on V(G) x V(H). Product vertices carry
/// "(gl,hl)" labels built from the factor labels.
Graph product(ProductKind kind, const Graph& g, const Graph& h);

/// Left-associated iterated product; power(k, g, 1) == g.
Graph power(ProductKind kind, const Graph& g, int d);

/// Image of a product graph under the coordinate swap (g,h) -> (h,g).
/// An isomorphism for the Cartesian, direct and strong products.
std::vector<int> coordinate_swap_map(int g_order, int h_order);

}  // namespace imm
