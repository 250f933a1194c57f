#pragma once

#include <string>
#include <vector>

#include "immersion/constructions.hpp"

namespace imm {

/// Hand-built certificate families plus their claimed immersion values,
/// used as golden tests and as factor witnesses.
struct CatalogResult {
    Graph graph;
    ImmersionCertificate cert;
    int claimed_value = 0;
    bool exact = false;  // claimed value known exactly (vs a lower bound only)
};

struct CatalogEntryInfo {
    std::string name;
    std::string params;
    std::string description;
};

/// Entries:
///   complete_trivial t      K_t self-witness, im = t
///   cycle_k3 n [a b c]      order-3 arc certificate on C_n, im = 3
///   k3_lex_c5               order-13 certificate on K_3 o C_5, im = 13
///   p6_squared              order-5 certificate on P_6^2, im = 5
///   cm_kr m r               order-(2r-1) certificate on C_m x K_r (r >= 3)
///   cm_cn m n               order-5 certificate on C_m x C_n (case dispatch)
///   cm_p4 m                 order-5 certificate on C_m x P_4 (m >= 5)
/// The returned certificate always verifies; params outside an entry's range
/// raise std::invalid_argument.
CatalogResult catalog_certificate(const std::string& name, const std::vector<int>& params);

std::vector<CatalogEntryInfo> catalog_entries();

}  // namespace imm
