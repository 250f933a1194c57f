#pragma once

#include "immersion/certificate.hpp"
#include "immersion/graph.hpp"

namespace imm {

/// Deterministic Graphviz text for a graph, optionally decorated by a
/// certificate: terminals become labeled double circles, each pair's trail
/// edges share a palette color, unused edges are dimmed. Throws
/// std::invalid_argument when the certificate does not verify.
std::string export_dot(const Graph& g, const ImmersionCertificate* cert = nullptr);

}  // namespace imm
