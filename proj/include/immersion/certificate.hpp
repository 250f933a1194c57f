#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "immersion/graph.hpp"

namespace imm {

/// Witness that a host graph immerses K_t: an injection of the t clique
/// vertices onto distinct host vertices ("terminals", by position), plus one
/// trail per terminal pair. Trails are walks without repeated edges; a
/// vertex may repeat. Every host edge may be used by at most one trail.
struct ImmersionCertificate {
    int order = 0;
    std::vector<int> terminals;  // position i plays clique vertex i
    std::map<std::pair<int, int>, std::vector<int>> trails;  // {i<j} -> walk
    int host_order = 0;
    std::string host_edges_hash;  // hex; empty means "do not check"
};

struct VerifyResult {
    bool ok = false;
    std::string message;                 // first violated invariant on rejection
    std::vector<std::string> warnings;   // e.g. vertex-repeating trails

    explicit operator bool() const { return ok; }
};

/// Re-checks every certificate invariant from raw data; never trusts how the
/// certificate was produced. Rejection is a value, not an error.
VerifyResult verify(const Graph& g, const ImmersionCertificate& c);

enum class ParitySummary { all_even, all_odd, mixed };

/// Pegs = internal vertices of a trail (edge count minus one).
struct ParityProfile {
    std::map<std::pair<int, int>, int> pegs;
    ParitySummary summary = ParitySummary::all_even;  // trail-less certificates count as all_even
};

ParityProfile parity_profile(const ImmersionCertificate& c);

const char* parity_summary_name(ParitySummary s);

/// Split off edges uv, vw from v: remove both, add uw. Stays inside simple
/// graphs (uw must not already exist). Degrees are preserved except at v,
/// which drops by exactly 2.
Graph split_off(const Graph& g, int u, int v, int w);

/// JSON certificate files. The writer is byte-exact: keys in the order
/// {order, terminals, trails, host_order, host_edges_hash}, trail pairs
/// sorted lexicographically, 2-space indentation. The reader reports schema
/// violations with a path into the document.
ImmersionCertificate read_certificate(const std::string& text);
std::string write_certificate(const ImmersionCertificate& c);

/// Push a certificate through a vertex bijection into a new host.
ImmersionCertificate map_certificate(const ImmersionCertificate& c,
                                     const std::vector<int>& vertex_map,
                                     const Graph& new_host);

/// Trail for terminal positions {a,b}, oriented to start at terminals[a].
std::vector<int> oriented_trail(const ImmersionCertificate& c, int a, int b);

}  // namespace imm
