#include "immersion/certificate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace imm {

namespace {

std::string pair_str(int i, int j) {
    return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::string edge_str(int u, int v) {
    return std::to_string(u) + "-" + std::to_string(v);
}

VerifyResult reject(std::string why) {
    VerifyResult r;
    r.ok = false;
    r.message = std::move(why);
    return r;
}

}  // namespace

VerifyResult verify(const Graph& g, const ImmersionCertificate& c) {
    if (c.host_order != g.order())
        return reject("host order mismatch: certificate says " + std::to_string(c.host_order) +
                      ", graph has " + std::to_string(g.order()));
    if (!c.host_edges_hash.empty() && c.host_edges_hash != edges_hash_hex(g))
        return reject("host edge hash mismatch");
    if (c.order < 0) return reject("negative order");
    if (static_cast<int>(c.terminals.size()) != c.order)
        return reject("terminal count " + std::to_string(c.terminals.size()) +
                      " does not match order " + std::to_string(c.order));
    for (int v : c.terminals)
        if (v < 0 || v >= g.order())
            return reject("terminal " + std::to_string(v) + " out of range");
    {
        std::set<int> distinct(c.terminals.begin(), c.terminals.end());
        if (static_cast<int>(distinct.size()) != c.order)
            return reject("terminals are not pairwise distinct");
    }

    // Exactly one trail per terminal pair.
    long long expected = static_cast<long long>(c.order) * (c.order - 1) / 2;
    if (static_cast<long long>(c.trails.size()) != expected)
        return reject("expected " + std::to_string(expected) + " trails, found " +
                      std::to_string(c.trails.size()));
    for (const auto& [key, walk] : c.trails) {
        (void)walk;
        if (key.first < 0 || key.second >= c.order || key.first >= key.second)
            return reject("invalid trail pair " + pair_str(key.first, key.second));
    }

    VerifyResult result;
    result.ok = true;
    std::map<Edge, std::pair<int, int>> edge_owner;
    for (const auto& [key, walk] : c.trails) {
        const auto [i, j] = key;
        std::string who = "trail " + pair_str(i, j);
        if (walk.size() < 2) return reject(who + ": walk has fewer than two vertices");
        for (int v : walk)
            if (v < 0 || v >= g.order())
                return reject(who + ": vertex " + std::to_string(v) + " out of range");
        int a = c.terminals[i], b = c.terminals[j];
        bool fwd = walk.front() == a && walk.back() == b;
        bool rev = walk.front() == b && walk.back() == a;
        if (!fwd && !rev)
            return reject(who + ": endpoints " + std::to_string(walk.front()) + "," +
                          std::to_string(walk.back()) + " are not the mapped terminals " +
                          std::to_string(a) + "," + std::to_string(b));
        std::set<Edge> local;
        std::set<int> visited;
        bool repeats_vertex = false;
        visited.insert(walk.front());
        for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
            int u = walk[k], v = walk[k + 1];
            if (!g.has_edge(u, v))
                return reject(who + ": step " + std::to_string(k) + ": " + edge_str(u, v) +
                              " is not a host edge");
            Edge e{std::min(u, v), std::max(u, v)};
            if (!local.insert(e).second)
                return reject(who + ": edge " + edge_str(e.first, e.second) +
                              " repeated within the trail");
            if (!visited.insert(v).second) repeats_vertex = true;
            auto [it, fresh] = edge_owner.emplace(e, key);
            if (!fresh)
                return reject(who + ": edge " + edge_str(e.first, e.second) +
                              " already used by trail " + pair_str(it->second.first, it->second.second));
        }
        if (repeats_vertex)
            result.warnings.push_back(who + " repeats a vertex (trail, not a simple path)");
    }

    // Cross-check: an accepted order-t certificate forces t <= max degree + 1.
    if (c.order >= 1 && c.order > g.max_degree() + 1)
        return reject("internal: accepted order exceeds max degree + 1");
    return result;
}

ParityProfile parity_profile(const ImmersionCertificate& c) {
    ParityProfile p;
    bool any_even = false, any_odd = false;
    for (const auto& [key, walk] : c.trails) {
        int pegs = static_cast<int>(walk.size()) - 2;
        p.pegs[key] = pegs;
        (pegs % 2 == 0 ? any_even : any_odd) = true;
    }
    if (any_even && any_odd)
        p.summary = ParitySummary::mixed;
    else if (any_odd)
        p.summary = ParitySummary::all_odd;
    else
        p.summary = ParitySummary::all_even;
    return p;
}

const char* parity_summary_name(ParitySummary s) {
    switch (s) {
        case ParitySummary::all_even: return "all_even";
        case ParitySummary::all_odd: return "all_odd";
        case ParitySummary::mixed: return "mixed";
    }
    return "?";
}

Graph split_off(const Graph& g, int u, int v, int w) {
    if (u == w) throw std::invalid_argument("split_off: u and w must differ");
    if (!g.has_edge(u, v)) throw std::invalid_argument("split_off: missing edge " + edge_str(u, v));
    if (!g.has_edge(v, w)) throw std::invalid_argument("split_off: missing edge " + edge_str(v, w));
    if (g.has_edge(u, w))
        throw std::invalid_argument("split_off: edge " + edge_str(u, w) +
                                    " already present (would create a multi-edge)");
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() - 1);
    Edge e1{std::min(u, v), std::max(u, v)}, e2{std::min(v, w), std::max(v, w)};
    for (const auto& e : g.edges())
        if (e != e1 && e != e2) edges.push_back(e);
    edges.emplace_back(std::min(u, w), std::max(u, w));
    Graph out(g.order(), std::move(edges), g.labels());
    for (int x = 0; x < g.order(); ++x) {
        int want = g.degree(x) - (x == v ? 2 : 0);
        if (out.degree(x) != want) throw std::logic_error("split_off: degree bookkeeping broken");
    }
    return out;
}

namespace {

using nlohmann::ordered_json;

int require_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw std::runtime_error(path + ": expected integer");
    return j.get<int>();
}

std::vector<int> require_int_array(const ordered_json& j, const std::string& path) {
    if (!j.is_array()) throw std::runtime_error(path + ": expected array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(require_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

ImmersionCertificate read_certificate(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("certificate parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("$: expected object");
    for (const char* field : {"order", "terminals", "trails", "host_order"})
        if (!j.contains(field)) throw std::runtime_error(std::string("$.") + field + ": missing");

    ImmersionCertificate c;
    c.order = require_int(j["order"], "$.order");
    if (c.order < 0) throw std::runtime_error("$.order: must be >= 0");
    c.host_order = require_int(j["host_order"], "$.host_order");
    if (c.host_order < 0) throw std::runtime_error("$.host_order: must be >= 0");
    if (j.contains("host_edges_hash")) {
        if (!j["host_edges_hash"].is_string())
            throw std::runtime_error("$.host_edges_hash: expected string");
        c.host_edges_hash = j["host_edges_hash"].get<std::string>();
    }
    c.terminals = require_int_array(j["terminals"], "$.terminals");
    for (std::size_t i = 0; i < c.terminals.size(); ++i)
        if (c.terminals[i] < 0 || c.terminals[i] >= c.host_order)
            throw std::runtime_error("$.terminals[" + std::to_string(i) + "]: vertex out of range");

    const auto& trails = j["trails"];
    if (!trails.is_array()) throw std::runtime_error("$.trails: expected array");
    for (std::size_t k = 0; k < trails.size(); ++k) {
        std::string path = "$.trails[" + std::to_string(k) + "]";
        const auto& entry = trails[k];
        if (!entry.is_object() || !entry.contains("pair") || !entry.contains("walk"))
            throw std::runtime_error(path + ": expected object with 'pair' and 'walk'");
        auto pair = require_int_array(entry["pair"], path + ".pair");
        if (pair.size() != 2 || pair[0] < 0 || pair[0] >= pair[1] || pair[1] >= c.order)
            throw std::runtime_error(path + ".pair: expected [i,j] with 0 <= i < j < order");
        auto walk = require_int_array(entry["walk"], path + ".walk");
        for (std::size_t i = 0; i < walk.size(); ++i)
            if (walk[i] < 0 || walk[i] >= c.host_order)
                throw std::runtime_error(path + ".walk[" + std::to_string(i) +
                                         "]: vertex out of range");
        auto key = std::make_pair(pair[0], pair[1]);
        if (!c.trails.emplace(key, std::move(walk)).second)
            throw std::runtime_error(path + ".pair: duplicate pair");
    }
    return c;
}

std::string write_certificate(const ImmersionCertificate& c) {
    ordered_json j;
    j["order"] = c.order;
    j["terminals"] = c.terminals;
    ordered_json trails = ordered_json::array();
    for (const auto& [key, walk] : c.trails) {
        ordered_json t;
        t["pair"] = {key.first, key.second};
        t["walk"] = walk;
        trails.push_back(std::move(t));
    }
    j["trails"] = std::move(trails);
    j["host_order"] = c.host_order;
    j["host_edges_hash"] = c.host_edges_hash;
    return j.dump(2);
}

ImmersionCertificate map_certificate(const ImmersionCertificate& c,
                                     const std::vector<int>& vertex_map,
                                     const Graph& new_host) {
    ImmersionCertificate out;
    out.order = c.order;
    out.host_order = new_host.order();
    out.host_edges_hash = edges_hash_hex(new_host);
    for (int v : c.terminals) out.terminals.push_back(vertex_map.at(v));
    for (const auto& [key, walk] : c.trails) {
        std::vector<int> mapped;
        mapped.reserve(walk.size());
        for (int v : walk) mapped.push_back(vertex_map.at(v));
        out.trails.emplace(key, std::move(mapped));
    }
    return out;
}

std::vector<int> oriented_trail(const ImmersionCertificate& c, int a, int b) {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = c.trails.find(key);
    if (it == c.trails.end())
        throw std::invalid_argument("no trail for pair " + pair_str(a, b));
    std::vector<int> walk = it->second;
    if (walk.front() != c.terminals[a]) std::reverse(walk.begin(), walk.end());
    if (walk.front() != c.terminals[a] || walk.back() != c.terminals[b])
        throw std::invalid_argument("trail endpoints do not match terminals " + pair_str(a, b));
    return walk;
}

}  // namespace imm
