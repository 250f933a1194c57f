#include "immersion/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace imm {

int degree_upper_bound(const Graph& g) {
    return g.order() == 0 ? 0 : g.max_degree() + 1;
}

bool cut_bound_feasible(const CutBoundQuery& q) {
    return static_cast<long long>(q.cut_size) >= static_cast<long long>(q.k) * q.j;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
    long long nodes = 0;
    long long max_nodes = 0;
    Clock::time_point deadline;
    bool out = false;

    bool tick() {
        if (out) return false;
        ++nodes;
        if (nodes > max_nodes || (nodes % 1024 == 0 && Clock::now() > deadline)) out = true;
        return !out;
    }
};

struct Cut {
    std::vector<char> side;  // per vertex
    int capacity = 0;
};

// Splits "(a,(b,c))" into its top-level components; empty when the label is
// not a tuple.
std::vector<std::string> tuple_axes(const std::string& label) {
    if (label.size() < 2 || label.front() != '(' || label.back() != ')') return {};
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 1; i + 1 < label.size(); ++i) {
        char ch = label[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (depth != 0) return {};
    parts.push_back(cur);
    return parts.size() >= 2 ? parts : std::vector<std::string>{};
}

int cut_capacity(const Graph& g, const std::vector<char>& side) {
    int cap = 0;
    for (const auto& [u, v] : g.edges()) cap += side[u] != side[v];
    return cap;
}

void add_cut(std::vector<Cut>& cuts, const Graph& g, std::vector<char> side) {
    int inside = 0;
    for (char s : side) inside += s;
    if (inside == 0 || inside == g.order()) return;
    Cut c{std::move(side), 0};
    c.capacity = cut_capacity(g, c.side);
    cuts.push_back(std::move(c));
}

void collect_bridge_cuts(const Graph& g, std::vector<Cut>& cuts) {
    int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<Edge> bridges;
    int timer = 0;
    std::function<void(int)> dfs = [&](int u) {
        disc[u] = low[u] = timer++;
        for (int v : g.neighbors(u)) {
            if (disc[v] < 0) {
                parent[v] = u;
                dfs(v);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) bridges.emplace_back(std::min(u, v), std::max(u, v));
            } else if (v != parent[u]) {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v);
    for (const auto& [bu, bv] : bridges) {
        std::vector<char> side(n, 0);
        std::queue<int> q;
        q.push(bu);
        side[bu] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if ((x == bu && y == bv) || (x == bv && y == bu)) continue;
                if (!side[y]) {
                    side[y] = 1;
                    q.push(y);
                }
            }
        }
        if (side[bv]) continue;  // not actually separating (parallel reachability)
        add_cut(cuts, g, std::move(side));
    }
}

// When every vertex label parses as a coordinate tuple of the same arity,
// rebuild the product layer cuts: one cut per axis value and per prefix of
// the axis values in first-occurrence order.
void collect_label_cuts(const Graph& g, std::vector<Cut>& cuts) {
    int n = g.order();
    if (n == 0 || !g.has_labels()) return;
    std::vector<std::vector<std::string>> axes(n);
    std::size_t arity = 0;
    for (int v = 0; v < n; ++v) {
        axes[v] = tuple_axes(g.labels()[v]);
        if (axes[v].empty()) return;
        if (v == 0)
            arity = axes[v].size();
        else if (axes[v].size() != arity)
            return;
    }
    for (std::size_t ax = 0; ax < arity; ++ax) {
        std::vector<std::string> values;
        std::vector<int> value_index(n);
        for (int v = 0; v < n; ++v) {
            auto it = std::find(values.begin(), values.end(), axes[v][ax]);
            if (it == values.end()) {
                values.push_back(axes[v][ax]);
                value_index[v] = static_cast<int>(values.size()) - 1;
            } else {
                value_index[v] = static_cast<int>(it - values.begin());
            }
        }
        if (values.size() < 2) continue;
        for (std::size_t val = 0; val < values.size(); ++val) {
            std::vector<char> side(n, 0);
            for (int v = 0; v < n; ++v) side[v] = value_index[v] == static_cast<int>(val);
            add_cut(cuts, g, std::move(side));
        }
        for (std::size_t cutpos = 0; cutpos + 1 < values.size(); ++cutpos) {
            std::vector<char> side(n, 0);
            for (int v = 0; v < n; ++v) side[v] = value_index[v] <= static_cast<int>(cutpos);
            add_cut(cuts, g, std::move(side));
        }
    }
}

// Small s-t minimum cuts (unit capacities, BFS augmentation). Any cut below
// the maximum degree can reject terminal placements, so harvest the distinct
// ones across all vertex pairs on search-scale graphs.
void collect_flow_cuts(const Graph& g, std::vector<Cut>& cuts) {
    int n = g.order();
    if (n < 2 || n > 32) return;
    int dmax = g.max_degree();
    std::set<std::vector<char>> seen;
    std::vector<int> base(n * n, 0);
    for (const auto& [u, v] : g.edges()) base[u * n + v] = base[v * n + u] = 1;
    std::vector<int> cap, parent(n);
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            cap = base;
            int flow = 0;
            while (flow < dmax) {
                std::fill(parent.begin(), parent.end(), -1);
                parent[s] = s;
                std::queue<int> q;
                q.push(s);
                while (!q.empty() && parent[t] < 0) {
                    int x = q.front();
                    q.pop();
                    for (int y = 0; y < n; ++y)
                        if (parent[y] < 0 && cap[x * n + y] > 0) {
                            parent[y] = x;
                            q.push(y);
                        }
                }
                if (parent[t] < 0) break;
                for (int y = t; y != s; y = parent[y]) {
                    cap[parent[y] * n + y]--;
                    cap[y * n + parent[y]]++;
                }
                ++flow;
            }
            if (flow >= dmax) continue;
            std::vector<char> side(n, 0);
            std::queue<int> q;
            q.push(s);
            side[s] = 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y = 0; y < n; ++y)
                    if (!side[y] && cap[x * n + y] > 0) {
                        side[y] = 1;
                        q.push(y);
                    }
            }
            std::vector<char> key = side;
            if (key[0])
                for (auto& b : key) b = !b;
            if (seen.insert(key).second) add_cut(cuts, g, std::move(side));
        }
}

std::vector<Cut> candidate_cuts(const Graph& g) {
    std::vector<Cut> cuts;
    collect_bridge_cuts(g, cuts);
    collect_label_cuts(g, cuts);
    collect_flow_cuts(g, cuts);
    return cuts;
}

// Edge-disjoint trail packing for one terminal placement: pairs hardest
// (farthest) first, simple paths enumerated by increasing length with the
// residual BFS distance as an admissible bound. If a packing by trails
// exists, one by simple paths does (any trail contains a simple path on a
// subset of its edges), so this stays exact.
class Packer {
public:
    Packer(const Graph& g, std::vector<int> terms, const std::vector<Cut>& cuts,
           BudgetState& budget)
        : g_(g), n_(g.order()), terms_(std::move(terms)), cuts_(cuts), budget_(budget) {
        adj_.assign(n_, {});
        int eid = 0;
        for (const auto& [u, v] : g.edges()) {
            adj_[u].emplace_back(v, eid);
            adj_[v].emplace_back(u, eid);
            ++eid;
        }
        m_ = eid;
        used_.assign(m_, 0);
        resid_deg_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) resid_deg_[v] = g.degree(v);
        edge_cuts_.assign(m_, {});
        cut_resid_.resize(cuts.size());
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            cut_resid_[c] = cuts[c].capacity;
            int e = 0;
            for (const auto& [u, v] : g.edges()) {
                if (cuts[c].side[u] != cuts[c].side[v]) edge_cuts_[e].push_back(static_cast<int>(c));
                ++e;
            }
        }

        int t = static_cast<int>(terms_.size());
        auto dist0 = all_dists();
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) pairs_.emplace_back(i, j);
        std::stable_sort(pairs_.begin(), pairs_.end(), [&](const auto& a, const auto& b) {
            return dist0[a.first][terms_[a.second]] > dist0[b.first][terms_[b.second]];
        });
        walks_.assign(pairs_.size(), {});

        // Suffix tallies for the degree and cut prunes.
        std::size_t np = pairs_.size();
        incident_suffix_.assign(np + 1, std::vector<int>(t, 0));
        cross_suffix_.assign(np + 1, std::vector<int>(cuts.size(), 0));
        for (int k = static_cast<int>(np) - 1; k >= 0; --k) {
            incident_suffix_[k] = incident_suffix_[k + 1];
            incident_suffix_[k][pairs_[k].first]++;
            incident_suffix_[k][pairs_[k].second]++;
            cross_suffix_[k] = cross_suffix_[k + 1];
            for (std::size_t c = 0; c < cuts.size(); ++c) {
                int a = terms_[pairs_[k].first], b = terms_[pairs_[k].second];
                if (cuts[c].side[a] != cuts[c].side[b]) cross_suffix_[k][c]++;
            }
        }
    }

    bool run() { return solve(0); }

    std::map<std::pair<int, int>, std::vector<int>> trails() const {
        std::map<std::pair<int, int>, std::vector<int>> out;
        for (std::size_t k = 0; k < pairs_.size(); ++k) out[pairs_[k]] = walks_[k];
        return out;
    }

private:
    std::vector<std::vector<int>> all_dists() const {
        std::vector<std::vector<int>> d(terms_.size());
        for (std::size_t i = 0; i < terms_.size(); ++i) d[i] = bfs_from(terms_[i], false);
        return d;
    }

    std::vector<int> bfs_from(int src, bool residual) const {
        std::vector<int> dist(n_, INT32_MAX);
        std::queue<int> q;
        dist[src] = 0;
        q.push(src);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (const auto& [y, e] : adj_[x]) {
                if (residual && used_[e]) continue;
                if (dist[y] == INT32_MAX) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
            }
        }
        return dist;
    }

    bool solve(std::size_t k) {
        if (!budget_.tick()) return false;
        if (k == pairs_.size()) return true;
        int t = static_cast<int>(terms_.size());
        for (int p = 0; p < t; ++p)
            if (resid_deg_[terms_[p]] < incident_suffix_[k][p]) return false;
        for (std::size_t c = 0; c < cuts_.size(); ++c)
            if (cut_resid_[c] < cross_suffix_[k][c]) return false;
        long long need = 0;
        for (std::size_t k2 = k; k2 < pairs_.size(); ++k2) {
            auto d = bfs_from(terms_[pairs_[k2].first], true);
            int dd = d[terms_[pairs_[k2].second]];
            if (dd == INT32_MAX) return false;
            need += dd;
            if (need > m_ - used_count_) return false;
        }

        int u = terms_[pairs_[k].first], v = terms_[pairs_[k].second];
        dist_to_target_ = bfs_from(v, true);
        auto order = adj_;
        for (auto& lst : order)
            std::sort(lst.begin(), lst.end(), [&](const auto& a, const auto& b) {
                int da = dist_to_target_[a.first], db = dist_to_target_[b.first];
                return da != db ? da < db : a.first < b.first;
            });
        std::vector<char> on_path(n_, 0);
        std::vector<int> path{u};
        on_path[u] = 1;
        int max_len = m_ - used_count_;
        for (int len = dist_to_target_[u]; len <= max_len; ++len) {
            if (budget_.out) return false;
            if (dfs(u, v, len, k, order, on_path, path)) return true;
        }
        return false;
    }

    bool dfs(int cur, int target, int remaining, std::size_t k,
             const std::vector<std::vector<std::pair<int, int>>>& order, std::vector<char>& on_path,
             std::vector<int>& path) {
        if (!budget_.tick()) return false;
        if (cur == target) {
            if (remaining != 0) return false;
            walks_[k] = path;
            // solve() recomputes dist_to_target_ for the next pair; restore
            // ours when the deeper pairs fail and enumeration continues.
            auto saved = dist_to_target_;
            if (solve(k + 1)) return true;
            dist_to_target_ = std::move(saved);
            return false;
        }
        // dist_to_target_ was measured before this path committed its edges,
        // so it is a lower bound and the prune is admissible.
        if (remaining <= 0 || dist_to_target_[cur] > remaining) return false;
        for (const auto& [nb, e] : order[cur]) {
            if (used_[e] || on_path[nb]) continue;
            commit(e);
            on_path[nb] = nb != target;
            path.push_back(nb);
            if (dfs(nb, target, remaining - 1, k, order, on_path, path)) return true;
            path.pop_back();
            on_path[nb] = 0;
            rollback(e);
        }
        return false;
    }

    void commit(int e) {
        used_[e] = 1;
        ++used_count_;
        const auto& [u, v] = g_.edges()[e];
        --resid_deg_[u];
        --resid_deg_[v];
        for (int c : edge_cuts_[e]) --cut_resid_[c];
    }

    void rollback(int e) {
        used_[e] = 0;
        --used_count_;
        const auto& [u, v] = g_.edges()[e];
        ++resid_deg_[u];
        ++resid_deg_[v];
        for (int c : edge_cuts_[e]) ++cut_resid_[c];
    }

    const Graph& g_;
    int n_ = 0, m_ = 0;
    std::vector<int> terms_;
    const std::vector<Cut>& cuts_;
    BudgetState& budget_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<char> used_;
    int used_count_ = 0;
    std::vector<int> resid_deg_;
    std::vector<std::vector<int>> edge_cuts_;
    std::vector<int> cut_resid_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<int>> walks_;
    std::vector<std::vector<int>> incident_suffix_;
    std::vector<std::vector<int>> cross_suffix_;
    std::vector<int> dist_to_target_;
};

enum class TryResult { found, exhausted, budget };

TryResult try_order(const Graph& g, int t, const std::vector<Cut>& cuts, BudgetState& budget,
                    ImmersionCertificate& out) {
    std::vector<int> candidates;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= t - 1) candidates.push_back(v);
    if (static_cast<int>(candidates.size()) < t) return TryResult::exhausted;

    std::vector<int> pick(t);
    std::function<TryResult(int, int)> combos = [&](int idx, int from) -> TryResult {
        if (budget.out) return TryResult::budget;
        if (idx == t) {
            std::vector<int> terms(t);
            for (int i = 0; i < t; ++i) terms[i] = candidates[pick[i]];
            for (const auto& cut : cuts) {
                int k = 0;
                for (int v : terms) k += cut.side[v];
                if (!cut_bound_feasible({cut.capacity, k, t - k})) return TryResult::exhausted;
            }
            Packer packer(g, terms, cuts, budget);
            if (packer.run()) {
                out.order = t;
                out.terminals = terms;
                out.trails = packer.trails();
                out.host_order = g.order();
                out.host_edges_hash = edges_hash_hex(g);
                return TryResult::found;
            }
            return budget.out ? TryResult::budget : TryResult::exhausted;
        }
        for (int c = from; c <= static_cast<int>(candidates.size()) - (t - idx); ++c) {
            pick[idx] = c;
            TryResult r = combos(idx + 1, c + 1);
            if (r != TryResult::exhausted) return r;
        }
        return TryResult::exhausted;
    };
    return combos(0, 0);
}

}  // namespace

SearchReport exact_immersion_number(const Graph& g, const SearchBudget& budget,
                                    const std::string& graph_id) {
    auto t0 = Clock::now();
    SearchReport rep;
    rep.graph_id = graph_id.empty() ? "n" + std::to_string(g.order()) + "m" +
                                          std::to_string(g.edge_count()) + "h" + edges_hash_hex(g)
                                    : graph_id;
    if (g.order() == 0) {
        rep.lower = rep.upper = 0;
        rep.lower_provenance = rep.upper_provenance = "empty graph convention";
        rep.exact = true;
        return rep;
    }

    ImmersionCertificate best;
    best.order = 1;
    best.terminals = {0};
    best.host_order = g.order();
    best.host_edges_hash = edges_hash_hex(g);
    rep.lower = 1;
    rep.lower_provenance = "single vertex";
    if (g.edge_count() > 0) {
        const auto& [u, v] = g.edges().front();
        best.order = 2;
        best.terminals = {u, v};
        best.trails = {{{0, 1}, {u, v}}};
        rep.lower = 2;
        rep.lower_provenance = "single edge";
    }
    rep.upper = degree_upper_bound(g);
    rep.upper_provenance = "max-degree bound";

    auto cuts = candidate_cuts(g);
    long long total_nodes = 0;
    for (int t = rep.upper; t > rep.lower; --t) {
        BudgetState bs;
        bs.max_nodes = budget.max_nodes;
        bs.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(budget.max_seconds));
        ImmersionCertificate found;
        TryResult r = try_order(g, t, cuts, bs, found);
        total_nodes += bs.nodes;
        if (r == TryResult::found) {
            auto check = verify(g, found);
            if (!check.ok) throw std::logic_error("search produced invalid certificate: " + check.message);
            best = std::move(found);
            rep.lower = t;
            rep.lower_provenance = "search";
            rep.upper = t;
            rep.upper_provenance = rep.upper == degree_upper_bound(g)
                                       ? "max-degree bound"
                                       : "exhausted search at " + std::to_string(t + 1);
            break;
        }
        if (r == TryResult::budget) {
            rep.upper_provenance = "budget exhausted at t=" + std::to_string(t) + "; " +
                                   rep.upper_provenance;
            rep.exact = false;
            rep.nodes = total_nodes;
            rep.certificate = best;
            rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            return rep;
        }
        rep.upper = t - 1;
        rep.upper_provenance = "exhausted search at " + std::to_string(t);
    }
    rep.exact = rep.lower == rep.upper;
    rep.nodes = total_nodes;
    rep.certificate = best;
    rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

bool splitoff_oracle(const Graph& g, int t, const SplitoffLimits& limits) {
    if (g.order() > limits.max_vertices || g.edge_count() > limits.max_edges)
        throw std::invalid_argument("splitoff_oracle: size guard exceeded (" +
                                    std::to_string(g.order()) + " vertices, " +
                                    std::to_string(g.edge_count()) + " edges)");
    if (t <= 0) return true;
    if (t == 1) return g.order() >= 1;
    int n = g.order();
    if (t > n) return false;

    std::vector<std::vector<int>> eid(n, std::vector<int>(n, -1));
    std::vector<Edge> edge_of;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            eid[u][v] = eid[v][u] = static_cast<int>(edge_of.size());
            edge_of.emplace_back(u, v);
        }
    std::uint64_t start = 0;
    for (const auto& [u, v] : g.edges()) start |= 1ull << eid[u][v];
    const long long min_edges = static_cast<long long>(t) * (t - 1) / 2;

    auto rows_of = [&](std::uint64_t state) {
        std::vector<std::uint16_t> rows(n, 0);
        std::uint64_t s = state;
        while (s) {
            int e = __builtin_ctzll(s);
            s &= s - 1;
            rows[edge_of[e].first] |= std::uint16_t(1) << edge_of[e].second;
            rows[edge_of[e].second] |= std::uint16_t(1) << edge_of[e].first;
        }
        return rows;
    };
    std::function<bool(const std::vector<std::uint16_t>&, std::uint16_t, int)> extend =
        [&](const std::vector<std::uint16_t>& rows, std::uint16_t allowed, int need) -> bool {
        if (need == 0) return true;
        if (__builtin_popcount(allowed) < need) return false;
        std::uint16_t rest = allowed;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if (extend(rows, static_cast<std::uint16_t>(rest & rows[v]), need - 1)) return true;
        }
        return false;
    };

    std::unordered_set<std::uint64_t> memo;
    std::function<bool(std::uint64_t)> reach = [&](std::uint64_t state) -> bool {
        if (static_cast<long long>(__builtin_popcountll(state)) < min_edges) return false;
        auto rows = rows_of(state);
        // Split-offs and deletions never raise a degree, so demanding t
        // vertices of degree >= t-1 now is sound for the whole subtree.
        std::uint16_t cand = 0;
        int rich = 0;
        for (int v = 0; v < n; ++v)
            if (__builtin_popcount(rows[v]) >= t - 1) {
                cand |= std::uint16_t(1) << v;
                ++rich;
            }
        if (rich < t) return false;
        if (extend(rows, cand, t)) return true;
        if (memo.count(state)) return false;
        memo.insert(state);
        for (int v = 0; v < n; ++v) {
            std::uint16_t nbrs = rows[v];
            for (std::uint16_t ubit = nbrs; ubit;) {
                int u = __builtin_ctz(ubit);
                ubit &= ubit - 1;
                for (std::uint16_t wbit = ubit; wbit;) {
                    int w = __builtin_ctz(wbit);
                    wbit &= wbit - 1;
                    if (rows[u] & (std::uint16_t(1) << w)) continue;  // uw present
                    std::uint64_t next = state;
                    next &= ~(1ull << eid[u][v]);
                    next &= ~(1ull << eid[v][w]);
                    next |= 1ull << eid[u][w];
                    if (reach(next)) return true;
                }
            }
        }
        std::uint64_t s = state;
        while (s) {
            int e = __builtin_ctzll(s);
            s &= s - 1;
            if (reach(state & ~(1ull << e))) return true;
        }
        return false;
    };
    return reach(start);
}

const char* scan_status_name(ScanStatus s) {
    switch (s) {
        case ScanStatus::construction_met: return "construction-met";
        case ScanStatus::search_met: return "search-met";
        case ScanStatus::open_within_budget: return "open-within-budget";
        case ScanStatus::violation: return "VIOLATION";
    }
    return "?";
}

}  // namespace imm
