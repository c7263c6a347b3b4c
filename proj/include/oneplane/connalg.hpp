#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>

#include "oneplane/core.hpp"

namespace oneplane {

// ---------------------------------------------------------------------------
// Components and bridges
// ---------------------------------------------------------------------------

inline std::vector<int> component_labels(const RotationMultigraph& g,
                                         const std::set<EdgeId>& kept) {
    int n = g.vertex_count();
    std::vector<int> label(n, -1);
    int next = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.rotation[v]) {
                if (!kept.count(e)) continue;
                VertexId w = g.edges[e].other(v);
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

inline std::vector<std::vector<VertexId>> components(const RotationMultigraph& g,
                                                     const std::set<EdgeId>& kept) {
    std::vector<int> label = component_labels(g, kept);
    int k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<VertexId>> out(k);
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[label[v]].push_back(v);
    return out;
}

inline std::set<EdgeId> all_edges(const RotationMultigraph& g) {
    std::set<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.insert(e);
    return out;
}

/// Bridges of the spanning subgraph (V, kept), by DFS lowpoints.
/// Parallel edges are handled: only a lone parallel class member can be a bridge.
inline std::set<EdgeId> bridges(const RotationMultigraph& g, const std::set<EdgeId>& kept) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::set<EdgeId> out;
    int timer = 0;
    // Iterative DFS; skips only the single tree edge to the parent, so a
    // second parallel edge correctly lowers the lowpoint.
    struct Frame {
        VertexId v;
        EdgeId via;
        size_t idx;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.idx < g.rotation[f.v].size()) {
                EdgeId e = g.rotation[f.v][f.idx++];
                if (!kept.count(e) || e == f.via) continue;
                VertexId w = g.edges[e].other(f.v);
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (low[done.v] > disc[parent.v]) out.insert(done.via);
                }
            }
        }
    }
    return out;
}

inline std::set<EdgeId> cut_edges(const RotationMultigraph& g) { return bridges(g, all_edges(g)); }

// ---------------------------------------------------------------------------
// Disjoint paths and connectivity (unit-capacity max flow)
// ---------------------------------------------------------------------------

enum class PathMode { Vertex, Edge };

namespace detail {

/// Minimal BFS augmenting-path max flow for unit capacities.
struct FlowNetwork {
    struct Arc {
        int to, rev;
        int cap;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNetwork(int n) : adj(n) {}

    void add_arc(int from, int to, int cap) {
        adj[from].push_back({to, static_cast<int>(adj[to].size()), cap});
        adj[to].push_back({from, static_cast<int>(adj[from].size()) - 1, 0});
    }

    int max_flow(int s, int t, int limit = INT32_MAX) {
        int flow = 0;
        while (flow < limit) {
            std::vector<int> prev_node(adj.size(), -1), prev_arc(adj.size(), -1);
            std::queue<int> q;
            q.push(s);
            prev_node[s] = s;
            while (!q.empty() && prev_node[t] == -1) {
                int v = q.front();
                q.pop();
                for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
                    const Arc& a = adj[v][i];
                    if (a.cap > 0 && prev_node[a.to] == -1) {
                        prev_node[a.to] = v;
                        prev_arc[a.to] = i;
                        q.push(a.to);
                    }
                }
            }
            if (prev_node[t] == -1) break;
            for (int v = t; v != s; v = prev_node[v]) {
                Arc& a = adj[prev_node[v]][prev_arc[v]];
                a.cap -= 1;
                adj[v][a.rev].cap += 1;
            }
            ++flow;
        }
        return flow;
    }

    /// Nodes reachable from s in the residual graph.
    std::vector<char> residual_reachable(int s) const {
        std::vector<char> vis(adj.size(), 0);
        std::vector<int> stack{s};
        vis[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Arc& a : adj[v])
                if (a.cap > 0 && !vis[a.to]) {
                    vis[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
        return vis;
    }
};

inline FlowNetwork edge_flow_network(const RotationMultigraph& g) {
    FlowNetwork net(g.vertex_count());
    for (const Edge& e : g.edges) {
        net.add_arc(e.u, e.v, 1);
        net.add_arc(e.v, e.u, 1);
    }
    return net;
}

// Vertex-split network: node 2v = in, 2v+1 = out. With edge_cap large the
// minimum cut crosses only split arcs, so it reads off a vertex cut; that
// needs s and t non-adjacent. Unit edge_cap also serves adjacent pairs.
inline FlowNetwork vertex_flow_network(const RotationMultigraph& g, VertexId s, VertexId t,
                                       int edge_cap = 1) {
    FlowNetwork net(2 * g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? INT32_MAX / 2 : 1);
    for (const Edge& e : g.edges) {
        net.add_arc(2 * e.u + 1, 2 * e.v, edge_cap);
        net.add_arc(2 * e.v + 1, 2 * e.u, edge_cap);
    }
    return net;
}

}  // namespace detail

inline int disjoint_paths(const RotationMultigraph& g, VertexId u, VertexId v, PathMode mode) {
    if (u == v) throw std::invalid_argument("disjoint_paths: u and v must differ");
    if (mode == PathMode::Edge) {
        auto net = detail::edge_flow_network(g);
        return net.max_flow(u, v);
    }
    auto net = detail::vertex_flow_network(g, u, v);
    return net.max_flow(2 * u + 1, 2 * v);
}

/// Removes parallel duplicates; rotation order is not preserved (adjacency only).
inline RotationMultigraph simplify(const RotationMultigraph& g) {
    RotationMultigraph out;
    out.rotation.resize(g.vertex_count());
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : g.edges) {
        auto key = std::minmax(e.u, e.v);
        if (seen.insert(key).second) out.add_edge(e.u, e.v);
    }
    return out;
}

struct ConnectivityReport {
    int kappa = 0;
    int kappa_edge = 0;
    std::vector<VertexId> witness_vertex_cut;
    std::vector<EdgeId> witness_edge_cut;
};

/// Exact vertex connectivity of the simple underlying graph.
/// Uses the standard cover argument: some vertex of {s} u N(s), with s of
/// minimum degree, avoids a minimum cut, so scanning flows from each of
/// those to all their non-neighbors reaches the minimum.
inline ConnectivityReport connectivity(const RotationMultigraph& multi) {
    int n = multi.vertex_count();
    if (n < 2) throw std::invalid_argument("connectivity: need at least 2 vertices");
    ConnectivityReport rep;

    // Edge connectivity on the multigraph itself.
    {
        VertexId s = 0;
        int best = INT32_MAX;
        std::vector<EdgeId> best_cut;
        for (VertexId v = 1; v < n; ++v) {
            auto net = detail::edge_flow_network(multi);
            int f = net.max_flow(s, v, best);
            if (f < best) {
                best = f;
                auto reach = net.residual_reachable(s);
                best_cut.clear();
                for (EdgeId e = 0; e < multi.edge_count(); ++e) {
                    const Edge& ed = multi.edges[e];
                    if (reach[ed.u] != reach[ed.v]) best_cut.push_back(e);
                }
            }
        }
        rep.kappa_edge = best == INT32_MAX ? 0 : best;
        rep.witness_edge_cut = best_cut;
    }

    RotationMultigraph g = simplify(multi);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;

    VertexId s = 0;
    for (VertexId v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(s)) s = v;

    std::vector<VertexId> sources{s};
    for (EdgeId e : g.rotation[s]) sources.push_back(g.edges[e].other(s));

    int best = n - 1;  // complete-graph fallback
    std::vector<VertexId> best_cut;
    for (VertexId w : sources) {
        for (VertexId v = 0; v < n; ++v) {
            if (v == w || adj[w][v]) continue;
            auto net = detail::vertex_flow_network(g, w, v, INT32_MAX / 4);
            int f = net.max_flow(2 * w + 1, 2 * v, best);
            if (f < best) {
                best = f;
                auto reach = net.residual_reachable(2 * w + 1);
                best_cut.clear();
                for (VertexId x = 0; x < n; ++x)
                    if (reach[2 * x] && !reach[2 * x + 1]) best_cut.push_back(x);
            }
        }
    }
    rep.kappa = best;
    rep.witness_vertex_cut = best_cut;
    return rep;
}

// ---------------------------------------------------------------------------
// Hamiltonian cycle search
// ---------------------------------------------------------------------------

enum class SearchStatus { Found, ProvenNone, BudgetExhausted };

struct HamiltonianResult {
    SearchStatus status = SearchStatus::ProvenNone;
    std::vector<EdgeId> cycle_edges;
    std::uint64_t nodes = 0;
};

namespace detail {

struct HamSearch {
    const RotationMultigraph& g;
    int n;
    std::vector<int> state;    // per edge: 0 undecided, 1 in, 2 out
    std::vector<int> deg_in;   // chosen incident edges per vertex
    std::vector<int> deg_avail;  // chosen + undecided incident edges
    std::vector<int> uf;
    std::uint64_t nodes = 0, budget;
    int in_count = 0;
    HamiltonianResult result;

    HamSearch(const RotationMultigraph& g_, std::uint64_t budget_)
        : g(g_), n(g_.vertex_count()), state(g_.edge_count(), 0), deg_in(n, 0),
          deg_avail(n), uf(n), budget(budget_) {
        for (VertexId v = 0; v < n; ++v) deg_avail[v] = g.degree(v);
        std::iota(uf.begin(), uf.end(), 0);
    }

    // No path compression: unions must be undoable by a single write.
    int find(int x) const {
        while (uf[x] != x) x = uf[x];
        return x;
    }

    // Returns false on contradiction. `trail` records changed edges for undo.
    bool set_edge(EdgeId e, int val, std::vector<std::pair<EdgeId, std::pair<int, int>>>& trail) {
        if (state[e] == val) return true;
        if (state[e] != 0) return false;
        const Edge& ed = g.edges[e];
        int old_uf_u = -1;
        if (val == 1) {
            int ru = find(ed.u), rv = find(ed.v);
            if (ru == rv && in_count + 1 != n) return false;  // premature cycle
            if (deg_in[ed.u] >= 2 || deg_in[ed.v] >= 2) return false;
            old_uf_u = ru;
            if (ru != rv) uf[ru] = rv;
            deg_in[ed.u]++;
            deg_in[ed.v]++;
            in_count++;
        } else {
            // Discarding must leave each endpoint able to reach degree 2.
            if (deg_avail[ed.u] - 1 < 2 || deg_avail[ed.v] - 1 < 2) return false;
            deg_avail[ed.u]--;
            deg_avail[ed.v]--;
        }
        state[e] = val;
        trail.push_back({e, {val, old_uf_u}});
        return true;
    }

    void undo(std::vector<std::pair<EdgeId, std::pair<int, int>>>& trail, size_t mark) {
        while (trail.size() > mark) {
            auto [e, info] = trail.back();
            trail.pop_back();
            const Edge& ed = g.edges[e];
            if (info.first == 1) {
                deg_in[ed.u]--;
                deg_in[ed.v]--;
                in_count--;
                if (info.second != -1) uf[info.second] = info.second;
            } else {
                deg_avail[ed.u]++;
                deg_avail[ed.v]++;
            }
            state[e] = 0;
        }
    }

    // Unit propagation over vertex degree constraints.
    bool propagate(std::vector<std::pair<EdgeId, std::pair<int, int>>>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexId v = 0; v < n; ++v) {
                if (deg_in[v] > 2 || deg_avail[v] < 2) return false;
                if (deg_in[v] == 2) {
                    for (EdgeId e : g.rotation[v])
                        if (state[e] == 0) {
                            if (!set_edge(e, 2, trail)) return false;
                            changed = true;
                        }
                } else if (deg_avail[v] == 2) {
                    for (EdgeId e : g.rotation[v])
                        if (state[e] == 0) {
                            if (!set_edge(e, 1, trail)) return false;
                            changed = true;
                        }
                }
            }
        }
        // All in/undecided edges must keep the graph connected.
        std::vector<char> vis(n, 0);
        std::vector<VertexId> stack{0};
        vis[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.rotation[v]) {
                if (state[e] == 2) continue;
                VertexId w = g.edges[e].other(v);
                if (!vis[w]) {
                    vis[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == n;
    }

    bool solved() const {
        if (in_count != n) return false;
        for (VertexId v = 0; v < n; ++v)
            if (deg_in[v] != 2) return false;
        return true;
    }

    // Returns true when a cycle was found; false means subtree exhausted
    // (or budget hit, flagged in result.status).
    bool search() {
        if (++nodes > budget) {
            result.status = SearchStatus::BudgetExhausted;
            return false;
        }
        if (solved()) {
            result.status = SearchStatus::Found;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (state[e] == 1) result.cycle_edges.push_back(e);
            return true;
        }
        // Branch on an undecided edge at the most constrained vertex.
        EdgeId branch = -1;
        int best_slack = INT32_MAX;
        for (VertexId v = 0; v < n; ++v) {
            if (deg_in[v] == 2) continue;
            int slack = deg_avail[v] - 2;
            if (slack < best_slack) {
                for (EdgeId e : g.rotation[v])
                    if (state[e] == 0) {
                        best_slack = slack;
                        branch = e;
                        break;
                    }
            }
        }
        if (branch == -1) return false;
        for (int val : {1, 2}) {
            std::vector<std::pair<EdgeId, std::pair<int, int>>> trail;
            if (set_edge(branch, val, trail) && propagate(trail)) {
                if (search()) return true;
                if (result.status == SearchStatus::BudgetExhausted) {
                    undo(trail, 0);
                    return false;
                }
            }
            undo(trail, 0);
        }
        return false;
    }
};

}  // namespace detail

inline HamiltonianResult hamiltonian_cycle(const RotationMultigraph& g,
                                           std::uint64_t budget = 100'000'000) {
    if (!is_connected(g)) {
        HamiltonianResult r;
        r.status = SearchStatus::ProvenNone;
        return r;
    }
    if (g.vertex_count() < 3) {
        HamiltonianResult r;
        r.status = SearchStatus::ProvenNone;
        return r;
    }
    detail::HamSearch s(g, budget);
    std::vector<std::pair<EdgeId, std::pair<int, int>>> trail;
    if (!s.propagate(trail)) {
        HamiltonianResult r;
        r.status = SearchStatus::ProvenNone;
        return r;
    }
    s.search();
    s.result.nodes = s.nodes;
    return s.result;
}

// ---------------------------------------------------------------------------
// Perfect matchings and 2-factors of cubic graphs
// ---------------------------------------------------------------------------

struct TwoFactorResult {
    std::vector<std::set<EdgeId>> factors;  // each a 2-regular spanning edge set
    bool exhausted = true;
    std::uint64_t nodes = 0;
};

/// Enumerates perfect matchings by always matching the lowest unmatched vertex.
inline void for_each_perfect_matching(const RotationMultigraph& g,
                                      const std::function<void(const std::set<EdgeId>&)>& cb,
                                      std::uint64_t budget, bool* exhausted = nullptr,
                                      std::uint64_t* nodes_out = nullptr) {
    int n = g.vertex_count();
    std::vector<char> matched(n, 0);
    std::set<EdgeId> matching;
    std::uint64_t nodes = 0;
    bool done = true;

    std::function<void()> rec = [&]() {
        if (!done) return;
        if (++nodes > budget) {
            done = false;
            return;
        }
        VertexId v = -1;
        for (VertexId x = 0; x < n; ++x)
            if (!matched[x]) {
                v = x;
                break;
            }
        if (v == -1) {
            cb(matching);
            return;
        }
        for (EdgeId e : g.rotation[v]) {
            VertexId w = g.edges[e].other(v);
            if (matched[w]) continue;
            matched[v] = matched[w] = 1;
            matching.insert(e);
            rec();
            matching.erase(e);
            matched[v] = matched[w] = 0;
            if (!done) return;
        }
    };
    rec();
    if (exhausted) *exhausted = done;
    if (nodes_out) *nodes_out = nodes;
}

/// In a cubic graph the 2-factors are exactly the complements of perfect matchings.
inline TwoFactorResult two_factors(const RotationMultigraph& g,
                                   std::uint64_t budget = 100'000'000) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) throw std::invalid_argument("two_factors: graph is not cubic");
    TwoFactorResult out;
    for_each_perfect_matching(
        g,
        [&](const std::set<EdgeId>& m) {
            std::set<EdgeId> factor;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (!m.count(e)) factor.insert(e);
            out.factors.push_back(std::move(factor));
        },
        budget, &out.exhausted, &out.nodes);
    return out;
}

// ---------------------------------------------------------------------------
// Proper 3-edge-coloring (Tait coloring)
// ---------------------------------------------------------------------------

struct EdgeColoring3 {
    std::vector<int> color;  // edge id -> 1..3, 0 = uncolored
    SearchStatus status = SearchStatus::ProvenNone;
    std::uint64_t nodes = 0;
};

inline EdgeColoring3 tait_coloring(const RotationMultigraph& g,
                                   std::uint64_t budget = 100'000'000) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) throw std::invalid_argument("tait_coloring: graph is not cubic");
    if (!bridges(g, all_edges(g)).empty())
        throw std::invalid_argument("tait_coloring: graph has a bridge");

    EdgeColoring3 out;
    out.color.assign(g.edge_count(), 0);
    std::uint64_t nodes = 0;

    std::function<bool(EdgeId)> rec = [&](EdgeId e) -> bool {
        if (++nodes > budget) {
            out.status = SearchStatus::BudgetExhausted;
            return false;
        }
        if (e == g.edge_count()) {
            out.status = SearchStatus::Found;
            return true;
        }
        for (int c = 1; c <= 3; ++c) {
            bool clash = false;
            for (VertexId v : {g.edges[e].u, g.edges[e].v}) {
                for (EdgeId f : g.rotation[v])
                    if (f != e && out.color[f] == c) {
                        clash = true;
                        break;
                    }
                if (clash) break;
            }
            if (clash) continue;
            out.color[e] = c;
            if (rec(e + 1)) return true;
            out.color[e] = 0;
            if (out.status == SearchStatus::BudgetExhausted) return false;
        }
        return false;
    };
    rec(0);
    out.nodes = nodes;
    return out;
}

inline bool coloring_is_proper(const RotationMultigraph& g, const EdgeColoring3& c) {
    if (c.color.size() != static_cast<size_t>(g.edge_count())) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        for (EdgeId e : g.rotation[v]) {
            if (c.color[e] < 1 || c.color[e] > 3) return false;
            if (!seen.insert(c.color[e]).second) return false;
        }
    }
    return true;
}

/// Checks that a disconnecting 3-edge set carries three distinct colors.
inline bool parity_check(const RotationMultigraph& g, const EdgeColoring3& c,
                         const std::set<EdgeId>& cut) {
    if (cut.size() != 3) throw std::invalid_argument("parity_check: cut must have 3 edges");
    std::set<EdgeId> kept = all_edges(g);
    for (EdgeId e : cut) kept.erase(e);
    size_t before = components(g, all_edges(g)).size();
    size_t after = components(g, kept).size();
    if (after <= before) throw std::invalid_argument("parity_check: edge set is not a cut");
    std::set<int> colors;
    for (EdgeId e : cut) colors.insert(c.color[e]);
    return colors.size() == 3;
}

// ---------------------------------------------------------------------------
// Partition into paths of length 2
// ---------------------------------------------------------------------------

struct P2Partition {
    struct Pair {
        EdgeId first, second;
        VertexId middle;
    };
    std::vector<Pair> paths;
    std::optional<EdgeId> leftover;
};

/// Pairs edges bottom-up along a DFS tree: each vertex pairs the unpaired
/// edges charged to it, passing at most its parent edge upward.
inline P2Partition p2_partition(const RotationMultigraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("p2_partition: graph must be connected");
    int n = g.vertex_count();
    std::vector<int> parent_edge(n, -1), order;
    std::vector<char> vis(n, 0);
    std::vector<VertexId> stack{0};
    vis[0] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (EdgeId e : g.rotation[v]) {
            VertexId w = g.edges[e].other(v);
            if (!vis[w]) {
                vis[w] = 1;
                parent_edge[w] = e;
                stack.push_back(w);
            }
        }
    }

    P2Partition out;
    std::vector<char> paired(g.edge_count(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        std::vector<EdgeId> pool;
        for (EdgeId e : g.rotation[v])
            if (!paired[e] && e != parent_edge[v]) pool.push_back(e);
        size_t i = 0;
        for (; i + 1 < pool.size(); i += 2) {
            out.paths.push_back({pool[i], pool[i + 1], v});
            paired[pool[i]] = paired[pool[i + 1]] = 1;
        }
        if (i < pool.size()) {
            if (parent_edge[v] != -1) {
                out.paths.push_back({pool[i], parent_edge[v], v});
                paired[pool[i]] = paired[parent_edge[v]] = 1;
            } else {
                out.leftover = pool[i];
                paired[pool[i]] = 1;
            }
        }
    }
    return out;
}

}  // namespace oneplane
