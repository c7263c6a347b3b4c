#pragma once

// Spanning plane subgraph search over 1-plane drawings: a randomized
// edge-exchange heuristic, an exact branch-and-bound over crossing-pair
// choices, and probes built on top of them.
//
// Normalization used throughout: adding an edge never increases the component
// count and never decreases connectivity, so for every objective handled here
// some optimum keeps all non-crossing edges and exactly one edge per crossing
// pair.  The exact search branches only over those assignments.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "oneplane/connalg.hpp"
#include "oneplane/core.hpp"

namespace oneplane {

enum class SolveStatus { Optimal, Feasible, ProvenImpossible, BudgetExhausted };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::ProvenImpossible: return "proven_impossible";
        default: return "budget_exhausted";
    }
}

struct Budget {
    std::uint64_t nodes = 10'000'000;
    double seconds = 60.0;

    static Budget defaults() {
        Budget b;
        if (const char* s = std::getenv("ONEPLANE_BUDGET_SECS")) b.seconds = std::atof(s);
        return b;
    }
};

struct SolveReport {
    std::set<EdgeId> kept;
    int components = 0;
    int kappa = 0;
    SolveStatus status = SolveStatus::BudgetExhausted;
    std::uint64_t nodes_explored = 0;
    double wall_time = 0;  // seconds

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["kept"] = std::vector<EdgeId>(kept.begin(), kept.end());
        j["components"] = components;
        j["kappa"] = kappa;
        j["status"] = to_string(status);
        j["nodes_explored"] = nodes_explored;
        j["wall_time"] = wall_time;
        return j;
    }
};

struct Objective {
    enum Kind { MinComponents, MaxKappaGivenConnected, ExistsLConnected };
    Kind kind = MinComponents;
    int l = 0;

    static Objective min_components() { return {MinComponents, 0}; }
    static Objective max_kappa_given_connected() { return {MaxKappaGivenConnected, 0}; }
    static Objective exists_l_connected(int l) { return {ExistsLConnected, l}; }
};

/// A cardinality window on how many edges of a fixed set may survive; used by
/// the verify layer to feed gadget-capacity counting bounds into the search.
/// The caller is responsible for the soundness of the bounds it supplies.
struct SideConstraint {
    std::vector<EdgeId> edges;
    int min_keep = 0;
    int max_keep = INT_MAX;
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

inline RotationMultigraph subgraph_keeping(const RotationMultigraph& g,
                                           const std::set<EdgeId>& kept) {
    RotationMultigraph out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex();
    for (EdgeId e : kept) out.add_edge(g.edges[e].u, g.edges[e].v);
    return out;
}

/// Exact branch-and-bound over one-surviving-edge-per-pair assignments.
struct ExactSearch {
    const OnePlaneDrawing& d;
    Objective obj;
    Budget budget;
    std::vector<SideConstraint> constraints;

    int n, m;
    int npairs;
    std::vector<int> pair_of;     // edge -> pair index, -1 for non-crossing
    std::vector<int> side_of;     // edge -> 0/1 within its pair
    std::vector<std::array<EdgeId, 2>> pair_edges;
    std::vector<int> decision;    // pair -> -1 undecided, else surviving side

    Stopwatch clock;
    std::uint64_t nodes = 0;
    bool aborted = false;
    bool found = false;           // ExistsLConnected witness

    int best_value = INT_MAX;     // MinComponents: best comps; MaxKappa: -best kappa
    bool have_incumbent = false;
    std::vector<EdgeId> best_kept;
    std::vector<bool> in_constraint;

    // scratch
    std::vector<int> label, comp_size, pot_deg;
    std::vector<VertexId> stack;

    ExactSearch(const OnePlaneDrawing& dd, Objective o, Budget b,
                std::vector<SideConstraint> cons)
        : d(dd), obj(o), budget(b), constraints(std::move(cons)) {
        n = d.graph.vertex_count();
        m = d.graph.edge_count();
        npairs = static_cast<int>(d.crossings.size());
        pair_of.assign(m, -1);
        side_of.assign(m, 0);
        for (int p = 0; p < npairs; ++p) {
            pair_edges.push_back({d.crossings[p].first, d.crossings[p].second});
            pair_of[d.crossings[p].first] = p;
            pair_of[d.crossings[p].second] = p;
            side_of[d.crossings[p].second] = 1;
        }
        decision.assign(npairs, -1);
        label.resize(n);
        pot_deg.resize(n);
        in_constraint.assign(npairs, false);
        for (const SideConstraint& c : constraints)
            for (EdgeId e : c.edges)
                if (pair_of[e] != -1) in_constraint[pair_of[e]] = true;
    }

    bool edge_kept(EdgeId e) const {
        int p = pair_of[e];
        return p == -1 || decision[p] == side_of[e];
    }
    bool edge_possible(EdgeId e) const {
        int p = pair_of[e];
        return p == -1 || decision[p] == -1 || decision[p] == side_of[e];
    }

    std::vector<EdgeId> kept_edges() const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < m; ++e)
            if (edge_kept(e)) out.push_back(e);
        return out;
    }

    template <class Pred>
    int component_count(Pred pred) {
        std::fill(label.begin(), label.end(), -1);
        comp_size.clear();
        int next = 0;
        for (VertexId s = 0; s < n; ++s) {
            if (label[s] != -1) continue;
            label[s] = next;
            int size = 0;
            stack.assign(1, s);
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                ++size;
                for (EdgeId e : d.graph.rotation[v]) {
                    if (!pred(e)) continue;
                    VertexId w = d.graph.edges[e].other(v);
                    if (label[w] == -1) {
                        label[w] = next;
                        stack.push_back(w);
                    }
                }
            }
            comp_size.push_back(size);
            ++next;
        }
        return next;
    }

    /// True iff the graph of `pred` edges (assumed connected) has a bridge or
    /// a cut vertex, i.e. its connectivity is at most 1.
    template <class Pred>
    bool has_cut_or_bridge(Pred pred) {
        std::vector<int> disc(n, -1), low(n, 0);
        int timer = 0;
        struct Frame {
            VertexId v;
            EdgeId via;
            size_t idx;
            int children = 0;
        };
        std::vector<Frame> st;
        for (VertexId root = 0; root < n; ++root) {
            if (disc[root] != -1) continue;
            st.push_back({root, -1, 0, 0});
            disc[root] = low[root] = timer++;
            while (!st.empty()) {
                Frame& f = st.back();
                if (f.idx < d.graph.rotation[f.v].size()) {
                    EdgeId e = d.graph.rotation[f.v][f.idx++];
                    if (!pred(e) || e == f.via) continue;
                    VertexId w = d.graph.edges[e].other(f.v);
                    if (disc[w] == -1) {
                        disc[w] = low[w] = timer++;
                        ++f.children;
                        st.push_back({w, e, 0, 0});
                    } else {
                        low[f.v] = std::min(low[f.v], disc[w]);
                    }
                } else {
                    Frame done = f;
                    st.pop_back();
                    if (!st.empty()) {
                        Frame& parent = st.back();
                        low[parent.v] = std::min(low[parent.v], low[done.v]);
                        if (low[done.v] > disc[parent.v]) return true;  // bridge
                        if (parent.via != -1 && low[done.v] >= disc[parent.v])
                            return true;  // non-root cut vertex
                    } else if (done.children > 1) {
                        return true;  // root cut vertex
                    }
                }
            }
        }
        return false;
    }

    /// Capped vertex connectivity test on the optimistic graph: true iff it is
    /// provably < l (so every completion is too).
    bool optimistic_kappa_below(int l) {
        std::set<EdgeId> opt;
        for (EdgeId e = 0; e < m; ++e)
            if (edge_possible(e)) opt.insert(e);
        RotationMultigraph g = simplify(subgraph_keeping(d.graph, opt));
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (const Edge& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
        VertexId s = 0;
        for (VertexId v = 1; v < n; ++v)
            if (g.degree(v) < g.degree(s)) s = v;
        if (g.degree(s) < l) return true;
        std::vector<VertexId> sources{s};
        for (EdgeId e : g.rotation[s]) sources.push_back(g.edges[e].other(s));
        for (VertexId w : sources)
            for (VertexId v = 0; v < n; ++v) {
                if (v == w || adj[w][v]) continue;
                auto net = detail::vertex_flow_network(g, w, v, INT32_MAX / 4);
                if (net.max_flow(2 * w + 1, 2 * v, l) < l) return true;
            }
        return false;
    }

    bool out_of_budget() {
        if (aborted) return true;
        if (nodes >= budget.nodes || ((nodes & 63) == 0 && clock.secs() > budget.seconds)) {
            aborted = true;
            return true;
        }
        return false;
    }

    bool constraint_prune() {
        for (const SideConstraint& c : constraints) {
            int kept = 0, possible = 0;
            std::set<int> open_pairs;
            for (EdgeId e : c.edges) {
                if (edge_kept(e)) {
                    ++kept;
                    ++possible;
                } else if (edge_possible(e)) {
                    // An undecided pair contributes at most one survivor even
                    // if both of its edges lie in the set.
                    if (open_pairs.insert(pair_of[e]).second) ++possible;
                }
            }
            if (kept > c.max_keep) return true;
            if (possible < c.min_keep) return true;
        }
        return false;
    }

    void offer_leaf(const std::vector<EdgeId>& kept, int value) {
        if (!have_incumbent || value < best_value ||
            (value == best_value && kept < best_kept)) {
            have_incumbent = true;
            best_value = value;
            best_kept = kept;
        }
    }

    // Returns true when the search can stop (witness found for exists).
    bool dfs() {
        ++nodes;
        if (out_of_budget()) return false;
        if (constraint_prune()) return false;

        auto possible = [&](EdgeId e) { return edge_possible(e); };
        int comps_opt = component_count(possible);

        switch (obj.kind) {
            case Objective::MinComponents:
                if (have_incumbent && comps_opt >= best_value) return false;
                break;
            case Objective::MaxKappaGivenConnected: {
                if (comps_opt > 1) return false;
                int upper = n - 1;
                for (VertexId v = 0; v < n; ++v) {
                    int deg = 0;
                    for (EdgeId e : d.graph.rotation[v])
                        if (edge_possible(e)) ++deg;
                    upper = std::min(upper, deg);
                }
                if (upper >= 2 && has_cut_or_bridge(possible)) upper = 1;
                if (have_incumbent && upper <= -best_value) return false;
                break;
            }
            case Objective::ExistsLConnected:
                if (obj.l >= 1 && comps_opt > 1) return false;
                if (obj.l >= 2) {
                    for (VertexId v = 0; v < n; ++v) {
                        int deg = 0;
                        for (EdgeId e : d.graph.rotation[v])
                            if (edge_possible(e)) ++deg;
                        if (deg < obj.l) return false;
                    }
                    if (has_cut_or_bridge(possible)) return false;
                }
                break;
        }

        // Branch selection: undecided pairs keyed by the smallest component
        // either edge would join to another.  Pairs whose decision cannot
        // change the component structure go later — their branches are
        // interchangeable for the component bounds — with pairs that still
        // carry inter-component edges (both joining the same two components)
        // ahead of fully internal ones, because deciding them is what exposes
        // thin cuts to the connectivity bound.
        auto kept_now = [&](EdgeId e) { return edge_kept(e); };
        component_count(kept_now);
        const long INF = 1L << 40;
        long best_key = INF;
        int pick = -1, first_side = 0;
        int undecided = 0;
        for (int p = 0; p < npairs; ++p) {
            if (decision[p] != -1) continue;
            ++undecided;
            long key = INF;
            int side = 0;
            long side_key = LONG_MAX;
            bool parallel = true;
            std::array<std::pair<int, int>, 2> comps{};
            for (int s = 0; s < 2; ++s) {
                const Edge& ed = d.graph.edges[pair_edges[p][s]];
                int lu = label[ed.u], lv = label[ed.v];
                comps[s] = std::minmax(lu, lv);
                if (lu == lv) continue;
                long a = std::min(comp_size[lu], comp_size[lv]);
                long b = std::max(comp_size[lu], comp_size[lv]);
                key = std::min(key, a);
                long sk = a * (n + 1L) + b;
                if (sk < side_key) {
                    side_key = sk;
                    side = s;
                }
            }
            if (comps[0] != comps[1]) parallel = false;
            if (parallel && key < INF) {
                key = INF + p;  // component-parallel, deferred
                side = 0;
            } else if (key == INF) {
                key = 2 * INF + p;  // fully internal, last
                side = 0;
            }
            // Decisions that feed a supplied cardinality bound come first:
            // they are what make the counting prunes bite.
            if (!constraints.empty() && !in_constraint[p]) key += 4 * INF;
            if (pick == -1 || key < best_key) {
                best_key = key;
                pick = p;
                first_side = side;
            }
        }

        if (pick == -1) {  // leaf: every pair decided
            std::vector<EdgeId> kept = kept_edges();
            std::set<EdgeId> kept_set(kept.begin(), kept.end());
            int comps = component_count(kept_now);
            switch (obj.kind) {
                case Objective::MinComponents:
                    offer_leaf(kept, comps);
                    break;
                case Objective::MaxKappaGivenConnected:
                    if (comps == 1) {
                        int kappa =
                            connectivity(subgraph_keeping(d.graph, kept_set)).kappa;
                        offer_leaf(kept, -kappa);
                    }
                    break;
                case Objective::ExistsLConnected: {
                    bool ok = comps == 1;
                    if (ok && obj.l >= 2)
                        ok = connectivity(subgraph_keeping(d.graph, kept_set)).kappa >=
                             obj.l;
                    if (ok) {
                        offer_leaf(kept, 0);
                        found = true;
                        return true;
                    }
                    break;
                }
            }
            return false;
        }

        // Every remaining pair is component-neutral: the cheap bounds above
        // are already as good as they will get, so for l >= 3 pay for a capped
        // max-flow connectivity bound once before descending further.
        if (best_key >= INF && obj.kind == Objective::ExistsLConnected && obj.l >= 3) {
            if (clock.secs() > budget.seconds) {
                aborted = true;
                return false;
            }
            if (optimistic_kappa_below(obj.l)) return false;
        }

        for (int s : {first_side, 1 - first_side}) {
            decision[pick] = s;
            if (dfs()) {
                decision[pick] = -1;
                return true;
            }
            decision[pick] = -1;
            if (aborted) return false;
        }
        return false;
    }
};

}  // namespace detail

inline SolveReport exact_search(const OnePlaneDrawing& d, Objective obj,
                                Budget budget = Budget::defaults(),
                                std::vector<SideConstraint> constraints = {}) {
    detail::ExactSearch s(d, obj, budget, std::move(constraints));
    s.dfs();

    SolveReport rep;
    rep.nodes_explored = s.nodes;
    rep.wall_time = s.clock.secs();

    auto fill_from_kept = [&](const std::vector<EdgeId>& kept) {
        rep.kept = std::set<EdgeId>(kept.begin(), kept.end());
        RotationMultigraph sub = detail::subgraph_keeping(d.graph, rep.kept);
        rep.components = static_cast<int>(components(sub, all_edges(sub)).size());
        rep.kappa = rep.components == 1 && sub.vertex_count() >= 2
                        ? connectivity(sub).kappa
                        : 0;
    };

    switch (obj.kind) {
        case Objective::MinComponents:
        case Objective::MaxKappaGivenConnected:
            if (s.have_incumbent) {
                fill_from_kept(s.best_kept);
                rep.status = s.aborted ? SolveStatus::Feasible : SolveStatus::Optimal;
            } else {
                rep.status = s.aborted ? SolveStatus::BudgetExhausted
                                       : SolveStatus::ProvenImpossible;
            }
            break;
        case Objective::ExistsLConnected:
            if (s.found) {
                fill_from_kept(s.best_kept);
                rep.status = SolveStatus::Feasible;
            } else {
                rep.status = s.aborted ? SolveStatus::BudgetExhausted
                                       : SolveStatus::ProvenImpossible;
            }
            break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Exchange heuristic
// ---------------------------------------------------------------------------

/// Snapshot of the heuristic's working state: the kept edge set, its
/// components with their cut edges, and the finer partition into blocks
/// (components of a component minus its cut edges).
struct ExchangeState {
    std::set<EdgeId> kept;
    std::vector<std::vector<VertexId>> comps;
    std::vector<std::set<EdgeId>> cut_edges;  // per component, bridges within it
    std::vector<int> block_of;                // vertex -> block id

    static ExchangeState of(const RotationMultigraph& g, const std::set<EdgeId>& kept) {
        ExchangeState st;
        st.kept = kept;
        std::vector<int> label = component_labels(g, kept);
        int k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
        st.comps.resize(k);
        for (VertexId v = 0; v < g.vertex_count(); ++v) st.comps[label[v]].push_back(v);
        std::set<EdgeId> all_bridges = bridges(g, kept);
        st.cut_edges.assign(k, {});
        for (EdgeId e : all_bridges) st.cut_edges[label[g.edges[e].u]].insert(e);
        std::set<EdgeId> minus;
        for (EdgeId e : kept)
            if (!all_bridges.count(e)) minus.insert(e);
        st.block_of = component_labels(g, minus);
        return st;
    }
};

inline SolveReport exchange_heuristic(const OnePlaneDrawing& d, std::uint64_t seed,
                                      Budget budget = Budget::defaults()) {
    detail::Stopwatch clock;
    const RotationMultigraph& g = d.graph;
    int n = g.vertex_count(), m = g.edge_count();

    std::vector<int> partner(m, -1);
    for (const auto& c : d.crossings) {
        partner[c.first] = c.second;
        partner[c.second] = c.first;
    }

    std::mt19937_64 rng(seed);
    std::uint64_t steps = 0;
    std::set<EdgeId> best;
    int best_comps = INT_MAX;

    auto evaluate = [&](const std::set<EdgeId>& kept) {
        std::vector<int> label = component_labels(g, kept);
        return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    };

    bool out = false;
    while (!out) {
        // (Re)start from the plane core: all non-crossing edges.
        std::set<EdgeId> kept;
        for (EdgeId e = 0; e < m; ++e)
            if (partner[e] == -1) kept.insert(e);

        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<int> label = component_labels(g, kept);
            std::set<EdgeId> cut = bridges(g, kept);
            std::vector<EdgeId> cand;
            for (EdgeId e = 0; e < m; ++e)
                if (!kept.count(e) && label[g.edges[e].u] != label[g.edges[e].v])
                    cand.push_back(e);
            std::shuffle(cand.begin(), cand.end(), rng);
            for (EdgeId uv : cand) {
                if (++steps >= budget.nodes || clock.secs() > budget.seconds) {
                    out = true;
                    break;
                }
                EdgeId xy = partner[uv];
                if (xy == -1 || !kept.count(xy)) {
                    // Case A: uv crosses nothing that survives; just add it.
                    kept.insert(uv);
                    progress = true;
                    break;
                }
                if (!cut.count(xy)) {
                    // Case B: the crossing partner is a non-cut edge of its
                    // component; swapping keeps that component connected and
                    // merges two components via uv.
                    kept.erase(xy);
                    kept.insert(uv);
                    progress = true;
                    break;
                }
            }
            if (out) break;
        }

        int comps = evaluate(kept);
        if (comps < best_comps) {
            best_comps = comps;
            best = kept;
        }
        if (best_comps == 1) break;
        if (steps >= budget.nodes || clock.secs() > budget.seconds) out = true;
        // stalled: loop restarts with a fresh shuffle order
    }

    SolveReport rep;
    rep.kept = best;
    rep.components = best_comps == INT_MAX ? 0 : best_comps;
    RotationMultigraph sub = detail::subgraph_keeping(g, best);
    rep.kappa = rep.components == 1 && n >= 2 ? connectivity(sub).kappa : 0;
    rep.status =
        rep.components == 1 ? SolveStatus::Feasible : SolveStatus::BudgetExhausted;
    rep.nodes_explored = steps;
    rep.wall_time = clock.secs();
    return rep;
}

// ---------------------------------------------------------------------------
// Local gadget capacity and the parameter-table probe
// ---------------------------------------------------------------------------

/// Maximum number of the given incident inter-cycle edges that can survive in
/// a plane subset, considering only crossings local to those edges; by
/// exhaustive enumeration over the subsets.
inline int local_gadget_capacity(const OnePlaneDrawing& d,
                                 const std::vector<VertexId>& cycle,
                                 const std::vector<EdgeId>& inter) {
    if (cycle.empty()) throw std::invalid_argument("local_gadget_capacity: empty cycle");
    std::set<VertexId> on_cycle(cycle.begin(), cycle.end());
    for (EdgeId e : inter) {
        if (e < 0 || e >= d.graph.edge_count())
            throw std::invalid_argument("local_gadget_capacity: unknown edge");
        const Edge& ed = d.graph.edges[e];
        if (!on_cycle.count(ed.u) && !on_cycle.count(ed.v))
            throw std::invalid_argument("local_gadget_capacity: edge not incident to cycle");
    }
    std::map<EdgeId, int> index;
    for (size_t i = 0; i < inter.size(); ++i) index[inter[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> internal_pairs;
    for (const auto& c : d.crossings) {
        auto a = index.find(c.first), b = index.find(c.second);
        if (a != index.end() && b != index.end())
            internal_pairs.push_back({a->second, b->second});
    }
    int bestc = 0;
    for (std::uint32_t mask = 0; mask < (1u << inter.size()); ++mask) {
        bool ok = true;
        for (auto [a, b] : internal_pairs)
            if ((mask >> a & 1) && (mask >> b & 1)) {
                ok = false;
                break;
            }
        if (ok) bestc = std::max(bestc, std::popcount(mask));
    }
    return bestc;
}

/// Per-l probe: can a spanning plane subgraph be l-connected, for l = 1, 2, 3?
/// Instance-specific cardinality certificates may be passed per l; a
/// certificate justified for l-connected candidates must not leak to other l.
inline std::map<int, std::string> table1_probe(
    const OnePlaneDrawing& d, Budget budget = Budget::defaults(),
    const std::map<int, std::vector<SideConstraint>>& constraints_by_l = {}) {
    std::map<int, std::string> out;
    for (int l = 1; l <= 3; ++l) {
        auto it = constraints_by_l.find(l);
        SolveReport r = exact_search(
            d, Objective::exists_l_connected(l), budget,
            it == constraints_by_l.end() ? std::vector<SideConstraint>{} : it->second);
        if (r.status == SolveStatus::Feasible)
            out[l] = "yes";
        else if (r.status == SolveStatus::ProvenImpossible)
            out[l] = "no";
        else
            out[l] = "unknown";
    }
    return out;
}

}  // namespace oneplane
