#pragma once

// Inflation of a plane (multi)graph, gadget attachment, the crossing
// operation, and generators for the instance families used by the tests and
// the CLI.

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oneplane/connalg.hpp"
#include "oneplane/core.hpp"
#include "oneplane/gadgets.hpp"

namespace oneplane {

// Maps a base multigraph onto its inflation: every base vertex becomes a
// cycle, every base edge an inter-cycle edge keeping its id.
struct InflationMap {
    // base vertex -> inflated cycle vertices, one per rotation position
    std::vector<std::vector<VertexId>> cycle_of;
    // base vertex -> cycle edges; cycle_edge_of[v][i] joins cycle_of[v][i]
    // with cycle_of[v][(i+1) % deg]
    std::vector<std::vector<EdgeId>> cycle_edge_of;
    // base edge -> inter-cycle edge (identity by construction)
    std::vector<EdgeId> inter_edge_of;
};

struct Inflation {
    OnePlaneDrawing drawing;
    InflationMap map;
};

// Canonical inflation: vertex v with rotation (f_0 .. f_{d-1}) becomes a
// d-cycle w_0 .. w_{d-1}; edge f_i leaves the cycle at w_i.  Works for any
// rotation system; sphericity is a property of the input, not a precondition.
inline Inflation inflate(const OnePlaneDrawing& base) {
    Verdict verdict = validate(base.graph);
    if (!verdict.ok())
        throw std::invalid_argument("inflate: invalid base: " + verdict.violations.front());
    int n = base.graph.vertex_count();
    int m = base.graph.edge_count();
    for (VertexId v = 0; v < n; ++v)
        if (base.graph.degree(v) < 3)
            throw std::invalid_argument("inflate: minimum degree 3 required");

    Inflation out;
    RotationMultigraph& g = out.drawing.graph;
    out.map.cycle_of.resize(n);
    out.map.cycle_edge_of.resize(n);
    out.map.inter_edge_of.resize(m);

    for (VertexId v = 0; v < n; ++v)
        for (size_t i = 0; i < base.graph.rotation[v].size(); ++i)
            out.map.cycle_of[v].push_back(g.add_vertex());

    // Inter-cycle edges first so ids coincide with base edge ids.
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = base.graph.edges[e];
        int pu = base.graph.position_in_rotation(ed.u, e);
        int pv = base.graph.position_in_rotation(ed.v, e);
        g.edges.push_back({out.map.cycle_of[ed.u][pu], out.map.cycle_of[ed.v][pv]});
        out.map.inter_edge_of[e] = e;
    }
    for (VertexId v = 0; v < n; ++v) {
        int d = static_cast<int>(out.map.cycle_of[v].size());
        for (int i = 0; i < d; ++i) {
            EdgeId id = static_cast<EdgeId>(g.edges.size());
            g.edges.push_back({out.map.cycle_of[v][i], out.map.cycle_of[v][(i + 1) % d]});
            out.map.cycle_edge_of[v].push_back(id);
        }
    }
    // Cycle vertices sit clockwise around the old vertex, so clockwise at w_i
    // runs: outward edge, edge to w_{i+1}, edge to w_{i-1}.
    for (VertexId v = 0; v < n; ++v) {
        int d = static_cast<int>(out.map.cycle_of[v].size());
        for (int i = 0; i < d; ++i) {
            VertexId w = out.map.cycle_of[v][i];
            g.rotation[w] = {base.graph.rotation[v][i], out.map.cycle_edge_of[v][i],
                             out.map.cycle_edge_of[v][(i + d - 1) % d]};
        }
    }
    out.drawing.crossings = base.crossings;  // inherited: ids and flags carry over
    return out;
}

inline Inflation inflate(const RotationMultigraph& base) { return inflate(OnePlaneDrawing{base, {}}); }

// Glue a gadget into every inflated cycle of length 4..7 (triangles stay
// bare).  The gadget outer cycle winds counterclockwise while inflated
// cycles wind clockwise, so outer vertex i lands on cycle position (k-i)%k;
// that keeps the identification orientation-preserving and the gadget
// rotations and crossing flags valid as stored.
inline OnePlaneDrawing attach_gadgets(const OnePlaneDrawing& inflated, const InflationMap& map) {
    OnePlaneDrawing d = inflated;
    int base_n = static_cast<int>(map.cycle_of.size());
    for (VertexId v = 0; v < base_n; ++v) {
        int k = static_cast<int>(map.cycle_of[v].size());
        if (k == 3) continue;
        if (k > 7) throw std::invalid_argument("attach_gadgets: inflated cycle longer than 7");
        Gadget gad = gadget(k);
        const RotationMultigraph& gg = gad.drawing.graph;

        std::vector<VertexId> vmap(gg.vertex_count());
        for (int i = 0; i < k; ++i) vmap[i] = map.cycle_of[v][(k - i) % k];
        for (VertexId w = k; w < gg.vertex_count(); ++w) vmap[w] = d.graph.add_vertex();

        auto outer_pos = [&](VertexId gv) { return (k - gv) % k; };
        auto outer_cycle_edge = [&](EdgeId e) {
            const Edge& ed = gg.edges[e];
            return ed.u < k && ed.v < k &&
                   ((ed.v - ed.u + k) % k == 1 || (ed.u - ed.v + k) % k == 1);
        };
        std::vector<EdgeId> emap(gg.edge_count());
        for (EdgeId e = 0; e < gg.edge_count(); ++e) {
            const Edge& ed = gg.edges[e];
            if (outer_cycle_edge(e)) {
                int p = outer_pos(ed.u), q = outer_pos(ed.v);
                emap[e] = map.cycle_edge_of[v][(q + 1) % k == p ? q : p];
            } else {
                emap[e] = static_cast<EdgeId>(d.graph.edges.size());
                d.graph.edges.push_back({vmap[ed.u], vmap[ed.v]});
            }
        }
        for (VertexId w = k; w < gg.vertex_count(); ++w) {
            for (EdgeId e : gg.rotation[w]) d.graph.rotation[vmap[w]].push_back(emap[e]);
        }
        for (int i = 0; i < k; ++i) {
            VertexId w = vmap[i];
            EdgeId spoke = -1;
            for (EdgeId e : d.graph.rotation[w])
                if (e < static_cast<EdgeId>(map.inter_edge_of.size())) spoke = e;
            if (spoke < 0) throw std::logic_error("attach_gadgets: cycle vertex has no outward edge");
            std::vector<EdgeId> rot;
            for (EdgeId e : gg.rotation[i]) rot.push_back(emap[e]);
            // The spoke goes into the gap where the gadget had its outer
            // face: between the two outer-cycle edges, adjacent in rotation.
            int pos = -1;
            int deg = static_cast<int>(gg.rotation[i].size());
            for (int j = 0; j < deg; ++j) {
                EdgeId a = gg.rotation[i][j], b = gg.rotation[i][(j + 1) % deg];
                if (outer_cycle_edge(a) && outer_cycle_edge(b)) {
                    pos = (j + 1) % deg;
                    break;
                }
            }
            if (pos < 0) throw std::logic_error("attach_gadgets: outer edges not adjacent");
            rot.insert(rot.begin() + pos, spoke);
            d.graph.rotation[w] = rot;
        }
        for (const CrossingPair& c : gad.drawing.crossings)
            d.crossings.push_back({emap[c.first], emap[c.second], c.orientation});
    }
    return d;
}

// One even cycle or even-length path of the base graph, written as an
// alternating vertex/edge sequence v_1 e_1 v_2 e_2 ...; the edges e_{2j-1},
// e_{2j} get crossed next to v_{2j}.
struct PlanItem {
    bool closed = false;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

struct CrossingPlan {
    std::vector<PlanItem> items;
};

inline void validate_plan(const RotationMultigraph& base, const CrossingPlan& plan) {
    std::set<EdgeId> used;
    for (const PlanItem& it : plan.items) {
        if (it.edges.empty() || it.edges.size() % 2 != 0)
            throw std::invalid_argument("plan item must have positive even length");
        size_t want = it.closed ? it.edges.size() : it.edges.size() + 1;
        if (it.vertices.size() != want)
            throw std::invalid_argument("plan item vertex/edge counts disagree");
        for (size_t i = 0; i < it.edges.size(); ++i) {
            EdgeId e = it.edges[i];
            if (e < 0 || e >= base.edge_count()) throw std::invalid_argument("plan edge out of range");
            if (!used.insert(e).second) throw std::invalid_argument("plan items share an edge");
            VertexId a = it.vertices[i];
            VertexId b = it.vertices[(i + 1) % it.vertices.size()];
            const Edge& ed = base.edges[e];
            if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
                throw std::invalid_argument("plan edge does not join its listed vertices");
        }
    }
}

// Cross e_{2j-1} with e_{2j} beside each middle vertex by exchanging their
// attachment points on that vertex's inflated cycle.
inline OnePlaneDrawing crossing_operation(const OnePlaneDrawing& attached, const InflationMap& map,
                                          const CrossingPlan& plan) {
    OnePlaneDrawing d = attached;
    std::set<EdgeId> crossed;
    for (const CrossingPair& c : d.crossings) {
        crossed.insert(c.first);
        crossed.insert(c.second);
    }
    std::vector<int> cycle_index(d.graph.vertex_count(), -1);   // inflated vertex -> base vertex
    std::vector<int> cycle_pos(d.graph.vertex_count(), -1);
    for (size_t v = 0; v < map.cycle_of.size(); ++v)
        for (size_t i = 0; i < map.cycle_of[v].size(); ++i) {
            cycle_index[map.cycle_of[v][i]] = static_cast<int>(v);
            cycle_pos[map.cycle_of[v][i]] = static_cast<int>(i);
        }

    auto cross_pair = [&](VertexId mid, EdgeId base_a, EdgeId base_b) {
        EdgeId A = map.inter_edge_of.at(base_a);
        EdgeId B = map.inter_edge_of.at(base_b);
        if (crossed.count(A) || crossed.count(B))
            throw std::invalid_argument("crossing_operation: edge already crossed");
        Edge& ea = d.graph.edges[A];
        Edge& eb = d.graph.edges[B];
        auto near_end = [&](const Edge& e) -> int {  // 0 = u on mid's cycle, 1 = v
            if (cycle_index[e.u] == mid) return 0;
            if (cycle_index[e.v] == mid) return 1;
            throw std::invalid_argument("crossing_operation: edge not incident to middle vertex");
        };
        int sa = near_end(ea), sb = near_end(eb);
        VertexId wa = sa == 0 ? ea.u : ea.v;
        VertexId wb = sb == 0 ? eb.u : eb.v;
        int deg = static_cast<int>(map.cycle_of[mid].size());
        int pa = cycle_pos[wa], pb = cycle_pos[wb];
        bool forward = (pa + 1) % deg == pb;
        bool backward = (pb + 1) % deg == pa;
        if (!forward && !backward)
            throw std::invalid_argument("crossing_operation: edges not consecutive at middle vertex");
        // Exchange the cycle-side endpoints.
        (sa == 0 ? ea.u : ea.v) = wb;
        (sb == 0 ? eb.u : eb.v) = wa;
        std::replace(d.graph.rotation[wa].begin(), d.graph.rotation[wa].end(), A, B);
        std::replace(d.graph.rotation[wb].begin(), d.graph.rotation[wb].end(), B, A);
        // Orientation: with both far ends in the u slot and the second edge
        // attached one step clockwise of the first, the four directions
        // (A.u, B.u, A.v, B.v) around the new crossing run clockwise.
        int flag = ((sa == 0 ? 0 : 1) + (sb == 0 ? 0 : 1) + (forward ? 0 : 1)) % 2;
        d.crossings.push_back({A, B, flag});
        crossed.insert(A);
        crossed.insert(B);
    };

    for (const PlanItem& it : plan.items) {
        if (it.edges.size() % 2 != 0) throw std::invalid_argument("plan item of odd length");
        for (size_t j = 0; j + 1 < it.edges.size(); j += 2)
            cross_pair(it.vertices[j + 1], it.edges[j], it.edges[j + 1]);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Plan-building helpers

inline EdgeId find_edge(const RotationMultigraph& g, VertexId u, VertexId v,
                        const std::set<EdgeId>& skip = {}) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) && !skip.count(e)) return e;
    }
    throw std::invalid_argument("find_edge: no such edge");
}

// Normalize a cycle given by its edge set: start at the smallest vertex and
// leave it along whichever cycle edge comes first in its rotation.
inline PlanItem cycle_item(const RotationMultigraph& g, const std::vector<EdgeId>& cycle_edges) {
    std::map<VertexId, std::vector<EdgeId>> at;
    for (EdgeId e : cycle_edges) {
        at[g.edges[e].u].push_back(e);
        at[g.edges[e].v].push_back(e);
    }
    for (const auto& [v, inc] : at)
        if (inc.size() != 2) throw std::invalid_argument("cycle_item: not a cycle");
    VertexId v1 = at.begin()->first;
    auto [ea, eb] = std::pair{at[v1][0], at[v1][1]};
    EdgeId first = g.position_in_rotation(v1, ea) < g.position_in_rotation(v1, eb) ? ea : eb;
    PlanItem it;
    it.closed = true;
    VertexId cur = v1;
    EdgeId e = first;
    do {
        it.vertices.push_back(cur);
        it.edges.push_back(e);
        cur = g.edges[e].other(cur);
        e = at[cur][0] == e ? at[cur][1] : at[cur][0];
    } while (cur != v1);
    return it;
}

inline PlanItem path_item(VertexId x, EdgeId ex, VertexId mid, EdgeId ey, VertexId y) {
    PlanItem it;
    it.vertices = {x, mid, y};
    it.edges = {ex, ey};
    return it;
}

// Insert a parallel copy of edge e so the two copies bound a bigon face:
// the copy goes right before the original at one end, right after at the
// other.
inline EdgeId duplicate_edge(RotationMultigraph& g, EdgeId e) {
    EdgeId c = static_cast<EdgeId>(g.edges.size());
    g.edges.push_back(g.edges[e]);
    const Edge& ed = g.edges[e];
    auto& ru = g.rotation[ed.u];
    ru.insert(ru.begin() + g.position_in_rotation(ed.u, e), c);
    auto& rv = g.rotation[ed.v];
    rv.insert(rv.begin() + g.position_in_rotation(ed.v, e) + 1, c);
    return c;
}

// ---------------------------------------------------------------------------
// Generators

struct Construction {
    OnePlaneDrawing base;    // plane multigraph, no crossings
    Inflation inflation;
    OnePlaneDrawing attached;
    CrossingPlan plan;
    OnePlaneDrawing result;

    const InflationMap& map() const { return inflation.map; }
};

namespace detail {

inline Construction run_pipeline(OnePlaneDrawing base, CrossingPlan plan) {
    Construction c;
    c.base = std::move(base);
    c.inflation = inflate(c.base);
    c.attached = attach_gadgets(c.inflation.drawing, c.inflation.map);
    validate_plan(c.base.graph, plan);
    c.plan = std::move(plan);
    c.result = crossing_operation(c.attached, c.inflation.map, c.plan);
    return c;
}

}  // namespace detail

// Inflated prism over C_{2k} with every base edge crossed: the classic
// 3-connected 1-plane graph whose spanning plane subgraphs are disconnected.
inline Construction gen_theorem2(int k) {
    if (k < 2) throw std::invalid_argument("gen_theorem2: k >= 2 required");
    RotationMultigraph g = make_prism(2 * k);
    int n = 2 * k;
    CrossingPlan plan;
    std::vector<EdgeId> inner;
    for (int i = 0; i < n; ++i) inner.push_back(find_edge(g, n + i, n + (i + 1) % n));
    plan.items.push_back(cycle_item(g, inner));
    for (int i = 0; i < n; ++i) {
        EdgeId rung = find_edge(g, n + i, i);
        EdgeId outer = find_edge(g, i, (i + 1) % n);
        plan.items.push_back(path_item(n + i, rung, i, outer, (i + 1) % n));
    }
    return detail::run_pipeline({g, {}}, plan);
}

// Same idea on an arbitrary 3-edge-connected cubic plane base of order >= 8,
// crossing along a partition of the edges into adjacent pairs.
inline Construction gen_theorem2_general(const RotationMultigraph& base) {
    if (base.vertex_count() < 8) throw std::invalid_argument("gen_theorem2_general: order >= 8 required");
    for (VertexId v = 0; v < base.vertex_count(); ++v)
        if (base.degree(v) != 3) throw std::invalid_argument("gen_theorem2_general: base not cubic");
    if (!validate_drawing({base, {}}).ok())
        throw std::invalid_argument("gen_theorem2_general: base is not a plane drawing");
    if (connectivity(base).kappa_edge < 3)
        throw std::invalid_argument("gen_theorem2_general: base not 3-edge-connected");
    P2Partition p2 = p2_partition(base);
    CrossingPlan plan;
    for (const auto& p : p2.paths)
        plan.items.push_back(path_item(base.edges[p.first].other(p.middle), p.first, p.middle,
                                       p.second, base.edges[p.second].other(p.middle)));
    return detail::run_pipeline({base, {}}, plan);
}

// Double a perfect matching given by a proper 3-edge-coloring, inflate,
// attach 4-gadgets, and cross every bigon and every 2-factor cycle.
inline Construction gen_theorem3(const RotationMultigraph& cubic_base) {
    for (VertexId v = 0; v < cubic_base.vertex_count(); ++v)
        if (cubic_base.degree(v) != 3) throw std::invalid_argument("gen_theorem3: base not cubic");
    if (!validate_drawing({cubic_base, {}}).ok())
        throw std::invalid_argument("gen_theorem3: base is not a plane drawing");
    if (connectivity(cubic_base).kappa_edge < 3)
        throw std::invalid_argument("gen_theorem3: base not 3-edge-connected");
    EdgeColoring3 col = tait_coloring(cubic_base);
    if (col.status != SearchStatus::Found)
        throw std::runtime_error("gen_theorem3: no 3-edge-coloring found within budget");

    RotationMultigraph gm = cubic_base;
    CrossingPlan plan;
    for (EdgeId e = 0; e < cubic_base.edge_count(); ++e) {
        if (col.color[e] != 1) continue;
        EdgeId copy = duplicate_edge(gm, e);
        plan.items.push_back(cycle_item(gm, {e, copy}));
    }
    std::set<EdgeId> seen;
    for (EdgeId e = 0; e < cubic_base.edge_count(); ++e) {
        if (col.color[e] == 1 || seen.count(e)) continue;
        // trace the 2-factor cycle through e
        std::vector<EdgeId> cyc;
        EdgeId cur = e;
        VertexId v = cubic_base.edges[e].u;
        do {
            cyc.push_back(cur);
            seen.insert(cur);
            v = gm.edges[cur].other(v);
            EdgeId next = -1;
            for (EdgeId f : gm.rotation[v])
                if (f < cubic_base.edge_count() && f != cur && col.color[f] != 1) next = f;
            cur = next;
        } while (cur != e);
        plan.items.push_back(cycle_item(gm, cyc));
    }
    return detail::run_pipeline({gm, {}}, plan);
}

// The ring multigraph I_{2k}: a 2k-cycle with tripled edges, first copies
// bounding the inner face; 6-gadgets; bigons {e_{i2}, e_{i3}} and the cycle
// on the first copies get crossed.
inline Construction gen_theorem4(int k) {
    if (k < 2) throw std::invalid_argument("gen_theorem4: k >= 2 required");
    int n = 2 * k;
    RotationMultigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) g.edges.push_back({i, (i + 1) % n});
    auto eid = [&](int i, int c) { return 3 * ((i + n) % n) + c; };  // c = 0,1,2 for e1,e2,e3
    for (int i = 0; i < n; ++i)
        g.rotation[i] = {eid(i - 1, 2), eid(i - 1, 1), eid(i - 1, 0),
                         eid(i, 0), eid(i, 1), eid(i, 2)};
    CrossingPlan plan;
    std::vector<EdgeId> firsts;
    for (int i = 0; i < n; ++i) {
        firsts.push_back(eid(i, 0));
        plan.items.push_back(cycle_item(g, {eid(i, 1), eid(i, 2)}));
    }
    plan.items.push_back(cycle_item(g, firsts));
    return detail::run_pipeline({g, {}}, plan);
}

// 7-regular ladder: prism over C_{2k} with doubled cycle edges and tripled
// rungs, 7-gadgets, and a plan crossing every base edge once.
inline Construction gen_sevenreg(int k) {
    if (k < 2) throw std::invalid_argument("gen_sevenreg: k >= 2 required");
    int n = 2 * k;
    RotationMultigraph g;
    for (int i = 0; i < 2 * n; ++i) g.add_vertex();  // u_i = i, v_i = n + i
    // per i: nc1,nc2 (u_i u_{i+1}), vc1,vc2 (v_i v_{i+1}), r1,r2,r3 (u_i v_i)
    auto nc = [&](int i, int c) { return 7 * ((i + n) % n) + c; };
    auto vc = [&](int i, int c) { return 7 * ((i + n) % n) + 2 + c; };
    auto rr = [&](int i, int c) { return 7 * ((i + n) % n) + 4 + c; };
    for (int i = 0; i < n; ++i) {
        g.edges.push_back({i, (i + 1) % n});
        g.edges.push_back({i, (i + 1) % n});
        g.edges.push_back({n + i, n + (i + 1) % n});
        g.edges.push_back({n + i, n + (i + 1) % n});
        g.edges.push_back({i, n + i});
        g.edges.push_back({i, n + i});
        g.edges.push_back({i, n + i});
    }
    for (int i = 0; i < n; ++i) {
        g.rotation[i] = {nc(i, 0), nc(i, 1), nc(i - 1, 1), nc(i - 1, 0),
                         rr(i, 2), rr(i, 1), rr(i, 0)};
        g.rotation[n + i] = {vc(i, 0), vc(i, 1), rr(i, 0), rr(i, 1), rr(i, 2),
                             vc(i - 1, 1), vc(i - 1, 0)};
    }
    CrossingPlan plan;
    std::vector<EdgeId> second_u;
    for (int i = 0; i < n; ++i) second_u.push_back(nc(i, 1));
    plan.items.push_back(cycle_item(g, second_u));
    for (int i = 0; i < n; ++i) {
        plan.items.push_back(path_item(n + i, rr(i, 0), i, nc(i, 0), (i + 1) % n));
        plan.items.push_back(cycle_item(g, {vc(i, 0), vc(i, 1)}));
        plan.items.push_back(cycle_item(g, {rr(i, 1), rr(i, 2)}));
    }
    return detail::run_pipeline({g, {}}, plan);
}

}  // namespace oneplane
