#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oneplane {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u = -1;
    VertexId v = -1;

    VertexId other(VertexId w) const {
        if (w == u) return v;
        if (w == v) return u;
        throw std::logic_error("Edge::other: vertex not an endpoint");
    }
    bool incident(VertexId w) const { return w == u || w == v; }
    bool adjacent(const Edge& e) const {
        return incident(e.u) || incident(e.v);
    }
};

/// Multigraph with a cyclic order of incident edge ends at each vertex.
/// Vertex and edge ids are dense indices; loops are forbidden, parallel
/// edges are allowed. The rotation of a vertex lists incident edge ids
/// clockwise.
struct RotationMultigraph {
    std::vector<Edge> edges;
    std::vector<std::vector<EdgeId>> rotation;  // one cyclic sequence per vertex

    int vertex_count() const { return static_cast<int>(rotation.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    VertexId add_vertex() {
        rotation.emplace_back();
        return vertex_count() - 1;
    }

    // Appends the new edge id at the end of both endpoint rotations.
    EdgeId add_edge(VertexId u, VertexId v) {
        if (u == v) throw std::invalid_argument("add_edge: loops are forbidden");
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            throw std::invalid_argument("add_edge: unknown endpoint");
        edges.push_back({u, v});
        EdgeId id = edge_count() - 1;
        rotation[u].push_back(id);
        rotation[v].push_back(id);
        return id;
    }

    int degree(VertexId v) const { return static_cast<int>(rotation[v].size()); }

    int position_in_rotation(VertexId v, EdgeId e) const {
        const auto& rot = rotation[v];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i)
            if (rot[i] == e) return i;
        return -1;
    }
};

struct Verdict {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline Verdict validate(const RotationMultigraph& g) {
    Verdict out;
    int n = g.vertex_count();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.u < 0 || ed.v < 0 || ed.u >= n || ed.v >= n)
            out.violations.push_back("edge " + std::to_string(e) + " has a dangling endpoint");
        else if (ed.u == ed.v)
            out.violations.push_back("edge " + std::to_string(e) + " is a loop");
    }
    if (!out.ok()) return out;
    // Each edge id must appear exactly once in the rotation of each endpoint.
    std::vector<int> seen_u(g.edge_count(), 0), seen_v(g.edge_count(), 0);
    for (VertexId v = 0; v < n; ++v) {
        std::map<EdgeId, int> count;
        for (EdgeId e : g.rotation[v]) {
            if (e < 0 || e >= g.edge_count()) {
                out.violations.push_back("rotation of " + std::to_string(v) +
                                         " references unknown edge " + std::to_string(e));
                continue;
            }
            if (!g.edges[e].incident(v))
                out.violations.push_back("rotation of " + std::to_string(v) +
                                         " lists non-incident edge " + std::to_string(e));
            count[e]++;
        }
        for (auto& [e, c] : count)
            if (c > 1)
                out.violations.push_back("edge " + std::to_string(e) +
                                         " repeated in rotation of " + std::to_string(v));
        for (EdgeId e : g.rotation[v]) {
            if (e < 0 || e >= g.edge_count()) continue;
            if (g.edges[e].u == v) seen_u[e]++;
            if (g.edges[e].v == v) seen_v[e]++;
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (seen_u[e] != 1 || seen_v[e] != 1)
            out.violations.push_back("rotation incomplete at an endpoint of edge " +
                                     std::to_string(e));
    }
    return out;
}

inline bool is_connected(const RotationMultigraph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> vis(n, 0);
    std::vector<VertexId> stack{0};
    vis[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.rotation[v]) {
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

/// Directed edge end: traversal of `edge` starting at endpoint `side`
/// (0 = the declared u end, 1 = the declared v end).
struct Dart {
    EdgeId edge;
    int side;
    bool operator==(const Dart&) const = default;
};

struct FaceCensus {
    std::vector<std::vector<Dart>> faces;  // closed walks of darts
    int genus = 0;

    int face_count() const { return static_cast<int>(faces.size()); }
};

/// Decodes the embedding given by the rotation system: follow an edge to
/// its far end, then advance one step clockwise in that vertex's rotation.
inline FaceCensus trace_faces(const RotationMultigraph& g) {
    Verdict v = validate(g);
    if (!v.ok()) throw std::invalid_argument("trace_faces: invalid graph: " + v.violations.front());
    if (!is_connected(g)) throw std::invalid_argument("face tracing requires connected graph");

    FaceCensus census;
    int m = g.edge_count();
    std::vector<char> used(2 * m, 0);  // dart (e, s) -> 2e + s
    for (int start = 0; start < 2 * m; ++start) {
        if (used[start]) continue;
        std::vector<Dart> walk;
        int cur = start;
        do {
            used[cur] = 1;
            Dart d{cur / 2, cur % 2};
            walk.push_back(d);
            VertexId w = d.side == 0 ? g.edges[d.edge].v : g.edges[d.edge].u;
            int pos = g.position_in_rotation(w, d.edge);
            EdgeId next = g.rotation[w][(pos + 1) % g.degree(w)];
            int nside = g.edges[next].u == w ? 0 : 1;
            cur = 2 * next + nside;
        } while (cur != start);
        census.faces.push_back(std::move(walk));
    }
    int euler = g.vertex_count() - g.edge_count() + census.face_count();
    if ((2 - euler) % 2 != 0) throw std::logic_error("trace_faces: odd Euler defect");
    census.genus = (2 - euler) / 2;
    return census;
}

struct CrossingPair {
    EdgeId first;
    EdgeId second;
    int orientation = 0;  // fixes the cyclic order of the four ends at the crossing
};

struct OnePlaneDrawing {
    RotationMultigraph graph;
    std::vector<CrossingPair> crossings;

    bool is_crossing_edge(EdgeId e) const {
        for (const auto& c : crossings)
            if (c.first == e || c.second == e) return true;
        return false;
    }
};

/// Result of replacing every crossing point by a degree-4 dummy vertex.
struct Planarization {
    RotationMultigraph graph;
    std::vector<std::vector<EdgeId>> segments_of;  // original edge -> 1 or 2 segment ids
    std::vector<VertexId> dummy_of;                // crossing index -> dummy vertex
    std::vector<EdgeId> origin_of;                 // segment id -> original edge id
};

inline Planarization planarize(const OnePlaneDrawing& d) {
    const RotationMultigraph& g = d.graph;
    std::vector<int> pair_of(g.edge_count(), -1);
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i) {
        const CrossingPair& c = d.crossings[i];
        if (c.first == c.second)
            throw std::invalid_argument("crossing pairs an edge with itself");
        for (EdgeId e : {c.first, c.second}) {
            if (e < 0 || e >= g.edge_count())
                throw std::invalid_argument("crossing references unknown edge");
            if (pair_of[e] != -1)
                throw std::invalid_argument("edge " + std::to_string(e) +
                                            " occurs in two crossing pairs");
            pair_of[e] = i;
        }
        if (g.edges[c.first].adjacent(g.edges[c.second]))
            throw std::invalid_argument("adjacent edges cannot cross");
    }

    Planarization out;
    out.graph.rotation.resize(g.vertex_count());
    out.segments_of.resize(g.edge_count());
    // Dummy vertices come after the original ones.
    for (size_t i = 0; i < d.crossings.size(); ++i)
        out.dummy_of.push_back(g.vertex_count() + static_cast<int>(i));
    out.graph.rotation.resize(g.vertex_count() + d.crossings.size());

    auto new_edge = [&](VertexId a, VertexId b, EdgeId origin) {
        out.graph.edges.push_back({a, b});
        out.origin_of.push_back(origin);
        return out.graph.edge_count() - 1;
    };

    // Segment ids, crossed edges split at their dummy vertex.
    std::vector<EdgeId> seg_at_u(g.edge_count()), seg_at_v(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (pair_of[e] == -1) {
            EdgeId s = new_edge(g.edges[e].u, g.edges[e].v, e);
            out.segments_of[e] = {s};
            seg_at_u[e] = seg_at_v[e] = s;
        } else {
            VertexId c = out.dummy_of[pair_of[e]];
            EdgeId s1 = new_edge(g.edges[e].u, c, e);
            EdgeId s2 = new_edge(c, g.edges[e].v, e);
            out.segments_of[e] = {s1, s2};
            seg_at_u[e] = s1;
            seg_at_v[e] = s2;
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (EdgeId e : g.rotation[v])
            out.graph.rotation[v].push_back(g.edges[e].u == v ? seg_at_u[e] : seg_at_v[e]);
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const CrossingPair& c = d.crossings[i];
        EdgeId a1 = seg_at_u[c.first], a2 = seg_at_v[c.first];
        EdgeId b1 = seg_at_u[c.second], b2 = seg_at_v[c.second];
        auto& rot = out.graph.rotation[out.dummy_of[i]];
        if (c.orientation == 0)
            rot = {a1, b1, a2, b2};
        else
            rot = {a1, b2, a2, b1};
    }
    return out;
}

inline Verdict validate_drawing(const OnePlaneDrawing& d) {
    Verdict out = validate(d.graph);
    if (!out.ok()) return out;
    Planarization p;
    try {
        p = planarize(d);
    } catch (const std::exception& ex) {
        out.violations.push_back(ex.what());
        return out;
    }
    Verdict pv = validate(p.graph);
    if (!pv.ok()) {
        out.violations.push_back("planarization invalid: " + pv.violations.front());
        return out;
    }
    if (!is_connected(p.graph)) {
        out.violations.push_back("planarization is disconnected");
        return out;
    }
    FaceCensus census = trace_faces(p.graph);
    if (census.genus != 0)
        out.violations.push_back("not a sphere drawing (genus " +
                                 std::to_string(census.genus) + ")");
    return out;
}

/// True iff no crossing pair survives entirely inside `kept`.
inline bool is_plane_subset(const OnePlaneDrawing& d, const std::set<EdgeId>& kept) {
    for (EdgeId e : kept)
        if (e < 0 || e >= d.graph.edge_count())
            throw std::invalid_argument("is_plane_subset: unknown edge id");
    for (const auto& c : d.crossings)
        if (kept.count(c.first) && kept.count(c.second)) return false;
    return true;
}

}  // namespace oneplane
