#include <catch2/catch_amalgamated.hpp>

#include "oneplane/connalg.hpp"
#include "oneplane/gadgets.hpp"

using namespace oneplane;

namespace {

bool outer_cycle_is_a_face(const Gadget& g) {
    Planarization p = planarize(g.drawing);
    FaceCensus c = trace_faces(p.graph);
    std::vector<VertexId> want(g.outer_cycle);
    for (const auto& face : c.faces) {
        if (face.size() != want.size()) continue;
        std::vector<VertexId> seq;
        for (const Dart& d : face)
            seq.push_back(d.side == 0 ? p.graph.edges[d.edge].u : p.graph.edges[d.edge].v);
        for (int dir = 0; dir < 2; ++dir) {
            for (size_t shift = 0; shift < seq.size(); ++shift) {
                bool match = true;
                for (size_t i = 0; i < seq.size() && match; ++i) {
                    size_t j = dir == 0 ? (shift + i) % seq.size()
                                        : (shift + seq.size() - i) % seq.size();
                    if (seq[j] != want[i]) match = false;
                }
                if (match) return true;
            }
        }
    }
    return false;
}

}  // namespace

TEST_CASE("gadget sizes and crossing counts") {
    struct Row {
        int k, n, m, crossings;
    };
    for (Row r : {Row{4, 4, 6, 1}, Row{5, 11, 25, 0}, Row{6, 13, 36, 6}, Row{7, 43, 147, 28}}) {
        Gadget g = gadget(r.k);
        INFO("k=" << r.k);
        CHECK(g.drawing.graph.vertex_count() == r.n);
        CHECK(g.drawing.graph.edge_count() == r.m);
        CHECK(static_cast<int>(g.drawing.crossings.size()) == r.crossings);
    }
    CHECK_THROWS_AS(gadget(3), std::invalid_argument);
    CHECK_THROWS_AS(gadget(8), std::invalid_argument);
}

TEST_CASE("gadget drawings are valid sphere drawings with the outer cycle as a face") {
    for (int k = 4; k <= 7; ++k) {
        Gadget g = gadget(k);
        INFO("k=" << k);
        CHECK(validate_drawing(g.drawing).ok());
        CHECK(outer_cycle_is_a_face(g));
    }
}

TEST_CASE("apex closure of a k-gadget is k-regular and k-connected") {
    for (int k = 4; k <= 7; ++k) {
        OnePlaneDrawing closed = apex_closure(gadget(k));
        INFO("k=" << k);
        CHECK(validate_drawing(closed).ok());
        for (VertexId v = 0; v < closed.graph.vertex_count(); ++v)
            CHECK(closed.graph.degree(v) == k);
        ConnectivityReport r = connectivity(closed.graph);
        CHECK(r.kappa == k);
    }
}

TEST_CASE("apex closure of the 4-gadget is K5") {
    OnePlaneDrawing closed = apex_closure(gadget(4));
    REQUIRE(closed.graph.vertex_count() == 5);
    REQUIRE(closed.graph.edge_count() == 10);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : closed.graph.edges)
        seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    CHECK(seen.size() == 10);
}

TEST_CASE("gadget crossings pair nonadjacent edges exactly once") {
    for (int k = 4; k <= 7; ++k) {
        Gadget g = gadget(k);
        std::set<EdgeId> used;
        for (const CrossingPair& c : g.drawing.crossings) {
            CHECK(used.insert(c.first).second);
            CHECK(used.insert(c.second).second);
            CHECK_FALSE(g.drawing.graph.edges[c.first].adjacent(g.drawing.graph.edges[c.second]));
        }
        // Outer-cycle edges never cross: the cycle must stay intact on attachment.
        for (int i = 0; i < k; ++i) {
            for (EdgeId e = 0; e < g.drawing.graph.edge_count(); ++e) {
                const Edge& ed = g.drawing.graph.edges[e];
                VertexId a = g.outer_cycle[i], b = g.outer_cycle[(i + 1) % k];
                if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))
                    CHECK_FALSE(g.drawing.is_crossing_edge(e));
            }
        }
    }
}
