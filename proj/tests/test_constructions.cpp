#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oneplane/builtin_graphs.hpp"
#include "oneplane/connalg.hpp"
#include "oneplane/constructions.hpp"

using namespace oneplane;

namespace {

OnePlaneDrawing k4_square_with_crossing() {
    RotationMultigraph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    std::vector<Point> pos{{-1, 1}, {1, 1}, {1, -1}, {-1, -1}};
    assign_rotation_from_points(g, pos);
    return {g, {{4, 5, 0}}};
}

int count_regular(const RotationMultigraph& g) {
    int d = g.degree(0);
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return -1;
    return d;
}

// Contract every inflated cycle back to a point and compare with the base.
void check_contraction(const Construction& c) {
    const RotationMultigraph& base = c.base.graph;
    const InflationMap& map = c.inflation.map;
    std::vector<VertexId> owner(c.inflation.drawing.graph.vertex_count(), -1);
    for (size_t v = 0; v < map.cycle_of.size(); ++v)
        for (VertexId w : map.cycle_of[v]) owner[w] = static_cast<VertexId>(v);
    REQUIRE(map.cycle_of.size() == static_cast<size_t>(base.vertex_count()));
    for (VertexId v = 0; v < base.vertex_count(); ++v)
        CHECK(map.cycle_of[v].size() == static_cast<size_t>(base.degree(v)));
    // Inter-cycle edges form a perfect matching mirroring base adjacency.
    std::set<VertexId> matched;
    for (EdgeId e = 0; e < base.edge_count(); ++e) {
        EdgeId f = map.inter_edge_of[e];
        const Edge& fe = c.inflation.drawing.graph.edges[f];
        CHECK(matched.insert(fe.u).second);
        CHECK(matched.insert(fe.v).second);
        std::set<VertexId> got{owner[fe.u], owner[fe.v]};
        std::set<VertexId> want{base.edges[e].u, base.edges[e].v};
        CHECK(got == want);
    }
    // Cycle edges stay within one cycle.
    for (size_t v = 0; v < map.cycle_of.size(); ++v)
        for (EdgeId e : map.cycle_edge_of[v]) {
            const Edge& ed = c.inflation.drawing.graph.edges[e];
            CHECK(owner[ed.u] == static_cast<VertexId>(v));
            CHECK(owner[ed.v] == static_cast<VertexId>(v));
        }
}

void check_all_stages(const Construction& c) {
    CHECK(validate_drawing(c.base).ok());
    CHECK(validate_drawing(c.inflation.drawing).ok());
    CHECK(validate_drawing(c.attached).ok());
    CHECK(validate_drawing(c.result).ok());
}

}  // namespace

TEST_CASE("inflation of K4") {
    Inflation inf = inflate(make_k4());
    CHECK(inf.drawing.graph.vertex_count() == 12);
    CHECK(inf.drawing.graph.edge_count() == 18);
    CHECK(count_regular(inf.drawing.graph) == 3);
    CHECK(validate_drawing(inf.drawing).ok());
}

TEST_CASE("inflation of the prism over C4") {
    Inflation inf = inflate(make_prism(4));
    CHECK(inf.drawing.graph.vertex_count() == 24);
    CHECK(inf.drawing.graph.edge_count() == 36);
    CHECK(validate_drawing(inf.drawing).ok());
}

TEST_CASE("inflation rejects low degree") {
    RotationMultigraph c4;
    for (int i = 0; i < 4; ++i) c4.add_vertex();
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    CHECK_THROWS_AS(inflate(c4), std::invalid_argument);
}

TEST_CASE("inflation keeps inherited crossings 1-plane") {
    OnePlaneDrawing base = k4_square_with_crossing();
    Inflation inf = inflate(base);
    REQUIRE(inf.drawing.crossings.size() == 1);
    CHECK(validate_drawing(inf.drawing).ok());
}

TEST_CASE("attaching gadgets to a cubic inflation changes nothing") {
    Inflation inf = inflate(make_cube());
    OnePlaneDrawing out = attach_gadgets(inf.drawing, inf.map);
    CHECK(out.graph.edges.size() == inf.drawing.graph.edges.size());
    CHECK(out.graph.rotation == inf.drawing.graph.rotation);
    CHECK(out.crossings.size() == inf.drawing.crossings.size());
}

TEST_CASE("attaching 4-gadgets to the inflated octahedron") {
    Inflation inf = inflate(make_octahedron());
    REQUIRE(validate_drawing(inf.drawing).ok());
    OnePlaneDrawing out = attach_gadgets(inf.drawing, inf.map);
    CHECK(out.graph.vertex_count() == 24);
    CHECK(out.graph.edge_count() == 48);
    CHECK(count_regular(out.graph) == 4);
    CHECK(out.crossings.size() == 6);
    CHECK(validate_drawing(out).ok());
}

TEST_CASE("attaching 5-gadgets to the inflated icosahedron") {
    RotationMultigraph ico = make_icosahedron();
    REQUIRE(count_regular(ico) == 5);
    REQUIRE(validate_drawing({ico, {}}).ok());
    Inflation inf = inflate(ico);
    OnePlaneDrawing out = attach_gadgets(inf.drawing, inf.map);
    CHECK(out.graph.vertex_count() == 60 + 12 * 6);
    CHECK(out.graph.edge_count() == 90 + 12 * 20);
    CHECK(count_regular(out.graph) == 5);
    CHECK(out.crossings.empty());
    CHECK(validate_drawing(out).ok());
}

TEST_CASE("theorem-2 family") {
    Construction c2 = gen_theorem2(2);
    check_all_stages(c2);
    check_contraction(c2);
    CHECK(c2.result.graph.vertex_count() == 24);
    CHECK(c2.result.graph.edge_count() == 36);
    CHECK(count_regular(c2.result.graph) == 3);
    CHECK(c2.result.crossings.size() == 6);
    int crossing_edges = 0;
    for (EdgeId e = 0; e < c2.result.graph.edge_count(); ++e)
        if (c2.result.is_crossing_edge(e)) crossing_edges++;
    CHECK(crossing_edges == 12);
    CHECK(connectivity(c2.result.graph).kappa == 3);

    Construction c3 = gen_theorem2(3);
    CHECK(c3.result.graph.vertex_count() == 36);
    CHECK(c3.result.graph.edge_count() == 54);
    CHECK(c3.result.crossings.size() == 9);
    CHECK(validate_drawing(c3.result).ok());
    CHECK_THROWS_AS(gen_theorem2(1), std::invalid_argument);
}

TEST_CASE("theorem-2 family on a general cubic base") {
    Construction c = gen_theorem2_general(make_cube());
    check_all_stages(c);
    CHECK(c.result.graph.vertex_count() == 24);
    CHECK(c.result.crossings.size() == 6);  // all 12 base edges crossed
    CHECK_THROWS_AS(gen_theorem2_general(make_prism3()), std::invalid_argument);   // too small
    CHECK_THROWS_AS(gen_theorem2_general(make_petersen()), std::invalid_argument);  // not plane
}

TEST_CASE("theorem-3 family from the triangular prism") {
    Construction c = gen_theorem3(make_prism3());
    check_all_stages(c);
    check_contraction(c);
    CHECK(count_regular(c.base.graph) == 4);
    CHECK(connectivity(c.base.graph).kappa_edge == 4);
    CHECK(c.result.graph.vertex_count() == 24);
    CHECK(c.result.graph.edge_count() == 48);
    CHECK(count_regular(c.result.graph) == 4);
    CHECK(c.result.crossings.size() == 12);
    CHECK(connectivity(c.result.graph).kappa == 4);
}

TEST_CASE("theorem-4 family") {
    Construction c = gen_theorem4(3);
    check_all_stages(c);
    check_contraction(c);
    CHECK(count_regular(c.base.graph) == 6);
    CHECK(connectivity(c.base.graph).kappa_edge == 6);
    CHECK(c.result.graph.vertex_count() == 78);
    CHECK(c.result.graph.edge_count() == 234);
    CHECK(count_regular(c.result.graph) == 6);
    CHECK(c.result.crossings.size() == 45);
    CHECK(connectivity(c.result.graph).kappa == 6);

    Construction c2 = gen_theorem4(2);
    CHECK(c2.result.graph.vertex_count() == 52);
    CHECK(c2.result.graph.edge_count() == 156);
    CHECK(validate_drawing(c2.result).ok());
    CHECK_THROWS_AS(gen_theorem4(1), std::invalid_argument);
}

TEST_CASE("seven-regular family") {
    Construction c = gen_sevenreg(2);
    check_all_stages(c);
    check_contraction(c);
    CHECK(c.base.graph.vertex_count() == 8);
    CHECK(c.base.graph.edge_count() == 28);
    CHECK(count_regular(c.base.graph) == 7);
    CHECK(connectivity(c.base.graph).kappa_edge == 7);
    CHECK(count_regular(c.result.graph) == 7);
    CHECK(c.result.graph.vertex_count() == 2 * 28 + 8 * 36);
    CHECK_THROWS_AS(gen_sevenreg(1), std::invalid_argument);
}

TEST_CASE("crossing operation preserves degrees and edge count") {
    Construction c = gen_theorem2(2);
    REQUIRE(c.attached.graph.edge_count() == c.result.graph.edge_count());
    for (VertexId v = 0; v < c.attached.graph.vertex_count(); ++v)
        CHECK(c.attached.graph.degree(v) == c.result.graph.degree(v));
    // Only endpoints and crossings changed; the edge multiset per cycle-pair
    // is preserved, so component structure is too.
    CHECK(is_connected(c.result.graph));
}

TEST_CASE("crossing operation rejects bad plans") {
    // Pair not consecutive in the rotation of the middle vertex: at an
    // octahedron vertex pick two edges separated by another in rotation.
    RotationMultigraph octa = make_octahedron();
    Inflation inf = inflate(octa);
    VertexId mid = 0;
    EdgeId a = octa.rotation[mid][0], b = octa.rotation[mid][2];
    CrossingPlan bad;
    bad.items.push_back(path_item(octa.edges[a].other(mid), a, mid, b, octa.edges[b].other(mid)));
    OnePlaneDrawing attached = attach_gadgets(inf.drawing, inf.map);
    CHECK_THROWS_AS(crossing_operation(attached, inf.map, bad), std::invalid_argument);

    // Already-crossed edge: inherited crossing on the base drawing.
    OnePlaneDrawing kdraw = k4_square_with_crossing();
    Inflation kinf = inflate(kdraw);
    CrossingPlan reuse;
    reuse.items.push_back(path_item(1, 0, 0, 4, 2));  // edges 0=(0,1), 4=(0,2) meet at 0
    CHECK_THROWS_AS(crossing_operation(kinf.drawing, kinf.map, reuse), std::invalid_argument);

    CrossingPlan shared;
    EdgeId e0 = octa.rotation[mid][0], e1 = octa.rotation[mid][1];
    shared.items.push_back(path_item(octa.edges[e0].other(mid), e0, mid, e1, octa.edges[e1].other(mid)));
    shared.items.push_back(path_item(octa.edges[e1].other(mid), e1, mid, e0, octa.edges[e0].other(mid)));
    CHECK_THROWS_AS(validate_plan(octa, shared), std::invalid_argument);
}

TEST_CASE("inflation plus gadgets is k-regular and k-connected for random rotations") {
    std::mt19937 rng(20240817);
    for (int k = 3; k <= 7; ++k) {
        RotationMultigraph base = make_complete(k + 1);
        int trials = k <= 5 ? 20 : 20;
        for (int t = 0; t < trials; ++t) {
            RotationMultigraph g = base;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                std::shuffle(g.rotation[v].begin(), g.rotation[v].end(), rng);
            Inflation inf = inflate(g);
            OnePlaneDrawing out = attach_gadgets(inf.drawing, inf.map);
            REQUIRE(count_regular(out.graph) == k);
            ConnectivityReport r = connectivity(out.graph);
            INFO("k=" << k << " trial=" << t);
            REQUIRE(r.kappa == k);
        }
    }
}
