#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "oneplane/core.hpp"

namespace oneplane {

struct Point {
    double x = 0, y = 0;
};

/// Rebuilds every rotation as the clockwise angular order of a straight-line
/// drawing given by `pos`. Only meaningful when that drawing is planar.
inline void assign_rotation_from_points(RotationMultigraph& g, const std::vector<Point>& pos) {
    if (pos.size() != static_cast<size_t>(g.vertex_count()))
        throw std::invalid_argument("assign_rotation_from_points: size mismatch");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto& rot = g.rotation[v];
        std::stable_sort(rot.begin(), rot.end(), [&](EdgeId a, EdgeId b) {
            VertexId wa = g.edges[a].other(v), wb = g.edges[b].other(v);
            double ta = std::atan2(pos[wa].y - pos[v].y, pos[wa].x - pos[v].x);
            double tb = std::atan2(pos[wb].y - pos[v].y, pos[wb].x - pos[v].x);
            return ta > tb;  // decreasing angle = clockwise
        });
    }
}

/// K4 embedded with vertex 0 inside the triangle 1-2-3.
inline RotationMultigraph make_k4() {
    RotationMultigraph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    std::vector<Point> pos{{0, 0}, {0, 2}, {-2, -1}, {2, -1}};
    assign_rotation_from_points(g, pos);
    return g;
}

/// Triangular prism with nested-triangle plane embedding.
inline RotationMultigraph make_prism3() {
    RotationMultigraph g;
    for (int i = 0; i < 6; ++i) g.add_vertex();
    // outer triangle 0-1-2, inner triangle 3-4-5, rungs i -- i+3
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    std::vector<Point> pos(6);
    for (int i = 0; i < 3; ++i) {
        double a = M_PI / 2 + 2 * M_PI * i / 3;
        pos[i] = {3 * std::cos(a), 3 * std::sin(a)};
        pos[i + 3] = {std::cos(a), std::sin(a)};
    }
    assign_rotation_from_points(g, pos);
    return g;
}

/// Cube graph with nested-square plane embedding.
inline RotationMultigraph make_cube() {
    RotationMultigraph g;
    for (int i = 0; i < 8; ++i) g.add_vertex();
    for (int i = 0; i < 4; ++i) {
        g.add_edge(i, (i + 1) % 4);
        g.add_edge(i + 4, (i + 1) % 4 + 4);
        g.add_edge(i, i + 4);
    }
    std::vector<Point> pos(8);
    for (int i = 0; i < 4; ++i) {
        double a = M_PI / 4 + 2 * M_PI * i / 4;
        pos[i] = {3 * std::cos(a), 3 * std::sin(a)};
        pos[i + 4] = {std::cos(a), std::sin(a)};
    }
    assign_rotation_from_points(g, pos);
    return g;
}

/// Petersen graph; the rotation is the arbitrary insertion order
/// (the graph has no genus-0 rotation at all).
inline RotationMultigraph make_petersen() {
    RotationMultigraph g;
    for (int i = 0; i < 10; ++i) g.add_vertex();
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

inline RotationMultigraph make_complete(int n) {
    RotationMultigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

/// Prism of the even cycle C_{2k}: outer cycle u_1..u_2k = vertices 0..2k-1,
/// inner cycle v_1..v_2k = vertices 2k..4k-1, rungs u_i v_i.
inline RotationMultigraph make_prism(int two_k) {
    if (two_k < 3) throw std::invalid_argument("make_prism: need cycle length >= 3");
    RotationMultigraph g;
    for (int i = 0; i < 2 * two_k; ++i) g.add_vertex();
    for (int i = 0; i < two_k; ++i) {
        g.add_edge(i, (i + 1) % two_k);
        g.add_edge(two_k + i, two_k + (i + 1) % two_k);
        g.add_edge(i, two_k + i);
    }
    std::vector<Point> pos(2 * two_k);
    for (int i = 0; i < two_k; ++i) {
        double a = M_PI / 2 + 2 * M_PI * i / two_k;
        pos[i] = {3 * std::cos(a), 3 * std::sin(a)};
        pos[i + two_k] = {std::cos(a), std::sin(a)};
    }
    assign_rotation_from_points(g, pos);
    return g;
}

/// Octahedron as the 3-antiprism: outer triangle 0-1-2, inner triangle 3-4-5.
inline RotationMultigraph make_octahedron() {
    RotationMultigraph g;
    for (int i = 0; i < 6; ++i) g.add_vertex();
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(3 + i, i);
        g.add_edge(3 + i, (i + 1) % 3);
    }
    std::vector<Point> pos(6);
    for (int i = 0; i < 3; ++i) {
        double a = M_PI / 2 + 2 * M_PI * i / 3;
        pos[i] = {3 * std::cos(a), 3 * std::sin(a)};
        double b = a + M_PI / 3;
        pos[i + 3] = {std::cos(b), std::sin(b)};
    }
    assign_rotation_from_points(g, pos);
    return g;
}

/// Icosahedron: bottom vertex 0, lower pentagon 1..5, upper pentagon 6..10,
/// top vertex 11 embedded in the outer face.
inline RotationMultigraph make_icosahedron() {
    RotationMultigraph g;
    for (int i = 0; i < 12; ++i) g.add_vertex();
    for (int i = 0; i < 5; ++i) {
        int lo = 1 + i, lo_next = 1 + (i + 1) % 5;
        int up = 6 + i, up_next = 6 + (i + 1) % 5;
        g.add_edge(0, lo);
        g.add_edge(lo, lo_next);
        g.add_edge(up, up_next);
        g.add_edge(lo, up);       // at angle -36 degrees from lo
        g.add_edge(lo, up_next);  // at +36 degrees
    }
    std::vector<Point> pos(12);
    pos[0] = {0, 0};
    for (int i = 0; i < 5; ++i) {
        double a = M_PI / 2 + 2 * M_PI * i / 5;
        pos[1 + i] = {std::cos(a), std::sin(a)};
        double b = a - M_PI / 5;
        pos[6 + i] = {2 * std::cos(b), 2 * std::sin(b)};
    }
    assign_rotation_from_points(g, pos);
    // Vertex 11 sits in the outer face: wire it like an apex over the upper
    // pentagon, spokes in the gap between the two pentagon edges.
    for (int i = 0; i < 5; ++i) {
        int up = 6 + i;
        EdgeId e = static_cast<EdgeId>(g.edges.size());
        g.edges.push_back({11, up});
        int succ = 6 + (i + 1) % 5, pred = 6 + (i + 4) % 5;
        auto& rot = g.rotation[up];
        for (size_t j = 0; j < rot.size(); ++j) {
            VertexId a = g.edges[rot[j]].other(up);
            VertexId b = g.edges[rot[(j + 1) % rot.size()]].other(up);
            if ((a == succ || a == pred) && (b == succ || b == pred) && a != b) {
                rot.insert(rot.begin() + j + 1, e);
                break;
            }
        }
        g.rotation[11].push_back(e);
    }
    return g;
}

/// nonham38: cubic, plane rotation, 3-connected, no hamiltonian cycle.
inline RotationMultigraph make_nonham38() {
    RotationMultigraph g;
    for (int i = 0; i < 38; ++i) g.add_vertex();
    g.edges = {{12, 0}, {0, 31}, {27, 1}, {1, 2}, {2, 18}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}, {19, 3}, {0, 4}, {35, 5}, {1, 6}, {2, 7}, {19, 8}, {14, 16}, {15, 20}, {8, 22}, {8, 10}, {9, 10}, {11, 9}, {13, 21}, {13, 11}, {17, 12}, {13, 14}, {15, 18}, {16, 9}, {15, 16}, {17, 14}, {17, 18}, {20, 10}, {19, 20}, {21, 12}, {22, 11}, {21, 22}, {23, 24}, {29, 37}, {23, 32}, {24, 25}, {33, 31}, {30, 27}, {28, 25}, {26, 27}, {28, 26}, {29, 23}, {28, 29}, {30, 25}, {30, 31}, {36, 35}, {33, 24}, {34, 33}, {34, 32}, {34, 35}, {36, 32}, {37, 26}, {36, 37}};
    g.rotation = {
        {0, 11, 1},
        {2, 13, 3},
        {4, 3, 14},
        {10, 9, 5},
        {11, 5, 6},
        {6, 7, 12},
        {7, 8, 13},
        {9, 14, 8},
        {19, 15, 18},
        {21, 27, 20},
        {20, 31, 19},
        {34, 23, 21},
        {24, 33, 0},
        {22, 25, 23},
        {16, 25, 29},
        {17, 28, 26},
        {16, 28, 27},
        {24, 30, 29},
        {26, 30, 4},
        {15, 32, 10},
        {17, 32, 31},
        {22, 35, 33},
        {18, 35, 34},
        {36, 38, 45},
        {50, 36, 39},
        {39, 42, 47},
        {55, 43, 44},
        {41, 43, 2},
        {42, 46, 44},
        {37, 46, 45},
        {41, 48, 47},
        {40, 48, 1},
        {38, 52, 54},
        {40, 51, 50},
        {51, 53, 52},
        {49, 53, 12},
        {49, 56, 54},
        {37, 56, 55},
    };
    return g;
}

/// nonham46: cubic, plane rotation, 3-connected, no hamiltonian cycle.
inline RotationMultigraph make_nonham46() {
    RotationMultigraph g;
    for (int i = 0; i < 46; ++i) g.add_vertex();
    g.edges = {{0, 1}, {0, 24}, {0, 45}, {5, 22}, {12, 35}, {29, 41}, {6, 3}, {15, 2}, {1, 3}, {2, 10}, {4, 12}, {5, 2}, {4, 7}, {6, 4}, {7, 11}, {6, 8}, {8, 7}, {14, 3}, {8, 9}, {10, 9}, {13, 5}, {10, 11}, {13, 11}, {12, 13}, {14, 9}, {15, 1}, {14, 15}, {16, 17}, {16, 28}, {20, 17}, {21, 23}, {19, 18}, {19, 17}, {19, 25}, {30, 16}, {21, 27}, {23, 18}, {24, 21}, {26, 24}, {25, 20}, {26, 23}, {25, 26}, {27, 22}, {28, 18}, {27, 28}, {29, 20}, {30, 22}, {29, 30}, {31, 33}, {31, 42}, {32, 33}, {37, 34}, {33, 34}, {45, 36}, {35, 32}, {40, 31}, {37, 35}, {39, 37}, {38, 34}, {39, 36}, {38, 39}, {43, 36}, {41, 32}, {40, 41}, {42, 38}, {44, 40}, {42, 43}, {44, 43}, {44, 45}};
    g.rotation = {
        {0, 2, 1},
        {8, 0, 25},
        {7, 11, 9},
        {17, 6, 8},
        {13, 12, 10},
        {3, 20, 11},
        {6, 15, 13},
        {12, 16, 14},
        {15, 18, 16},
        {19, 18, 24},
        {9, 21, 19},
        {14, 21, 22},
        {10, 23, 4},
        {20, 23, 22},
        {17, 26, 24},
        {7, 26, 25},
        {34, 28, 27},
        {29, 27, 32},
        {31, 43, 36},
        {31, 33, 32},
        {29, 39, 45},
        {30, 35, 37},
        {3, 42, 46},
        {30, 40, 36},
        {1, 38, 37},
        {33, 41, 39},
        {38, 41, 40},
        {35, 44, 42},
        {28, 44, 43},
        {5, 47, 45},
        {34, 47, 46},
        {55, 49, 48},
        {54, 62, 50},
        {50, 48, 52},
        {52, 58, 51},
        {56, 4, 54},
        {53, 59, 61},
        {51, 57, 56},
        {64, 60, 58},
        {57, 60, 59},
        {55, 63, 65},
        {5, 63, 62},
        {49, 66, 64},
        {61, 66, 67},
        {65, 68, 67},
        {53, 68, 2},
    };
    return g;
}

inline RotationMultigraph builtin_graph(const std::string& name) {
    if (name == "k4") return make_k4();
    if (name == "prism3") return make_prism3();
    if (name == "cube") return make_cube();
    if (name == "petersen") return make_petersen();
    if (name == "octahedron") return make_octahedron();
    if (name == "icosahedron") return make_icosahedron();
    if (name == "nonham38") return make_nonham38();
    if (name == "nonham46") return make_nonham46();
    throw std::invalid_argument("unknown builtin graph '" + name + "'");
}

}  // namespace oneplane
