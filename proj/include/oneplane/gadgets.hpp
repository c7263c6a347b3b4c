#pragma once

// Built-in gadget drawings: small 1-plane graphs with a distinguished outer
// cycle of length k, used to fill inflated k-cycles.  Closing a k-gadget with
// an apex vertex joined to the outer cycle yields a k-regular k-connected
// graph; tests enforce that contract.

#include <stdexcept>

#include "oneplane/core.hpp"
#include "oneplane/gadget_data.hpp"

namespace oneplane {

struct Gadget {
    OnePlaneDrawing drawing;
    std::vector<VertexId> outer_cycle;  // in cyclic order; the outer face

    int k() const { return static_cast<int>(outer_cycle.size()); }
};

namespace detail {

inline Gadget gadget_from_data(const GadgetData& d) {
    Gadget g;
    for (int v = 0; v < d.n; ++v) g.drawing.graph.add_vertex();
    for (const auto& e : d.edges) g.drawing.graph.edges.push_back({e[0], e[1]});
    for (int v = 0; v < d.n; ++v) g.drawing.graph.rotation[v] = d.rotation[v];
    for (const auto& c : d.crossings) g.drawing.crossings.push_back({c[0], c[1], c[2]});
    for (int i = 0; i < d.k; ++i) g.outer_cycle.push_back(i);
    return g;
}

}  // namespace detail

inline Gadget gadget(int k) {
    switch (k) {
        case 4: return detail::gadget_from_data(detail::gadget_data_4());
        case 5: return detail::gadget_from_data(detail::gadget_data_5());
        case 6: return detail::gadget_from_data(detail::gadget_data_6());
        case 7: return detail::gadget_from_data(detail::gadget_data_7());
        default: throw std::invalid_argument("no gadget for k=" + std::to_string(k));
    }
}

// Add an apex vertex adjacent to every outer-cycle vertex.  The apex sits in
// the outer face, so the drawing stays 1-plane; rotations at outer vertices
// get the apex edge between the two outer-cycle edges.
inline OnePlaneDrawing apex_closure(const Gadget& g) {
    OnePlaneDrawing d = g.drawing;
    int k = g.k();
    VertexId apex = d.graph.add_vertex();
    std::vector<EdgeId> spokes;
    for (int i = 0; i < k; ++i) {
        VertexId v = g.outer_cycle[i];
        EdgeId e = static_cast<EdgeId>(d.graph.edges.size());
        d.graph.edges.push_back({apex, v});
        spokes.push_back(e);
        // Insert the spoke between the edge to the cyclic successor and the
        // edge to the cyclic predecessor (the gap holding the outer face).
        VertexId succ = g.outer_cycle[(i + 1) % k];
        VertexId pred = g.outer_cycle[(i + k - 1) % k];
        auto& rot = d.graph.rotation[v];
        auto is_outer = [&](EdgeId id) {
            VertexId w = d.graph.edges[id].other(v);
            return w == succ || w == pred;
        };
        int pos = -1;
        for (size_t j = 0; j < rot.size(); ++j) {
            EdgeId a = rot[j], b = rot[(j + 1) % rot.size()];
            if (is_outer(a) && is_outer(b) &&
                d.graph.edges[a].other(v) != d.graph.edges[b].other(v)) {
                pos = static_cast<int>(j + 1);
                break;
            }
        }
        if (pos < 0) throw std::logic_error("outer-cycle edges not adjacent in rotation");
        rot.insert(rot.begin() + pos, e);
    }
    // Apex rotation: seen from the apex inside the outer face, the cycle
    // winds the opposite way to how its own rotations list it.
    for (int i = 0; i < k; ++i) d.graph.rotation[apex].push_back(spokes[i]);
    return d;
}

}  // namespace oneplane
