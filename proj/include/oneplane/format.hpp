#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "oneplane/core.hpp"

namespace oneplane {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Line-oriented drawing format:
///   onePlane 1
///   vertex <id>
///   edge <eid> <u> <v>
///   rot <vid> <eid> ...
///   cross <eidA> <eidB> <flag>
/// '#' starts a comment. Ids must be dense and declared before use.
inline OnePlaneDrawing read_1pg(std::istream& in) {
    OnePlaneDrawing d;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    std::vector<char> rot_seen;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw)) continue;

        if (!header_seen) {
            int version = 0;
            if (kw != "onePlane" || !(ss >> version) || version != 1)
                throw ParseError(lineno, "expected header 'onePlane 1'");
            header_seen = true;
            continue;
        }
        if (kw == "vertex") {
            int id;
            if (!(ss >> id)) throw ParseError(lineno, "vertex: missing id");
            if (id != d.graph.vertex_count())
                throw ParseError(lineno, "vertex ids must be dense from 0; got " +
                                             std::to_string(id));
            d.graph.rotation.emplace_back();
            rot_seen.push_back(0);
        } else if (kw == "edge") {
            int id, u, v;
            if (!(ss >> id >> u >> v)) throw ParseError(lineno, "edge: expected <eid> <u> <v>");
            if (id != d.graph.edge_count())
                throw ParseError(lineno, "edge ids must be dense from 0; got " +
                                             std::to_string(id));
            if (u < 0 || u >= d.graph.vertex_count() || v < 0 || v >= d.graph.vertex_count())
                throw ParseError(lineno, "edge: undeclared endpoint");
            if (u == v) throw ParseError(lineno, "edge: loops are forbidden");
            d.graph.edges.push_back({u, v});
        } else if (kw == "rot") {
            int vid;
            if (!(ss >> vid)) throw ParseError(lineno, "rot: missing vertex id");
            if (vid < 0 || vid >= d.graph.vertex_count())
                throw ParseError(lineno, "rot: undeclared vertex");
            if (rot_seen[vid]) throw ParseError(lineno, "rot: duplicate rotation for vertex " +
                                                            std::to_string(vid));
            rot_seen[vid] = 1;
            int eid;
            while (ss >> eid) {
                if (eid < 0 || eid >= d.graph.edge_count())
                    throw ParseError(lineno, "rot: undeclared edge " + std::to_string(eid));
                d.graph.rotation[vid].push_back(eid);
            }
            if (!ss.eof()) throw ParseError(lineno, "rot: malformed edge id");
        } else if (kw == "cross") {
            int a, b, flag;
            if (!(ss >> a >> b >> flag)) throw ParseError(lineno, "cross: expected <a> <b> <flag>");
            if (a < 0 || a >= d.graph.edge_count() || b < 0 || b >= d.graph.edge_count())
                throw ParseError(lineno, "cross: undeclared edge");
            if (flag != 0 && flag != 1) throw ParseError(lineno, "cross: flag must be 0 or 1");
            d.crossings.push_back({a, b, flag});
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
        std::string trailing;
        if (kw != "rot" && (ss >> trailing))
            throw ParseError(lineno, "trailing tokens after '" + kw + "'");
    }
    if (!header_seen) throw ParseError(lineno, "missing header 'onePlane 1'");
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        if (!rot_seen[v] && !d.graph.rotation[v].empty())
            throw ParseError(lineno, "internal rotation bookkeeping error");
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v) {
        int deg = 0;
        for (const Edge& e : d.graph.edges) deg += (e.u == v) + (e.v == v);
        if (deg > 0 && !rot_seen[v])
            throw ParseError(lineno, "missing rotation for vertex " + std::to_string(v));
    }
    Verdict verdict = validate(d.graph);
    if (!verdict.ok()) throw ParseError(lineno, verdict.violations.front());
    return d;
}

inline OnePlaneDrawing read_1pg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_1pg(in);
}

inline void write_1pg(std::ostream& out, const OnePlaneDrawing& d) {
    out << "onePlane 1\n";
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v) out << "vertex " << v << "\n";
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
        out << "edge " << e << " " << d.graph.edges[e].u << " " << d.graph.edges[e].v << "\n";
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v) {
        if (d.graph.rotation[v].empty()) continue;
        out << "rot " << v;
        for (EdgeId e : d.graph.rotation[v]) out << " " << e;
        out << "\n";
    }
    for (const auto& c : d.crossings)
        out << "cross " << c.first << " " << c.second << " " << c.orientation << "\n";
}

inline void write_1pg_file(const std::string& path, const OnePlaneDrawing& d) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_1pg(out, d);
}

}  // namespace oneplane
