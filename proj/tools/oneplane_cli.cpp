// Command-line front end: generate the construction families, validate and
// inspect drawings, search for spanning plane subgraphs, run the scripted
// verification targets, and export DOT/SVG renderings.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oneplane/builtin_graphs.hpp"
#include "oneplane/connalg.hpp"
#include "oneplane/constructions.hpp"
#include "oneplane/core.hpp"
#include "oneplane/format.hpp"
#include "oneplane/solver.hpp"
#include "oneplane/verify.hpp"

using namespace oneplane;

namespace {

RotationMultigraph load_base(const std::string& spec) {
    try {
        return builtin_graph(spec);
    } catch (const std::invalid_argument&) {
        return read_1pg_file(spec).graph;  // fall through to treating it as a path
    }
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << body;
}

int run_gen(const std::string& family, int k, const std::string& base, const std::string& out) {
    Construction c;
    if (family == "thm2")
        c = gen_theorem2(k);
    else if (family == "thm2gen")
        c = gen_theorem2_general(load_base(base.empty() ? "cube" : base));
    else if (family == "thm3")
        c = gen_theorem3(load_base(base.empty() ? "prism3" : base));
    else if (family == "thm4")
        c = gen_theorem4(k);
    else if (family == "seven")
        c = gen_sevenreg(k);
    else
        throw CLI::ValidationError("gen", "unknown family '" + family + "'");
    write_1pg_file(out, c.result);
    std::cout << "wrote " << out << ": " << c.result.graph.vertex_count() << " vertices, "
              << c.result.graph.edge_count() << " edges, " << c.result.crossings.size()
              << " crossings\n";
    return 0;
}

int run_check(const std::string& in) {
    OnePlaneDrawing d = read_1pg_file(in);
    Verdict v = validate_drawing(d);
    if (!v.ok()) {
        for (const std::string& s : v.violations) std::cout << "invalid: " << s << "\n";
        return 1;
    }
    int dmin = d.graph.vertex_count() ? d.graph.degree(0) : 0, dmax = dmin;
    for (VertexId w = 0; w < d.graph.vertex_count(); ++w) {
        dmin = std::min(dmin, d.graph.degree(w));
        dmax = std::max(dmax, d.graph.degree(w));
    }
    int crossing_edges = 0;
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e) crossing_edges += d.is_crossing_edge(e);
    ConnectivityReport conn = connectivity(d.graph);
    std::cout << "valid 1-plane drawing\n"
              << "vertices: " << d.graph.vertex_count() << "\n"
              << "edges: " << d.graph.edge_count() << "\n"
              << "crossings: " << d.crossings.size() << " (" << crossing_edges
              << " crossing edges)\n";
    if (dmin == dmax)
        std::cout << "regular: " << dmin << "\n";
    else
        std::cout << "degrees: " << dmin << ".." << dmax << "\n";
    std::cout << "kappa: " << conn.kappa << "\n"
              << "kappa': " << conn.kappa_edge << "\n";
    return 0;
}

int run_solve(const std::string& in, const std::string& objective, int l, const std::string& mode,
              double budget_secs, std::uint64_t seed, bool deterministic) {
    OnePlaneDrawing d = read_1pg_file(in);
    Budget b = Budget::defaults();
    if (budget_secs > 0) b.seconds = budget_secs;
    Objective obj = objective == "components" ? Objective::min_components()
                                              : Objective::exists_l_connected(l);
    SolveReport r;
    if (mode == "exact")
        r = exact_search(d, obj, b);
    else
        r = exchange_heuristic(d, deterministic ? 0 : seed, b);
    std::cout << r.to_json().dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& target, int k, const std::string& base, int trials,
               std::uint64_t seed, const std::string& out, const std::string& artifacts) {
    nlohmann::json params;
    if (k > 0) params["k"] = k;
    if (!base.empty()) params["base"] = base;
    if (target == "prop3") {
        params["trials"] = trials;
        params["seed"] = seed;
    }
    VerificationReport rep = verify(target, params, artifacts);
    rep.summarize(std::cout);
    if (!out.empty()) write_output(out, rep.to_json().dump(2) + "\n");
    return rep.overall() ? 0 : 1;
}

std::string to_dot(const OnePlaneDrawing& d) {
    std::map<EdgeId, EdgeId> partner;
    for (const auto& c : d.crossings) {
        partner[c.first] = c.second;
        partner[c.second] = c.first;
    }
    std::string out = "graph oneplane {\n";
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e) {
        out += "  " + std::to_string(d.graph.edges[e].u) + " -- " +
               std::to_string(d.graph.edges[e].v) + " [id=\"e" + std::to_string(e) + "\"";
        auto it = partner.find(e);
        if (it != partner.end())
            out += ", style=dashed, comment=\"crosses e" + std::to_string(it->second) + "\"";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

// Force-free deterministic layout of the planarization: vertices sit on
// concentric rings by breadth-first distance from vertex 0, in id order.
// Crossing points render as unfilled squares, original vertices as dots.
std::string to_svg(const OnePlaneDrawing& d) {
    Planarization p = planarize(d);
    int n = p.graph.vertex_count();
    std::vector<int> layer(n, -1);
    std::queue<VertexId> q;
    int max_layer = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (layer[s] != -1) continue;
        layer[s] = 0;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            max_layer = std::max(max_layer, layer[v]);
            for (EdgeId e : p.graph.rotation[v]) {
                VertexId w = p.graph.edges[e].other(v);
                if (layer[w] == -1) {
                    layer[w] = layer[v] + 1;
                    q.push(w);
                }
            }
        }
    }
    std::vector<std::vector<VertexId>> ring(max_layer + 1);
    for (VertexId v = 0; v < n; ++v) ring[layer[v]].push_back(v);

    double spacing = 60.0;
    double size = 2.0 * spacing * (max_layer + 1) + 40.0;
    double cx = size / 2, cy = size / 2;
    std::vector<double> x(n), y(n);
    for (int ly = 0; ly <= max_layer; ++ly) {
        double r = ly == 0 && ring[0].size() == 1 ? 0.0 : spacing * (ly + 1);
        for (size_t i = 0; i < ring[ly].size(); ++i) {
            double a = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(ring[ly].size());
            x[ring[ly][i]] = cx + r * std::cos(a);
            y[ring[ly][i]] = cy - r * std::sin(a);
        }
    }
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1f", v);
        return std::string(buf);
    };
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) +
                      "\" height=\"" + num(size) + "\">\n";
    for (EdgeId e = 0; e < p.graph.edge_count(); ++e)
        out += "  <line x1=\"" + num(x[p.graph.edges[e].u]) + "\" y1=\"" +
               num(y[p.graph.edges[e].u]) + "\" x2=\"" + num(x[p.graph.edges[e].v]) +
               "\" y2=\"" + num(y[p.graph.edges[e].v]) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    int real_n = d.graph.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        if (v < real_n)
            out += "  <circle cx=\"" + num(x[v]) + "\" cy=\"" + num(y[v]) +
                   "\" r=\"4\" fill=\"black\"/>\n";
        else
            out += "  <rect x=\"" + num(x[v] - 4) + "\" y=\"" + num(y[v] - 4) +
                   "\" width=\"8\" height=\"8\" fill=\"white\" stroke=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

int run_export(const std::string& in, const std::string& format, const std::string& out) {
    OnePlaneDrawing d = read_1pg_file(in);
    if (format == "dot")
        write_output(out, to_dot(d));
    else
        write_output(out, to_svg(d));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-plane drawings: construction, search, verification"};
    app.require_subcommand(1);

    std::string family, base, in, out, objective = "components", mode = "exact";
    std::string format = "dot", target, artifacts;
    int k = 2, l = 2, trials = 20;
    double budget_secs = 0;
    std::uint64_t seed = 1;
    bool deterministic = false;

    CLI::App* gen = app.add_subcommand("gen", "generate a construction family instance");
    gen->add_option("family", family, "thm2|thm2gen|thm3|thm4|seven")->required();
    gen->add_option("--k", k, "family size parameter");
    gen->add_option("--base", base, "builtin graph name or .1pg path");
    gen->add_option("-o,--output", out, "output .1pg path")->required();

    CLI::App* check = app.add_subcommand("check", "validate a drawing and report invariants");
    check->add_option("input", in, "input .1pg path")->required();

    CLI::App* solve = app.add_subcommand("solve", "search for spanning plane subgraphs");
    solve->add_option("input", in, "input .1pg path")->required();
    solve->add_option("--objective", objective, "components|l-connected")
        ->check(CLI::IsMember({"components", "l-connected"}));
    solve->add_option("--l", l, "connectivity level for l-connected");
    solve->add_option("--mode", mode, "exact|heuristic")
        ->check(CLI::IsMember({"exact", "heuristic"}));
    solve->add_option("--budget", budget_secs, "time budget in seconds");
    solve->add_option("--seed", seed, "heuristic seed");
    solve->add_flag("--deterministic", deterministic, "fixed seed, single-task search");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a scripted verification target");
    verify_cmd->add_option("target", target, "prop1|prop2|prop3|thm1|thm2|thm3|thm4|table1")
        ->required();
    verify_cmd->add_option("--k", k, "family size parameter")->default_val(0);
    verify_cmd->add_option("--base", base, "base graph name");
    verify_cmd->add_option("--trials", trials, "trial count for prop3");
    verify_cmd->add_option("--seed", seed, "seed for prop3");
    verify_cmd->add_option("-o,--output", out, "write the JSON report here");
    verify_cmd->add_option("--artifacts", artifacts, "directory for emitted drawings");

    CLI::App* exp = app.add_subcommand("export", "render a drawing");
    exp->add_option("input", in, "input .1pg path")->required();
    exp->add_option("--format", format, "dot|svg")->check(CLI::IsMember({"dot", "svg"}));
    exp->add_option("-o,--output", out, "output path ('-' for stdout)");

    CLI::App* corpus = app.add_subcommand("corpus", "revalidate the shipped graphs and gadgets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(family, k, base, out);
        if (check->parsed()) return run_check(in);
        if (solve->parsed())
            return run_solve(in, objective, l, mode, budget_secs, seed, deterministic);
        if (verify_cmd->parsed())
            return run_verify(target, k, base, trials, seed, out, artifacts);
        if (exp->parsed()) return run_export(in, format, out);
        if (corpus->parsed()) {
            VerificationReport rep = corpus_check();
            rep.summarize(std::cout);
            return rep.overall() ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
