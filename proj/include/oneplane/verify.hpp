#pragma once

// Scripted end-to-end checks over the construction families.  Each target
// rebuilds its instances from scratch, runs the structural and solver checks,
// and collects every outcome into a JSON-serializable report; a failed
// sub-check (including budget exhaustion) always fails the report.

#include <filesystem>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oneplane/builtin_graphs.hpp"
#include "oneplane/connalg.hpp"
#include "oneplane/constructions.hpp"
#include "oneplane/core.hpp"
#include "oneplane/format.hpp"
#include "oneplane/gadgets.hpp"
#include "oneplane/solver.hpp"

namespace oneplane {

inline constexpr const char* kToolVersion = "0.1.0";

struct VerificationCheck {
    std::string name;
    nlohmann::json expected;
    nlohmann::json observed;
    // "stated": the expected value is asserted by the construction's design
    // contract; "computed": established by an independent computation in this
    // codebase; "definitional": direct consequence of a definition.
    std::string provenance;
    bool pass = false;
};

struct VerificationReport {
    std::string target;
    nlohmann::json parameters;
    std::vector<VerificationCheck> checks;
    std::vector<std::string> artifacts;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(const std::string& name, nlohmann::json expected, nlohmann::json observed,
             const std::string& provenance) {
        checks.push_back({name, expected, observed, provenance, expected == observed});
    }
    /// For observations that are recorded but carry no pass/fail expectation.
    void note(const std::string& name, nlohmann::json observed, const std::string& provenance) {
        checks.push_back({name, "reported", std::move(observed), provenance, true});
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["tool_version"] = kToolVersion;
        j["target"] = target;
        j["parameters"] = parameters;
        j["overall"] = overall();
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name},
                                   {"expected", c.expected},
                                   {"observed", c.observed},
                                   {"provenance", c.provenance},
                                   {"pass", c.pass}});
        j["artifacts"] = artifacts;
        return j;
    }

    void summarize(std::ostream& out) const {
        for (const auto& c : checks)
            out << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name << ": expected "
                << c.expected.dump() << ", observed " << c.observed.dump() << "\n";
        out << target << ": " << (overall() ? "PASS" : "FAIL") << "\n";
    }
};

// ---------------------------------------------------------------------------
// Counting certificates fed to the exact search as side constraints.  Both
// builders verify the structural facts that make their bounds sound and
// return nothing when those facts do not hold.

/// Every blob (inflated cycle plus its gadget interior) of an l-connected
/// spanning subgraph keeps at least l of its inter-cycle edges: the kept
/// inter edges at a blob are an edge cut, and kappa <= kappa'.  When every
/// crossing pairs two inter edges, every inter edge is crossed, and
/// 2 * #pairs = l * #blobs, the per-blob counts are forced to exactly l
/// across one-edge-per-pair assignments, so the bound tightens to equality.
inline std::vector<SideConstraint> blob_degree_constraints(const Construction& c, int l) {
    std::set<EdgeId> inter(c.map().inter_edge_of.begin(), c.map().inter_edge_of.end());
    std::set<EdgeId> crossed;
    bool mixed = false;
    int inter_pairs = 0;
    for (const CrossingPair& p : c.result.crossings) {
        crossed.insert(p.first);
        crossed.insert(p.second);
        int hits = static_cast<int>(inter.count(p.first)) + static_cast<int>(inter.count(p.second));
        if (hits == 1) mixed = true;
        if (hits == 2) ++inter_pairs;
    }
    bool all_crossed = true;
    for (EdgeId e : inter)
        if (!crossed.count(e)) all_crossed = false;
    bool exact = !mixed && all_crossed && 2 * inter_pairs == l * c.base.graph.vertex_count();

    std::vector<SideConstraint> out;
    for (VertexId v = 0; v < c.base.graph.vertex_count(); ++v) {
        SideConstraint sc;
        for (EdgeId e : c.base.graph.rotation[v]) sc.edges.push_back(c.map().inter_edge_of[e]);
        sc.min_keep = l;
        if (exact) sc.max_keep = l;
        out.push_back(sc);
    }
    return out;
}

/// Contracting every blob of the result to a point recovers the base
/// multigraph, with base edge e landing on inter edge inter_edge_of[e].  So
/// whenever deleting two parallel classes ("bundles") of base edges
/// disconnects the base, the union of their inter images is an edge cut of
/// the result and an l-connected spanning subgraph keeps at least l of them.
inline std::vector<SideConstraint> bundle_cut_constraints(const Construction& c, int l) {
    const RotationMultigraph& b = c.base.graph;
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundle;
    for (EdgeId e = 0; e < b.edge_count(); ++e) {
        auto key = std::minmax(b.edges[e].u, b.edges[e].v);
        bundle[{key.first, key.second}].push_back(e);
    }
    std::vector<std::vector<EdgeId>> bundles;
    for (auto& [k, v] : bundle) bundles.push_back(v);

    auto disconnects = [&](const std::vector<EdgeId>& x, const std::vector<EdgeId>& y) {
        std::set<EdgeId> kept = all_edges(b);
        for (EdgeId e : x) kept.erase(e);
        for (EdgeId e : y) kept.erase(e);
        return components(b, kept).size() > 1;
    };

    std::vector<SideConstraint> out;
    for (size_t i = 0; i < bundles.size(); ++i)
        for (size_t j = i + 1; j < bundles.size(); ++j) {
            if (!disconnects(bundles[i], bundles[j])) continue;
            SideConstraint sc;
            for (EdgeId e : bundles[i]) sc.edges.push_back(c.map().inter_edge_of[e]);
            for (EdgeId e : bundles[j]) sc.edges.push_back(c.map().inter_edge_of[e]);
            sc.min_keep = l;
            out.push_back(sc);
        }
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

inline void emit_artifact(VerificationReport& rep, const std::string& dir,
                          const std::string& name, const OnePlaneDrawing& d) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::string path = (std::filesystem::path(dir) / (name + ".1pg")).string();
    write_1pg_file(path, d);
    rep.artifacts.push_back(path);
}

inline bool is_regular(const RotationMultigraph& g, int k) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

struct NamedConstruction {
    std::string name;
    Construction c;
};

inline std::vector<NamedConstruction> standard_instances() {
    std::vector<NamedConstruction> out;
    out.push_back({"thm3-prism3", gen_theorem3(make_prism3())});
    out.push_back({"thm3-nonham38", gen_theorem3(make_nonham38())});
    out.push_back({"thm4-k2", gen_theorem4(2)});
    out.push_back({"thm4-k3", gen_theorem4(3)});
    out.push_back({"seven-k2", gen_sevenreg(2)});
    return out;
}

inline int brute_min_components(const OnePlaneDrawing& d) {
    int c = static_cast<int>(d.crossings.size());
    if (c > 20) throw std::invalid_argument("brute_min_components: too many crossings");
    std::set<EdgeId> in_pair;
    for (const auto& p : d.crossings) {
        in_pair.insert(p.first);
        in_pair.insert(p.second);
    }
    int best = d.graph.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        std::set<EdgeId> kept;
        for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
            if (!in_pair.count(e)) kept.insert(e);
        for (int i = 0; i < c; ++i)
            kept.insert(mask >> i & 1 ? d.crossings[i].second : d.crossings[i].first);
        best = std::min(best, static_cast<int>(components(d.graph, kept).size()));
    }
    return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Targets

/// Every pipeline stage of every generator yields a valid 1-plane drawing.
inline VerificationReport verify_prop1(const std::string& artifact_dir = "") {
    VerificationReport rep;
    rep.target = "prop1";
    std::vector<detail::NamedConstruction> cs = detail::standard_instances();
    cs.push_back({"thm2-k2", gen_theorem2(2)});
    cs.push_back({"thm2gen-cube", gen_theorem2_general(make_cube())});
    for (const auto& [name, c] : cs) {
        rep.add(name + " base is a plane drawing", true, validate_drawing(c.base).ok(), "stated");
        rep.add(name + " inflation stays plane/1-plane", true,
                validate_drawing(c.inflation.drawing).ok(), "stated");
        rep.add(name + " gadget attachment stays 1-plane", true,
                validate_drawing(c.attached).ok(), "stated");
        rep.add(name + " crossing operation stays 1-plane", true,
                validate_drawing(c.result).ok(), "stated");
        detail::emit_artifact(rep, artifact_dir, "prop1-" + name, c.result);
    }
    return rep;
}

/// Apex closure of each shipped gadget is k-regular with connectivity k;
/// the closed 4-gadget is the complete graph on five vertices.
inline VerificationReport verify_prop2(const std::string& artifact_dir = "") {
    VerificationReport rep;
    rep.target = "prop2";
    for (int k = 4; k <= 7; ++k) {
        OnePlaneDrawing closed = apex_closure(gadget(k));
        std::string tag = "apex(gadget(" + std::to_string(k) + "))";
        rep.add(tag + " is 1-plane", true, validate_drawing(closed).ok(), "computed");
        rep.add(tag + " is " + std::to_string(k) + "-regular", true,
                detail::is_regular(closed.graph, k), "stated");
        rep.add(tag + " connectivity", k, connectivity(closed.graph).kappa, "stated");
        if (k == 4) {
            bool k5 = closed.graph.vertex_count() == 5 && closed.graph.edge_count() == 10;
            rep.add(tag + " is K5", true, k5, "stated");
        }
        detail::emit_artifact(rep, artifact_dir, "prop2-apex" + std::to_string(k), closed);
    }
    return rep;
}

/// For k-regular k-edge-connected bases under random rotation systems, the
/// inflation with gadgets attached is k-regular and k-connected as an
/// abstract graph.  Rotations are shuffled with a fixed seed per trial.
inline VerificationReport verify_prop3(int trials = 20, std::uint64_t seed = 7,
                                       const std::string& artifact_dir = "") {
    VerificationReport rep;
    rep.target = "prop3";
    rep.parameters = {{"trials", trials}, {"seed", seed}};
    const std::vector<std::pair<int, std::string>> bases = {
        {3, "cube"}, {4, "octahedron"}, {5, "icosahedron"}, {6, "k7"}, {7, "k8"}};
    for (auto& [k, name] : bases) {
        RotationMultigraph base = k == 6   ? make_complete(7)
                                  : k == 7 ? make_complete(8)
                                           : builtin_graph(name);
        int good = 0;
        for (int t = 0; t < trials; ++t) {
            std::mt19937_64 rng(seed * 1000003 + k * 1009 + t);
            RotationMultigraph g = base;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                std::shuffle(g.rotation[v].begin(), g.rotation[v].end(), rng);
            Inflation inf = inflate(g);
            OnePlaneDrawing out = attach_gadgets(inf.drawing, inf.map);
            if (detail::is_regular(out.graph, k) && connectivity(out.graph).kappa == k) ++good;
            if (t == 0)
                detail::emit_artifact(rep, artifact_dir, "prop3-" + name + "-trial0", out);
        }
        rep.add(name + " (k=" + std::to_string(k) + "): trials yielding a " + std::to_string(k) +
                    "-regular " + std::to_string(k) + "-connected graph",
                trials, good, "stated");
    }
    return rep;
}

/// Every generated drawing whose underlying graph is 4-edge-connected admits
/// a connected spanning plane subgraph; the exact search certifies it and
/// the exchange heuristic finds one on its own.
inline VerificationReport verify_thm1(Budget budget = {100'000'000, 120.0},
                                      const std::string& artifact_dir = "") {
    VerificationReport rep;
    rep.target = "thm1";
    for (const auto& [name, c] : detail::standard_instances()) {
        int ke = connectivity(c.result.graph).kappa_edge;
        rep.add(name + " edge connectivity >= 4", true, ke >= 4, "stated");
        SolveReport ex = exact_search(c.result, Objective::min_components(), budget);
        rep.add(name + " exact minimum component count",
                nlohmann::json{{"status", "optimal"}, {"components", 1}},
                nlohmann::json{{"status", to_string(ex.status)}, {"components", ex.components}},
                "stated");
        Budget hb{200'000, 10.0};
        SolveReport h = exchange_heuristic(c.result, 1, hb);
        rep.add(name + " exchange heuristic reaches a connected subgraph", 1, h.components,
                "computed");
        detail::emit_artifact(rep, artifact_dir, "thm1-" + name, c.result);
    }
    return rep;
}

/// The inflated crossed prism over C_{2k}: 3-regular, 3-connected, 6k
/// crossing edges, and no connected spanning plane subgraph.  With base given
/// the general cubic variant is verified instead.
inline VerificationReport verify_thm2(const nlohmann::json& params,
                                      const std::string& artifact_dir = "") {
    VerificationReport rep;
    rep.target = "thm2";
    rep.parameters = params;
    std::string tag;
    Construction c;
    if (params.contains("base")) {
        std::string base = params["base"];
        tag = "thm2gen-" + base;
        c = gen_theorem2_general(builtin_graph(base));
    } else {
        int k = params.value("k", 2);
        tag = "thm2-k" + std::to_string(k);
        c = gen_theorem2(k);
        rep.add(tag + " crossing edge count", 6 * k,
                2 * static_cast<int>(c.result.crossings.size()), "stated");
    }
    rep.add(tag + " result is a valid 1-plane drawing", true, validate_drawing(c.result).ok(),
            "stated");
    rep.add(tag + " result is 3-regular", true, detail::is_regular(c.result.graph, 3), "stated");
    rep.add(tag + " result connectivity", 3, connectivity(c.result.graph).kappa, "stated");

    SolveReport ex = exact_search(c.result, Objective::min_components(), Budget{10'000'000, 60.0});
    rep.add(tag + " every spanning plane subgraph is disconnected",
            nlohmann::json{{"status", "optimal"}, {"disconnected", true}},
            nlohmann::json{{"status", to_string(ex.status)}, {"disconnected", ex.components >= 2}},
            "stated");
    rep.note(tag + " exact minimum component count", ex.components, "computed");
    if (c.result.crossings.size() <= 12)
        rep.add(tag + " exhaustive assignment enumeration agrees", ex.components,
                detail::brute_min_components(c.result), "computed");
    detail::emit_artifact(rep, artifact_dir, tag, c.result);
    return rep;
}

/// Doubled-matching construction over a cubic 3-edge-connected plane base:
/// 4-regular, 4-connected; when the base has no hamiltonian cycle, no
/// 2-connected spanning plane subgraph exists, certified by two independent
/// routes (constrained exact search; 2-factor exhaustion on the base).
inline VerificationReport verify_thm3(const nlohmann::json& params,
                                      Budget budget = {100'000'000, 600.0},
                                      const std::string& artifact_dir = "") {
    VerificationReport rep;
    rep.target = "thm3";
    rep.parameters = params;
    std::string base_name = params.value("base", "prism3");
    RotationMultigraph cubic = builtin_graph(base_name);
    Construction c = gen_theorem3(cubic);
    std::string tag = "thm3-" + base_name;

    rep.add(tag + " doubled base is 4-edge-connected", 4,
            connectivity(c.base.graph).kappa_edge, "stated");
    rep.add(tag + " result is a valid 1-plane drawing", true, validate_drawing(c.result).ok(),
            "stated");
    rep.add(tag + " result is 4-regular", true, detail::is_regular(c.result.graph, 4), "stated");
    rep.add(tag + " result connectivity", 4, connectivity(c.result.graph).kappa, "stated");
    std::set<EdgeId> crossed_inter;
    for (const CrossingPair& p : c.result.crossings) {
        if (p.first < c.base.graph.edge_count()) crossed_inter.insert(p.first);
        if (p.second < c.base.graph.edge_count()) crossed_inter.insert(p.second);
    }
    rep.add(tag + " every doubled-base edge crossed once", c.base.graph.edge_count(),
            static_cast<int>(crossed_inter.size()), "definitional");

    HamiltonianResult ham = hamiltonian_cycle(cubic);
    bool base_ham = ham.status == SearchStatus::Found;
    rep.add(tag + " base hamiltonicity decided", true,
            ham.status != SearchStatus::BudgetExhausted, "computed");
    rep.note(tag + " base has hamiltonian cycle", base_ham, "computed");

    auto caps = blob_degree_constraints(c, 2);
    SolveReport ex = exact_search(c.result, Objective::exists_l_connected(2), budget, caps);
    if (!base_ham) {
        // Route 1: constrained exact search proves impossibility outright.
        rep.add(tag + " no 2-connected spanning plane subgraph (search)", "proven_impossible",
                to_string(ex.status), "stated");
        // Route 2: each 4-gadget admits at most 2 surviving inter-cycle
        // edges, so any 2-connected candidate projects to a 2-factor of the
        // base; exhausting the 2-factors shows none is a hamiltonian cycle.
        bool cap2_everywhere = true;
        for (VertexId v = 0; v < c.base.graph.vertex_count(); ++v) {
            std::vector<EdgeId> inter;
            for (EdgeId e : c.base.graph.rotation[v]) inter.push_back(c.map().inter_edge_of[e]);
            if (local_gadget_capacity(c.result, c.map().cycle_of[v], inter) != 2)
                cap2_everywhere = false;
        }
        rep.add(tag + " local capacity = 2 at every 4-gadget", true, cap2_everywhere, "stated");
        TwoFactorResult tf = two_factors(cubic);
        bool no_ham_factor = tf.exhausted;
        for (const auto& f : tf.factors)
            if (components(cubic, f).size() == 1) no_ham_factor = false;
        rep.add(tag + " no 2-factor of the base is a hamiltonian cycle", true, no_ham_factor,
                "computed");
        rep.add(tag + " base hamiltonian search agrees", true,
                ham.status == SearchStatus::ProvenNone, "computed");
    } else {
        // The impossibility argument needs a non-hamiltonian base; for a
        // hamiltonian control base the definitive answer is only reported.
        rep.add(tag + " exists-2-connected answer is definitive", true,
                ex.status != SolveStatus::BudgetExhausted, "computed");
        rep.note(tag + " 2-connected spanning plane subgraph exists",
                 ex.status == SolveStatus::Feasible, "computed");
    }
    detail::emit_artifact(rep, artifact_dir, tag, c.result);
    return rep;
}

/// Tripled ring construction: 6-regular, 6-connected, and no 3-connected
/// spanning plane subgraph; the certificate is that some pair of edge
/// bundles of the ring survives with at most 2 edges, a 2-edge cut.
inline VerificationReport verify_thm4(int k, Budget budget = {100'000'000, 600.0},
                                      const std::string& artifact_dir = "") {
    VerificationReport rep;
    rep.target = "thm4";
    rep.parameters = {{"k", k}};
    Construction c = gen_theorem4(k);
    std::string tag = "thm4-k" + std::to_string(k);

    rep.add(tag + " result is a valid 1-plane drawing", true, validate_drawing(c.result).ok(),
            "stated");
    rep.add(tag + " result is 6-regular", true, detail::is_regular(c.result.graph, 6), "stated");
    rep.add(tag + " result connectivity", 6, connectivity(c.result.graph).kappa, "stated");

    // Any two of the 2k tripled bundles of the ring base form an edge cut of
    // the result, so at most 3 crossing pairs feed each bundle pair and the
    // pigeonhole forces a <= 2-edge cut once per-blob counts are pinned to 3.
    auto caps = blob_degree_constraints(c, 3);
    auto cuts = bundle_cut_constraints(c, 3);
    rep.add(tag + " every bundle pair of the ring is an edge cut",
            2 * k * (2 * k - 1) / 2, static_cast<int>(cuts.size()), "computed");
    caps.insert(caps.end(), cuts.begin(), cuts.end());
    SolveReport ex = exact_search(c.result, Objective::exists_l_connected(3), budget, caps);
    rep.add(tag + " no 3-connected spanning plane subgraph", "proven_impossible",
            to_string(ex.status), "stated");
    detail::emit_artifact(rep, artifact_dir, tag, c.result);
    return rep;
}

/// Per-family probe of which connectivity levels a spanning plane subgraph
/// can reach.  Answers are search outcomes at desk scale; for the 7-regular
/// family they depend on the stored crossing plan, which the construction
/// chooses itself, so those rows are reported rather than asserted.
inline VerificationReport verify_table1(Budget budget = {2'000'000, 60.0},
                                        const std::string& artifact_dir = "") {
    VerificationReport rep;
    rep.target = "table1";

    auto fmt = [](const std::map<int, std::string>& p) {
        return nlohmann::json{{"l1", p.at(1)}, {"l2", p.at(2)}, {"l3", p.at(3)}};
    };

    {
        Construction c = gen_theorem2(2);
        auto probe = table1_probe(c.result, budget);
        rep.add("thm2-k2 probe", nlohmann::json{{"l1", "no"}, {"l2", "no"}, {"l3", "no"}},
                fmt(probe), "stated");
        detail::emit_artifact(rep, artifact_dir, "table1-thm2-k2", c.result);
    }
    {
        Construction c = gen_theorem3(make_prism3());
        auto probe = table1_probe(c.result, budget);
        rep.add("thm3-prism3 probe l1", "yes", probe.at(1), "computed");
        rep.note("thm3-prism3 probe l2/l3 (base is hamiltonian; reported)",
                 fmt(probe), "computed");
        detail::emit_artifact(rep, artifact_dir, "table1-thm3-prism3", c.result);
    }
    {
        Construction c = gen_theorem4(2);
        std::map<int, std::vector<SideConstraint>> certs;
        certs[3] = blob_degree_constraints(c, 3);
        auto cuts = bundle_cut_constraints(c, 3);
        certs[3].insert(certs[3].end(), cuts.begin(), cuts.end());
        auto probe = table1_probe(c.result, budget, certs);
        rep.add("thm4-k2 probe", nlohmann::json{{"l1", "yes"}, {"l2", "yes"}, {"l3", "no"}},
                fmt(probe), "stated");
        detail::emit_artifact(rep, artifact_dir, "table1-thm4-k2", c.result);
    }
    {
        Construction c = gen_sevenreg(2);
        auto probe = table1_probe(c.result, budget);
        rep.add("seven-k2 probe l1", "yes", probe.at(1), "computed");
        rep.add("seven-k2 probe l2", "yes", probe.at(2), "computed");
        rep.note("seven-k2 probe l3 (depends on the stored crossing plan)", probe.at(3),
                 "computed");
        detail::emit_artifact(rep, artifact_dir, "table1-seven-k2", c.result);
    }
    return rep;
}

/// Revalidates the shipped graphs and gadgets: planarity of the stored
/// rotations, regularity, connectivity, exhaustive non-hamiltonicity.
inline VerificationReport corpus_check() {
    VerificationReport rep;
    rep.target = "corpus";
    for (const char* name : {"k4", "prism3", "cube", "octahedron", "icosahedron"})
        rep.add(std::string(name) + " rotation has genus 0", 0,
                trace_faces(builtin_graph(name)).genus, "definitional");
    rep.add("petersen rotation has positive genus", true,
            trace_faces(make_petersen()).genus > 0, "definitional");
    for (const char* name : {"nonham38", "nonham46"}) {
        RotationMultigraph g = builtin_graph(name);
        rep.add(std::string(name) + " is cubic", true, detail::is_regular(g, 3), "computed");
        rep.add(std::string(name) + " rotation has genus 0", 0, trace_faces(g).genus, "computed");
        rep.add(std::string(name) + " connectivity", 3, connectivity(g).kappa, "computed");
        rep.add(std::string(name) + " hamiltonian cycle search", "proven_none",
                hamiltonian_cycle(g).status == SearchStatus::ProvenNone ? "proven_none" : "other",
                "computed");
    }
    for (int k = 4; k <= 7; ++k) {
        Gadget g = gadget(k);
        std::string tag = "gadget(" + std::to_string(k) + ")";
        rep.add(tag + " drawing is 1-plane", true, validate_drawing(g.drawing).ok(),
                "definitional");
        OnePlaneDrawing closed = apex_closure(g);
        rep.add(tag + " apex closure is " + std::to_string(k) + "-regular " +
                    std::to_string(k) + "-connected",
                true, detail::is_regular(closed.graph, k) && connectivity(closed.graph).kappa == k,
                "computed");
    }
    return rep;
}

/// Front door used by the CLI: dispatch on target name.
inline VerificationReport verify(const std::string& target, const nlohmann::json& params = {},
                                 const std::string& artifact_dir = "") {
    if (target == "prop1") return verify_prop1(artifact_dir);
    if (target == "prop2") return verify_prop2(artifact_dir);
    if (target == "prop3")
        return verify_prop3(params.value("trials", 20), params.value("seed", std::uint64_t{7}),
                            artifact_dir);
    if (target == "thm1") return verify_thm1(Budget{100'000'000, 120.0}, artifact_dir);
    if (target == "thm2") return verify_thm2(params, artifact_dir);
    if (target == "thm3") {
        Budget b{100'000'000, 600.0};
        if (const char* s = std::getenv("ONEPLANE_BUDGET_SECS")) b.seconds = std::atof(s);
        return verify_thm3(params, b, artifact_dir);
    }
    if (target == "thm4") {
        Budget b{100'000'000, 600.0};
        if (const char* s = std::getenv("ONEPLANE_BUDGET_SECS")) b.seconds = std::atof(s);
        return verify_thm4(params.value("k", 2), b, artifact_dir);
    }
    if (target == "table1") return verify_table1(Budget{2'000'000, 60.0}, artifact_dir);
    if (target == "corpus") return corpus_check();
    throw std::invalid_argument("unknown verification target '" + target + "'");
}

}  // namespace oneplane
