// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria.  Each criterion rebuilds its instances from scratch and
// re-derives every expected value through an independent route (exhaustive
// enumeration, counting certificates, or a second algorithm).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oneplane/builtin_graphs.hpp"
#include "oneplane/connalg.hpp"
#include "oneplane/constructions.hpp"
#include "oneplane/core.hpp"
#include "oneplane/solver.hpp"
#include "oneplane/verify.hpp"

using namespace oneplane;

namespace {

bool all_pass(const VerificationReport& rep, std::string* why = nullptr) {
    for (const auto& c : rep.checks)
        if (!c.pass && why) *why += " [" + c.name + "]";
    return rep.overall();
}

// --- random-drawing oracle machinery (criterion 9) -------------------------

OnePlaneDrawing random_circle_drawing(std::mt19937& rng) {
    int n = 6 + static_cast<int>(rng() % 7);
    OnePlaneDrawing d;
    for (int i = 0; i < n; ++i) d.graph.add_vertex();
    for (int i = 0; i < n; ++i) d.graph.add_edge(i, (i + 1) % n);

    auto interleave = [](std::pair<int, int> x, std::pair<int, int> y) {
        auto [a, b] = x;
        auto [c, d2] = y;
        return (a < c && c < b && b < d2) || (c < a && a < d2 && d2 < b);
    };
    std::vector<std::pair<int, int>> chords;
    std::vector<int> crossed;
    std::vector<std::pair<int, int>> pairs;
    int crossings = 0;
    for (int attempt = 0; attempt < 18; ++attempt) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a > b) std::swap(a, b);
        if (b - a < 2 || (a == 0 && b == n - 1)) continue;
        if (std::find(chords.begin(), chords.end(), std::make_pair(a, b)) != chords.end())
            continue;
        std::vector<int> hits;
        for (size_t i = 0; i < chords.size(); ++i)
            if (interleave({a, b}, chords[i])) hits.push_back(static_cast<int>(i));
        if (hits.size() > 1) continue;
        if (hits.size() == 1 && crossed[hits[0]] > 0) continue;
        if (hits.size() == 1 && crossings >= 12) continue;
        chords.push_back({a, b});
        crossed.push_back(static_cast<int>(hits.size()));
        if (!hits.empty()) {
            ++crossed[hits[0]];
            pairs.push_back({hits[0], static_cast<int>(chords.size()) - 1});
            ++crossings;
        }
    }
    for (auto [a, b] : chords) d.graph.add_edge(a, b);
    std::vector<Point> pos(n);
    for (int i = 0; i < n; ++i) {
        double ang = -2 * M_PI * i / n;
        pos[i] = {std::cos(ang), std::sin(ang)};
    }
    assign_rotation_from_points(d.graph, pos);
    for (auto [i, j] : pairs) {
        if (chords[i].first > chords[j].first) std::swap(i, j);
        d.crossings.push_back({n + i, n + j, 0});
    }
    return d;
}

struct BruteResult {
    int min_comps = INT_MAX;
    int max_kappa_conn = -1;
    std::array<bool, 4> exists_l{};
};

int comps_of(const RotationMultigraph& g, const std::set<EdgeId>& kept) {
    auto label = component_labels(g, kept);
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

int kappa_of(const RotationMultigraph& g, const std::set<EdgeId>& kept) {
    RotationMultigraph sub;
    for (VertexId v = 0; v < g.vertex_count(); ++v) sub.add_vertex();
    for (EdgeId e : kept) sub.add_edge(g.edges[e].u, g.edges[e].v);
    return connectivity(sub).kappa;
}

void tally(const RotationMultigraph& g, const std::set<EdgeId>& kept, BruteResult& out) {
    int comps = comps_of(g, kept);
    out.min_comps = std::min(out.min_comps, comps);
    if (comps == 1) {
        int kappa = kappa_of(g, kept);
        out.max_kappa_conn = std::max(out.max_kappa_conn, kappa);
        for (int l = 1; l <= 3; ++l)
            if (kappa >= l) out.exists_l[l] = true;
    }
}

BruteResult brute_assignments(const OnePlaneDrawing& d) {
    BruteResult out;
    int c = static_cast<int>(d.crossings.size());
    std::set<EdgeId> base;
    for (EdgeId e = 0; e < d.graph.edge_count(); ++e) base.insert(e);
    for (const auto& p : d.crossings) {
        base.erase(p.first);
        base.erase(p.second);
    }
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        std::set<EdgeId> kept = base;
        for (int i = 0; i < c; ++i)
            kept.insert(mask >> i & 1 ? d.crossings[i].second : d.crossings[i].first);
        tally(d.graph, kept, out);
    }
    return out;
}

BruteResult brute_subsets(const OnePlaneDrawing& d) {
    BruteResult out;
    int m = d.graph.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::set<EdgeId> kept;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) kept.insert(e);
        if (!is_plane_subset(d, kept)) continue;
        tally(d.graph, kept, out);
    }
    return out;
}

bool solver_matches(const OnePlaneDrawing& d, const BruteResult& want) {
    Budget b{5'000'000, 30.0};
    SolveReport mc = exact_search(d, Objective::min_components(), b);
    if (mc.status != SolveStatus::Optimal || mc.components != want.min_comps) return false;
    if (!is_plane_subset(d, mc.kept) || comps_of(d.graph, mc.kept) != mc.components) return false;

    SolveReport mk = exact_search(d, Objective::max_kappa_given_connected(), b);
    if (want.max_kappa_conn < 0) {
        if (mk.status != SolveStatus::ProvenImpossible) return false;
    } else {
        if (mk.status != SolveStatus::Optimal || mk.kappa != want.max_kappa_conn) return false;
        if (!is_plane_subset(d, mk.kept) || kappa_of(d.graph, mk.kept) != mk.kappa) return false;
    }
    for (int l = 1; l <= 3; ++l) {
        SolveReport ex = exact_search(d, Objective::exists_l_connected(l), b);
        if (want.exists_l[l]) {
            if (ex.status != SolveStatus::Feasible) return false;
            if (!is_plane_subset(d, ex.kept) || kappa_of(d.graph, ex.kept) < l) return false;
        } else if (ex.status != SolveStatus::ProvenImpossible) {
            return false;
        }
    }
    return true;
}

// --- criteria --------------------------------------------------------------

bool crit1_gadget_closures(std::string& why) { return all_pass(verify_prop2(), &why); }

bool crit2_random_rotations(std::string& why) { return all_pass(verify_prop3(20, 7), &why); }

bool crit3_crossed_prisms(std::string& why) {
    return all_pass(verify_thm2({{"k", 2}}), &why) && all_pass(verify_thm2({{"k", 3}}), &why);
}

bool crit4_general_cubic(std::string& why) {
    return all_pass(verify_thm2({{"base", "cube"}}), &why);
}

bool crit5_doubled_matching_control(std::string& why) {
    VerificationReport rep = verify_thm3({{"base", "prism3"}}, Budget{10'000'000, 30.0});
    bool definitive = false;
    for (const auto& c : rep.checks)
        if (c.name.find("definitive") != std::string::npos && c.pass) definitive = true;
    return all_pass(rep, &why) && definitive;
}

bool crit6_doubled_matching_nonham(std::string& why) {
    return all_pass(verify_thm3({{"base", "nonham38"}}, Budget{100'000'000, 600.0}), &why);
}

bool crit7_tripled_ring(std::string& why) {
    return all_pass(verify_thm4(2, Budget{100'000'000, 60.0}), &why) &&
           all_pass(verify_thm4(3, Budget{100'000'000, 600.0}), &why);
}

bool crit8_connected_subgraph(std::string& why) {
    if (!all_pass(verify_thm1(Budget{100'000'000, 120.0}), &why)) return false;
    // Heuristic quality target: the exchange heuristic alone connects at
    // least 90% of a fixed 50-seed suite over the 4-edge-connected families.
    Construction even = gen_theorem4(2);
    Construction odd = gen_theorem3(make_nonham38());
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SolveReport r =
            exchange_heuristic((seed % 2 ? odd : even).result, seed, Budget{200'000, 5.0});
        if (r.components == 1) ++ok;
    }
    if (ok < 45) {
        why += " [exchange suite " + std::to_string(ok) + "/50]";
        return false;
    }
    return true;
}

bool crit9_solver_oracle(std::string& why) {
    std::mt19937 rng(987654321);
    int done = 0, tiny = 0;
    while (done < 100) {
        OnePlaneDrawing d = random_circle_drawing(rng);
        if (d.crossings.empty()) continue;
        if (!validate_drawing(d).ok()) {
            why += " [generator produced invalid drawing]";
            return false;
        }
        BruteResult want = brute_assignments(d);
        if (!solver_matches(d, want)) {
            why += " [mismatch at instance " + std::to_string(done) + "]";
            return false;
        }
        // On small instances also enumerate every plane subset, confirming
        // that one-per-pair assignments lose nothing.
        if (d.graph.edge_count() <= 14 && tiny < 10) {
            ++tiny;
            BruteResult all = brute_subsets(d);
            if (all.min_comps != want.min_comps || all.max_kappa_conn != want.max_kappa_conn ||
                all.exists_l != want.exists_l) {
                why += " [assignment restriction lost an optimum]";
                return false;
            }
        }
        ++done;
    }
    if (tiny == 0) why += " [no tiny instance seen]";
    return tiny > 0;
}

bool crit10_core_properties(std::string& why) {
    bool ok = true;
    // Euler relation on every shipped plane rotation.
    for (const char* name : {"k4", "prism3", "cube", "octahedron", "icosahedron"}) {
        RotationMultigraph g = builtin_graph(name);
        FaceCensus f = trace_faces(g);
        if (f.genus != 0 ||
            g.vertex_count() - g.edge_count() + f.face_count() != 2 - 2 * f.genus) {
            why += std::string(" [euler ") + name + "]";
            ok = false;
        }
    }
    // Planarized generator outputs are connected sphere drawings and their
    // segments map back onto the original edges.
    for (int k : {2, 3}) {
        Construction c = gen_theorem2(k);
        Planarization p = planarize(c.result);
        FaceCensus f = trace_faces(p.graph);
        bool segs = true;
        for (EdgeId e = 0; e < c.result.graph.edge_count(); ++e)
            for (EdgeId s : p.segments_of[e])
                if (p.origin_of[s] != e) segs = false;
        if (f.genus != 0 || !segs) {
            why += " [planarize k=" + std::to_string(k) + "]";
            ok = false;
        }
    }
    // Plane subsets are closed downward.
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        OnePlaneDrawing d = random_circle_drawing(rng);
        std::set<EdgeId> kept;
        for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
            if (rng() % 2) kept.insert(e);
        for (const auto& p : d.crossings)
            if (kept.count(p.first) && kept.count(p.second)) kept.erase(p.second);
        if (!is_plane_subset(d, kept)) {
            why += " [plane subset construction]";
            ok = false;
            break;
        }
        while (!kept.empty()) {
            kept.erase(std::next(kept.begin(), rng() % kept.size()));
            if (!is_plane_subset(d, kept)) {
                why += " [downward closure]";
                ok = false;
                break;
            }
        }
    }
    // Adjacent-pair edge partitions on random connected graphs.
    for (int t = 0; t < 200; ++t) {
        RotationMultigraph g;
        int n = 4 + static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i) g.add_vertex();
        for (int i = 1; i < n; ++i) g.add_edge(static_cast<int>(rng() % i), i);
        int extra = static_cast<int>(rng() % 6);
        for (int i = 0; i < extra; ++i) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (a != b) g.add_edge(a, b);
        }
        P2Partition p2 = p2_partition(g);
        std::set<EdgeId> used;
        bool good = true;
        for (const auto& pr : p2.paths) {
            if (!used.insert(pr.first).second || !used.insert(pr.second).second) good = false;
            for (EdgeId e : {pr.first, pr.second})
                if (g.edges[e].u != pr.middle && g.edges[e].v != pr.middle) good = false;
        }
        if (p2.leftover) used.insert(*p2.leftover);
        if (static_cast<int>(used.size()) != g.edge_count()) good = false;
        if (p2.leftover.has_value() != (g.edge_count() % 2 == 1)) good = false;
        if (!good) {
            why += " [p2 partition trial " + std::to_string(t) + "]";
            ok = false;
            break;
        }
    }
    // Proper 3-edge-colorings on every shipped cubic base.
    for (const char* name : {"prism3", "cube", "nonham38", "nonham46"}) {
        RotationMultigraph g = builtin_graph(name);
        EdgeColoring3 col = tait_coloring(g);
        if (col.status != SearchStatus::Found || !coloring_is_proper(g, col)) {
            why += std::string(" [tait ") + name + "]";
            ok = false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"gadget apex closures are k-regular k-connected", crit1_gadget_closures},
        {"random-rotation inflations are k-regular k-connected", crit2_random_rotations},
        {"crossed prisms: 3-regular, kappa 3, 6k crossing edges, min components 2",
         crit3_crossed_prisms},
        {"general cubic variant on the cube: no connected spanning plane subgraph",
         crit4_general_cubic},
        {"doubled-matching control (prism3): definitive 2-connected answer",
         crit5_doubled_matching_control},
        {"doubled matching on nonham38: no 2-connected spanning plane subgraph, dual "
         "certificates",
         crit6_doubled_matching_nonham},
        {"tripled rings: 6-regular, kappa 6, no 3-connected spanning plane subgraph",
         crit7_tripled_ring},
        {"4-edge-connected outputs admit connected spanning plane subgraphs; heuristic >= 90%",
         crit8_connected_subgraph},
        {"exact search matches exhaustive enumeration on 100 random drawings",
         crit9_solver_oracle},
        {"core property suite: euler, planarize, downward closure, pairings, colorings",
         crit10_core_properties},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = criteria[i].run(why);
        } catch (const std::exception& e) {
            why = std::string(" [exception: ") + e.what() + "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2zu: %s (%.1fs) %s%s\n", i + 1, ok ? "PASS" : "FAIL", secs,
                    criteria[i].name, why.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed;
}
