#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "isk4/chordless.hpp"
#include "isk4/cutsets.hpp"
#include "isk4/degree2.hpp"
#include "isk4/enumerate.hpp"
#include "isk4/graph.hpp"
#include "isk4/graph6.hpp"
#include "isk4/holes.hpp"
#include "isk4/isomorphism.hpp"
#include "isk4/recognition.hpp"
#include "isk4/wheels.hpp"

namespace isk4 {

struct Violation {
    std::string graph6;     // certificate, replayable in isolation
    std::string predicate;  // which claim failed
    std::string details;    // serialized witness
    bool operator<(const Violation& o) const {
        return std::tie(graph6, predicate, details) < std::tie(o.graph6, o.predicate, o.details);
    }
    bool operator==(const Violation& o) const {
        return graph6 == o.graph6 && predicate == o.predicate && details == o.details;
    }
};

struct SuiteReport {
    std::string suite_id;
    long long graphs_scanned = 0;
    std::vector<Violation> violations;
    double wall_seconds = 0;  // informational; not part of report identity
};

struct SuiteDef {
    std::string id;
    std::string description;
    int default_n = 8;
    std::vector<Filter> filters;
    std::function<void(const Graph&, std::vector<Violation>&)> check;
};

inline std::string vertex_list(const std::vector<int>& vs) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
    os << ']';
    return os.str();
}

namespace detail {

inline void add_violation(std::vector<Violation>& out, const Graph& g,
                          const std::string& predicate, const std::string& details) {
    out.push_back({write_graph6(g), predicate, details});
}

// Fewest-spoke proper wheels (the Lemma-style minimizers), empty when the
// graph has no proper wheel.
inline std::vector<Wheel> fewest_spoke_proper_wheels(const Graph& g) {
    std::vector<Wheel> proper;
    for (const Wheel& w : enumerate_wheels(g))
        if (is_proper_wheel(g, w)) proper.push_back(w);
    if (proper.empty()) return proper;
    int best = kMaxVertices;
    for (const Wheel& w : proper) best = std::min(best, w.spoke_count());
    std::vector<Wheel> out;
    for (const Wheel& w : proper)
        if (w.spoke_count() == best) out.push_back(w);
    return out;
}

// Chordless paths outside a hole whose endpoints each see 1 or 2 hole
// vertices and whose interior sees none (the Lemma ca2 hypothesis shape).
inline void for_each_ca2_candidate(const Graph& g, const Hole& h,
                                   const std::function<void(const std::vector<int>&)>& visit) {
    Mask hm = h.mask();
    std::vector<int> path;
    std::function<void(Mask)> extend = [&](Mask pm) {
        int last = path.back();
        for (int v : Bits{g.neighbors(last) & ~hm & ~pm}) {
            if ((g.neighbors(v) & pm) != bit(last)) continue;
            int cnt = std::popcount(g.neighbors(v) & hm);
            if (cnt > 2) continue;
            path.push_back(v);
            if (cnt >= 1 && path.front() < v) visit(path);
            if (cnt == 0) extend(pm | bit(v));
            path.pop_back();
        }
    };
    for (int p1 : Bits{g.vertices() & ~hm}) {
        int cnt = std::popcount(g.neighbors(p1) & hm);
        if (cnt < 1 || cnt > 2) continue;
        path.assign(1, p1);
        extend(bit(p1));
    }
}

inline const std::vector<SuiteDef>& suite_registry() {
    static const std::vector<SuiteDef> defs = [] {
        std::vector<SuiteDef> r;
        auto F = standard_filter;

        r.push_back(
            {"lemma_ca", "no hole of an {ISK4, K_{3,3}}-free graph has crossing appendices", 8,
             {F("isk4-free"), F("k33-free")},
             [](const Graph& g, std::vector<Violation>& out) {
                 for_each_hole(g, 0, [&](const Hole& h) {
                     auto apps = hole_appendices(g, h);
                     for (size_t i = 0; i < apps.size(); ++i)
                         for (size_t j = i + 1; j < apps.size(); ++j)
                             if (crossing(h, apps[i], apps[j]))
                                 add_violation(out, g, "crossing appendices",
                                               "hole=" + vertex_list(h.cycle) +
                                                   " p=" + vertex_list(apps[i].path) +
                                                   " q=" + vertex_list(apps[j].path));
                 });
             }});

        r.push_back(
            {"lemma_ca2",
             "paths with non-nested hole attachments in {triangle, ISK4, K_{3,3}}-free graphs "
             "are appendices",
             8,
             {F("triangle-free"), F("isk4-free"), F("k33-free")},
             [](const Graph& g, std::vector<Violation>& out) {
                 for_each_hole(g, 0, [&](const Hole& h) {
                     Mask hm = h.mask();
                     for_each_ca2_candidate(g, h, [&](const std::vector<int>& path) {
                         Mask a1 = g.neighbors(path.front()) & hm;
                         Mask a2 = g.neighbors(path.back()) & hm;
                         if ((a1 & a2) == a1 || (a1 & a2) == a2) return;  // nested
                         bool appendix = std::popcount(a1) == 1 && std::popcount(a2) == 1;
                         if (!appendix)
                             add_violation(out, g, "ca2 path is not an appendix",
                                           "hole=" + vertex_list(h.cycle) +
                                               " path=" + vertex_list(path));
                     });
                 });
             }});

        r.push_back(
            {"lemma_wa1",
             "each sector w.r.t. a wheel appendix holds >= 3 center neighbors (ISK4-free)", 8,
             {F("isk4-free")},
             [](const Graph& g, std::vector<Violation>& out) {
                 for (const Wheel& w : enumerate_wheels(g))
                     for (const Appendix& p : wheel_appendices(g, w))
                         for (Mask s : hole_sectors_wrt(w.hole, p))
                             if (std::popcount(g.neighbors(w.center) & s) < 3)
                                 add_violation(out, g, "appendix sector with < 3 spokes",
                                               "hole=" + vertex_list(w.hole.cycle) + " center=" +
                                                   std::to_string(w.center) +
                                                   " path=" + vertex_list(p.path));
             }});

        r.push_back({"lemma_w1",
                     "minimum-vertex wheels of {triangle, ISK4}-free graphs are proper", 9,
                     {F("triangle-free"), F("isk4-free")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         auto wheels = enumerate_wheels(g);
                         if (wheels.empty()) return;
                         size_t best = kMaxVertices;
                         for (const Wheel& w : wheels)
                             best = std::min(best, w.hole.cycle.size());
                         for (const Wheel& w : wheels)
                             if (w.hole.cycle.size() == best && !is_proper_wheel(g, w))
                                 add_violation(out, g, "minimum-vertex wheel not proper",
                                               "hole=" + vertex_list(w.hole.cycle) +
                                                   " center=" + std::to_string(w.center));
                     }});

        r.push_back({"lemma_w2",
                     "a fewest-spoke proper wheel with an appendix is a 4-wheel "
                     "({triangle, ISK4, K_{3,3}}-free)",
                     9,
                     {F("triangle-free"), F("isk4-free"), F("k33-free")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         for (const Wheel& w : fewest_spoke_proper_wheels(g))
                             if (!wheel_appendices(g, w).empty() && w.spoke_count() != 4)
                                 add_violation(out, g, "appendix on a non-4-wheel",
                                               "hole=" + vertex_list(w.hole.cycle) +
                                                   " center=" + std::to_string(w.center));
                     }});

        r.push_back({"lemma_w3",
                     "fewest-spoke proper wheels have no short connection "
                     "({triangle, ISK4, K_{3,3}}-free)",
                     9,
                     {F("triangle-free"), F("isk4-free"), F("k33-free")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         for (const Wheel& w : fewest_spoke_proper_wheels(g))
                             if (auto sc = find_short_connection(g, w))
                                 add_violation(out, g, "short connection exists",
                                               "hole=" + vertex_list(w.hole.cycle) +
                                                   " center=" + std::to_string(w.center) +
                                                   " path=" + vertex_list(sc->path));
                     }});

        r.push_back({"lemma_w4",
                     "fewest-spoke proper wheels induce a full wheel decomposition "
                     "({triangle, ISK4, K_{3,3}}-free)",
                     9,
                     {F("triangle-free"), F("isk4-free"), F("k33-free")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         for (const Wheel& w : fewest_spoke_proper_wheels(g))
                             if (!wheel_decomposition(g, w))
                                 add_violation(out, g, "sector cutset fails to separate",
                                               "hole=" + vertex_list(w.hole.cycle) +
                                                   " center=" + std::to_string(w.center));
                     }});

        r.push_back({"theorem_decomp",
                     "{triangle, ISK4}-free: series-parallel, complete bipartite, clique cutset "
                     "<= 2, or star cutset",
                     9,
                     {F("triangle-free"), F("isk4-free")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         if (is_series_parallel(g) || is_complete_bipartite(g) ||
                             !is_connected(g))
                             return;
                         if (find_clique_cutset(g, 2) || find_star_cutset(g)) return;
                         add_violation(out, g, "no outcome of the four applies", "");
                     }});

        r.push_back({"theorem_maindecomp",
                     "{triangle, ISK4}-free graphs decompose with a verified outcome", 9,
                     {F("triangle-free"), F("isk4-free")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         try {
                             auto outc = decompose(g);
                             if (!verify_decomposition(g, outc))
                                 add_violation(out, g, "outcome failed verification", "");
                         } catch (const Error& e) {
                             add_violation(out, g, "decompose raised", e.what());
                         }
                     }});

        r.push_back({"theorem_maindecomp2",
                     "{triangle, ISK4, K_{3,3}}-free: series-parallel or wheel decomposition", 9,
                     {F("triangle-free"), F("isk4-free"), F("k33-free")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         if (is_series_parallel(g)) return;
                         for (const Wheel& w : enumerate_wheels(g))
                             if (wheel_decomposition(g, w)) return;
                         add_violation(out, g, "no wheel decomposition and not series-parallel",
                                       "");
                     }});

        r.push_back({"corollary_cmain",
                     "ISK4-free graphs of girth >= 5 are series-parallel or have a star cutset",
                     10,
                     {F("isk4-free"), F("girth5")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         if (is_series_parallel(g)) return;
                         bool has_star = false;
                         if (is_connected(g)) {
                             has_star = find_star_cutset(g).has_value();
                         } else {
                             // any single vertex whose removal leaves >= 2 components
                             for (int v = 0; v < g.vertex_count() && !has_star; ++v)
                                 has_star = is_cutset(g, bit(v));
                         }
                         if (!has_star)
                             add_violation(out, g, "neither series-parallel nor star cutset", "");
                     }});

        r.push_back({"theorem_tchordless",
                     "2-connected chordless graphs are sparse or admit a proper 2-cutset", 10,
                     {F("chordless"), F("two-connected")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         if (chordless_status(g).sparse) return;
                         if (find_proper_two_cutset(g)) return;
                         add_violation(out, g, "neither sparse nor proper 2-cutset", "");
                     }});

        r.push_back(
            {"theorem_thcchordless",
             "every cycle of a 2-connected chordless non-cycle graph carries the 2,3+,2,3+ "
             "pattern",
             10,
             {F("chordless"), F("two-connected")},
             [](const Graph& g, std::vector<Violation>& out) {
                 if (is_cycle_graph(g)) return;
                 if (auto t = triangle_witness(g)) {
                     add_violation(out, g, "triangle in a 2-connected chordless non-cycle",
                                   vertex_list({(*t)[0], (*t)[1], (*t)[2]}));
                     return;
                 }
                 for_each_hole(g, 0, [&](const Hole& h) {
                     if (!four_degree_pattern(g, h.cycle))
                         add_violation(out, g, "cycle without the degree pattern",
                                       "cycle=" + vertex_list(h.cycle));
                 });
             }});

        r.push_back(
            {"lemma_ltree",
             "the labelled-tree splitter dichotomy is exclusive and exhaustive", 9,
             {F("acyclic"), F("connected")},
             [](const Graph& g, std::vector<Violation>& out) {
                 int n = g.vertex_count();
                 std::vector<Mask> pmask(n * n);
                 for (int u = 0; u < n; ++u)
                     for (int w = 0; w < n; ++w) pmask[u * n + w] = to_mask(tree_path(g, u, w));
                 std::array<Mask, kMaxVertices * 2> pm{};
                 for (Mask lx = 0; lx < (Mask{1} << n); ++lx)
                     for (Mask ly = 0; ly < (Mask{1} << n); ++ly) {
                         // oracle: exhaustive scan for two disjoint x->y paths
                         bool oracle_disjoint = false;
                         if (std::popcount(lx) >= 2 && std::popcount(ly) >= 2) {
                             int np = 0;
                             for (int u : Bits{lx})
                                 for (int w : Bits{ly}) pm[np++] = pmask[u * n + w];
                             for (int i = 0; i < np && !oracle_disjoint; ++i)
                                 for (int j = i + 1; j < np; ++j)
                                     if (!(pm[i] & pm[j])) {
                                         oracle_disjoint = true;
                                         break;
                                     }
                         }
                         auto split = tree_label_split({g, lx, ly});
                         bool ok;
                         if (split.tag == TreeSplit::Tag::disjoint_paths) {
                             Mask p = to_mask(split.path_p), q = to_mask(split.path_q);
                             ok = oracle_disjoint && !(p & q) && (bit(split.path_p.front()) & lx) &&
                                  (bit(split.path_p.back()) & ly) && (bit(split.path_q.front()) & lx) &&
                                  (bit(split.path_q.back()) & ly);
                         } else {
                             ok = !oracle_disjoint && split.vertex >= 0 &&
                                  ((split.tx | split.ty) == g.vertices()) &&
                                  ((split.tx & split.ty) == bit(split.vertex)) &&
                                  ((lx & ~split.tx) == 0) && ((ly & ~split.ty) == 0) &&
                                  is_tree(induced(g, split.tx).graph) &&
                                  is_tree(induced(g, split.ty).graph);
                         }
                         if (!ok) {
                             add_violation(out, g, "splitter dichotomy failed",
                                           "labels_x=" + vertex_list(to_vertices(lx)) +
                                               " labels_y=" + vertex_list(to_vertices(ly)));
                             return;  // one witness per tree is plenty
                         }
                     }
             }});

        r.push_back({"lemma_xy",
                     "2-connected series-parallel, girth >= 5, no clique cutset: every "
                     "admissible pair has the (x, y)-property",
                     10,
                     {F("series-parallel"), F("girth5"), F("two-connected"),
                      Filter{"no-clique-cutset", false,
                             [](const Graph& g) { return !find_clique_cutset(g, 2); }}},
                     [](const Graph& g, std::vector<Violation>& out) {
                         for (int x = 0; x < g.vertex_count(); ++x)
                             if (xy_property(g, x, x).tag != PropertyVerdict::Tag::has_xy_property)
                                 add_violation(out, g, "missing (x, x)-property",
                                               "x=" + std::to_string(x));
                         for (auto [x, y] : g.edges())
                             if (xy_property(g, x, y).tag != PropertyVerdict::Tag::has_xy_property)
                                 add_violation(out, g, "missing (x, y)-property",
                                               "x=" + std::to_string(x) + " y=" + std::to_string(y));
                     }});

        r.push_back({"lemma_l2conn",
                     "2-connected ISK4-free graphs of girth >= 5 have every (x, y)-property", 10,
                     {F("isk4-free"), F("girth5"), F("two-connected")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         for (int x = 0; x < g.vertex_count(); ++x)
                             if (xy_property(g, x, x).tag != PropertyVerdict::Tag::has_xy_property)
                                 add_violation(out, g, "missing (x, x)-property",
                                               "x=" + std::to_string(x));
                         for (auto [x, y] : g.edges())
                             if (xy_property(g, x, y).tag != PropertyVerdict::Tag::has_xy_property)
                                 add_violation(out, g, "missing (x, y)-property",
                                               "x=" + std::to_string(x) + " y=" + std::to_string(y));
                     }});

        r.push_back({"theorem_thcolor",
                     "ISK4-free girth >= 5: two low-degree vertices and a verified 3-coloring",
                     11,
                     {F("isk4-free"), F("girth5")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         if (g.vertex_count() >= 2 && low_degree_vertices(g).size() < 2)
                             add_violation(out, g, "fewer than two vertices of degree <= 2", "");
                         try {
                             if (!verify_coloring(g, three_color(g)))
                                 add_violation(out, g, "three_color output invalid", "");
                         } catch (const Error& e) {
                             add_violation(out, g, "three_color raised", e.what());
                         }
                     }});

        r.push_back(
            {"lemma_ldesc",
             "bad triples of triangle-free 2-connected series-parallel clique-cutset-free "
             "graphs recover and rebuild up to isomorphism",
             9,
             {F("triangle-free"), F("series-parallel"), F("two-connected"),
              Filter{"no-clique-cutset", false,
                     [](const Graph& g) { return !find_clique_cutset(g, 2); }},
              Filter{"order>=5", false, [](const Graph& g) { return g.vertex_count() >= 5; }}},
             [](const Graph& g, std::vector<Violation>& out) {
                 auto roundtrip = [&](int x, int y) {
                     try {
                         auto recipe = recipe_recover(g, x, y);
                         auto built = recipe_build(recipe);
                         if (!are_isomorphic(g, built.graph, {{x, built.x}, {y, built.y}}))
                             add_violation(out, g, "rebuild not isomorphic",
                                           "x=" + std::to_string(x) + " y=" + std::to_string(y));
                     } catch (const Error& e) {
                         add_violation(out, g, "recovery failed",
                                       "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                           " : " + e.what());
                     }
                 };
                 for (int x = 0; x < g.vertex_count(); ++x)
                     if (is_bad_triple(g, x, x)) roundtrip(x, x);
                 for (auto [x, y] : g.edges())
                     if (is_bad_triple(g, x, y)) roundtrip(x, y);
             }});

        r.push_back({"lemma_begint",
                     "{triangle, ISK4}-free: series-parallel, or a wheel, or K_{3,3}", 9,
                     {F("triangle-free"), F("isk4-free")},
                     [](const Graph& g, std::vector<Violation>& out) {
                         if (is_series_parallel(g)) return;
                         if (contains_k33(g)) return;
                         if (!enumerate_wheels(g).empty()) return;
                         add_violation(out, g, "no outcome of the three applies", "");
                     }});

        r.push_back({"lemma_deck33t",
                     "{ISK4, triangle}-free with K_{3,3}: complete bipartite or clique cutset "
                     "<= 2",
                     9,
                     {F("triangle-free"), F("isk4-free"),
                      Filter{"contains-k33", false,
                             [](const Graph& g) { return contains_k33(g).has_value(); }}},
                     [](const Graph& g, std::vector<Violation>& out) {
                         if (is_complete_bipartite(g)) return;
                         if (!is_connected(g)) return;  // the empty clique cutset
                         if (find_clique_cutset(g, 2)) return;
                         add_violation(out, g, "neither complete bipartite nor clique cutset",
                                       "");
                     }});

        return r;
    }();
    return defs;
}

// Deterministic fan-out over graphs: workers pull from an atomic index and
// the merged violations get sorted, so reports are identical for any jobs.
inline SuiteReport run_checks(const std::string& id, const std::vector<Graph>& graphs,
                              const std::function<void(const Graph&, std::vector<Violation>&)>& check,
                              int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite_id = id;
    rep.graphs_scanned = (long long)graphs.size();
    if (jobs <= 1) {
        for (const Graph& g : graphs) check(g, rep.violations);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::vector<Violation>> locals(jobs);
        std::vector<std::thread> workers;
        for (int j = 0; j < jobs; ++j)
            workers.emplace_back([&, j] {
                for (size_t i = next.fetch_add(1); i < graphs.size(); i = next.fetch_add(1))
                    check(graphs[i], locals[j]);
            });
        for (auto& w : workers) w.join();
        for (auto& l : locals)
            rep.violations.insert(rep.violations.end(), l.begin(), l.end());
    }
    std::sort(rep.violations.begin(), rep.violations.end());
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace detail

inline const std::vector<SuiteDef>& suite_registry() { return detail::suite_registry(); }

inline const SuiteDef& find_suite(const std::string& id) {
    for (const auto& s : suite_registry())
        if (s.id == id) return s;
    throw Error("unknown suite: " + id);
}

// Scan the enumerated class up to n vertices.
inline SuiteReport run_suite(const std::string& id, int n = -1, int jobs = 1) {
    const SuiteDef& s = find_suite(id);
    if (n < 0) n = s.default_n;
    auto graphs = enumerate_graphs_up_to(n, s.filters, kEnumerationHardCap);
    return detail::run_checks(id, graphs, s.check, jobs);
}

// Scan an external corpus; out-of-class members are skipped, not violations.
inline SuiteReport run_suite_corpus(const std::string& id, const std::vector<Graph>& corpus,
                                    int jobs = 1) {
    const SuiteDef& s = find_suite(id);
    std::vector<Graph> in_class;
    for (const Graph& g : corpus) {
        bool ok = true;
        for (const auto& f : s.filters)
            if (!f.pred(g)) {
                ok = false;
                break;
            }
        if (ok) in_class.push_back(g);
    }
    return detail::run_checks(id, in_class, s.check, jobs);
}

// Counterexample hunts for the two conjectures; a hit is reported, never a
// crash.  conj1: a {triangle, ISK4, K_{3,3}}-free graph of minimum degree
// >= 3.  conj2: a {triangle, ISK4}-free graph that is not 3-colorable.
inline SuiteReport hunt(const std::string& conjecture, int n_max, int jobs = 1) {
    if (conjecture == "conj1") {
        auto graphs = enumerate_graphs_up_to(
            n_max,
            {standard_filter("triangle-free"), standard_filter("isk4-free"),
             standard_filter("k33-free")},
            kEnumerationHardCap);
        return detail::run_checks("conj1", graphs,
                                  [](const Graph& g, std::vector<Violation>& out) {
                                      if (g.vertex_count() >= 1 && g.min_degree() >= 3)
                                          detail::add_violation(out, g, "minimum degree >= 3",
                                                                "");
                                  },
                                  jobs);
    }
    if (conjecture == "conj2") {
        auto graphs = enumerate_graphs_up_to(
            n_max, {standard_filter("triangle-free"), standard_filter("isk4-free")},
            kEnumerationHardCap);
        return detail::run_checks("conj2", graphs,
                                  [](const Graph& g, std::vector<Violation>& out) {
                                      if (!three_colorable(g))
                                          detail::add_violation(out, g, "not 3-colorable", "");
                                  },
                                  jobs);
    }
    throw Error("unknown conjecture: " + conjecture + " (use conj1 or conj2)");
}

}  // namespace isk4
