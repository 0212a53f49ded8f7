// Acceptance suite: one line per criterion, exit code = number of failures.
// Each criterion pins its class, order bound, and tolerance (all checks are
// exact) in code; the oracles live in oracles.hpp and stay independent of
// the implementation paths they judge.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "isk4/degree2.hpp"
#include "isk4/enumerate.hpp"
#include "isk4/graph6.hpp"
#include "isk4/recognition.hpp"
#include "isk4/suites.hpp"
#include "isk4/wheels.hpp"

#include "oracles.hpp"

using namespace isk4;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> body;
};

bool suite_clean(const std::string& id, int n, std::string& detail) {
    auto rep = run_suite(id, n);
    std::ostringstream os;
    os << rep.graphs_scanned << " graphs scanned";
    if (!rep.violations.empty()) {
        os << ", " << rep.violations.size() << " violations; first: ["
           << rep.violations[0].graph6 << "] " << rep.violations[0].predicate;
        detail = os.str();
        return false;
    }
    detail = os.str();
    return true;
}

long long g_roundtrip_checked = 0;
long long g_roundtrip_bad = 0;

void roundtrip(const Graph& g) {
    ++g_roundtrip_checked;
    if (!(parse_graph6(write_graph6(g)) == g)) ++g_roundtrip_bad;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "series-parallel agrees with the subgraph-subdivision oracle, n <= 8",
                        [](std::string& detail) {
                            long long scanned = 0, at8 = 0, wrong = 0;
                            for_each_graph(8, {}, [&](const Graph& g) {
                                ++scanned;
                                if (g.vertex_count() == 8) ++at8;
                                roundtrip(g);
                                if (is_series_parallel(g) !=
                                    !oracles::has_k4_subdivision_subgraph(g))
                                    ++wrong;
                            });
                            std::ostringstream os;
                            os << scanned << " graphs (" << at8 << " at n = 8), " << wrong
                               << " disagreements";
                            detail = os.str();
                            return wrong == 0 && at8 == 12346;
                        }});

    criteria.push_back({2, "contains_isk4 agrees with the naive induced-subdivision oracle, n <= 7",
                        [](std::string& detail) {
                            long long scanned = 0, wrong = 0, bad_witness = 0;
                            for_each_graph(7, {}, [&](const Graph& g) {
                                ++scanned;
                                roundtrip(g);
                                auto got = contains_isk4(g);
                                if (got.has_value() != oracles::naive_contains_isk4(g)) ++wrong;
                                if (got && !verify_isk4_witness(g, *got)) ++bad_witness;
                            });
                            std::ostringstream os;
                            os << scanned << " graphs, " << wrong << " disagreements, "
                               << bad_witness << " bad witnesses";
                            detail = os.str();
                            return wrong == 0 && bad_witness == 0;
                        }});

    criteria.push_back({3, "every {triangle, ISK4}-free graph with n <= 9 decomposes, verified",
                        [](std::string& detail) {
                            for (const Graph& g : enumerate_graphs_up_to(
                                     9, {standard_filter("triangle-free"),
                                         standard_filter("isk4-free")}))
                                roundtrip(g);
                            return suite_clean("theorem_maindecomp", 9, detail);
                        }});

    criteria.push_back({4, "ISK4-free girth >= 5, n <= 10: series-parallel or star cutset",
                        [](std::string& detail) {
                            return suite_clean("corollary_cmain", 10, detail);
                        }});

    criteria.push_back({5, "no crossing appendices in {ISK4, K_{3,3}}-free graphs, n <= 9",
                        [](std::string& detail) {
                            for (const Graph& g : enumerate_graphs_up_to(
                                     9, {standard_filter("isk4-free"),
                                         standard_filter("k33-free")}))
                                roundtrip(g);
                            return suite_clean("lemma_ca", 9, detail);
                        }});

    criteria.push_back({6, "minimum-vertex wheels are proper in {triangle, ISK4}-free graphs, n <= 9",
                        [](std::string& detail) { return suite_clean("lemma_w1", 9, detail); }});

    criteria.push_back(
        {7, "ISK4-free girth >= 5, n <= 11: two low-degree vertices and verified 3-colorings",
         [](std::string& detail) {
             for (const Graph& g : enumerate_graphs_up_to(
                      11, {standard_filter("girth5"), standard_filter("isk4-free")}))
                 roundtrip(g);
             return suite_clean("theorem_thcolor", 11, detail);
         }});

    criteria.push_back(
        {8, "bad-triple recipes: round-trip on 5 <= n <= 9 plus 1000 built recipes",
         [](std::string& detail) {
             long long triples = 0, failures = 0;
             auto roundtrip_triple = [&](const Graph& g, int x, int y) {
                 ++triples;
                 try {
                     auto built = recipe_build(recipe_recover(g, x, y));
                     if (!are_isomorphic(g, built.graph, {{x, built.x}, {y, built.y}}))
                         ++failures;
                 } catch (const Error&) {
                     ++failures;
                 }
             };
             for (const Graph& g : enumerate_graphs_up_to(
                      9, {standard_filter("triangle-free"), standard_filter("series-parallel")})) {
                 if (g.vertex_count() < 5 || !is_two_connected(g)) continue;
                 if (find_clique_cutset(g, 2)) continue;
                 for (int x = 0; x < g.vertex_count(); ++x)
                     if (is_bad_triple(g, x, x)) roundtrip_triple(g, x, x);
                 for (auto [x, y] : g.edges())
                     if (is_bad_triple(g, x, y)) roundtrip_triple(g, x, y);
             }
             auto recipes = systematic_recipes(1000);
             long long built = 0, leaks = 0;
             for (const auto& r : recipes) {
                 auto b = recipe_build(r);
                 ++built;
                 if (xy_property(b.graph, b.x, b.y).tag == PropertyVerdict::Tag::has_xy_property)
                     ++leaks;
             }
             std::ostringstream os;
             os << triples << " bad triples, " << failures << " round-trip failures; " << built
                << " recipes built, " << leaks << " with the (x, y)-property";
             detail = os.str();
             return triples > 0 && failures == 0 && built == 1000 && leaks == 0;
         }});

    criteria.push_back({9, "degree pattern in every cycle of 2-connected chordless non-cycles, n <= 10",
                        [](std::string& detail) {
                            for (const Graph& g :
                                 enumerate_graphs_up_to(10, {standard_filter("chordless")}))
                                roundtrip(g);
                            return suite_clean("theorem_thcchordless", 10, detail);
                        }});

    criteria.push_back({10, "tree splitter dichotomy vs the disjoint-path oracle, trees n <= 9",
                        [](std::string& detail) { return suite_clean("lemma_ltree", 9, detail); }});

    criteria.push_back({11, "conjecture hunts at n <= 8 report zero counterexamples",
                        [](std::string& detail) {
                            auto c1 = hunt("conj1", 8);
                            auto c2 = hunt("conj2", 8);
                            std::ostringstream os;
                            os << "conj1: " << c1.graphs_scanned << " scanned, "
                               << c1.violations.size() << " hits; conj2: " << c2.graphs_scanned
                               << " scanned, " << c2.violations.size() << " hits";
                            detail = os.str();
                            return c1.violations.empty() && c2.violations.empty();
                        }});

    criteria.push_back(
        {12, "graph6 round-trips bit-exactly; enumeration counts match the labeled oracle, n <= 7",
         [](std::string& detail) {
             // the streams of every criterion above already went through
             // roundtrip(); add the tree stream for coverage of sparse codes
             for (const Graph& g : enumerate_graphs_up_to(
                      9, {standard_filter("acyclic"), standard_filter("connected")}))
                 roundtrip(g);
             bool counts_ok = true;
             std::vector<long long> got;
             for (int n = 1; n <= 7; ++n) {
                 long long mine = (long long)enumerate_graphs(n).size();
                 long long oracle = oracles::labeled_enumeration_class_count(n);
                 got.push_back(mine);
                 if (mine != oracle) counts_ok = false;
             }
             std::ostringstream os;
             os << g_roundtrip_checked << " graphs round-tripped, " << g_roundtrip_bad
                << " mismatches; counts";
             for (long long c : got) os << " " << c;
             detail = os.str();
             return counts_ok && g_roundtrip_bad == 0 && got[3] == 11 && got[4] == 34;
         }});

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %02d: %s (%s, %.1fs)\n", ok ? "PASS" : "FAIL", c.number,
                    c.name.c_str(), detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
