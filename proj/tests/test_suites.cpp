#include "doctest.h"

#include "isk4/families.hpp"
#include "isk4/graph6.hpp"
#include "isk4/suites.hpp"

using namespace isk4;

TEST_CASE("registry sanity") {
    CHECK(suite_registry().size() >= 18);
    CHECK_THROWS_AS(find_suite("nope"), Error);
    CHECK(find_suite("lemma_ca").id == "lemma_ca");
}

TEST_CASE("proved lemmas have zero violations at small n") {
    for (const char* id : {"lemma_ca", "lemma_ca2", "lemma_wa1", "lemma_w1", "lemma_w2",
                           "lemma_w3", "lemma_w4", "lemma_begint", "lemma_deck33t"}) {
        auto rep = run_suite(id, 7);
        INFO(id);
        CHECK(rep.violations.empty());
        CHECK(rep.graphs_scanned > 0);
    }
}

TEST_CASE("decomposition theorems hold at small n") {
    for (const char* id :
         {"theorem_decomp", "theorem_maindecomp", "theorem_maindecomp2", "corollary_cmain"}) {
        auto rep = run_suite(id, 7);
        INFO(id);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("chordless and tree suites hold at small n") {
    for (const char* id : {"theorem_tchordless", "theorem_thcchordless", "lemma_ltree"}) {
        auto rep = run_suite(id, 7);
        INFO(id);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("property and coloring suites hold at small n") {
    for (const char* id : {"lemma_xy", "lemma_l2conn", "theorem_thcolor", "lemma_ldesc"}) {
        auto rep = run_suite(id, 8);
        INFO(id);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("reports are identical across worker counts") {
    auto a = run_suite("theorem_maindecomp", 7, 1);
    auto b = run_suite("theorem_maindecomp", 7, 3);
    CHECK(a.graphs_scanned == b.graphs_scanned);
    CHECK(a.violations == b.violations);
}

TEST_CASE("corpus runs filter to in-class graphs") {
    std::vector<Graph> corpus = {petersen_graph(), cycle_graph(5), complete_graph(4),
                                 wheel_like(12, {0, 3, 6, 9})};
    auto rep = run_suite_corpus("theorem_maindecomp", corpus);
    CHECK(rep.graphs_scanned == 2);  // C5 and the 12-wheel; K4 and Petersen are out of class
    CHECK(rep.violations.empty());

    // a corpus of chordless graphs against the cycle-pattern theorem
    std::vector<Graph> chordless = {theta_graph(3, 2), theta_graph(4, 3), cycle_graph(7),
                                    complete_bipartite(2, 3), complete_graph(4)};
    auto rep2 = run_suite_corpus("theorem_thcchordless", chordless);
    CHECK(rep2.graphs_scanned == 4);  // K4 has chords
    CHECK(rep2.violations.empty());
}

TEST_CASE("violations carry replayable certificates") {
    // run a fake check through the runner to exercise report plumbing
    std::vector<Graph> graphs = {cycle_graph(4), cycle_graph(5)};
    auto rep = detail::run_checks(
        "demo", graphs,
        [](const Graph& g, std::vector<Violation>& out) {
            if (g.vertex_count() == 4) detail::add_violation(out, g, "even hole", "demo");
        },
        2);
    REQUIRE(rep.violations.size() == 1);
    Graph replay = parse_graph6(rep.violations[0].graph6);
    CHECK(replay == cycle_graph(4));
}

TEST_CASE("conjecture hunts at small n") {
    auto c1 = hunt("conj1", 7);
    CHECK(c1.violations.empty());
    auto c2 = hunt("conj2", 7);
    CHECK(c2.violations.empty());
    CHECK_THROWS_AS(hunt("conj9", 5), Error);

    // scan counts are fixed by the enumeration
    auto tiny = hunt("conj1", 3);
    CHECK(tiny.graphs_scanned == 1 + 2 + 3);  // the triangle is filtered out
}
