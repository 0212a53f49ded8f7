#include "doctest.h"

#include "isk4/chordless.hpp"
#include "isk4/enumerate.hpp"
#include "isk4/families.hpp"
#include "isk4/holes.hpp"
#include "isk4/recognition.hpp"

using namespace isk4;

TEST_CASE("tree splitter on the worked examples") {
    // path a-b-c, a labelled x, c labelled y
    auto s = tree_label_split({path_graph(3), bit(0), bit(2)});
    CHECK(s.tag == TreeSplit::Tag::split_vertex);
    CHECK(s.vertex == 0);  // a single x-label splits at itself
    CHECK(s.tx == bit(0));
    CHECK(s.ty == full_mask(3));

    // star: center 0, leaves 1 (x), 2 (y), 3 (x and y)
    Graph star = complete_bipartite(1, 3);
    auto d = tree_label_split({star, bit(1) | bit(3), bit(2) | bit(3)});
    CHECK(d.tag == TreeSplit::Tag::disjoint_paths);
    // one of the paths is the doubly-labelled leaf alone
    bool has_len0 = d.path_p.size() == 1 || d.path_q.size() == 1;
    CHECK(has_len0);

    // single vertex with both labels
    auto v = tree_label_split({Graph(1, {}), bit(0), bit(0)});
    CHECK(v.tag == TreeSplit::Tag::split_vertex);
    CHECK(v.vertex == 0);
    CHECK(v.tx == bit(0));
    CHECK(v.ty == bit(0));
}

TEST_CASE("tree splitter dichotomy on all labelled trees, n <= 6") {
    auto trees =
        enumerate_graphs_up_to(6, {standard_filter("acyclic"), standard_filter("connected")});
    for (const Graph& t : trees) {
        int n = t.vertex_count();
        for (Mask lx = 0; lx < (Mask{1} << n); ++lx)
            for (Mask ly = 0; ly < (Mask{1} << n); ++ly) {
                auto s = tree_label_split({t, lx, ly});
                // oracle: exhaustive disjoint-pair search
                bool oracle = false;
                for (int u1 : Bits{lx})
                    for (int w1 : Bits{ly})
                        for (int u2 : Bits{lx})
                            for (int w2 : Bits{ly}) {
                                if (u1 == u2 || w1 == w2) continue;
                                Mask p = to_mask(tree_path(t, u1, w1));
                                Mask q = to_mask(tree_path(t, u2, w2));
                                if (!(p & q)) oracle = true;
                            }
                if (s.tag == TreeSplit::Tag::disjoint_paths) {
                    CHECK(oracle);
                    CHECK(!(to_mask(s.path_p) & to_mask(s.path_q)));
                    CHECK((lx & bit(s.path_p.front())) != 0);
                    CHECK((ly & bit(s.path_p.back())) != 0);
                    CHECK((lx & bit(s.path_q.front())) != 0);
                    CHECK((ly & bit(s.path_q.back())) != 0);
                } else {
                    CHECK(!oracle);
                    CHECK((s.tx | s.ty) == t.vertices());
                    CHECK((s.tx & s.ty) == bit(s.vertex));
                    CHECK((lx & ~s.tx) == 0);
                    CHECK((ly & ~s.ty) == 0);
                    CHECK(is_tree(induced(t, s.tx).graph));
                    CHECK(is_tree(induced(t, s.ty).graph));
                }
            }
    }
}

TEST_CASE("tree splitter rejects non-trees") {
    CHECK_THROWS_AS(tree_label_split({cycle_graph(4), 0, 0}), PreconditionError);
    CHECK_THROWS_AS(tree_label_split({Graph(3, {{0, 1}}), 0, 0}), PreconditionError);
}

TEST_CASE("four-vertex degree pattern") {
    Graph t4 = theta_graph(4, 1);  // hubs 0, 1 of degree 4; interiors degree 2
    // cycle through branches 1 and 2: 0-2-1-3-0
    auto p = four_degree_pattern(t4, {0, 2, 1, 3});
    REQUIRE(p.has_value());
    CHECK(*p == std::array<int, 4>{2, 1, 3, 0});  // lexicographically least quadruple

    CHECK(!four_degree_pattern(cycle_graph(6), {0, 1, 2, 3, 4, 5}).has_value());

    Graph t3 = theta_graph(3, 3);  // hubs 0, 1; branches 2-3-4, 5-6-7, 8-9-10
    auto q = four_degree_pattern(t3, {0, 2, 3, 4, 1, 7, 6, 5});
    REQUIRE(q.has_value());

    CHECK_THROWS_AS(four_degree_pattern(t3, {0, 2, 4}), PreconditionError);
}

TEST_CASE("pattern exists in every cycle of 2-connected chordless non-cycles, n <= 8") {
    for (const Graph& g : enumerate_graphs_up_to(
             8, {standard_filter("chordless"), standard_filter("two-connected")})) {
        if (is_cycle_graph(g)) continue;
        CHECK(!triangle_witness(g).has_value());
        for_each_hole(g, 0, [&](const Hole& h) {
            auto p = four_degree_pattern(g, h.cycle);
            CHECK(p.has_value());
        });
    }
}

TEST_CASE("blocks of a proper 2-cutset") {
    Graph t4 = theta_graph(4, 2);
    auto w = find_proper_two_cutset(t4);
    REQUIRE(w.has_value());
    auto blocks = chordless_blocks(t4, *w);

    // |V(G_X)| = |X| + 3
    CHECK(blocks.g_x.vertex_count() == (int)w->side_x.size() + 3);
    CHECK(blocks.g_y.vertex_count() == (int)w->side_y.size() + 3);
    CHECK(blocks.g_x.degree(blocks.marker_y_in_x) == 2);
    CHECK(blocks.g_y.degree(blocks.marker_x_in_y) == 2);

    // both blocks stay 2-connected and chordless
    for (const Graph* b : {&blocks.g_x, &blocks.g_y}) {
        CHECK(is_two_connected(*b));
        CHECK(chordless_status(*b).chordless);
    }

    // an invalid witness is rejected
    CutsetWitness bogus;
    bogus.kind = CutsetWitness::Kind::proper_two;
    bogus.anchor = {0, 2};
    bogus.cutset = {0, 2};
    bogus.side_x = {1};
    bogus.side_y = {3, 4, 5, 6, 7, 8, 9};
    CHECK_THROWS_AS(chordless_blocks(t4, bogus), PreconditionError);
}

TEST_CASE("block recursion terminates on enumerated chordless graphs, n <= 8") {
    // sparse or splittable, and blocks shrink: the induction of the theory
    std::function<void(const Graph&, int)> walk = [&](const Graph& g, int depth) {
        REQUIRE(depth < 32);
        if (chordless_status(g).sparse) return;
        auto w = find_proper_two_cutset(g);
        REQUIRE(w.has_value());
        auto blocks = chordless_blocks(g, *w);
        CHECK(blocks.g_x.vertex_count() < g.vertex_count());
        CHECK(blocks.g_y.vertex_count() < g.vertex_count());
        walk(blocks.g_x, depth + 1);
        walk(blocks.g_y, depth + 1);
    };
    for (const Graph& g : enumerate_graphs_up_to(
             8, {standard_filter("chordless"), standard_filter("two-connected")}))
        walk(g, 0);
}
