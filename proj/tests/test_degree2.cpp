#include "doctest.h"

#include "isk4/degree2.hpp"
#include "isk4/enumerate.hpp"
#include "isk4/families.hpp"

using namespace isk4;

TEST_CASE("xy_property verdicts") {
    // C6: degree-2 vertices abound outside N[v1] u N[v2]
    auto v = xy_property(cycle_graph(6), 0, 1);
    CHECK(v.tag == PropertyVerdict::Tag::has_xy_property);
    CHECK(v.witness == 3);  // least such vertex

    // K_{2,3} with x = y = a1 (hub 0): the only outside vertex is the other
    // hub, of degree 3
    Graph k23 = complete_bipartite(2, 3);
    auto b = xy_property(k23, 0, 0);
    CHECK(b.tag == PropertyVerdict::Tag::bad_xx);

    CHECK_THROWS_AS(xy_property(k23, 0, 1), PreconditionError);  // hubs not adjacent
}

TEST_CASE("recipe build: worked examples") {
    // x = y, tree = one vertex, three attachments: K_{2,3}
    BadTripleRecipe r;
    r.same_xy = true;
    r.tree = Graph(1, {});
    r.tx = r.ty = bit(0);
    r.attachments = {{false, 0}, {false, 0}, {false, 0}};
    auto built = recipe_build(r);
    CHECK(are_isomorphic(built.graph, complete_bipartite(2, 3)));
    CHECK(built.x == built.y);

    // x != y sharing a single glue vertex, two attachments per side
    BadTripleRecipe r2;
    r2.same_xy = false;
    r2.tree = Graph(1, {});
    r2.tx = r2.ty = bit(0);
    r2.glue = 0;
    r2.attachments = {{false, 0}, {false, 0}, {true, 0}, {true, 0}};
    auto built2 = recipe_build(r2);
    CHECK(built2.graph.vertex_count() == 3 + 4);
    CHECK(built2.graph.edge_count() == 1 + 2 * 4);
    CHECK(built2.graph.adjacent(built2.x, built2.y));
}

TEST_CASE("recipe validation failures name their condition") {
    BadTripleRecipe r;
    r.same_xy = true;
    r.tree = Graph(1, {});
    r.tx = r.ty = bit(0);
    r.attachments = {{false, 0}, {false, 0}};  // needs three
    try {
        recipe_build(r);
        FAIL("expected RecipeError");
    } catch (const RecipeError& e) {
        CHECK(e.failed_condition == 4);
    }

    BadTripleRecipe leaf;
    leaf.same_xy = true;
    leaf.tree = path_graph(2);
    leaf.tx = leaf.ty = full_mask(2);
    leaf.attachments = {{false, 0}, {false, 0}, {false, 1}};  // leaf 1 needs two
    try {
        recipe_build(leaf);
        FAIL("expected RecipeError");
    } catch (const RecipeError& e) {
        CHECK(e.failed_condition == 3);
    }

    BadTripleRecipe cyc;
    cyc.same_xy = true;
    cyc.tree = cycle_graph(3);
    cyc.tx = cyc.ty = full_mask(3);
    try {
        recipe_build(cyc);
        FAIL("expected RecipeError");
    } catch (const RecipeError& e) {
        CHECK(e.failed_condition == 0);
    }
}

TEST_CASE("recipes build bad triples in the stated class") {
    // a 7-vertex recipe: x != y, glue with one extra attachment each side
    BadTripleRecipe r;
    r.same_xy = false;
    r.tree = Graph(1, {});
    r.tx = r.ty = bit(0);
    r.glue = 0;
    r.attachments = {{false, 0}, {false, 0}, {true, 0}, {true, 0}};
    auto built = recipe_build(r);
    const Graph& g = built.graph;
    CHECK(g.vertex_count() == 7);
    CHECK(is_two_connected(g));
    CHECK(is_triangle_free(g));
    CHECK(is_series_parallel(g));
    CHECK(!find_clique_cutset(g, 2).has_value());
    CHECK(is_bad_triple(g, built.x, built.y));
}

TEST_CASE("recover then rebuild is the identity up to isomorphism") {
    // K_{2,3} with x = y = hub: the inverse pair from the recipe example
    Graph k23 = complete_bipartite(2, 3);
    auto recipe = recipe_recover(k23, 0, 0);
    CHECK(recipe.same_xy);
    CHECK(recipe.tree.vertex_count() == 1);
    CHECK(recipe.attachments.size() == 3);
    auto rebuilt = recipe_build(recipe);
    CHECK(are_isomorphic(k23, rebuilt.graph, {{0, rebuilt.x}}));
}

TEST_CASE("recover preconditions are named") {
    // a graph with the (x, y)-property is not a bad triple
    CHECK_THROWS_AS(recipe_recover(cycle_graph(6), 0, 1), PreconditionError);
    try {
        recipe_recover(cycle_graph(6), 0, 1);
    } catch (const PreconditionError& e) {
        CHECK(e.predicate == "bad-triple");
    }

    // K_{2,3} plus a pendant on the hub is still a bad triple at the hub but
    // no longer 2-connected
    Graph dangling = complete_bipartite(2, 3).extended(bit(0));
    REQUIRE(is_bad_triple(dangling, 0, 0));
    try {
        recipe_recover(dangling, 0, 0);
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(e.predicate == "two-connected");
    }
}

TEST_CASE("systematic recipes all build graphs without the (x, y)-property") {
    auto recipes = systematic_recipes(120);
    CHECK(recipes.size() == 120);
    for (size_t i = 0; i < recipes.size(); ++i) {
        auto built = recipe_build(recipes[i]);
        auto verdict = xy_property(built.graph, built.x, built.y);
        CHECK(verdict.tag != PropertyVerdict::Tag::has_xy_property);
        // the construction's converse: built graphs are bad triples inside
        // the stated class
        if (i < 60) {
            const Graph& g = built.graph;
            CHECK(g.vertex_count() >= 5);
            CHECK(is_triangle_free(g));
            CHECK(is_two_connected(g));
            CHECK(is_series_parallel(g));
            CHECK(!find_clique_cutset(g, 2).has_value());
            CHECK(is_bad_triple(g, built.x, built.y));
        }
    }
}

TEST_CASE("low degree vertices") {
    CHECK(low_degree_vertices(wheel_like(12, {0, 3, 6, 9})) ==
          std::vector<int>{1, 2, 4, 5, 7, 8, 10, 11});
    CHECK(low_degree_vertices(petersen_graph()).empty());
    CHECK(low_degree_vertices(Graph(2, {{0, 1}})) == std::vector<int>{0, 1});
}

TEST_CASE("three_color on landmarks") {
    auto c5 = three_color(cycle_graph(5));
    CHECK(verify_coloring(cycle_graph(5), c5));
    // deterministic trace: peel 0,1,2,3,4; reinsert 4,3,2,1,0 greedily
    CHECK(c5.color == std::vector<int>{2, 1, 0, 1, 0});

    Graph tree = path_graph(7);
    auto tc = three_color(tree);
    CHECK(verify_coloring(tree, tc));
    CHECK(*std::max_element(tc.color.begin(), tc.color.end()) <= 1);

    Graph theta = theta_graph(3, 5);
    CHECK(verify_coloring(theta, three_color(theta)));

    // K_{3,3} goes through the complete-bipartite branch
    auto kc = three_color(complete_bipartite(3, 3));
    CHECK(verify_coloring(complete_bipartite(3, 3), kc));

    CHECK_THROWS_AS(three_color(petersen_graph()), OutOfClassError);
    CHECK_THROWS_AS(three_color(complete_graph(3)), OutOfClassError);
    CHECK_THROWS_AS(three_color(cycle_graph(4)), OutOfClassError);  // girth 4, no K_{3,3}
}

TEST_CASE("three_color through clique cutsets") {
    // two K_{3,3}s sharing an edge: K_{3,3} branch with a size-2 clique cutset
    std::vector<std::pair<int, int>> es;
    auto k = complete_bipartite(3, 3);
    for (auto [u, v] : k.edges()) es.emplace_back(u, v);
    // second copy shares the edge 0-3: map side {0,1,2} -> {0,6,7}, {3,4,5} -> {3,8,9}
    auto m = [](int v) { return v == 0 ? 0 : v == 3 ? 3 : v <= 2 ? v + 5 : v + 4; };
    for (auto [u, v] : k.edges())
        if (!(u == 0 && v == 3)) es.emplace_back(m(u), m(v));
    Graph g(10, es);
    auto c = three_color(g);
    CHECK(verify_coloring(g, c));
}

TEST_CASE("merge_colorings") {
    // two paths sharing a cut vertex
    Graph p1 = path_graph(3), p2 = path_graph(3);
    Coloring c1{{0, 1, 0}}, c2{{1, 0, 1}};
    auto merged = merge_colorings({2}, {{p1, c1, {0, 1, 2}}, {p2, c2, {2, 3, 4}}}, 5);
    Graph whole = path_graph(5);
    CHECK(verify_coloring(whole, merged));

    // |K| = 2: parts colored (0,1) and (2,0) align by permutation
    Graph e1(3, {{0, 1}, {1, 2}});
    Coloring ca{{0, 1, 0}};
    Graph e2(3, {{0, 1}, {0, 2}});
    Coloring cb{{2, 0, 0}};
    auto m2 = merge_colorings({0, 1}, {{e1, ca, {0, 1, 2}}, {e2, cb, {0, 1, 3}}}, 4);
    CHECK(m2.color[0] == 0);
    CHECK(m2.color[1] == 1);

    // single part: identity
    auto m3 = merge_colorings({}, {{p1, c1, {0, 1, 2}}}, 3);
    CHECK(m3.color == c1.color);

    CHECK_THROWS_AS(merge_colorings({0, 1, 2}, {}, 3), PreconditionError);
}

TEST_CASE("verify_coloring") {
    CHECK(!verify_coloring(Graph(2, {{0, 1}}), Coloring{{0, 0}}));
    CHECK(verify_coloring(cycle_graph(4), Coloring{{0, 1, 0, 1}}));
    CHECK(!verify_coloring(cycle_graph(4), Coloring{{0, 1, 0, -1}}));
}

TEST_CASE("exhaustive three-colorability oracle") {
    CHECK(three_colorable(petersen_graph()));
    CHECK(three_colorable(cycle_graph(5)));
    CHECK(!three_colorable(complete_graph(4)));
    // Groetzsch graph: triangle-free, chromatic number 4
    Graph mycielski(11, {{0, 1},  {1, 2},  {2, 3},  {3, 4},  {0, 4},  {0, 6},  {0, 9},
                         {1, 7},  {1, 5},  {2, 8},  {2, 6},  {3, 9},  {3, 7},  {4, 5},
                         {4, 8},  {5, 10}, {6, 10}, {7, 10}, {8, 10}, {9, 10}});
    CHECK(!three_colorable(mycielski));
}

TEST_CASE("e2 wedge: merge for |K| = 2 alignment example") {
    // parts coloring K as (0, 1) and (2, 0): permute the second by 2->0, 0->1
    Graph edge(2, {{0, 1}});
    auto m = merge_colorings({0, 1}, {{edge, Coloring{{0, 1}}, {0, 1}},
                                      {edge, Coloring{{2, 0}}, {0, 1}}},
                             2);
    CHECK(m.color == std::vector<int>{0, 1});
}
