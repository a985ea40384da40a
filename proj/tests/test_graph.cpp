#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "multifold/graph.hpp"
#include "oracles.hpp"

using namespace multifold;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(1, 2));
}

TEST_CASE("build_cycle") {
    Graph c5 = build_cycle(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(independence_number(c5).value == 2);

    Graph c3 = build_cycle(3);
    CHECK(is_isomorphic_small(c3, build_complete(3)));

    Graph c7 = build_cycle(7);
    CHECK(c7.vertex_count() == 7);
    CHECK(c7.edge_count() == 7);
    for (int len = 3; len < 7; ++len) CHECK_FALSE(has_cycle_of_length(c7, len));
    CHECK(has_cycle_of_length(c7, 7));

    CHECK_THROWS_AS(build_cycle(2), std::invalid_argument);
}

TEST_CASE("blowup product matches the displayed edge rule") {
    // C_3 with one vertex blown into K_2: every pair of the 4 vertices is
    // adjacent, i.e. K_4.
    Graph got = blowup_product(build_cycle(3), {1}, build_complete(2), build_complete(1));
    CHECK(got.vertex_count() == 4);
    CHECK(got.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(got.adjacent(u, v));

    // Identity blow-up.
    Graph c5 = build_cycle(5);
    std::vector<int> all{0, 1, 2, 3, 4};
    Graph same = blowup_product(c5, all, build_complete(1), build_complete(1));
    CHECK(same.same_structure(c5));

    // G_{6,4,3} from the figure: C_7 with a maximum independent set blown
    // into K_6 and the rest into K_4.
    Graph c7 = build_cycle(7);
    auto mis = independence_number(c7);
    REQUIRE(mis.value == 3);
    REQUIRE(oracle::is_maximum_independent_set(c7, mis.witness));
    Graph g643 = blowup_product(c7, mis.witness, build_complete(6), build_complete(4));
    CHECK(g643.vertex_count() == 34);

    CHECK_THROWS_AS(blowup_product(c5, {7}, build_complete(1), build_complete(1)),
                    std::invalid_argument);
}

TEST_CASE("build_gnmk") {
    GnmkGraph g643 = build_gnmk(6, 4, 3);
    CHECK(g643.graph.vertex_count() == 34);
    std::vector<int> sizes;
    for (const auto& cls : g643.classes) sizes.push_back(static_cast<int>(cls.size()));
    CHECK(sizes == std::vector<int>{4, 6, 4, 6, 4, 6, 4});
    CHECK(independence_number(g643.graph).value == 3);

    GnmkGraph c5 = build_gnmk(1, 1, 2);
    CHECK(c5.graph.same_structure(build_cycle(5)));

    GnmkGraph k4 = build_gnmk(2, 1, 1);
    CHECK(is_isomorphic_small(k4.graph, build_complete(4)));
}

TEST_CASE("gnmk independence number equals k (brute force)") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= n; ++m)
            for (int k = 1; k <= 3; ++k) {
                GnmkGraph g = build_gnmk(n, m, k);
                auto mis = independence_number(g.graph);
                INFO("n=" << n << " m=" << m << " k=" << k);
                CHECK(mis.value == k);
                CHECK(oracle::is_maximum_independent_set(g.graph, mis.witness));
            }
}

TEST_CASE("line graph of bipartite graphs") {
    // K_{2,2} -> C_4: 4 vertices of degree 2, connected, triangle-free.
    Graph k22 = build_complete_bipartite(2, 2);
    LineGraph lg = line_graph_of_bipartite(k22, {0, 1}, {2, 3});
    CHECK(lg.graph.vertex_count() == 4);
    CHECK(lg.graph.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(lg.graph.degree(v) == 2);
    CHECK_FALSE(has_cycle_of_length(lg.graph, 3));
    CHECK(is_isomorphic_small(lg.graph, build_cycle(4)));

    // A path with 2 edges -> K_2.
    LineGraph p = line_graph_of_bipartite(build_path(3), {0, 2}, {1});
    CHECK(p.graph.same_structure(build_complete(2)));

    // K_{3,3} -> 9 vertices; the maximal cliques are the 3 rows and 3 columns.
    Graph k33 = build_complete_bipartite(3, 3);
    LineGraph lg33 = line_graph_of_bipartite(k33, {0, 1, 2}, {3, 4, 5});
    CHECK(lg33.graph.vertex_count() == 9);
    CHECK(clique_number(lg33.graph).value == 3);
    int triangles = 0;  // every maximal clique of size 3 is a triangle
    std::set<std::set<int>> maximal;
    for (int a = 0; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            for (int c = b + 1; c < 9; ++c) {
                if (!lg33.graph.adjacent(a, b) || !lg33.graph.adjacent(a, c) ||
                    !lg33.graph.adjacent(b, c))
                    continue;
                bool extendable = false;
                for (int d = 0; d < 9; ++d)
                    if (d != a && d != b && d != c && lg33.graph.adjacent(d, a) &&
                        lg33.graph.adjacent(d, b) && lg33.graph.adjacent(d, c))
                        extendable = true;
                if (!extendable) {
                    ++triangles;
                    maximal.insert({a, b, c});
                }
            }
    CHECK(triangles == 6);
    CHECK(maximal.size() == 6);

    CHECK_THROWS_AS(line_graph_of_bipartite(build_cycle(5), {0, 2}, {1, 3, 4}),
                    std::invalid_argument);
}

TEST_CASE("independence number witnesses") {
    auto c5 = independence_number(build_cycle(5));
    CHECK(c5.value == 2);
    CHECK(oracle::is_maximum_independent_set(build_cycle(5), c5.witness));

    CHECK(independence_number(build_complete(4)).value == 1);
    CHECK(clique_number(build_complete(4)).value == 4);
    CHECK(clique_number(build_cycle(5)).value == 2);
}

TEST_CASE("has_cycle_of_length") {
    CHECK(has_cycle_of_length(build_cycle(5), 5));
    CHECK_FALSE(has_cycle_of_length(build_cycle(5), 3));
    CHECK_FALSE(has_cycle_of_length(build_cycle(5), 4));
    CHECK(has_cycle_of_length(build_complete(4), 3));
    CHECK(has_cycle_of_length(build_complete(4), 4));
    CHECK_THROWS_AS(has_cycle_of_length(build_cycle(5), 2), std::invalid_argument);
}

TEST_CASE("lexicographic blow-up size and vertex-transitivity") {
    Graph c5 = build_cycle(5);
    std::vector<int> all{0, 1, 2, 3, 4};
    Graph k2 = build_complete(2);
    Graph prod = blowup_product(c5, all, k2, k2);
    CHECK(prod.vertex_count() == 10);

    auto autos = automorphism_group(prod);
    std::set<int> orbit_of_zero;
    for (const auto& perm : autos) orbit_of_zero.insert(perm[0]);
    CHECK(orbit_of_zero.size() == 10);
}

TEST_CASE("bipartition helpers") {
    Graph k23 = build_complete_bipartite(2, 3);
    CHECK(is_bipartition(k23, {0, 1}, {2, 3, 4}));
    CHECK_FALSE(is_bipartition(k23, {0, 2}, {1, 3, 4}));
    auto parts = find_bipartition(k23);
    REQUIRE(parts.has_value());
    CHECK(is_bipartition(k23, parts->first, parts->second));
    CHECK_FALSE(find_bipartition(build_cycle(5)).has_value());
}
