#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "multifold/catalog.hpp"
#include "multifold/colour_solver.hpp"
#include "oracles.hpp"

using namespace multifold;

namespace {

BFoldColouring make_colouring(int n, std::vector<std::vector<int>> sets) {
    BFoldColouring c = BFoldColouring::uncoloured(n);
    for (int v = 0; v < n; ++v) c.assign(v, sets[v]);
    return c;
}

}  // namespace

TEST_CASE("is_proper_bfold basics") {
    Graph c5 = build_cycle(5);
    // Check the classic (6,2) sets on C_5 by hand: adjacent pairs around the
    // cycle are (0,1),(1,2),(2,3),(3,4),(4,0).
    auto good = make_colouring(5, {{0, 1}, {2, 3}, {0, 1}, {2, 3}, {4, 5}});
    CHECK(is_proper_bfold(c5, good, 2));

    Graph k2 = build_complete(2);
    auto clash = make_colouring(2, {{1}, {1}});
    CHECK_FALSE(is_proper_bfold(k2, clash, 1));

    auto wrong_size = make_colouring(2, {{1, 2}, {3}});
    CHECK_FALSE(is_proper_bfold(k2, wrong_size, 1));

    BFoldColouring partial = BFoldColouring::uncoloured(2);
    partial.assign(0, {1});
    CHECK_THROWS_AS(is_proper_bfold(k2, partial, 1), IncompleteColouring);
}

TEST_CASE("solve_ab_colouring on the catalogue") {
    Graph c5 = build_cycle(5);
    auto w = solve_ab_colouring(c5, 5, 2);
    REQUIRE(w.has_value());
    CHECK(is_proper_bfold(c5, *w, 2));

    CHECK_FALSE(solve_ab_colouring(c5, 2, 1).has_value());
    CHECK_FALSE(solve_ab_colouring(build_complete(4), 7, 2).has_value());
    CHECK_THROWS_AS(solve_ab_colouring(c5, 1, 2), std::invalid_argument);
}

TEST_CASE("solve_ab_colouring agrees with brute force") {
    std::vector<Graph> corpus = {build_cycle(3), build_cycle(4), build_cycle(5),
                                 build_complete(4), build_path(4),
                                 build_complete_bipartite(2, 3)};
    for (const auto& g : corpus)
        for (int b = 1; b <= 2; ++b)
            for (int a = b; a <= 4 * b; ++a) {
                bool brute = oracle::ab_colourable(g, a, b);
                auto got = solve_ab_colouring(g, a, b);
                INFO("n=" << g.vertex_count() << " m=" << g.edge_count() << " a=" << a
                          << " b=" << b);
                CHECK(got.has_value() == brute);
                if (got) CHECK(is_proper_bfold(g, *got, b));
            }
}

TEST_CASE("b_fold_chromatic_number") {
    CHECK(b_fold_chromatic_number(build_cycle(5), 2) == 5);
    CHECK(b_fold_chromatic_number(build_complete(4), 1) == 4);
    CHECK(b_fold_chromatic_number(build_cycle(5), 1) == 3);
}

TEST_CASE("b_fold_chromatic_number matches brute-force chromatic number") {
    std::vector<Graph> corpus = {build_cycle(3),  build_cycle(4), build_cycle(5),
                                 build_cycle(7),  build_path(5),  build_complete(4),
                                 build_complete_bipartite(2, 4), build_empty(3)};
    for (const auto& g : corpus)
        CHECK(b_fold_chromatic_number(g, 1) == oracle::chromatic_number(g));
}

TEST_CASE("monotonicity and scaling of (a,b)-colourability") {
    std::vector<Graph> corpus = {build_cycle(3), build_cycle(5), build_complete(4),
                                 build_path(4), gadget("fig3", 1).graph};
    for (const auto& g : corpus)
        for (int b = 1; b <= 2; ++b)
            for (int a = b; a <= 3 * b + 2; ++a) {
                if (!solve_ab_colouring(g, a, b)) continue;
                CHECK(solve_ab_colouring(g, a + 1, b).has_value());
                for (int t = 2; t <= 3; ++t)
                    CHECK(solve_ab_colouring(g, a * t, b * t).has_value());
            }
}

TEST_CASE("fractional_chromatic_sweep") {
    auto c5 = fractional_chromatic_sweep(build_cycle(5), 2);
    CHECK(c5.best == Rational(5, 2));
    CHECK(c5.lower_bound == Rational(5, 2));
    CHECK(c5.exact);

    auto k4 = fractional_chromatic_sweep(build_complete(4), 1);
    CHECK(k4.best == Rational(4));
    CHECK(k4.lower_bound == Rational(4));
    CHECK(k4.exact);

    auto g211 = fractional_chromatic_sweep(build_gnmk(2, 1, 1).graph, 2);
    CHECK(g211.best == Rational(4));
    CHECK(g211.exact);
}

TEST_CASE("fractional sweep hits n+m+m/k on small gnmk instances") {
    struct Row {
        int n, m, k;
    };
    for (Row r : {Row{1, 1, 1}, Row{1, 1, 2}, Row{2, 1, 1}, Row{2, 2, 2}}) {
        GnmkGraph g = build_gnmk(r.n, r.m, r.k);
        auto sweep = fractional_chromatic_sweep(g.graph, r.k);
        Rational expected = Rational(r.n) + Rational(r.m) + Rational(r.m, r.k);
        INFO("n=" << r.n << " m=" << r.m << " k=" << r.k);
        CHECK(sweep.best == expected);
        CHECK(sweep.exact);
    }
}

TEST_CASE("solve_list_colouring") {
    // Single vertex with a singleton list.
    Graph k1 = build_empty(1);
    ListAssignment single;
    single.lists = {{1}};
    auto w = solve_list_colouring(k1, single, 1);
    REQUIRE(w.has_value());
    CHECK(*w->sets[0] == std::vector<int>{1});

    // The m=1 gadget assignments admit no colouring.
    for (const char* id : {"fig2", "fig3"}) {
        GadgetSpec spec = gadget(id, 1);
        CHECK_FALSE(solve_list_colouring(spec.graph, spec.lists, 1).has_value());
    }

    // Error path: list smaller than fold.
    ListAssignment tiny;
    tiny.lists = {{1}};
    CHECK_THROWS_AS(solve_list_colouring(k1, tiny, 2), std::invalid_argument);
}

TEST_CASE("solve_list_colouring agrees with brute force on random instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g(n, edges);
        int fold = 1 + static_cast<int>(rng() % 2);
        ListAssignment l;
        l.lists.assign(n, {});
        for (int v = 0; v < n; ++v) {
            int len = fold + static_cast<int>(rng() % 3);
            std::set<int> list;
            while (static_cast<int>(list.size()) < len)
                list.insert(static_cast<int>(rng() % 6));
            l.lists[v] = std::vector<int>(list.begin(), list.end());
        }
        bool brute = oracle::list_colourable(g, l.lists, fold);
        auto got = solve_list_colouring(g, l, fold);
        CHECK(got.has_value() == brute);
        if (got) {
            CHECK(is_proper_bfold(g, *got, fold));
            for (int v = 0; v < n; ++v)
                for (int c : *got->sets[v])
                    CHECK(std::count(l.lists[v].begin(), l.lists[v].end(), c) == 1);
        }
    }
}

TEST_CASE("extend_partial_colouring") {
    // Fully coloured proper input comes back unchanged.
    Graph k2 = build_complete(2);
    auto full = make_colouring(2, {{1}, {2}});
    auto got = extend_partial_colouring(k2, full, {1, 2, 3}, 1);
    REQUIRE(got.has_value());
    CHECK(*got->sets[0] == std::vector<int>{1});
    CHECK(*got->sets[1] == std::vector<int>{2});

    // Improper input is an error naming the violating edge.
    auto clash = make_colouring(2, {{1}, {1}});
    CHECK_THROWS_WITH(extend_partial_colouring(k2, clash, {1, 2}, 1),
                      Catch::Matchers::ContainsSubstring("(0,1)"));

    // A path with frozen endpoints extends through the middle.
    Graph p3 = build_path(3);
    BFoldColouring partial = BFoldColouring::uncoloured(3);
    partial.assign(0, {1, 2});
    partial.assign(2, {3, 4});
    auto ext = extend_partial_colouring(p3, partial, {1, 2, 3, 4, 5, 6}, 2);
    REQUIRE(ext.has_value());
    CHECK(is_proper_bfold(p3, *ext, 2));
    CHECK(*ext->sets[0] == std::vector<int>{1, 2});
    CHECK(*ext->sets[2] == std::vector<int>{3, 4});
}
