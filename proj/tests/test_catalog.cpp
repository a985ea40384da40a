#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>

#include "multifold/catalog.hpp"
#include "multifold/colour_solver.hpp"

using namespace multifold;

TEST_CASE("gadget block and list sizes") {
    struct Expect {
        const char* id;
        int vertices;
        int base_list;  // list size multiplier before epsilon
    };
    for (Expect e : {Expect{"fig2", 9, 4}, Expect{"fig3", 8, 3}, Expect{"fig4", 20, 3}}) {
        for (int m = 1; m <= 3; ++m) {
            GadgetSpec spec = gadget(e.id, m);
            INFO(e.id << " m=" << m);
            CHECK(spec.graph.vertex_count() == e.vertices);
            CHECK(spec.list_size == e.base_list * m + spec.epsilon_m);
            int u = spec.u, v = spec.v;
            CHECK(static_cast<int>(spec.lists.lists[u].size()) == m);
            CHECK(static_cast<int>(spec.lists.lists[v].size()) == m);
            CHECK(spec.lists.lists[u] == spec.blocks.at("A"));
            CHECK(spec.lists.lists[v] == spec.blocks.at("B"));
            for (int w = 0; w < spec.graph.vertex_count(); ++w) {
                if (w == u || w == v) continue;
                CHECK(static_cast<int>(spec.lists.lists[w].size()) == spec.list_size);
            }
        }
    }

    // Block sizes as stated, for each gadget.
    GadgetSpec f2 = gadget("fig2", 3);
    CHECK(f2.epsilon_m == 0);  // floor(2/3)
    CHECK(f2.blocks.at("A").size() == 3);
    CHECK(f2.blocks.at("F").size() == 6);
    GadgetSpec f3 = gadget("fig3", 3);
    CHECK(f3.epsilon_m == 1);  // floor(2/2)
    CHECK(f3.blocks.at("C").size() == 6);
    CHECK(f3.blocks.at("E").size() == 1);
    GadgetSpec f4 = gadget("fig4", 13);
    CHECK(f4.epsilon_m == 1);  // floor(12/12)
    CHECK(f4.blocks.at("D").size() == 26);

    CHECK_THROWS_AS(gadget("fig9", 1), std::invalid_argument);
    CHECK_THROWS_AS(gadget("fig2", 0), std::invalid_argument);
}

TEST_CASE("gadget m=1 instances are exactly as read off the figures") {
    GadgetSpec f2 = gadget("fig2", 1);
    CHECK(f2.epsilon_m == 0);
    CHECK(f2.blocks.at("E").empty());
    for (const auto& l : f2.lists.lists)
        CHECK((l.size() == 1 || l.size() == 4));

    // Degree table read off the figure during transcription.
    std::map<std::string, int> degrees = {{"u", 5},  {"v", 5},  {"x", 4},
                                          {"y", 4},  {"u1", 4}, {"u2", 4},
                                          {"v1", 4}, {"v2", 4}, {"z", 6}};
    for (const auto& [name, deg] : degrees)
        CHECK(f2.graph.degree(f2.graph.vertex(name)) == deg);

    GadgetSpec f3 = gadget("fig3", 1);
    CHECK(f3.graph.edge_count() == 11);
    for (int w = 0; w < 8; ++w)
        if (w != f3.u && w != f3.v)
            CHECK(f3.lists.lists[w].size() == 3);

    GadgetSpec f4 = gadget("fig4", 1);
    CHECK(f4.graph.vertex_count() == 20);
    CHECK(f4.graph.edge_count() == 32);
}

TEST_CASE("gadget clique claims used by the arguments") {
    auto triangle = [](const Graph& g, const char* a, const char* b, const char* c) {
        return g.adjacent(g.vertex(a), g.vertex(b)) && g.adjacent(g.vertex(b), g.vertex(c)) &&
               g.adjacent(g.vertex(a), g.vertex(c));
    };
    CHECK(triangle(gadget("fig2", 1).graph, "u1", "v1", "x"));
    CHECK(triangle(gadget("fig3", 1).graph, "u1", "v1", "x"));
    Graph f4 = gadget("fig4", 1).graph;
    CHECK(triangle(f4, "u1", "v1", "z1"));
    CHECK(triangle(f4, "u2", "v2", "z2"));
    CHECK(triangle(f4, "x1", "x2", "x3"));
    CHECK(triangle(f4, "y1", "y2", "y3"));
    CHECK(triangle(f4, "w", "w1", "w2"));
}

TEST_CASE("gadget short-cycle exclusions") {
    Graph f3 = gadget("fig3", 1).graph;
    CHECK_FALSE(has_cycle_of_length(f3, 4));
    Graph f4 = gadget("fig4", 1).graph;
    CHECK_FALSE(has_cycle_of_length(f4, 4));
    CHECK_FALSE(has_cycle_of_length(f4, 5));
}

TEST_CASE("fig4 y3 side is adjudicated by the m=1 oracle") {
    GadgetSpec b_side = gadget("fig4", 1, Fig4Y3Side::B);
    CHECK_FALSE(solve_list_colouring(b_side.graph, b_side.lists, 1).has_value());

    GadgetSpec a_side = gadget("fig4", 1, Fig4Y3Side::A);
    auto w = solve_list_colouring(a_side.graph, a_side.lists, 1);
    REQUIRE(w.has_value());  // the A-side reading loses the obstruction
    CHECK(is_proper_bfold(a_side.graph, *w, 1));
}

TEST_CASE("steinberg instance structure") {
    SteinbergInstance inst = steinberg_instance();
    const Graph& g = inst.graph;
    CHECK(g.vertex_count() == 202);
    CHECK(g.edge_count() == 12 + 12 * 4 + 4 * 72);

    // Named-vertex colours as printed.
    auto set_of = [&](const char* name) { return *inst.precolouring.sets[g.vertex(name)]; };
    CHECK(set_of("a") == std::vector<int>{1, 3});
    CHECK(set_of("b") == std::vector<int>{5, 6});
    CHECK(set_of("c") == std::vector<int>{1, 2});
    CHECK(set_of("d") == std::vector<int>{2, 3});
    CHECK(set_of("e") == std::vector<int>{4, 5});
    CHECK(set_of("f") == std::vector<int>{1, 6});
    CHECK(set_of("c'") == std::vector<int>{3, 4});
    CHECK(set_of("d'") == std::vector<int>{1, 4});
    CHECK(set_of("e'") == std::vector<int>{2, 5});
    CHECK(set_of("f'") == std::vector<int>{3, 6});

    // Uncoloured vertices are exactly the 36 subdivision internals.
    int uncoloured = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (inst.precolouring.coloured(v)) continue;
        ++uncoloured;
        std::string name = g.label_of(v);
        CHECK(name.find('-') != std::string::npos);
    }
    CHECK(uncoloured == 36);

    // The partial colouring is proper.
    auto bad = proper_violation(g, inst.precolouring);
    if (bad)
        FAIL("improper at " << g.label_of(bad->first) << " - " << g.label_of(bad->second));

    // No 4- or 5-cycles, but triangles exist.
    CHECK(has_cycle_of_length(g, 3));
    CHECK_FALSE(has_cycle_of_length(g, 4));
    CHECK_FALSE(has_cycle_of_length(g, 5));
}

TEST_CASE("steinberg precolouring extends to a full (6,2)-colouring") {
    SteinbergInstance inst = steinberg_instance();
    auto full = extend_partial_colouring(inst.graph, inst.precolouring,
                                         {1, 2, 3, 4, 5, 6}, 2);
    REQUIRE(full.has_value());
    CHECK(is_proper_bfold(inst.graph, *full, 2));
    // Frozen vertices kept their printed pairs.
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (inst.precolouring.coloured(v))
            CHECK(*full->sets[v] == *inst.precolouring.sets[v]);
}

TEST_CASE("catalog registry") {
    CHECK(catalog_graph("c5").same_structure(build_cycle(5)));
    CHECK(catalog_graph("k24").same_structure(build_complete_bipartite(2, 4)));
    CHECK(catalog_graph("gnmk-2-1-1").same_structure(build_gnmk(2, 1, 1).graph));
    CHECK(catalog_graph("fig3").vertex_count() == 8);
    CHECK_THROWS_AS(catalog_graph("nope"), std::invalid_argument);
}
