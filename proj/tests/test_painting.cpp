#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "multifold/catalog.hpp"
#include "multifold/choosability.hpp"
#include "multifold/painting.hpp"

using namespace multifold;

namespace {

// Lister that replays a fixed schedule of sets.
struct ScriptLister : ListerStrategy {
    std::vector<std::vector<int>> moves;
    std::vector<int> choose(const GameState& st) override {
        if (st.round >= static_cast<int>(moves.size()))
            throw StrategyFailure("script exhausted");
        return moves[st.round];
    }
};

}  // namespace

TEST_CASE("game engine terminates within the token budget") {
    Graph k2 = build_complete(2);
    GreedyPainter painter;
    RandomLister lister(42);
    auto r = play_game(k2, uniform_fold(2, 2), uniform_fold(2, 1), painter, lister);
    CHECK(r.state.round <= 4);
    CHECK((r.outcome == GameOutcome::PainterWins || r.outcome == GameOutcome::ListerWins));
    for (const auto& [u, x] : r.state.transcript) {
        CHECK(!u.empty());
        CHECK(std::includes(u.begin(), u.end(), x.begin(), x.end()));
    }
}

TEST_CASE("illegal moves forfeit as protocol errors") {
    Graph k2 = build_complete(2);

    struct BadPainter : PainterStrategy {
        std::vector<int> choose(const GameState&, const std::vector<int>& chosen) override {
            return chosen;  // K_2: the full pair is never independent
        }
    };
    struct FullLister : ListerStrategy {
        std::vector<int> choose(const GameState& st) override { return st.live_vertices(); }
    };
    BadPainter bp;
    FullLister fl;
    auto r = play_game(k2, uniform_fold(2, 2), uniform_fold(2, 1), bp, fl);
    CHECK(r.outcome == GameOutcome::PainterProtocolError);

    struct EmptyLister : ListerStrategy {
        std::vector<int> choose(const GameState&) override { return {}; }
    };
    GreedyPainter gp;
    EmptyLister el;
    auto r2 = play_game(k2, uniform_fold(2, 2), uniform_fold(2, 1), gp, el);
    CHECK(r2.outcome == GameOutcome::ListerProtocolError);
}

TEST_CASE("transcript replay validates moves") {
    Graph c5 = build_cycle(5);
    GreedyPainter painter;
    RandomLister lister(7);
    auto r = play_game(c5, uniform_fold(5, 3), uniform_fold(5, 1), painter, lister);
    auto replay = replay_transcript(c5, uniform_fold(5, 3), uniform_fold(5, 1),
                                    r.state.transcript);
    REQUIRE(replay.has_value());
    CHECK(*replay == r.outcome);

    // Corrupt a round: paint a non-independent pair.
    auto bad = r.state.transcript;
    bad[0].second = {0, 1};
    CHECK_FALSE(replay_transcript(c5, uniform_fold(5, 3), uniform_fold(5, 1), bad).has_value());
}

TEST_CASE("exact paintability on the catalogue") {
    Graph k2 = build_complete(2);
    CHECK(solve_paintable_exact(k2, uniform_fold(2, 2), uniform_fold(2, 1)) ==
          PaintOutcome::PainterWins);

    Graph c5 = build_cycle(5);
    CHECK(solve_paintable_exact(c5, uniform_fold(5, 2), uniform_fold(5, 1)) ==
          PaintOutcome::ListerWins);
    CHECK(solve_paintable_exact(c5, uniform_fold(5, 3), uniform_fold(5, 1)) ==
          PaintOutcome::PainterWins);

    Graph k3 = build_complete(3);
    CHECK(solve_paintable_exact(k3, uniform_fold(3, 3), uniform_fold(3, 1)) ==
          PaintOutcome::PainterWins);
}

TEST_CASE("kfold paint numbers") {
    CHECK(kfold_paint_number(build_cycle(5), 1) == 3);
    CHECK(kfold_paint_number(build_complete(3), 1) == 3);
    // chi_{2,P}(C_5) = 5: (4,2) is a Lister win, (5,2) a Painter win.
    Graph c5 = build_cycle(5);
    CHECK(solve_paintable_exact(c5, uniform_fold(5, 4), uniform_fold(5, 2)) ==
          PaintOutcome::ListerWins);
    CHECK(kfold_paint_number(c5, 2) == 5);
}

TEST_CASE("paintable implies choosable on the corpus") {
    std::vector<Graph> corpus = {build_cycle(3), build_cycle(4), build_cycle(5),
                                 build_complete(4), build_path(4)};
    for (const auto& g : corpus)
        for (int a = 1; a <= 4; ++a) {
            int n = g.vertex_count();
            auto paint = solve_paintable_exact(g, uniform_fold(n, a), uniform_fold(n, 1));
            if (paint != PaintOutcome::PainterWins) continue;
            auto ch = is_ab_choosable(g, a, 1);
            REQUIRE(ch.status != ChoosableStatus::Timeout);
            INFO("n=" << n << " a=" << a);
            CHECK(ch.status == ChoosableStatus::Choosable);
        }
}

TEST_CASE("fractional painter follows the colour-class schedule") {
    Graph c5 = build_cycle(5);
    // The (5,2)-colouring phi(v_i) = {2i, 2i+1 mod 5}.
    BFoldColouring phi = BFoldColouring::uncoloured(5);
    for (int i = 0; i < 5; ++i)
        phi.assign(i, {(2 * i) % 5, (2 * i + 1) % 5});
    REQUIRE(is_proper_bfold(c5, phi, 2));

    // f=10, g=4 keeps every vertex live through the first full colour cycle
    // (each vertex is painted twice in rounds 1..5).
    FractionalPainter painter(c5, phi);
    ScriptLister lister;
    for (int r = 0; r < 5; ++r) lister.moves.push_back({0, 1, 2, 3, 4});
    auto r = play_game(c5, uniform_fold(5, 10), uniform_fold(5, 4), painter, lister, 5);
    CHECK(r.outcome == GameOutcome::Truncated);
    REQUIRE(r.state.transcript.size() == 5);
    // Round j paints the class of the j-th smallest colour.
    for (int round = 0; round < 5; ++round) {
        std::vector<int> expect;
        for (int v = 0; v < 5; ++v) {
            const auto& s = *phi.sets[v];
            if (std::find(s.begin(), s.end(), round) != s.end()) expect.push_back(v);
        }
        CHECK(r.state.transcript[round].second == expect);
    }
}

TEST_CASE("fractional painter paints b of every a consecutive singleton rounds") {
    Graph c5 = build_cycle(5);
    BFoldColouring phi = BFoldColouring::uncoloured(5);
    for (int i = 0; i < 5; ++i)
        phi.assign(i, {(2 * i) % 5, (2 * i + 1) % 5});
    FractionalPainter painter(c5, phi);
    ScriptLister lister;
    for (int r = 0; r < 7; ++r) lister.moves.push_back({0});
    // f=10, g=4: vertex 0 holds colours {0,1}, so rounds 1,2,6,7 paint it.
    auto r = play_game(c5, uniform_fold(5, 10), uniform_fold(5, 4), painter, lister, 7);
    CHECK(r.outcome == GameOutcome::Truncated);
    std::vector<int> painted_rounds;
    for (int round = 0; round < static_cast<int>(r.state.transcript.size()); ++round)
        if (!r.state.transcript[round].second.empty()) painted_rounds.push_back(round + 1);
    CHECK(painted_rounds == std::vector<int>{1, 2, 6, 7});
}

TEST_CASE("cyclic painter case analysis") {
    GnmkGraph c5 = build_gnmk(1, 1, 2);  // classes are the five cycle positions

    // Case 1: a full-boundary first round has tau = 1 and paints classes {1,3}.
    {
        CyclicPainter painter(c5);
        ScriptLister lister;
        lister.moves.push_back({0, 1, 2, 3, 4});
        GameState st;
        st.graph = &c5.graph;
        st.tokens = uniform_fold(5, 5);
        st.debt = uniform_fold(5, 2);
        auto x = painter.choose(st, {0, 1, 2, 3, 4});
        CHECK(x == std::vector<int>{1, 3});
        CHECK(painter.case1_count() == 1);
    }

    // Case 2 trace: U = {v0, v1}, start class 2, traversal 3,4,0,1 adds only v0.
    {
        CyclicPainter painter(c5);
        GameState st;
        st.graph = &c5.graph;
        st.tokens = uniform_fold(5, 5);
        st.debt = uniform_fold(5, 2);
        auto x = painter.choose(st, {0, 1});
        CHECK(x == std::vector<int>{0});
        CHECK(painter.case1_count() == 0);
    }
}

TEST_CASE("cyclic painter never loses: exhaustive Lister on small instances") {
    // G_{1,1,1} = C_3 at (3,1).
    auto r1 = verify_cyclic_exhaustive(build_gnmk(1, 1, 1), 3, 1);
    CHECK(r1.painter_always_wins);
    CHECK(r1.max_case1 * 1 <= 1 * 1 * 3);  // claim bound m*b*(2k+1)/k

    // G_{1,1,2} = C_5 at (5,2).
    auto r2 = verify_cyclic_exhaustive(build_gnmk(1, 1, 2), 5, 2);
    CHECK(r2.painter_always_wins);
    CHECK(r2.max_case1 * 2 <= 1 * 2 * 5);
}

TEST_CASE("cyclic painter wins seeded random games with the counter bound") {
    for (auto [n, m, k] : {std::tuple<int, int, int>{2, 1, 1}, {2, 2, 2}}) {
        GnmkGraph g = build_gnmk(n, m, k);
        int a = k * (n + m) + m, b = k;
        int nn = g.graph.vertex_count();
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            CyclicPainter painter(g);
            RandomLister lister(seed);
            auto r = play_game(g.graph, uniform_fold(nn, a), uniform_fold(nn, b), painter,
                               lister);
            INFO("n=" << n << " m=" << m << " k=" << k << " seed=" << seed);
            REQUIRE(r.outcome == GameOutcome::PainterWins);
            CHECK(painter.case1_count() * k <= static_cast<long long>(m) * b * (2 * k + 1));
        }
    }
}

TEST_CASE("galvin orientation") {
    // Star K_{1,3}, centre on the X side: a transitive tournament on K_3.
    Graph star = build_complete_bipartite(1, 3);
    auto gal = galvin_orientation(star, {0}, {1, 2, 3});
    CHECK(gal.delta == 3);
    CHECK(gal.line.graph.same_structure(build_complete(3)));
    std::multiset<int> degs;
    for (int v = 0; v < 3; ++v) degs.insert(gal.orientation.out_degree(v));
    CHECK(degs == std::multiset<int>{0, 1, 2});

    // A single edge: line graph K_1, nothing to orient.
    Graph e = build_complete_bipartite(1, 1);
    auto ge = galvin_orientation(e, {0}, {1});
    CHECK(ge.line.graph.vertex_count() == 1);
    CHECK(ge.orientation.max_out_degree() == 0);

    // K_{2,2}: line graph C_4, every out-degree at most Delta-1 = 1.
    Graph k22 = build_complete_bipartite(2, 2);
    auto g22 = galvin_orientation(k22, {0, 1}, {2, 3});
    for (int v = 0; v < 4; ++v) CHECK(g22.orientation.out_degree(v) <= 1);

    CHECK_THROWS_AS(galvin_orientation(build_cycle(3), {0}, {1, 2}), std::invalid_argument);
}

TEST_CASE("find_kernel") {
    // Empty set.
    Graph k3 = build_complete(3);
    Orientation tour(k3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(find_kernel(tour, {}) == std::vector<int>{});
    // The sink absorbs a transitive tournament.
    CHECK(find_kernel(tour, {0, 1, 2}) == std::vector<int>{2});

    // Galvin orientation of K_{2,2}: every non-empty subset has a kernel.
    auto g22 = galvin_orientation(build_complete_bipartite(2, 2), {0, 1}, {2, 3});
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<int> x;
        for (int v = 0; v < 4; ++v)
            if ((mask >> v) & 1) x.push_back(v);
        CHECK(find_kernel(g22.orientation, x).has_value());
    }
}

TEST_CASE("galvin orientations are kernel perfect on the bipartite corpus") {
    struct Host {
        Graph h;
        std::vector<int> x, y;
    };
    std::vector<Host> corpus = {{build_complete_bipartite(1, 3), {0}, {1, 2, 3}},
                                {build_complete_bipartite(2, 2), {0, 1}, {2, 3}},
                                {build_complete_bipartite(2, 3), {0, 1}, {2, 3, 4}},
                                {build_path(5), {0, 2, 4}, {1, 3}}};
    for (const auto& host : corpus) {
        auto gal = galvin_orientation(host.h, host.x, host.y);
        int ln = gal.line.graph.vertex_count();
        CHECK(gal.orientation.max_out_degree() <= std::max(0, gal.delta - 1));
        for (int mask = 1; mask < (1 << ln); ++mask) {
            std::vector<int> x;
            for (int v = 0; v < ln; ++v)
                if ((mask >> v) & 1) x.push_back(v);
            REQUIRE(find_kernel(gal.orientation, x).has_value());
        }
    }
}

TEST_CASE("kernel painter wins with f = m(d+ + 1)") {
    Graph k22 = build_complete_bipartite(2, 2);
    auto gal = galvin_orientation(k22, {0, 1}, {2, 3});
    int n = gal.line.graph.vertex_count();
    for (int m = 1; m <= 2; ++m) {
        std::vector<int> f(n), gfn(n, m);
        for (int v = 0; v < n; ++v) f[v] = m * (gal.orientation.out_degree(v) + 1);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            KernelPainter painter(gal.orientation, f, gfn);
            RandomLister lister(seed);
            auto r = play_game(gal.line.graph, f, gfn, painter, lister);
            INFO("m=" << m << " seed=" << seed);
            REQUIRE(r.outcome == GameOutcome::PainterWins);
        }
    }

    // Single vertex, f=g=1: painted in round 1.
    Graph e = build_complete_bipartite(1, 1);
    auto ge = galvin_orientation(e, {0}, {1});
    KernelPainter painter(ge.orientation, {1}, {1});
    ScriptLister lister;
    lister.moves.push_back({0});
    auto r = play_game(ge.line.graph, {1}, {1}, painter, lister);
    CHECK(r.outcome == GameOutcome::PainterWins);
    CHECK(r.state.round == 1);

    // Starting tokens below the inequality are rejected.
    CHECK_THROWS_AS(KernelPainter(ge.orientation, {0}, {1}), std::invalid_argument);
}

TEST_CASE("paint solver resource guards") {
    Graph big = build_complete_bipartite(8, 8);
    CHECK_THROWS_AS(
        solve_paintable_exact(big, uniform_fold(16, 2), uniform_fold(16, 1)),
        ResourceLimit);
    PaintSolveOptions tiny;
    tiny.state_cap = 1;
    CHECK_THROWS_AS(solve_paintable_exact(build_cycle(5), uniform_fold(5, 3),
                                          uniform_fold(5, 1), tiny),
                    ResourceLimit);
}
