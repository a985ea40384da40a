#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "multifold/colour_solver.hpp"
#include "multifold/colouring.hpp"
#include "multifold/errors.hpp"
#include "multifold/graph.hpp"
#include "multifold/orientation.hpp"

namespace multifold {

// ---------------------------------------------------------------------------
// The (f,g)-painting game.  Lister reveals a set U of live vertices and burns
// one token on each; Painter colours an independent subset of U.  A vertex
// whose debt reaches 0 is frozen and may not be chosen again.

struct GameState {
    const Graph* graph = nullptr;
    std::vector<int> tokens;  // remaining f
    std::vector<int> debt;    // remaining g
    int round = 0;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> transcript;  // (U, X)

    bool live(int v) const { return debt[v] > 0; }

    std::vector<int> live_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(debt.size()); ++v)
            if (debt[v] > 0) out.push_back(v);
        return out;
    }
};

class PainterStrategy {
public:
    virtual ~PainterStrategy() = default;
    virtual std::vector<int> choose(const GameState& state, const std::vector<int>& chosen) = 0;
};

class ListerStrategy {
public:
    virtual ~ListerStrategy() = default;
    virtual std::vector<int> choose(const GameState& state) = 0;
};

enum class GameOutcome {
    PainterWins,
    ListerWins,
    PainterProtocolError,
    ListerProtocolError,
    Truncated  // explicit max_rounds reached before a verdict
};

inline const char* to_string(GameOutcome o) {
    switch (o) {
        case GameOutcome::PainterWins: return "painter";
        case GameOutcome::ListerWins: return "lister";
        case GameOutcome::PainterProtocolError: return "painter-protocol-error";
        case GameOutcome::ListerProtocolError: return "lister-protocol-error";
        case GameOutcome::Truncated: return "truncated";
    }
    return "?";
}

struct GameResult {
    GameOutcome outcome;
    GameState state;
};

namespace detail {

inline bool is_independent(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

inline std::vector<int> normalised_set(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace detail

inline GameResult play_game(const Graph& g, const std::vector<int>& f,
                            const std::vector<int>& gfn, PainterStrategy& painter,
                            ListerStrategy& lister, long long max_rounds = -1) {
    int n = g.vertex_count();
    if (f.size() != static_cast<std::size_t>(n) || gfn.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("play_game: f/g size mismatch");
    long long token_total = 0;
    for (int v = 0; v < n; ++v) {
        if (gfn[v] < 0 || f[v] < gfn[v])
            throw std::invalid_argument("play_game: need f(v) >= g(v) >= 0");
        token_total += f[v];
    }
    if (max_rounds < 0) max_rounds = token_total + 1;

    GameState st;
    st.graph = &g;
    st.tokens = f;
    st.debt = gfn;

    auto verdict = [&]() -> std::optional<GameOutcome> {
        for (int v = 0; v < n; ++v)
            if (st.tokens[v] == 0 && st.debt[v] > 0) return GameOutcome::ListerWins;
        for (int v = 0; v < n; ++v)
            if (st.debt[v] > 0) return std::nullopt;
        return GameOutcome::PainterWins;
    };

    if (auto v0 = verdict()) return {*v0, std::move(st)};

    while (st.round < max_rounds) {
        std::vector<int> chosen;
        try {
            chosen = detail::normalised_set(lister.choose(st));
        } catch (const StrategyFailure&) {
            return {GameOutcome::ListerProtocolError, std::move(st)};
        }
        bool legal = !chosen.empty();
        for (int v : chosen)
            if (v < 0 || v >= n || !st.live(v) || st.tokens[v] <= 0) legal = false;
        if (!legal) return {GameOutcome::ListerProtocolError, std::move(st)};

        std::vector<int> painted;
        try {
            painted = detail::normalised_set(painter.choose(st, chosen));
        } catch (const StrategyFailure&) {
            return {GameOutcome::PainterProtocolError, std::move(st)};
        }
        if (!std::includes(chosen.begin(), chosen.end(), painted.begin(), painted.end()) ||
            !detail::is_independent(g, painted))
            return {GameOutcome::PainterProtocolError, std::move(st)};

        for (int v : chosen) --st.tokens[v];
        for (int v : painted) --st.debt[v];
        st.transcript.emplace_back(chosen, painted);
        ++st.round;
        if (auto v = verdict()) return {*v, std::move(st)};
    }
    // Only reachable with an explicit caller-supplied round cap: every round
    // burns a token, so the default cap of sum(f)+1 cannot be hit.
    return {GameOutcome::Truncated, std::move(st)};
}

// Re-run a recorded transcript through the legality rules; returns the outcome
// or nullopt if any recorded move is illegal.
inline std::optional<GameOutcome> replay_transcript(
    const Graph& g, const std::vector<int>& f, const std::vector<int>& gfn,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& rounds) {
    struct ScriptPainter : PainterStrategy {
        const std::vector<std::pair<std::vector<int>, std::vector<int>>>* rounds;
        std::vector<int> choose(const GameState& st, const std::vector<int>&) override {
            return (*rounds)[st.round].second;
        }
    };
    struct ScriptLister : ListerStrategy {
        const std::vector<std::pair<std::vector<int>, std::vector<int>>>* rounds;
        std::vector<int> choose(const GameState& st) override {
            if (st.round >= static_cast<int>(rounds->size()))
                throw StrategyFailure("transcript exhausted before the game ended");
            return (*rounds)[st.round].first;
        }
    };
    ScriptPainter p;
    ScriptLister l;
    p.rounds = &rounds;
    l.rounds = &rounds;
    GameResult r = play_game(g, f, gfn, p, l);
    // The recorded U must match what the script handed back.
    if (r.state.transcript != std::vector<std::pair<std::vector<int>, std::vector<int>>>(
                                  rounds.begin(), rounds.begin() + r.state.transcript.size()))
        return std::nullopt;
    if (r.outcome == GameOutcome::PainterProtocolError ||
        r.outcome == GameOutcome::ListerProtocolError)
        return std::nullopt;
    return r.outcome;
}

// ---------------------------------------------------------------------------
// Basic Lister/Painter strategies

// Uniformly random non-empty subset of the live vertices (deterministic per seed).
class RandomLister : public ListerStrategy {
public:
    explicit RandomLister(std::uint64_t seed) : rng_(seed) {}

    std::vector<int> choose(const GameState& st) override {
        auto live = st.live_vertices();
        std::vector<int> out;
        while (out.empty())
            for (int v : live)
                if (rng_() & 1) out.push_back(v);
        return out;
    }

private:
    std::mt19937_64 rng_;
};

// Greedy baseline: paint the lexicographically-first maximal independent subset.
class GreedyPainter : public PainterStrategy {
public:
    std::vector<int> choose(const GameState& st, const std::vector<int>& chosen) override {
        std::vector<int> out;
        for (int v : chosen) {
            bool ok = true;
            for (int u : out)
                if (st.graph->adjacent(u, v)) ok = false;
            if (ok) out.push_back(v);
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Painter strategy from a proper b-fold colouring: cycle through the colour
// classes, advancing a separate counter per distinct Lister set.

class FractionalPainter : public PainterStrategy {
public:
    FractionalPainter(const Graph& g, const BFoldColouring& phi) {
        if (phi.size() != g.vertex_count() || !phi.complete())
            throw std::invalid_argument("FractionalPainter: colouring must be complete");
        if (proper_violation(g, phi))
            throw std::invalid_argument("FractionalPainter: colouring must be proper");
        std::map<int, std::vector<int>> by_colour;
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int c : *phi.sets[v]) by_colour[c].push_back(v);
        for (auto& [c, verts] : by_colour) classes_.push_back(verts);
    }

    int colour_count() const { return static_cast<int>(classes_.size()); }

    std::vector<int> choose(const GameState&, const std::vector<int>& chosen) override {
        int t = ++counts_[chosen];
        const auto& cls = classes_[(t - 1) % classes_.size()];
        std::vector<int> out;
        for (int v : chosen)
            if (std::binary_search(cls.begin(), cls.end(), v)) out.push_back(v);
        return out;
    }

private:
    std::vector<std::vector<int>> classes_;        // ascending colour order
    std::map<std::vector<int>, int> counts_;       // per distinct U
};

// ---------------------------------------------------------------------------
// The cyclic Painter strategy on G_{n,m,k}.
//
// Case 1 (U meets every class): advance the counter t, take tau = t mod 2k+1
// and paint one vertex in each class tau, tau+2, ..., tau+2k-2.
// Case 2: traverse the classes clockwise from the smallest class missing from
// U, adding one vertex per class whose predecessor class got nothing.

class CyclicPainter : public PainterStrategy {
public:
    explicit CyclicPainter(const GnmkGraph& gnmk)
        : k_(gnmk.k), class_of_(gnmk.class_of), class_count_(2 * gnmk.k + 1) {}

    long long case1_count() const { return case1_count_; }

    std::vector<int> choose(const GameState&, const std::vector<int>& chosen) override {
        std::vector<int> lowest(class_count_, -1);
        int classes_hit = 0;
        for (int v : chosen) {
            int c = class_of_[v];
            if (lowest[c] == -1) {
                lowest[c] = v;
                ++classes_hit;
            }
        }
        std::vector<int> out;
        if (classes_hit == class_count_) {
            ++case1_count_;
            int tau = static_cast<int>(case1_count_ % class_count_);
            for (int j = 0; j < k_; ++j)
                out.push_back(lowest[(tau + 2 * j) % class_count_]);
        } else {
            int start = 0;
            while (lowest[start] != -1) ++start;
            std::vector<bool> added(class_count_, false);
            for (int step = 0; step <= 2 * k_; ++step) {
                int j = (start + step) % class_count_;
                int prev = (j + class_count_ - 1) % class_count_;
                if (lowest[j] != -1 && !added[prev]) {
                    out.push_back(lowest[j]);
                    added[j] = true;
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    int k_;
    std::vector<int> class_of_;
    int class_count_;
    long long case1_count_ = 0;
};

// ---------------------------------------------------------------------------
// Kernel Painter on a kernel-perfect orientation: each round paints a kernel
// of the chosen set.  Requires f(v) >= sum of g over the closed out-
// neighbourhood at the start; the inequality is re-checked every round.

class KernelPainter : public PainterStrategy {
public:
    KernelPainter(const Orientation& d, const std::vector<int>& f, const std::vector<int>& g)
        : d_(&d) {
        check_inequality(f, g, "at game start");
    }

    std::vector<int> choose(const GameState& st, const std::vector<int>& chosen) override {
        check_inequality(st.tokens, st.debt, "during play");
        auto kernel = find_kernel(*d_, chosen);
        if (!kernel)
            throw StrategyFailure("KernelPainter: chosen set has no kernel");
        return *kernel;
    }

private:
    void check_inequality(const std::vector<int>& f, const std::vector<int>& g,
                          const std::string& when) const {
        const Graph& base = d_->base();
        for (int v = 0; v < base.vertex_count(); ++v) {
            long long rhs = g[v];
            for (int u : d_->out_neighbours(v)) rhs += g[u];
            if (f[v] < rhs)
                throw std::invalid_argument("KernelPainter: token inequality violated " + when +
                                            " at vertex " + std::to_string(v));
        }
    }

    const Orientation* d_;
};

// ---------------------------------------------------------------------------
// Exact paintability: full minimax over (tokens, debt) states.  Lister moves
// are non-empty subsets of the live vertices, Painter moves the maximal
// independent subsets of the chosen set (painting more never hurts Painter).
// Memo keys are canonicalised under the graph's automorphisms.

enum class PaintOutcome { PainterWins, ListerWins };

struct PaintSolveOptions {
    std::uint64_t state_cap = 20'000'000;
    bool symmetry = true;
    int vertex_cap = 14;
};

namespace detail {

// All maximal independent subsets of G[member_mask], as masks (Bron-Kerbosch
// on the complement).
inline void maximal_independent_subsets(const std::vector<std::uint64_t>& comp_adj,
                                        std::uint64_t members, std::uint64_t r,
                                        std::uint64_t p, std::uint64_t x,
                                        std::vector<std::uint64_t>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = __builtin_ctzll(px);
    std::uint64_t ext = p & ~comp_adj[pivot];
    while (ext) {
        int v = __builtin_ctzll(ext);
        ext &= ext - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        maximal_independent_subsets(comp_adj, members, r | bit,
                                    p & comp_adj[v] & members, x & comp_adj[v] & members, out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace detail

inline PaintOutcome solve_paintable_exact(const Graph& g, const std::vector<int>& f,
                                          const std::vector<int>& gfn,
                                          const PaintSolveOptions& opt = {}) {
    int n = g.vertex_count();
    if (f.size() != static_cast<std::size_t>(n) || gfn.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("solve_paintable_exact: f/g size mismatch");
    for (int v = 0; v < n; ++v) {
        if (gfn[v] < 0 || f[v] < gfn[v])
            throw std::invalid_argument("solve_paintable_exact: need f(v) >= g(v) >= 0");
        if (f[v] > 250) throw ResourceLimit("solve_paintable_exact: token count too large");
    }
    if (n > opt.vertex_cap)
        throw ResourceLimit("solve_paintable_exact: more than " +
                            std::to_string(opt.vertex_cap) + " vertices");
    if (n == 0) return PaintOutcome::PainterWins;

    std::vector<std::uint64_t> comp_adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.adjacent(u, v)) comp_adj[u] |= std::uint64_t{1} << v;

    std::vector<std::vector<int>> autos;
    if (opt.symmetry)
        autos = automorphism_group(g);
    else {
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        autos = {id};
    }

    std::unordered_map<std::string, bool> memo;
    std::uint64_t states = 0;

    auto canonical_key = [&](const std::vector<int>& tok, const std::vector<int>& debt) {
        std::string best;
        std::string cur(2 * n, '\0');
        for (const auto& perm : autos) {
            for (int v = 0; v < n; ++v) {
                int t = debt[v] == 0 ? 0 : tok[v];
                int d = debt[v];
                cur[2 * perm[v]] = static_cast<char>(t);
                cur[2 * perm[v] + 1] = static_cast<char>(d);
            }
            if (best.empty() || cur < best) best = cur;
        }
        return best;
    };

    auto painter_wins = [&](auto&& self, std::vector<int>& tok, std::vector<int>& debt) -> bool {
        bool all_done = true;
        for (int v = 0; v < n; ++v) {
            if (debt[v] > 0) {
                all_done = false;
                if (tok[v] < debt[v]) return false;  // Lister repeats {v}
            }
        }
        if (all_done) return true;

        std::string key = canonical_key(tok, debt);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (++states > opt.state_cap)
            throw ResourceLimit("solve_paintable_exact: state cap exceeded");

        std::vector<int> live;
        for (int v = 0; v < n; ++v)
            if (debt[v] > 0) live.push_back(v);
        int l = static_cast<int>(live.size());

        bool painter = true;
        for (std::uint64_t um = 1; um < (std::uint64_t{1} << l) && painter; ++um) {
            std::uint64_t chosen_mask = 0;
            for (int i = 0; i < l; ++i)
                if ((um >> i) & 1) chosen_mask |= std::uint64_t{1} << live[i];

            std::vector<std::uint64_t> responses;
            detail::maximal_independent_subsets(comp_adj, chosen_mask, 0, chosen_mask, 0,
                                                responses);
            for (std::uint64_t m = chosen_mask; m; m &= m - 1) --tok[__builtin_ctzll(m)];

            bool survives = false;
            for (std::uint64_t resp : responses) {
                for (std::uint64_t m = resp; m; m &= m - 1) --debt[__builtin_ctzll(m)];
                bool ok = self(self, tok, debt);
                for (std::uint64_t m = resp; m; m &= m - 1) ++debt[__builtin_ctzll(m)];
                if (ok) {
                    survives = true;
                    break;
                }
            }
            for (std::uint64_t m = chosen_mask; m; m &= m - 1) ++tok[__builtin_ctzll(m)];
            if (!survives) painter = false;
        }
        memo[key] = painter;
        return painter;
    };

    std::vector<int> tok = f, debt = gfn;
    return painter_wins(painter_wins, tok, debt) ? PaintOutcome::PainterWins
                                                 : PaintOutcome::ListerWins;
}

// Least a such that g is (a,k)-paintable.
inline int kfold_paint_number(const Graph& g, int k, const PaintSolveOptions& opt = {}) {
    int a = b_fold_chromatic_number(g, k);  // paintable implies colourable
    while (solve_paintable_exact(g, uniform_fold(g.vertex_count(), a),
                                 uniform_fold(g.vertex_count(), k), opt) ==
           PaintOutcome::ListerWins)
        ++a;
    return a;
}

// ---------------------------------------------------------------------------
// Exhaustive verification of the cyclic strategy: Lister tries every move
// sequence against the fixed Painter.  Reports whether Painter always wins and
// the largest Case-1 counter seen along any line.

struct CyclicExhaustiveResult {
    bool painter_always_wins = false;
    long long max_case1 = 0;
    std::uint64_t states = 0;
};

inline CyclicExhaustiveResult verify_cyclic_exhaustive(const GnmkGraph& gnmk, int a, int b,
                                                       std::uint64_t state_cap = 50'000'000) {
    const Graph& g = gnmk.graph;
    int n = g.vertex_count();
    if (n > 14) throw ResourceLimit("verify_cyclic_exhaustive: instance too large");
    int classes = 2 * gnmk.k + 1;

    CyclicExhaustiveResult result;
    result.painter_always_wins = true;
    std::unordered_map<std::string, bool> memo;  // true = Painter wins from here

    auto key_of = [&](const std::vector<int>& tok, const std::vector<int>& debt,
                      long long case1) {
        std::string key(2 * n + 1, '\0');
        for (int v = 0; v < n; ++v) {
            key[2 * v] = static_cast<char>(debt[v] == 0 ? 0 : tok[v]);
            key[2 * v + 1] = static_cast<char>(debt[v]);
        }
        key[2 * n] = static_cast<char>(case1);
        return key;
    };

    auto rec = [&](auto&& self, std::vector<int>& tok, std::vector<int>& debt,
                   long long case1) -> bool {
        bool all_done = true;
        for (int v = 0; v < n; ++v)
            if (debt[v] > 0) {
                all_done = false;
                if (tok[v] == 0) return false;
            }
        if (all_done) return true;

        std::string key = key_of(tok, debt, case1);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (++result.states > state_cap)
            throw ResourceLimit("verify_cyclic_exhaustive: state cap exceeded");

        std::vector<int> live;
        for (int v = 0; v < n; ++v)
            if (debt[v] > 0) live.push_back(v);
        int l = static_cast<int>(live.size());

        bool painter = true;
        for (std::uint64_t um = 1; um < (std::uint64_t{1} << l) && painter; ++um) {
            std::vector<int> chosen;
            for (int i = 0; i < l; ++i)
                if ((um >> i) & 1) chosen.push_back(live[i]);

            // Painter's deterministic reply.
            std::vector<int> lowest(classes, -1);
            int hit = 0;
            for (int v : chosen)
                if (lowest[gnmk.class_of[v]] == -1) {
                    lowest[gnmk.class_of[v]] = v;
                    ++hit;
                }
            long long case1_next = case1;
            std::vector<int> painted;
            if (hit == classes) {
                ++case1_next;
                result.max_case1 = std::max(result.max_case1, case1_next);
                int tau = static_cast<int>(case1_next % classes);
                for (int j = 0; j < gnmk.k; ++j)
                    painted.push_back(lowest[(tau + 2 * j) % classes]);
            } else {
                int start = 0;
                while (lowest[start] != -1) ++start;
                std::vector<bool> added(classes, false);
                for (int step = 0; step < classes; ++step) {
                    int j = (start + step) % classes;
                    int prev = (j + classes - 1) % classes;
                    if (lowest[j] != -1 && !added[prev]) {
                        painted.push_back(lowest[j]);
                        added[j] = true;
                    }
                }
            }

            for (int v : chosen) --tok[v];
            for (int v : painted) --debt[v];
            bool ok = self(self, tok, debt, case1_next);
            for (int v : painted) ++debt[v];
            for (int v : chosen) ++tok[v];
            if (!ok) painter = false;
        }
        memo[key] = painter;
        return painter;
    };

    std::vector<int> tok = uniform_fold(n, a), debt = uniform_fold(n, b);
    result.painter_always_wins = rec(rec, tok, debt, 0);
    return result;
}

}  // namespace multifold
