#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multifold/colouring.hpp"
#include "multifold/graph.hpp"
#include "multifold/rational.hpp"

namespace multifold {

namespace detail {

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// Enumerate the k-subsets of the set bits of `mask` in lexicographic order
// (by ascending bit positions), invoking fn(submask); fn returns true to stop.
template <typename Fn>
bool for_each_subset_of_size(std::uint64_t mask, int k, Fn&& fn) {
    std::vector<int> pos;
    for (std::uint64_t m = mask; m; m &= m - 1) pos.push_back(__builtin_ctzll(m));
    int t = static_cast<int>(pos.size());
    if (k < 0 || k > t) return false;
    if (k == 0) return fn(std::uint64_t{0});
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t sub = 0;
        for (int i : idx) sub |= std::uint64_t{1} << pos[i];
        if (fn(sub)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == t - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Backtracking (L,g)-colouring search over a dense colour universe of at most
// 64 colours: forward checking, forced assignments, most-constrained-first
// branching, and connected-component decomposition of the unassigned part.
struct ListColourSolver {
    const Graph& g;
    std::vector<int> fold;
    int n;
    std::vector<std::uint64_t> cand;
    std::vector<std::uint64_t> chosen;
    std::vector<bool> assigned;
    std::vector<std::pair<int, std::uint64_t>> cand_trail;
    std::vector<int> assign_trail;
    std::vector<int> scratch_mark;
    int mark_epoch = 0;

    ListColourSolver(const Graph& graph, std::vector<std::uint64_t> candidates,
                     std::vector<int> fold_fn)
        : g(graph), fold(std::move(fold_fn)), n(graph.vertex_count()),
          cand(std::move(candidates)), chosen(n, 0), assigned(n, false),
          scratch_mark(n, 0) {}

    void undo_to(std::size_t cmark, std::size_t amark) {
        while (assign_trail.size() > amark) {
            int v = assign_trail.back();
            assign_trail.pop_back();
            assigned[v] = false;
            chosen[v] = 0;
        }
        while (cand_trail.size() > cmark) {
            auto [v, old] = cand_trail.back();
            cand_trail.pop_back();
            cand[v] = old;
        }
    }

    bool assign(int v, std::uint64_t set) {
        chosen[v] = set;
        assigned[v] = true;
        assign_trail.push_back(v);
        bool ok = true;
        for (int u : g.neighbours(v)) {
            if (assigned[u]) continue;
            std::uint64_t nc = cand[u] & ~set;
            if (nc != cand[u]) {
                cand_trail.push_back({u, cand[u]});
                cand[u] = nc;
                if (popcount(nc) < fold[u]) ok = false;
            }
        }
        return ok;
    }

    // Forced-assignment fixpoint over `verts`; compacts out assigned vertices.
    bool settle(std::vector<int>& verts) {
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (int v : verts) {
                if (assigned[v]) continue;
                int pc = popcount(cand[v]);
                if (pc < fold[v]) return false;
                if (pc == fold[v]) {
                    if (!assign(v, cand[v])) return false;
                    progressed = true;
                }
            }
        }
        verts.erase(std::remove_if(verts.begin(), verts.end(),
                                   [&](int v) { return assigned[v]; }),
                    verts.end());
        return true;
    }

    std::vector<std::vector<int>> components(const std::vector<int>& verts) {
        ++mark_epoch;
        for (int v : verts) scratch_mark[v] = mark_epoch;
        std::vector<std::vector<int>> comps;
        std::vector<int> seen(verts.size(), 0);
        std::map<int, std::size_t> index;
        for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (seen[i]) continue;
            comps.emplace_back();
            std::vector<int> stack{verts[i]};
            seen[i] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comps.back().push_back(v);
                for (int u : g.neighbours(v)) {
                    if (scratch_mark[u] != mark_epoch || assigned[u]) continue;
                    std::size_t j = index[u];
                    if (!seen[j]) {
                        seen[j] = 1;
                        stack.push_back(u);
                    }
                }
            }
        }
        return comps;
    }

    int pick_branch_vertex(const std::vector<int>& verts) {
        int best = -1, best_slack = 0, best_deg = -1;
        for (int v : verts) {
            int slack = popcount(cand[v]) - fold[v];
            int deg = 0;
            for (int u : g.neighbours(v))
                if (!assigned[u]) ++deg;
            if (best == -1 || slack < best_slack ||
                (slack == best_slack && deg > best_deg)) {
                best = v;
                best_slack = slack;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(std::vector<int> verts) {
        std::size_t cmark = cand_trail.size(), amark = assign_trail.size();
        if (!settle(verts)) {
            undo_to(cmark, amark);
            return false;
        }
        if (verts.empty()) return true;

        auto comps = components(verts);
        if (comps.size() > 1) {
            std::sort(comps.begin(), comps.end(),
                      [](const auto& a, const auto& b) { return a.size() < b.size(); });
            for (auto& comp : comps) {
                if (!solve(std::move(comp))) {
                    undo_to(cmark, amark);
                    return false;
                }
            }
            return true;
        }

        int v = pick_branch_vertex(verts);
        std::vector<int> rest;
        for (int u : verts)
            if (u != v) rest.push_back(u);
        bool done = for_each_subset_of_size(cand[v], fold[v], [&](std::uint64_t set) {
            std::size_t c2 = cand_trail.size(), a2 = assign_trail.size();
            if (assign(v, set) && solve(rest)) return true;
            undo_to(c2, a2);
            return false;
        });
        if (!done) undo_to(cmark, amark);
        return done;
    }
};

}  // namespace detail

// Exact (L, fold)-colouring: a proper fold-colouring with S(v) subseteq L(v),
// or nullopt if none exists.  Colour universe capped at 64 distinct colours.
inline std::optional<BFoldColouring> solve_list_colouring(const Graph& g,
                                                          const ListAssignment& l,
                                                          const std::vector<int>& fold) {
    int n = g.vertex_count();
    if (l.size() != n || fold.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("solve_list_colouring: size mismatch");

    std::map<int, int> dense;
    std::vector<int> colour_of;
    std::vector<std::vector<int>> lists(n);
    for (int v = 0; v < n; ++v) {
        lists[v] = l.lists[v];
        std::sort(lists[v].begin(), lists[v].end());
        lists[v].erase(std::unique(lists[v].begin(), lists[v].end()), lists[v].end());
        if (fold[v] < 0) throw std::invalid_argument("solve_list_colouring: negative fold");
        if (static_cast<int>(lists[v].size()) < fold[v])
            throw std::invalid_argument("solve_list_colouring: list at vertex " +
                                        std::to_string(v) + " smaller than fold");
        for (int c : lists[v])
            if (dense.emplace(c, static_cast<int>(dense.size())).second)
                colour_of.push_back(c);
    }
    if (dense.size() > 64)
        throw ResourceLimit("solve_list_colouring: colour universe exceeds 64");

    std::vector<std::uint64_t> cand(n, 0);
    for (int v = 0; v < n; ++v)
        for (int c : lists[v]) cand[v] |= std::uint64_t{1} << dense[c];

    detail::ListColourSolver solver(g, std::move(cand), fold);
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    if (!solver.solve(std::move(verts))) return std::nullopt;

    BFoldColouring out = BFoldColouring::uncoloured(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> set;
        for (std::uint64_t m = solver.chosen[v]; m; m &= m - 1)
            set.push_back(colour_of[__builtin_ctzll(m)]);
        out.assign(v, std::move(set));
    }
    return out;
}

inline std::optional<BFoldColouring> solve_list_colouring(const Graph& g,
                                                          const ListAssignment& l,
                                                          int fold) {
    return solve_list_colouring(g, l, uniform_fold(g.vertex_count(), fold));
}

// ---------------------------------------------------------------------------
// (a,b)-colouring with canonical colour introduction: the first (highest
// degree) vertex gets {0..b-1}, and a colour may only be introduced when all
// smaller colours already appear, so the used colours always form a prefix.

inline std::optional<BFoldColouring> solve_ab_colouring(const Graph& g, int a, int b) {
    if (b < 1 || a < b) throw std::invalid_argument("solve_ab_colouring: need a >= b >= 1");
    if (a > 64) throw ResourceLimit("solve_ab_colouring: a > 64 unsupported");
    int n = g.vertex_count();
    BFoldColouring out = BFoldColouring::uncoloured(n);
    if (n == 0) return out;

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
        return x < y;
    });

    std::vector<std::uint64_t> forbidden(n, 0), chosen(n, 0);
    std::vector<bool> assigned(n, false);
    std::vector<std::pair<int, std::uint64_t>> trail;

    auto mask_below = [](int k) {
        return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    };

    auto rec = [&](auto&& self, int idx, int max_used) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        std::uint64_t avail_old = ~forbidden[v] & mask_below(max_used + 1);
        int old_count = detail::popcount(avail_old);
        for (int fresh = 0; fresh <= b; ++fresh) {
            if (max_used + fresh > a - 1) break;
            int need_old = b - fresh;
            if (need_old > old_count) continue;
            std::uint64_t fresh_bits =
                (mask_below(max_used + 1 + fresh) ^ mask_below(max_used + 1));
            bool found = detail::for_each_subset_of_size(
                avail_old, need_old, [&](std::uint64_t old_bits) {
                    std::uint64_t set = old_bits | fresh_bits;
                    std::size_t mark = trail.size();
                    chosen[v] = set;
                    assigned[v] = true;
                    bool feasible = true;
                    for (int u : g.neighbours(v)) {
                        if (assigned[u]) continue;
                        trail.push_back({u, forbidden[u]});
                        forbidden[u] |= set;
                        if (a - detail::popcount(forbidden[u]) < b) feasible = false;
                    }
                    bool ok = feasible && self(self, idx + 1, max_used + fresh);
                    if (!ok) {
                        while (trail.size() > mark) {
                            auto [u, old] = trail.back();
                            trail.pop_back();
                            forbidden[u] = old;
                        }
                        assigned[v] = false;
                        chosen[v] = 0;
                    }
                    return ok;
                });
            if (found) return true;
        }
        return false;
    };

    if (!rec(rec, 0, -1)) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        std::vector<int> set;
        for (std::uint64_t m = chosen[v]; m; m &= m - 1)
            set.push_back(__builtin_ctzll(m));
        out.assign(v, std::move(set));
    }
    return out;
}

// Least a such that g is (a,b)-colourable, swept upward from the exact
// clique / independence lower bounds.
inline int b_fold_chromatic_number(const Graph& g, int b) {
    if (b < 1) throw std::invalid_argument("b_fold_chromatic_number: need b >= 1");
    int n = g.vertex_count();
    if (n == 0) return 0;
    int alpha = independence_number(g).value;
    int omega = clique_number(g).value;
    long long from_alpha = (static_cast<long long>(b) * n + alpha - 1) / alpha;
    int a = std::max<long long>({static_cast<long long>(b) * omega, from_alpha,
                                 static_cast<long long>(b)});
    for (;; ++a)
        if (solve_ab_colouring(g, a, b)) return a;
}

struct FractionalSweep {
    Rational best;          // min over b <= b_max of chi_b / b
    int best_a = 0;
    int best_b = 1;
    Rational lower_bound;   // max(|V|/alpha, omega)
    bool exact = false;
    std::vector<std::pair<int, int>> per_b;  // (b, chi_b)
};

inline FractionalSweep fractional_chromatic_sweep(const Graph& g, int b_max) {
    if (b_max < 1) throw std::invalid_argument("fractional_chromatic_sweep: need b_max >= 1");
    if (g.vertex_count() == 0)
        return {Rational(0), 0, 1, Rational(0), true, {}};
    FractionalSweep out;
    bool have = false;
    for (int b = 1; b <= b_max; ++b) {
        int chi = b_fold_chromatic_number(g, b);
        out.per_b.emplace_back(b, chi);
        Rational value(chi, b);
        if (!have || value < out.best) {
            have = true;
            out.best = value;
            out.best_a = chi;
            out.best_b = b;
        }
    }
    int alpha = independence_number(g).value;
    int omega = clique_number(g).value;
    out.lower_bound = max(Rational(g.vertex_count(), alpha), Rational(omega));
    out.exact = out.best == out.lower_bound;
    return out;
}

// Freeze the coloured vertices of `partial` and complete the rest with
// fold-subsets of `universe`.
inline std::optional<BFoldColouring> extend_partial_colouring(
    const Graph& g, const BFoldColouring& partial, const std::vector<int>& universe,
    int fold) {
    int n = g.vertex_count();
    if (partial.size() != n)
        throw std::invalid_argument("extend_partial_colouring: colouring size mismatch");
    if (auto bad = proper_violation(g, partial))
        throw std::invalid_argument("extend_partial_colouring: partial colouring improper at edge (" +
                                    std::to_string(bad->first) + "," +
                                    std::to_string(bad->second) + ")");
    std::vector<int> uni = universe;
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());

    ListAssignment lists;
    lists.lists.assign(n, {});
    for (int v = 0; v < n; ++v) {
        if (partial.coloured(v)) {
            const auto& s = *partial.sets[v];
            if (static_cast<int>(s.size()) != fold)
                throw std::invalid_argument("extend_partial_colouring: vertex " +
                                            std::to_string(v) + " precoloured with " +
                                            std::to_string(s.size()) + " colours, fold is " +
                                            std::to_string(fold));
            for (int c : s)
                if (!std::binary_search(uni.begin(), uni.end(), c))
                    throw std::invalid_argument(
                        "extend_partial_colouring: precoloured colour outside universe");
            lists.lists[v] = s;
        } else {
            lists.lists[v] = uni;
        }
    }
    return solve_list_colouring(g, lists, fold);
}

}  // namespace multifold
