#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "multifold/colour_solver.hpp"
#include "multifold/colouring.hpp"
#include "multifold/graph.hpp"
#include "multifold/rational.hpp"

namespace multifold {

enum class ChoosableStatus { Choosable, NotChoosable, Timeout };

struct ChoosableResult {
    ChoosableStatus status = ChoosableStatus::Timeout;
    std::optional<ListAssignment> witness;  // a bad a-assignment, when not choosable
    unsigned long long nodes = 0;           // enumeration nodes visited
};

struct ChoosabilityOptions {
    std::chrono::milliseconds budget{600'000};
    int threads = 1;
};

namespace detail {

// Canonical enumeration of a-list assignments up to colour permutation over
// the reduced graph: the first list is {0..a-1} and each later list is a
// subset of the colours used so far plus a contiguous block of fresh ones.
// Every assignment is colour-isomorphic to an enumerated one (relabel colours
// by first appearance in vertex order); see docs/choosability-enumeration.md.
struct ChoosableSearch {
    const Graph& reduced;
    int a, b;
    std::vector<int> order;           // enumeration order, descending degree
    std::vector<std::uint64_t> list_mask;
    std::chrono::steady_clock::time_point deadline;
    unsigned long long nodes = 0;
    bool timed_out = false;
    std::optional<std::vector<std::uint64_t>> witness_masks;  // per order position

    ChoosableSearch(const Graph& r, int a_, int b_,
                    std::chrono::steady_clock::time_point dl)
        : reduced(r), a(a_), b(b_), deadline(dl) {
        int n = r.vertex_count();
        order.resize(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (r.degree(x) != r.degree(y)) return r.degree(x) > r.degree(y);
            return x < y;
        });
        list_mask.assign(n, 0);
    }

    // Is the prefix order[0..i] colourable from its lists?  Greedy first, the
    // exact solver only on greedy failure.
    bool prefix_colourable(int i) {
        std::vector<std::uint64_t> chosen(i + 1, 0);
        bool greedy_ok = true;
        for (int p = 0; p <= i && greedy_ok; ++p) {
            std::uint64_t cand = list_mask[p];
            for (int q = 0; q < p; ++q)
                if (reduced.adjacent(order[p], order[q])) cand &= ~chosen[q];
            if (popcount(cand) < b) {
                greedy_ok = false;
            } else {
                std::uint64_t take = 0;
                for (int t = 0; t < b; ++t) {
                    std::uint64_t low = cand & (~cand + 1);
                    take |= low;
                    cand ^= low;
                }
                chosen[p] = take;
            }
        }
        if (greedy_ok) return true;

        std::vector<std::pair<int, int>> edges;
        for (int p = 0; p <= i; ++p)
            for (int q = p + 1; q <= i; ++q)
                if (reduced.adjacent(order[p], order[q])) edges.emplace_back(p, q);
        Graph prefix(i + 1, std::move(edges));
        ListAssignment lists;
        lists.lists.resize(i + 1);
        for (int p = 0; p <= i; ++p)
            for (std::uint64_t m = list_mask[p]; m; m &= m - 1)
                lists.lists[p].push_back(__builtin_ctzll(m));
        return solve_list_colouring(prefix, lists, b).has_value();
    }

    // Explore levels i.. with `used` colours so far.  Returns true when a
    // witness was found (recorded in witness_masks) or on timeout.
    bool run(int i, int used) {
        if (timed_out) return true;
        if (i == static_cast<int>(order.size())) return false;
        ++nodes;
        if (std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return true;
        }
        for (int fresh = 0; fresh <= a; ++fresh) {
            if (used + fresh > 64) break;
            int need_old = a - fresh;
            if (need_old > used) continue;
            std::uint64_t old_universe =
                used >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
            std::uint64_t fresh_bits =
                ((std::uint64_t{1} << fresh) - 1) << used;
            bool stop = for_each_subset_of_size(
                old_universe, need_old, [&](std::uint64_t old_bits) {
                    list_mask[i] = old_bits | fresh_bits;
                    if (!prefix_colourable(i)) {
                        record_witness(i, used + fresh);
                        return true;
                    }
                    return run(i + 1, used + fresh);
                });
            if (stop) return true;
        }
        return false;
    }

    // As `run`, but at level 1 only explores the subtree for one prescribed
    // list (used by the parallel driver).
    bool run_level1_candidate(std::uint64_t mask, int used_after) {
        list_mask[1] = mask;
        if (!prefix_colourable(1)) {
            record_witness(1, used_after);
            return true;
        }
        return run(2, used_after);
    }

    void record_witness(int i, int used) {
        // The blocked prefix dooms every completion; pad the rest with fresh
        // disjoint lists.
        std::vector<std::uint64_t> masks(order.size(), 0);
        for (int p = 0; p <= i; ++p) masks[p] = list_mask[p];
        witness_masks = std::move(masks);
        pad_fresh_from_ = used;
        pad_start_ = i + 1;
    }

    int pad_fresh_from_ = 0;
    int pad_start_ = 0;
};

}  // namespace detail

// Decide (a,b)-choosability by canonical enumeration of list assignments.
// First reduces away vertices with a >= b(deg+1) (always completable last; a
// witness on the reduced graph lifts with fresh lists).  Timeout is a result,
// never a silent "choosable".
inline ChoosableResult is_ab_choosable(const Graph& g, int a, int b,
                                       const ChoosabilityOptions& opt = {}) {
    if (b < 1 || a < b) throw std::invalid_argument("is_ab_choosable: need a >= b >= 1");
    int n = g.vertex_count();
    auto deadline = std::chrono::steady_clock::now() + opt.budget;

    // Degeneracy reduction.
    std::vector<bool> alive(n, true);
    std::vector<int> removed_order;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int deg = 0;
            for (int u : g.neighbours(v))
                if (alive[u]) ++deg;
            if (a >= b * (deg + 1)) {
                alive[v] = false;
                removed_order.push_back(v);
                changed = true;
            }
        }
    }
    std::vector<int> kept;
    for (int v = 0; v < n; ++v)
        if (alive[v]) kept.push_back(v);

    ChoosableResult result;
    if (kept.empty()) {
        result.status = ChoosableStatus::Choosable;
        return result;
    }

    std::vector<int> dense_of(n, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) dense_of[kept[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (alive[u] && alive[v]) edges.emplace_back(dense_of[u], dense_of[v]);
    Graph reduced(static_cast<int>(kept.size()), std::move(edges));

    if (static_cast<long long>(reduced.vertex_count()) * a > 64)
        throw ResourceLimit("is_ab_choosable: colour universe would exceed 64");

    auto assemble_witness = [&](const detail::ChoosableSearch& search) {
        ListAssignment w;
        w.lists.assign(n, {});
        for (std::size_t p = 0; p < search.order.size(); ++p) {
            std::vector<int> list;
            for (std::uint64_t m = (*search.witness_masks)[p]; m; m &= m - 1)
                list.push_back(__builtin_ctzll(m));
            w.lists[kept[search.order[p]]] = std::move(list);
        }
        int next = std::max(search.pad_fresh_from_, 64);
        for (int p = search.pad_start_; p < static_cast<int>(search.order.size()); ++p) {
            std::vector<int> list;
            for (int t = 0; t < a; ++t) list.push_back(next++);
            w.lists[kept[search.order[p]]] = std::move(list);
        }
        for (int v : removed_order) {
            std::vector<int> list;
            for (int t = 0; t < a; ++t) list.push_back(next++);
            w.lists[v] = std::move(list);
        }
        return w;
    };

    auto finish_with = [&](detail::ChoosableSearch& search) {
        result.nodes += search.nodes;
        if (search.witness_masks) {
            ListAssignment w = assemble_witness(search);
            if (solve_list_colouring(g, w, b))
                throw std::logic_error("is_ab_choosable: witness failed re-verification");
            result.status = ChoosableStatus::NotChoosable;
            result.witness = std::move(w);
            return true;
        }
        if (search.timed_out) {
            result.status = ChoosableStatus::Timeout;
            return true;
        }
        return false;
    };

    int threads = std::max(1, opt.threads);
    if (threads == 1 || reduced.vertex_count() < 2) {
        detail::ChoosableSearch search(reduced, a, b, deadline);
        std::uint64_t first = (std::uint64_t{1} << a) - 1;
        search.list_mask[0] = first;
        bool stopped = search.prefix_colourable(0)
                           ? search.run(1, a)
                           : (search.record_witness(0, a), true);
        (void)stopped;
        if (!finish_with(search)) result.status = ChoosableStatus::Choosable;
        return result;
    }

    // Parallel mode: split the level-1 subtrees across workers; any witness is
    // then re-derived by a sequential pass so the emitted assignment does not
    // depend on scheduling.
    std::vector<std::pair<std::uint64_t, int>> level1;  // (mask, used after)
    for (int fresh = 0; fresh <= a; ++fresh) {
        int need_old = a - fresh;
        if (need_old > a) continue;
        std::uint64_t old_universe = (std::uint64_t{1} << a) - 1;
        std::uint64_t fresh_bits = ((std::uint64_t{1} << fresh) - 1) << a;
        detail::for_each_subset_of_size(old_universe, need_old, [&](std::uint64_t old_bits) {
            level1.emplace_back(old_bits | fresh_bits, a + fresh);
            return false;
        });
    }

    std::atomic<long long> next_index{0};
    std::atomic<long long> witness_at{static_cast<long long>(level1.size())};
    std::atomic<bool> any_timeout{false};
    std::atomic<unsigned long long> total_nodes{0};

    auto worker = [&]() {
        while (true) {
            long long idx = next_index.fetch_add(1);
            if (idx >= static_cast<long long>(level1.size())) break;
            if (idx > witness_at.load()) continue;
            detail::ChoosableSearch search(reduced, a, b, deadline);
            search.list_mask[0] = (std::uint64_t{1} << a) - 1;
            search.run_level1_candidate(level1[idx].first, level1[idx].second);
            total_nodes += search.nodes;
            if (search.timed_out) any_timeout = true;
            if (search.witness_masks) {
                long long cur = witness_at.load();
                while (idx < cur && !witness_at.compare_exchange_weak(cur, idx)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    result.nodes = total_nodes.load();

    if (witness_at.load() < static_cast<long long>(level1.size())) {
        // Recompute the canonically-first witness sequentially before emission.
        ChoosabilityOptions seq = opt;
        seq.threads = 1;
        ChoosableResult redo = is_ab_choosable(g, a, b, seq);
        redo.nodes += result.nodes;
        return redo;
    }
    result.status = any_timeout ? ChoosableStatus::Timeout : ChoosableStatus::Choosable;
    return result;
}

struct KFoldChoiceResult {
    std::optional<int> value;
    bool timed_out = false;
};

// Least a with (a,k)-choosable; the sweep starts at chi_k and is bounded above
// by k(Delta+1), where the reduction certifies choosability outright.
inline KFoldChoiceResult kfold_choice_number(const Graph& g, int k,
                                             const ChoosabilityOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("kfold_choice_number: need k >= 1");
    KFoldChoiceResult out;
    for (int a = std::max(k, b_fold_chromatic_number(g, k));; ++a) {
        ChoosableResult r = is_ab_choosable(g, a, k, opt);
        if (r.status == ChoosableStatus::Choosable) {
            out.value = a;
            return out;
        }
        if (r.status == ChoosableStatus::Timeout) {
            out.timed_out = true;
            return out;
        }
    }
}

struct LadderRow {
    int k = 0;
    std::optional<int> ch_k;  // empty = timed out (gap)
};

struct LadderResult {
    std::vector<LadderRow> rows;
    std::optional<Rational> lower_bound;  // running max of (ch_k - 1)/k
};

// The strong-fractional ladder: for each k <= k_max compute ch_k and
// (ch_k - 1)/k; the running maximum is a certified lower bound.  Timeouts
// leave gaps, never guesses.
inline LadderResult strong_ladder(const Graph& g, int k_max,
                                  const ChoosabilityOptions& opt = {}) {
    if (k_max < 1) throw std::invalid_argument("strong_ladder: need k_max >= 1");
    LadderResult out;
    for (int k = 1; k <= k_max; ++k) {
        KFoldChoiceResult r = kfold_choice_number(g, k, opt);
        out.rows.push_back({k, r.value});
        if (r.value) {
            Rational v(*r.value - 1, k);
            if (!out.lower_bound || *out.lower_bound < v) out.lower_bound = v;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Amplification: one gadget copy per pair of m-subsets (A of X, B of Y), all
// copies sharing u and v, whose lists become X and Y.

using ListTemplate =
    std::function<ListAssignment(const std::vector<int>&, const std::vector<int>&)>;

struct AmplifiedGadget {
    Graph graph;
    ListAssignment lists;
    int u = 0, v = 1;  // composite ids of the shared pair
    int copies = 0;
    std::vector<int> x_colours, y_colours;
};

inline AmplifiedGadget amplify_gadget(const Graph& t, int u, int v, const ListTemplate& tmpl,
                                      int x_size, int m) {
    int nt = t.vertex_count();
    if (u < 0 || v < 0 || u >= nt || v >= nt || u == v)
        throw std::invalid_argument("amplify_gadget: bad designated vertices");
    if (t.adjacent(u, v))
        throw std::invalid_argument("amplify_gadget: designated vertices must be non-adjacent");
    if (m < 1 || x_size < m) throw std::invalid_argument("amplify_gadget: need x_size >= m >= 1");

    std::vector<int> X, Y;
    for (int c = 0; c < x_size; ++c) X.push_back(c);
    for (int c = 0; c < x_size; ++c) Y.push_back(x_size + c);

    std::vector<std::vector<int>> a_subsets, b_subsets;
    std::vector<int> idx(m);
    auto combinations = [&](const std::vector<int>& pool, std::vector<std::vector<int>>& out) {
        for (int i = 0; i < m; ++i) idx[i] = i;
        int p = static_cast<int>(pool.size());
        while (true) {
            std::vector<int> c;
            for (int i : idx) c.push_back(pool[i]);
            out.push_back(std::move(c));
            int i = m - 1;
            while (i >= 0 && idx[i] == p - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    combinations(X, a_subsets);
    combinations(Y, b_subsets);

    std::vector<int> rank(nt, -1);
    int r = 0;
    for (int w = 0; w < nt; ++w)
        if (w != u && w != v) rank[w] = r++;
    int per_copy = nt - 2;

    AmplifiedGadget out;
    out.copies = static_cast<int>(a_subsets.size() * b_subsets.size());
    out.x_colours = X;
    out.y_colours = Y;
    int n = 2 + out.copies * per_copy;

    std::vector<std::pair<int, int>> edges;
    ListAssignment lists;
    lists.lists.assign(n, {});
    lists.lists[0] = X;
    lists.lists[1] = Y;

    int copy = 0;
    for (const auto& A : a_subsets) {
        for (const auto& B : b_subsets) {
            int base = 2 + copy * per_copy;
            auto cid = [&](int w) { return w == u ? 0 : (w == v ? 1 : base + rank[w]); };
            for (auto [p, q] : t.edges()) edges.emplace_back(cid(p), cid(q));
            ListAssignment copy_lists = tmpl(A, B);
            if (copy_lists.size() != nt)
                throw std::invalid_argument("amplify_gadget: template list count mismatch");
            std::vector<int> la = copy_lists.lists[u], lb = copy_lists.lists[v];
            std::sort(la.begin(), la.end());
            std::sort(lb.begin(), lb.end());
            if (la != A || lb != B)
                throw std::invalid_argument(
                    "amplify_gadget: template must give u the list A and v the list B");
            for (int w = 0; w < nt; ++w)
                if (w != u && w != v) lists.lists[base + rank[w]] = copy_lists.lists[w];
            ++copy;
        }
    }
    out.graph = Graph(n, std::move(edges));
    out.lists = std::move(lists);
    return out;
}

}  // namespace multifold
