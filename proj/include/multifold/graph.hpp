#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multifold/errors.hpp"

namespace multifold {

namespace detail {

// Minimal dynamic bitset, enough for the branch-and-bound kernels below.
struct Bits {
    std::vector<std::uint64_t> w;

    Bits() = default;
    explicit Bits(int n) : w((n + 63) / 64, 0) {}

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto x : w) if (x) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    int lowest() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    Bits& andnot(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }
};

}  // namespace detail

// Simple undirected graph on dense vertex ids 0..n-1.  Immutable once built;
// catalog instances carry a label table mapping figure names to ids.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edge_list,
          std::map<std::string, int> labels = {})
        : n_(n), labels_(std::move(labels)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (auto& [u, v] : edge_list) {
            if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
            throw std::invalid_argument("Graph: duplicate edge");
        edges_ = std::move(edge_list);
        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        for (auto& [name, id] : labels_)
            if (id < 0 || id >= n_)
                throw std::invalid_argument("Graph: label '" + name + "' out of range");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool adjacent(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        int other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::binary_search(nb.begin(), nb.end(), other);
    }

    const std::map<std::string, int>& labels() const { return labels_; }

    int vertex(const std::string& name) const {
        auto it = labels_.find(name);
        if (it == labels_.end())
            throw std::invalid_argument("Graph: no vertex labelled '" + name + "'");
        return it->second;
    }

    std::string label_of(int v) const {
        for (const auto& [name, id] : labels_)
            if (id == v) return name;
        return std::to_string(v);
    }

    bool same_structure(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    detail::Bits neighbour_bits(int v) const {
        detail::Bits b(n_);
        for (int u : adj_[v]) b.set(u);
        return b;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::map<std::string, int> labels_;
};

// ---------------------------------------------------------------------------
// Constructors

inline Graph build_empty(int n) { return Graph(n, {}); }

inline Graph build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("build_cycle: need n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

inline Graph build_path(int n) {
    if (n < 1) throw std::invalid_argument("build_path: need n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph build_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

// Vertices 0..p-1 form one part, p..p+q-1 the other.
inline Graph build_complete_bipartite(int p, int q) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    return Graph(p + q, std::move(e));
}

inline Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph(g.vertex_count(), std::move(e));
}

// The substitution product G[S:H1,H2]: vertices of S blown into copies of H1,
// the rest into copies of H2; cross edges follow E(G), internal edges the
// respective factor.  Output ids are dense in (base vertex, factor vertex) order.
inline Graph blowup_product(const Graph& g, const std::vector<int>& s,
                            const Graph& h1, const Graph& h2) {
    std::vector<bool> in_s(g.vertex_count(), false);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("blowup_product: set member out of range");
        in_s[v] = true;
    }
    std::vector<int> base_offset(g.vertex_count() + 1, 0);
    for (int u = 0; u < g.vertex_count(); ++u)
        base_offset[u + 1] =
            base_offset[u] + (in_s[u] ? h1.vertex_count() : h2.vertex_count());
    int n = base_offset[g.vertex_count()];

    std::vector<std::pair<int, int>> e;
    for (auto [u, up] : g.edges()) {
        int cu = in_s[u] ? h1.vertex_count() : h2.vertex_count();
        int cup = in_s[up] ? h1.vertex_count() : h2.vertex_count();
        for (int i = 0; i < cu; ++i)
            for (int j = 0; j < cup; ++j)
                e.emplace_back(base_offset[u] + i, base_offset[up] + j);
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        const Graph& h = in_s[u] ? h1 : h2;
        for (auto [i, j] : h.edges())
            e.emplace_back(base_offset[u] + i, base_offset[u] + j);
    }
    return Graph(n, std::move(e));
}

// C_{2k+1} with the odd-position maximum independent set blown into K_n cliques
// and the even positions into K_m cliques.  Keeps the class partition around
// the base cycle, which the cyclic Painter strategy needs.
struct GnmkGraph {
    Graph graph;
    int n = 0, m = 0, k = 0;
    std::vector<int> class_of;               // vertex -> class index 0..2k
    std::vector<std::vector<int>> classes;   // class index -> vertices
};

inline GnmkGraph build_gnmk(int n, int m, int k) {
    if (n < 1 || m < 1 || k < 1) throw std::invalid_argument("build_gnmk: need n,m,k >= 1");
    Graph base = build_cycle(2 * k + 1);
    std::vector<int> odd;
    for (int i = 1; i <= 2 * k - 1; i += 2) odd.push_back(i);
    GnmkGraph out;
    out.graph = blowup_product(base, odd, build_complete(n), build_complete(m));
    out.n = n;
    out.m = m;
    out.k = k;
    out.classes.assign(2 * k + 1, {});
    out.class_of.assign(out.graph.vertex_count(), -1);
    int id = 0;
    for (int c = 0; c <= 2 * k; ++c) {
        int size = (c % 2 == 1) ? n : m;
        for (int i = 0; i < size; ++i) {
            out.class_of[id] = c;
            out.classes[c].push_back(id);
            ++id;
        }
    }
    return out;
}

inline bool is_bipartition(const Graph& g, const std::vector<int>& x,
                           const std::vector<int>& y) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int v : x) {
        if (v < 0 || v >= g.vertex_count() || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : y) {
        if (v < 0 || v >= g.vertex_count() || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (side[v] == -1) return false;
    for (auto [u, v] : g.edges())
        if (side[u] == side[v]) return false;
    return true;
}

inline std::optional<std::pair<std::vector<int>, std::vector<int>>> find_bipartition(
    const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbours(u)) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < g.vertex_count(); ++v)
        (side[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

// Line graph of a bipartite graph.  Output vertex i is edge i of h (in h's
// sorted edge order); source_edge keeps the (x,y) pair with x in X.
struct LineGraph {
    Graph graph;
    std::vector<std::pair<int, int>> source_edge;  // (x_endpoint, y_endpoint)
};

inline LineGraph line_graph_of_bipartite(const Graph& h, const std::vector<int>& x,
                                         const std::vector<int>& y) {
    if (!is_bipartition(h, x, y))
        throw std::invalid_argument("line_graph_of_bipartite: not a proper bipartition");
    std::vector<bool> in_x(h.vertex_count(), false);
    for (int v : x) in_x[v] = true;

    LineGraph out;
    const auto& he = h.edges();
    for (auto [u, v] : he)
        out.source_edge.emplace_back(in_x[u] ? u : v, in_x[u] ? v : u);

    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < he.size(); ++i)
        for (std::size_t j = i + 1; j < he.size(); ++j) {
            auto [a, b] = he[i];
            auto [c, d] = he[j];
            if (a == c || a == d || b == c || b == d)
                e.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    out.graph = Graph(static_cast<int>(he.size()), std::move(e));
    return out;
}

// ---------------------------------------------------------------------------
// Structural queries

struct IndependenceResult {
    int value = 0;
    std::vector<int> witness;
};

namespace detail {

// Tomita-style max clique with greedy colouring bound.
struct MaxCliqueSolver {
    int n;
    std::vector<Bits> adj;
    std::vector<int> best_set;
    std::vector<int> current;

    explicit MaxCliqueSolver(const Graph& g) : n(g.vertex_count()), adj(n, Bits(n)) {
        for (auto [u, v] : g.edges()) {
            adj[u].set(v);
            adj[v].set(u);
        }
    }

    void expand(Bits cand) {
        if (!cand.any()) {
            if (current.size() > best_set.size()) best_set = current;
            return;
        }
        // Greedy colouring of the candidate set; colour number bounds the
        // largest clique extension.
        std::vector<int> order, colour;
        Bits uncoloured = cand;
        int c = 0;
        while (uncoloured.any()) {
            ++c;
            Bits avail = uncoloured;
            while (avail.any()) {
                int v = avail.lowest();
                order.push_back(v);
                colour.push_back(c);
                uncoloured.reset(v);
                avail.reset(v);
                avail.andnot(adj[v]);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current.size() + colour[i] <= best_set.size()) return;
            int v = order[i];
            current.push_back(v);
            Bits next = cand;
            next &= adj[v];
            expand(next);
            current.pop_back();
            cand.reset(v);
        }
    }

    IndependenceResult run() {
        Bits all(n);
        for (int v = 0; v < n; ++v) all.set(v);
        expand(all);
        IndependenceResult r;
        r.value = static_cast<int>(best_set.size());
        r.witness = best_set;
        std::sort(r.witness.begin(), r.witness.end());
        return r;
    }
};

}  // namespace detail

// Exact maximum independent set (as max clique of the complement), with one
// witness set.  Intended for instances up to ~120 vertices.
inline IndependenceResult independence_number(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    detail::MaxCliqueSolver solver(complement(g));
    return solver.run();
}

inline IndependenceResult clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    detail::MaxCliqueSolver solver(g);
    return solver.run();
}

// True iff g contains a cycle with exactly len vertices.  DFS over paths
// anchored at their smallest vertex.
inline bool has_cycle_of_length(const Graph& g, int len) {
    if (len < 3) throw std::invalid_argument("has_cycle_of_length: need len >= 3");
    int n = g.vertex_count();
    if (n < len) return false;
    std::vector<bool> on_path(n, false);

    // depth counts vertices on the current path; anchor is the smallest.
    auto dfs = [&](auto&& self, int anchor, int v, int depth) -> bool {
        if (depth == len) return g.adjacent(v, anchor);
        for (int u : g.neighbours(v)) {
            if (u <= anchor || on_path[u]) continue;
            on_path[u] = true;
            if (self(self, anchor, u, depth + 1)) {
                on_path[u] = false;
                return true;
            }
            on_path[u] = false;
        }
        return false;
    };

    for (int s = 0; s < n; ++s) {
        on_path[s] = true;
        if (dfs(dfs, s, s, 1)) return true;
        on_path[s] = false;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Brute-force symmetry machinery (deliberately capped at small orders)

inline constexpr int kIsomorphismCap = 12;

namespace detail {

inline void map_search(const Graph& g, const Graph& h, std::vector<int>& image,
                       std::vector<bool>& used, int v,
                       std::vector<std::vector<int>>* all, bool* found_one) {
    int n = g.vertex_count();
    if (v == n) {
        if (all) all->push_back(image);
        if (found_one) *found_one = true;
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || g.degree(v) != h.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.adjacent(u, v) != h.adjacent(image[u], w)) ok = false;
        if (!ok) continue;
        image[v] = w;
        used[w] = true;
        map_search(g, h, image, used, v + 1, all, found_one);
        used[w] = false;
        if (found_one && *found_one) return;
    }
}

}  // namespace detail

// All automorphisms of g (as permutations), brute force; identity-only beyond
// the cap so callers can use the result for optional symmetry folding.
inline std::vector<std::vector<int>> automorphism_group(const Graph& g,
                                                        int cap = kIsomorphismCap) {
    int n = g.vertex_count();
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    if (n > cap) return {identity};
    std::vector<std::vector<int>> all;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    detail::map_search(g, g, image, used, 0, &all, nullptr);
    return all;
}

inline bool is_isomorphic_small(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    int n = g.vertex_count();
    if (n > kIsomorphismCap)
        throw ResourceLimit("is_isomorphic_small: only supported up to " +
                            std::to_string(kIsomorphismCap) + " vertices");
    std::vector<int> dg, dh;
    for (int v = 0; v < n; ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    bool found = false;
    detail::map_search(g, h, image, used, 0, nullptr, &found);
    return found;
}

}  // namespace multifold
