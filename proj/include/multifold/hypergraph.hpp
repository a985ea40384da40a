#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "multifold/colouring.hpp"
#include "multifold/graph.hpp"
#include "multifold/rational.hpp"

namespace multifold {

struct Hypergraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;

    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<int>> e) : vertex_count(n), edges(std::move(e)) {
        for (auto& edge : edges) {
            std::sort(edge.begin(), edge.end());
            edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
            for (int v : edge)
                if (v < 0 || v >= vertex_count)
                    throw std::invalid_argument("Hypergraph: edge member out of range");
        }
    }

    // Uniformity degree, or nullopt when edge sizes differ (or no edges).
    std::optional<int> uniformity() const {
        if (edges.empty()) return std::nullopt;
        int p = static_cast<int>(edges[0].size());
        for (const auto& e : edges)
            if (static_cast<int>(e.size()) != p) return std::nullopt;
        return p;
    }
};

// True iff every hyperedge contains at least b vertices of each of the two
// colours (colours are 1 and 2).
inline bool is_b_proper_2colouring(const Hypergraph& h, const std::vector<int>& colouring,
                                   int b) {
    if (colouring.size() != static_cast<std::size_t>(h.vertex_count))
        throw std::invalid_argument("is_b_proper_2colouring: colouring not total");
    for (int c : colouring)
        if (c != 1 && c != 2)
            throw std::invalid_argument("is_b_proper_2colouring: colours must be 1 or 2");
    for (const auto& e : h.edges) {
        int ones = 0;
        for (int v : e)
            if (colouring[v] == 1) ++ones;
        if (ones < b || static_cast<int>(e.size()) - ones < b) return false;
    }
    return true;
}

// m * sum_{i<b} C(p,i) / 2^(p-1), exactly.  A value below 1 certifies that
// every p-uniform hypergraph with m edges has a b-proper 2-colouring.
inline Rational lemma41_bound(int p, int b, int m) {
    if (p < b || b < 1) throw std::invalid_argument("lemma41_bound: need p >= b >= 1");
    if (m < 0) throw std::invalid_argument("lemma41_bound: need m >= 0");
    if (p > 62) throw ResourceLimit("lemma41_bound: p > 62 overflows the exact arithmetic");
    Rational sum(0);
    long long binom = 1;  // C(p, 0)
    for (int i = 0; i < b; ++i) {
        sum = sum + Rational(binom);
        __int128 next = static_cast<__int128>(binom) * (p - i) / (i + 1);
        if (next > INT64_MAX) throw ResourceLimit("lemma41_bound: binomial overflow");
        binom = static_cast<long long>(next);
    }
    return Rational(m) * sum / Rational(1LL << (p - 1));
}

// Repeated uniform random 2-colouring (one bit per vertex, colour = 1 + bit)
// until no edge has fewer than b vertices of either colour.  Deterministic
// under the seed; nullopt after max_trials is a legitimate outcome.
inline std::optional<std::vector<int>> random_b_proper_2colouring(const Hypergraph& h, int b,
                                                                  int max_trials,
                                                                  std::uint64_t seed) {
    auto p = h.uniformity();
    if (!p || *p < 2 * b)
        throw std::invalid_argument(
            "random_b_proper_2colouring: hypergraph must be p-uniform with p >= 2b");
    std::mt19937_64 rng(seed);
    std::vector<int> colouring(h.vertex_count);
    for (int trial = 0; trial < max_trials; ++trial) {
        for (int v = 0; v < h.vertex_count; ++v)
            colouring[v] = 1 + static_cast<int>(rng() & 1);
        if (is_b_proper_2colouring(h, colouring, b)) return colouring;
    }
    return std::nullopt;
}

// The list-assignment reduction: hypergraph vertices are the distinct colours
// across all lists (densely renumbered), one kb-sized hyperedge per graph
// vertex, in graph-vertex order.
struct ListsHypergraph {
    Hypergraph hypergraph;
    std::vector<int> colour_of_vertex;  // hypergraph vertex -> original colour
    std::map<int, int> vertex_of_colour;
};

inline ListsHypergraph hypergraph_from_lists(const Graph& g, const std::vector<int>& x,
                                             const std::vector<int>& y,
                                             const ListAssignment& l, int k, int b) {
    if (!is_bipartition(g, x, y))
        throw std::invalid_argument("hypergraph_from_lists: not a proper bipartition");
    if (l.size() != g.vertex_count())
        throw std::invalid_argument("hypergraph_from_lists: list count mismatch");
    if (k < 1 || b < 1) throw std::invalid_argument("hypergraph_from_lists: need k,b >= 1");

    ListsHypergraph out;
    std::vector<std::vector<int>> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> list = l.lists[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (static_cast<int>(list.size()) != k * b)
            throw std::invalid_argument("hypergraph_from_lists: list at vertex " +
                                        std::to_string(v) + " is not kb-sized");
        std::vector<int> edge;
        for (int c : list) {
            auto [it, fresh] = out.vertex_of_colour.emplace(
                c, static_cast<int>(out.colour_of_vertex.size()));
            if (fresh) out.colour_of_vertex.push_back(c);
            edge.push_back(it->second);
        }
        edges.push_back(std::move(edge));
    }
    out.hypergraph = Hypergraph(static_cast<int>(out.colour_of_vertex.size()), std::move(edges));
    return out;
}

// Pull a b-proper 2-colouring of the reduction back to a proper (L,b)-
// colouring of g: X-vertices take their b lowest colour-1 list members,
// Y-vertices their b lowest colour-2 members.
inline BFoldColouring colouring_transfer(const Graph& g, const std::vector<int>& x,
                                         const std::vector<int>& y, const ListAssignment& l,
                                         const ListsHypergraph& lh,
                                         const std::vector<int>& twocolouring, int b) {
    if (!is_b_proper_2colouring(lh.hypergraph, twocolouring, b))
        throw std::invalid_argument("colouring_transfer: 2-colouring is not b-proper");
    std::vector<bool> in_x(g.vertex_count(), false);
    for (int v : x) in_x[v] = true;

    BFoldColouring out = BFoldColouring::uncoloured(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int want = in_x[v] ? 1 : 2;
        std::vector<int> list = l.lists[v];
        std::sort(list.begin(), list.end());
        std::vector<int> take;
        for (int c : list) {
            if (static_cast<int>(take.size()) == b) break;
            if (twocolouring[lh.vertex_of_colour.at(c)] == want) take.push_back(c);
        }
        if (static_cast<int>(take.size()) != b)
            throw std::logic_error("colouring_transfer: list lost its guaranteed colours");
        out.assign(v, std::move(take));
    }
    return out;
}

}  // namespace multifold
