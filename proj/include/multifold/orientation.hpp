#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multifold/graph.hpp"

namespace multifold {

// A directed version of a graph: exactly one direction per base edge.
class Orientation {
public:
    Orientation() = default;

    Orientation(Graph base, std::vector<std::pair<int, int>> arcs) : base_(std::move(base)) {
        std::vector<std::pair<int, int>> normalised;
        for (auto [t, h] : arcs)
            normalised.emplace_back(std::min(t, h), std::max(t, h));
        std::sort(normalised.begin(), normalised.end());
        if (normalised != base_.edges())
            throw std::invalid_argument("Orientation: arcs do not match base edge set");
        arcs_ = std::move(arcs);
        out_.assign(base_.vertex_count(), {});
        for (auto [t, h] : arcs_) out_[t].push_back(h);
        for (auto& o : out_) std::sort(o.begin(), o.end());
    }

    const Graph& base() const { return base_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbours(int v) const { return out_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }

    int max_out_degree() const {
        int d = 0;
        for (int v = 0; v < base_.vertex_count(); ++v) d = std::max(d, out_degree(v));
        return d;
    }

    bool has_arc(int t, int h) const {
        return std::binary_search(out_[t].begin(), out_[t].end(), h);
    }

private:
    Graph base_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_;
};

// Proper edge colouring of a bipartite graph with Delta colours (1..Delta),
// by the classic augmenting (Kempe chain) procedure.
inline std::vector<int> edge_colour_bipartite(const Graph& h, const std::vector<int>& x,
                                              const std::vector<int>& y) {
    if (!is_bipartition(h, x, y))
        throw std::invalid_argument("edge_colour_bipartite: not a proper bipartition");
    int n = h.vertex_count();
    int delta = h.max_degree();
    int m = h.edge_count();
    std::vector<bool> in_x(n, false);
    for (int v : x) in_x[v] = true;

    // colour_at[v][c] = edge id with colour c at v, or -1.
    std::vector<std::vector<int>> colour_at(n, std::vector<int>(delta + 1, -1));
    std::vector<int> colour(m, 0);
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < m; ++e) {
        incident[h.edges()[e].first].push_back(e);
        incident[h.edges()[e].second].push_back(e);
    }

    auto free_colour = [&](int v) {
        for (int c = 1; c <= delta; ++c)
            if (colour_at[v][c] == -1) return c;
        return -1;
    };

    for (int e = 0; e < m; ++e) {
        auto [u, v] = h.edges()[e];
        int xe = in_x[u] ? u : v;
        int ye = in_x[u] ? v : u;
        int alpha = free_colour(xe);
        int beta = free_colour(ye);
        if (colour_at[ye][alpha] == -1) {
            colour[e] = alpha;
            colour_at[xe][alpha] = e;
            colour_at[ye][alpha] = e;
            continue;
        }
        // Flip the alpha/beta alternating path starting at ye; in a bipartite
        // graph it cannot reach xe, so alpha becomes free at both ends.
        std::vector<int> path;
        std::vector<int> touched{ye};
        int cur = ye, want = alpha;
        while (colour_at[cur][want] != -1) {
            int f = colour_at[cur][want];
            path.push_back(f);
            cur = h.edges()[f].first == cur ? h.edges()[f].second : h.edges()[f].first;
            touched.push_back(cur);
            want = (want == alpha) ? beta : alpha;
        }
        for (int f : path) colour[f] = (colour[f] == alpha) ? beta : alpha;
        for (int w : touched) {
            colour_at[w][alpha] = -1;
            colour_at[w][beta] = -1;
        }
        for (int w : touched)
            for (int f : incident[w])
                if (colour[f] == alpha || colour[f] == beta) colour_at[w][colour[f]] = f;
        colour[e] = alpha;
        colour_at[xe][alpha] = e;
        colour_at[ye][alpha] = e;
    }

    for (int v = 0; v < n; ++v) {
        std::vector<bool> seen(delta + 1, false);
        for (int f : incident[v]) {
            if (colour[f] < 1 || colour[f] > delta || seen[colour[f]])
                throw std::logic_error("edge_colour_bipartite: produced an improper colouring");
            seen[colour[f]] = true;
        }
    }
    return colour;
}

struct GalvinResult {
    LineGraph line;
    Orientation orientation;
    std::vector<int> edge_colour;  // colour of source edge i of h
    int delta = 0;
};

// Kernel-perfect orientation of the line graph of a bipartite graph: colour
// the edges with Delta colours, then point higher->lower around X-endpoints
// and lower->higher around Y-endpoints.  Max out-degree is at most Delta-1.
inline GalvinResult galvin_orientation(const Graph& h, const std::vector<int>& x,
                                       const std::vector<int>& y) {
    GalvinResult out;
    out.edge_colour = edge_colour_bipartite(h, x, y);
    out.delta = h.max_degree();
    out.line = line_graph_of_bipartite(h, x, y);
    std::vector<bool> in_x(h.vertex_count(), false);
    for (int v : x) in_x[v] = true;

    std::vector<std::pair<int, int>> arcs;
    for (auto [i, j] : out.line.graph.edges()) {
        auto [a, b] = h.edges()[i];
        auto [c, d] = h.edges()[j];
        int shared = (a == c || a == d) ? a : b;
        int ci = out.edge_colour[i], cj = out.edge_colour[j];
        bool i_to_j = in_x[shared] ? (ci > cj) : (ci < cj);
        arcs.emplace_back(i_to_j ? i : j, i_to_j ? j : i);
    }
    out.orientation = Orientation(out.line.graph, std::move(arcs));
    if (out.delta >= 1 && out.orientation.max_out_degree() > out.delta - 1)
        throw std::logic_error("galvin_orientation: out-degree bound violated");
    return out;
}

// Smallest independent subset of x absorbing x: every v in x\I has an
// out-neighbour in I.  Brute force over subsets by ascending size.
inline std::optional<std::vector<int>> find_kernel(const Orientation& d,
                                                   const std::vector<int>& x) {
    std::vector<int> xs = x;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    int t = static_cast<int>(xs.size());
    if (t == 0) return std::vector<int>{};
    if (t > 25) throw ResourceLimit("find_kernel: set too large for brute force");

    const Graph& g = d.base();
    for (int size = 1; size <= t; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<int> cand;
            for (int i : idx) cand.push_back(xs[i]);
            bool independent = true;
            for (std::size_t i = 0; i < cand.size() && independent; ++i)
                for (std::size_t j = i + 1; j < cand.size() && independent; ++j)
                    if (g.adjacent(cand[i], cand[j])) independent = false;
            if (independent) {
                bool absorbing = true;
                for (int v : xs) {
                    if (std::binary_search(cand.begin(), cand.end(), v)) continue;
                    bool hit = false;
                    for (int u : d.out_neighbours(v))
                        if (std::binary_search(cand.begin(), cand.end(), u)) {
                            hit = true;
                            break;
                        }
                    if (!hit) {
                        absorbing = false;
                        break;
                    }
                }
                if (absorbing) return cand;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == t - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace multifold
