#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "multifold/errors.hpp"
#include "multifold/graph.hpp"

namespace multifold {

// A (possibly partial) b-fold colouring: each coloured vertex carries a sorted
// set of colour ids.  Proper means adjacent sets are disjoint.
struct BFoldColouring {
    std::vector<std::optional<std::vector<int>>> sets;

    static BFoldColouring uncoloured(int n) {
        BFoldColouring c;
        c.sets.assign(n, std::nullopt);
        return c;
    }

    int size() const { return static_cast<int>(sets.size()); }
    bool coloured(int v) const { return sets[v].has_value(); }
    bool complete() const {
        for (const auto& s : sets)
            if (!s) return false;
        return true;
    }

    void assign(int v, std::vector<int> colours) {
        std::sort(colours.begin(), colours.end());
        sets[v] = std::move(colours);
    }
};

// A list assignment: every vertex of the target graph has a list.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    static ListAssignment uniform(int n, std::vector<int> list) {
        std::sort(list.begin(), list.end());
        ListAssignment l;
        l.lists.assign(n, list);
        return l;
    }

    int size() const { return static_cast<int>(lists.size()); }
};

inline std::vector<int> uniform_fold(int n, int b) { return std::vector<int>(n, b); }

namespace detail {

inline bool sets_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

}  // namespace detail

// First improper edge among coloured pairs, if any.  Partial colourings are
// fine here; uncoloured endpoints are skipped.
inline std::optional<std::pair<int, int>> proper_violation(const Graph& g,
                                                           const BFoldColouring& c) {
    for (auto [u, v] : g.edges())
        if (c.coloured(u) && c.coloured(v) &&
            detail::sets_intersect(*c.sets[u], *c.sets[v]))
            return std::make_pair(u, v);
    return std::nullopt;
}

// True iff every set has the demanded size and adjacent sets are disjoint.
// A vertex missing from c entirely is an error, not "false".
inline bool is_proper_bfold(const Graph& g, const BFoldColouring& c,
                            const std::vector<int>& fold) {
    if (c.size() != g.vertex_count() ||
        fold.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("is_proper_bfold: size mismatch");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!c.coloured(v))
            throw IncompleteColouring("is_proper_bfold: vertex " + std::to_string(v) +
                                      " has no colour set");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(c.sets[v]->size()) != fold[v]) return false;
    return !proper_violation(g, c).has_value();
}

inline bool is_proper_bfold(const Graph& g, const BFoldColouring& c, int fold) {
    return is_proper_bfold(g, c, uniform_fold(g.vertex_count(), fold));
}

}  // namespace multifold
