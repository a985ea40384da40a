#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "multifold/choosability.hpp"
#include "multifold/colouring.hpp"
#include "multifold/graph.hpp"

namespace multifold {

// ---------------------------------------------------------------------------
// The three planar gadgets, transcribed once from the figures with their
// parameterised list assignments.  Blocks are disjoint integer ranges in the
// order A,B,C,D,E(,F).

struct GadgetSpec {
    std::string id;
    int m = 1;
    int epsilon_m = 0;
    std::map<std::string, std::vector<int>> blocks;
    Graph graph;
    ListAssignment lists;
    int u = 0, v = 1;  // designated non-adjacent pair for amplification
    int list_size = 0; // the uniform list size away from u,v
};

enum class Fig4Y3Side { A, B };

namespace detail {

struct GadgetDef {
    std::vector<std::string> names;                          // id order
    std::vector<std::pair<std::string, std::string>> edges;  // by name
    std::vector<std::pair<std::string, int>> block_sizes;    // in block order, as (name, size)
    std::map<std::string, std::vector<std::string>> list_of; // vertex -> block names
    int epsilon_divisor = 1;
};

inline GadgetDef fig2_def() {
    GadgetDef d;
    d.names = {"u", "v", "x", "y", "u1", "u2", "v1", "v2", "z"};
    d.edges = {{"u", "x"},  {"x", "u1"}, {"u1", "z"}, {"z", "u2"}, {"u2", "y"},
               {"y", "u"},  {"u", "u2"}, {"v1", "u1"}, {"u1", "u"}, {"u", "z"},
               {"z", "v"},  {"v", "x"},  {"x", "v1"}, {"v1", "z"}, {"v", "v2"},
               {"v2", "u2"}, {"v1", "v"}, {"v", "y"},  {"y", "v2"}, {"z", "v2"}};
    d.epsilon_divisor = 3;
    d.list_of = {
        {"u", {"A"}},
        {"v", {"B"}},
        {"x", {"A", "B", "F", "E"}},
        {"y", {"A", "B", "F", "E"}},
        {"u1", {"A", "C", "F", "E"}},
        {"v1", {"B", "C", "F", "E"}},
        {"u2", {"A", "D", "F", "E"}},
        {"v2", {"B", "D", "F", "E"}},
        {"z", {"A", "B", "C", "D", "E"}},
    };
    return d;
}

inline GadgetDef fig3_def() {
    GadgetDef d;
    d.names = {"u", "v", "u1", "u2", "v1", "v2", "x", "y"};
    d.edges = {{"u", "u1"}, {"u1", "x"}, {"x", "y"},   {"y", "u2"}, {"u2", "u"},
               {"x", "v1"}, {"v1", "v"}, {"v", "v2"},  {"v2", "y"}, {"u1", "v1"},
               {"u2", "v2"}};
    d.epsilon_divisor = 2;
    d.list_of = {
        {"u", {"A"}},
        {"v", {"B"}},
        {"u1", {"A", "C", "E"}},
        {"u2", {"A", "C", "E"}},
        {"v1", {"B", "C", "E"}},
        {"v2", {"B", "C", "E"}},
        {"x", {"C", "D", "E"}},
        {"y", {"C", "D", "E"}},
    };
    return d;
}

inline GadgetDef fig4_def(Fig4Y3Side y3_side) {
    GadgetDef d;
    d.names = {"u",  "v",  "z",  "x",  "y",  "w",  "u1", "u2", "v1", "v2",
               "z1", "z2", "x1", "x2", "x3", "y1", "y2", "y3", "w1", "w2"};
    d.edges = {{"u", "u1"},  {"u1", "z1"}, {"z1", "z"},  {"z", "z2"},  {"z2", "u2"},
               {"u2", "u"},  {"v1", "v"},  {"v", "v2"},  {"v2", "z2"}, {"z", "x"},
               {"x", "z1"},  {"z", "y"},   {"y", "z2"},  {"x", "x1"},  {"x1", "x2"},
               {"x2", "x3"}, {"x3", "x1"}, {"y", "y1"},  {"y1", "y2"}, {"y2", "y3"},
               {"y3", "y1"}, {"u1", "v1"}, {"v1", "z1"}, {"u2", "v2"}, {"x2", "v"},
               {"v", "y2"},  {"x3", "w1"}, {"y3", "w2"}, {"z", "w"},   {"w", "w1"},
               {"w1", "w2"}, {"w2", "w"}};
    d.epsilon_divisor = 12;
    std::vector<std::string> a_side = {"u1", "u2", "w1", "x3", "y1", "z1"};
    std::vector<std::string> b_side = {"v1", "v2", "w2", "x1", "x2", "y2", "z2"};
    (y3_side == Fig4Y3Side::A ? a_side : b_side).push_back("y3");
    d.list_of = {
        {"u", {"A"}},
        {"v", {"B"}},
        {"x", {"A", "B", "C", "E"}},
        {"y", {"A", "B", "C", "E"}},
        {"z", {"A", "B", "C", "E"}},
        {"w", {"C", "D", "E"}},
    };
    for (const auto& name : a_side) d.list_of[name] = {"A", "D", "E"};
    for (const auto& name : b_side) d.list_of[name] = {"B", "D", "E"};
    return d;
}

inline GadgetDef gadget_def(const std::string& id, Fig4Y3Side y3_side) {
    if (id == "fig2") return fig2_def();
    if (id == "fig3") return fig3_def();
    if (id == "fig4") return fig4_def(y3_side);
    throw std::invalid_argument("unknown gadget id '" + id + "'");
}

inline std::vector<std::pair<std::string, int>> gadget_blocks(const std::string& id, int m,
                                                              int epsilon_m) {
    if (id == "fig2")
        return {{"A", m}, {"B", m}, {"C", m}, {"D", m}, {"E", epsilon_m}, {"F", 2 * m}};
    if (id == "fig3") return {{"A", m}, {"B", m}, {"C", 2 * m}, {"D", m}, {"E", epsilon_m}};
    return {{"A", m}, {"B", m}, {"C", m}, {"D", 2 * m}, {"E", epsilon_m}};
}

inline Graph gadget_graph(const GadgetDef& def) {
    std::map<std::string, int> label;
    for (std::size_t i = 0; i < def.names.size(); ++i)
        label[def.names[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [p, q] : def.edges) edges.emplace_back(label.at(p), label.at(q));
    return Graph(static_cast<int>(def.names.size()), std::move(edges), label);
}

inline ListAssignment gadget_lists(const GadgetDef& def,
                                   const std::map<std::string, std::vector<int>>& blocks) {
    ListAssignment l;
    l.lists.assign(static_cast<int>(def.names.size()), {});
    for (std::size_t i = 0; i < def.names.size(); ++i) {
        for (const auto& block_name : def.list_of.at(def.names[i])) {
            const auto& block = blocks.at(block_name);
            l.lists[i].insert(l.lists[i].end(), block.begin(), block.end());
        }
        std::sort(l.lists[i].begin(), l.lists[i].end());
    }
    return l;
}

}  // namespace detail

// Gadget instance at fold m with blocks mapped to disjoint integer ranges
// starting at 0.
inline GadgetSpec gadget(const std::string& id, int m,
                         Fig4Y3Side y3_side = Fig4Y3Side::B) {
    if (m < 1) throw std::invalid_argument("gadget: need m >= 1");
    detail::GadgetDef def = detail::gadget_def(id, y3_side);
    GadgetSpec spec;
    spec.id = id;
    spec.m = m;
    spec.epsilon_m = (m - 1) / def.epsilon_divisor;

    int next = 0;
    for (const auto& [name, size] : detail::gadget_blocks(id, m, spec.epsilon_m)) {
        std::vector<int> block;
        for (int i = 0; i < size; ++i) block.push_back(next++);
        spec.blocks[name] = std::move(block);
    }
    spec.graph = detail::gadget_graph(def);
    spec.lists = detail::gadget_lists(def, spec.blocks);
    spec.u = spec.graph.vertex("u");
    spec.v = spec.graph.vertex("v");
    spec.list_size = (id == "fig2" ? 4 * m : 3 * m) + spec.epsilon_m;
    return spec;
}

// List template for amplification: block A is replaced by the given m-set A,
// block B by B, and the remaining blocks are shared ranges starting at
// colour_base (disjoint from X and Y by the caller's choice of base).
inline ListTemplate amplification_template(const std::string& id, int m, int colour_base,
                                           Fig4Y3Side y3_side = Fig4Y3Side::B) {
    detail::GadgetDef def = detail::gadget_def(id, y3_side);
    int epsilon_m = (m - 1) / def.epsilon_divisor;
    std::map<std::string, std::vector<int>> blocks;
    int next = colour_base;
    for (const auto& [name, size] : detail::gadget_blocks(id, m, epsilon_m)) {
        if (name == "A" || name == "B") continue;
        std::vector<int> block;
        for (int i = 0; i < size; ++i) block.push_back(next++);
        blocks[name] = std::move(block);
    }
    return [def, blocks](const std::vector<int>& a_set,
                         const std::vector<int>& b_set) mutable {
        blocks["A"] = a_set;
        blocks["B"] = b_set;
        return detail::gadget_lists(def, blocks);
    };
}

// The amplified composite for a catalog gadget: p = C(x_size, m)^2 copies
// sharing u and v.  x_size defaults to the gadget's uniform list size.
inline AmplifiedGadget amplify_catalog_gadget(const std::string& id, int m, int x_size = -1,
                                              Fig4Y3Side y3_side = Fig4Y3Side::B) {
    GadgetSpec spec = gadget(id, m, y3_side);
    if (x_size < 0) x_size = spec.list_size;
    ListTemplate tmpl = amplification_template(id, m, 2 * x_size, y3_side);
    return amplify_gadget(spec.graph, spec.u, spec.v, tmpl, x_size, m);
}

// ---------------------------------------------------------------------------
// The 202-vertex planar graph without 4- or 5-cycles and its printed partial
// (6,2)-colouring.  Ten named outer vertices, twelve outer paths each
// subdivided with three internal vertices, and four copies of the 39-vertex
// inner block glued on corner triples.

struct SteinbergInstance {
    Graph graph;
    BFoldColouring precolouring;
    std::vector<std::string> notes;  // transcription provenance
};

namespace detail {

inline const std::vector<std::pair<std::string, std::string>>& g2_edges() {
    static const std::vector<std::pair<std::string, std::string>> edges = {
        {"A1", "A2"}, {"A2", "A3"}, {"A3", "A1"},
        {"B1", "B6"}, {"B6", "A1"}, {"B2", "B3"}, {"B4", "B5"},
        {"A1", "B1"}, {"B1", "C1"}, {"C1", "X"},
        {"A2", "B2"}, {"B2", "C2"}, {"C2", "X"},
        {"A2", "B3"}, {"B3", "C3"}, {"C3", "Y"},
        {"A3", "B4"}, {"B4", "C4"}, {"C4", "Y"},
        {"A3", "B5"}, {"B5", "C5"}, {"C5", "Z"},
        {"B6", "C6"}, {"C6", "Z"},
        {"C1", "D1"}, {"D1", "B1"}, {"C2", "D2"}, {"D2", "B2"},
        {"C3", "D3"}, {"D3", "B3"}, {"C4", "D4"}, {"D4", "B4"},
        {"C5", "D5"}, {"D5", "B5"}, {"C6", "D6"}, {"D6", "B6"},
        {"D1", "E1"}, {"E1", "E6"}, {"E6", "D6"},
        {"D2", "E2"}, {"E2", "E3"}, {"E3", "D3"},
        {"D4", "E4"}, {"E4", "E5"}, {"E5", "D5"},
        {"E1", "F1"}, {"F1", "E6"}, {"E2", "F2"}, {"F2", "E3"},
        {"E4", "F3"}, {"F3", "E5"},
        {"G1", "F1"}, {"G2", "F2"}, {"G3", "F3"},
        {"C1", "H1"}, {"H1", "X"}, {"C2", "H2"}, {"H2", "X"},
        {"C3", "H3"}, {"H3", "Y"}, {"C4", "H4"}, {"H4", "Y"},
        {"C5", "H5"}, {"H5", "Z"}, {"C6", "H6"}, {"H6", "Z"},
        {"H1", "G1"}, {"G1", "H6"}, {"H2", "G2"}, {"G2", "H3"},
        {"H4", "G3"}, {"G3", "H5"}};
    return edges;
}

inline const std::vector<std::string>& g2_internal_names() {
    static const std::vector<std::string> names = {
        "A1", "A2", "A3", "B1", "B2", "B3", "B4", "B5", "B6",
        "C1", "C2", "C3", "C4", "C5", "C6", "D1", "D2", "D3", "D4", "D5", "D6",
        "E1", "E2", "E3", "E4", "E5", "E6", "F1", "F2", "F3",
        "G1", "G2", "G3", "H1", "H2", "H3", "H4", "H5", "H6"};
    return names;
}

// Colour pairs of the inner-block copy whose corners are d, c, a.
inline std::map<std::string, std::pair<int, int>> g2_colours_copy_d() {
    return {{"A1", {2, 4}}, {"A2", {1, 3}}, {"A3", {5, 6}},
            {"B1", {1, 3}}, {"B2", {4, 6}}, {"B3", {2, 5}},
            {"B4", {2, 4}}, {"B5", {1, 3}}, {"B6", {5, 6}},
            {"C1", {4, 5}}, {"C2", {1, 5}}, {"C3", {3, 4}},
            {"C4", {3, 5}}, {"C5", {5, 6}}, {"C6", {2, 4}},
            {"D1", {2, 6}}, {"D2", {2, 3}}, {"D3", {1, 6}},
            {"D4", {1, 6}}, {"D5", {2, 4}}, {"D6", {1, 3}},
            {"E1", {3, 5}}, {"E2", {5, 6}}, {"E3", {2, 3}},
            {"E4", {2, 3}}, {"E5", {1, 6}}, {"E6", {2, 6}},
            {"F1", {1, 4}}, {"F2", {1, 4}}, {"F3", {4, 5}},
            {"G1", {2, 3}}, {"G2", {2, 3}}, {"G3", {1, 3}},
            {"H1", {1, 6}}, {"H2", {4, 6}}, {"H3", {5, 6}},
            {"H4", {4, 6}}, {"H5", {2, 4}}, {"H6", {5, 6}}};
}

// Colour pairs of the copy whose corners are f, c, a.  Three cells (E2, F2,
// G2) are repaired relative to the printed figure; see the instance notes.
inline std::map<std::string, std::pair<int, int>> g2_colours_copy_f() {
    return {{"A1", {2, 4}}, {"A2", {1, 3}}, {"A3", {5, 6}},
            {"B1", {1, 3}}, {"B2", {4, 6}}, {"B3", {2, 5}},
            {"B4", {2, 4}}, {"B5", {1, 3}}, {"B6", {5, 6}},
            {"C1", {4, 5}}, {"C2", {3, 5}}, {"C3", {3, 6}},
            {"C4", {3, 5}}, {"C5", {5, 6}}, {"C6", {2, 4}},
            {"D1", {2, 6}}, {"D2", {1, 2}}, {"D3", {1, 4}},
            {"D4", {1, 6}}, {"D5", {2, 4}}, {"D6", {1, 3}},
            {"E1", {1, 4}}, {"E2", {5, 6}}, {"E3", {2, 3}},
            {"E4", {2, 3}}, {"E5", {1, 6}}, {"E6", {2, 6}},
            {"F1", {3, 5}}, {"F2", {1, 4}}, {"F3", {4, 5}},
            {"G1", {1, 4}}, {"G2", {3, 6}}, {"G3", {1, 3}},
            {"H1", {2, 3}}, {"H2", {2, 4}}, {"H3", {4, 5}},
            {"H4", {4, 6}}, {"H5", {2, 4}}, {"H6", {5, 6}}};
}

}  // namespace detail

inline SteinbergInstance steinberg_instance() {
    std::map<std::string, int> label;
    std::vector<std::pair<int, int>> edges;
    int next_id = 0;
    auto vertex = [&](const std::string& name) {
        auto [it, fresh] = label.emplace(name, next_id);
        if (fresh) ++next_id;
        return it->second;
    };
    auto edge = [&](const std::string& p, const std::string& q) {
        edges.emplace_back(vertex(p), vertex(q));
    };

    const std::vector<std::string> outer = {"a", "b", "c", "d",  "e",
                                            "f", "c'", "d'", "e'", "f'"};
    for (const auto& name : outer) vertex(name);

    // Outer skeleton: direct edges.
    edge("a", "b");
    edge("c", "b");
    edge("b", "c'");
    edge("c'", "c");
    edge("a", "e");
    edge("d", "e");
    edge("e", "f");
    edge("f", "d");
    edge("a", "e'");
    edge("d'", "e'");
    edge("e'", "f'");
    edge("f'", "d'");

    // Outer paths, each subdivided by three internal vertices.  a-c and
    // a-c' appear twice (a straight and a curved copy bounding the regions).
    struct PathSpec {
        std::string from, to;
        int copy;
    };
    const std::vector<PathSpec> paths = {
        {"a", "c", 1},  {"a", "d", 1},  {"c", "d", 1},   {"a", "c'", 1},
        {"a", "d'", 1}, {"c'", "d'", 1}, {"a", "f", 1},  {"a", "f'", 1},
        {"c", "f", 1},  {"c'", "f'", 1}, {"a", "c", 2},  {"a", "c'", 2}};
    for (const auto& p : paths) {
        std::string stem = p.from + "-" + p.to + (p.copy == 2 ? "#2" : "");
        std::string prev = p.from;
        for (int i = 1; i <= 3; ++i) {
            std::string mid = stem + "." + std::to_string(i);
            edge(prev, mid);
            prev = mid;
        }
        edge(prev, p.to);
    }

    // Four inner-block copies on corner triples (X, Y, Z).
    struct CopySpec {
        std::string tag, x, y, z;
    };
    const std::vector<CopySpec> copies = {{"G2[0]", "d", "c", "a"},
                                          {"G2[1]", "f", "c", "a"},
                                          {"G2[2]", "d'", "c'", "a"},
                                          {"G2[3]", "f'", "c'", "a"}};
    for (const auto& cp : copies) {
        auto resolve = [&](const std::string& local) -> std::string {
            if (local == "X") return cp.x;
            if (local == "Y") return cp.y;
            if (local == "Z") return cp.z;
            return cp.tag + "." + local;
        };
        for (const auto& [p, q] : detail::g2_edges()) edge(resolve(p), resolve(q));
    }

    Graph graph(next_id, std::move(edges), label);

    BFoldColouring pre = BFoldColouring::uncoloured(graph.vertex_count());
    auto colour = [&](const std::string& name, int c1, int c2) {
        pre.assign(graph.vertex(name), {c1, c2});
    };
    colour("a", 1, 3);
    colour("b", 5, 6);
    colour("c", 1, 2);
    colour("d", 2, 3);
    colour("e", 4, 5);
    colour("f", 1, 6);
    colour("c'", 3, 4);
    colour("d'", 1, 4);
    colour("e'", 2, 5);
    colour("f'", 3, 6);

    // Inner-block colours: the two printed copies, then their images under
    // the colour involution (1 3)(2 4), which maps the left precolouring onto
    // the right one (c -> c', d -> d', f -> f', e -> e', a and b fixed).
    auto sigma = [](int c) {
        switch (c) {
            case 1: return 3;
            case 2: return 4;
            case 3: return 1;
            case 4: return 2;
            default: return c;
        }
    };
    auto table_d = detail::g2_colours_copy_d();
    auto table_f = detail::g2_colours_copy_f();
    for (int copy = 0; copy < 4; ++copy) {
        const auto& table = (copy % 2 == 0) ? table_d : table_f;
        for (const auto& [local, pair] : table) {
            int c1 = pair.first, c2 = pair.second;
            if (copy >= 2) {
                c1 = sigma(c1);
                c2 = sigma(c2);
            }
            pre.assign(graph.vertex("G2[" + std::to_string(copy) + "]." + local),
                       {std::min(c1, c2), std::max(c1, c2)});
        }
    }

    SteinbergInstance out;
    out.graph = std::move(graph);
    out.precolouring = std::move(pre);
    out.notes = {
        "Outer layout read off the figure: triangles b-c-c', d-e-f, d'-e'-f'; edges a-b, "
        "a-e, a-e'; twelve outer paths each subdivided by three vertices, with two "
        "parallel subdivided a-c and a-c' paths bounding the inner-block regions.",
        "Each inner block attaches only at its corner triple (X,Y,Z); copies share no "
        "other vertices.",
        "Right-hand copies carry the images of the printed left-hand colourings under "
        "the involution (1 3)(2 4), which maps the outer precolouring onto its mirror.",
        "Printed colouring of the f-corner copy is improper at D2-E2 ({1,2} vs {1,6}) and "
        "the E2/F2/G2 region is infeasible as printed (D2 and D3 are forced, excluding "
        "colour 1 from the E2-E3-F2 triangle while G2 holds 1).  Repaired minimally: "
        "E2 {1,6}->{5,6}, F2 {4,5}->{1,4}, G2 {1,3}->{3,6}; all other cells as printed.",
        "Uncoloured vertices are exactly the 36 subdivision internals."};
    return out;
}

// ---------------------------------------------------------------------------
// Built-in instance registry for catalog: URIs.

inline std::vector<std::string> catalog_ids() {
    return {"c3", "c4", "c5", "c7", "k3", "k4", "p4", "p5", "k22", "k23",
            "k24", "fig2", "fig3", "fig4", "steinberg", "gnmk-N-M-K"};
}

inline Graph catalog_graph(const std::string& id) {
    if (id == "c3") return build_cycle(3);
    if (id == "c4") return build_cycle(4);
    if (id == "c5") return build_cycle(5);
    if (id == "c7") return build_cycle(7);
    if (id == "k3") return build_complete(3);
    if (id == "k4") return build_complete(4);
    if (id == "p4") return build_path(4);
    if (id == "p5") return build_path(5);
    if (id == "k22") return build_complete_bipartite(2, 2);
    if (id == "k23") return build_complete_bipartite(2, 3);
    if (id == "k24") return build_complete_bipartite(2, 4);
    if (id == "fig2") return gadget("fig2", 1).graph;
    if (id == "fig3") return gadget("fig3", 1).graph;
    if (id == "fig4") return gadget("fig4", 1).graph;
    if (id == "steinberg") return steinberg_instance().graph;
    if (id.rfind("gnmk-", 0) == 0) {
        std::istringstream in(id.substr(5));
        int n = 0, m = 0, k = 0;
        char d1 = 0, d2 = 0;
        if (in >> n >> d1 >> m >> d2 >> k && d1 == '-' && d2 == '-')
            return build_gnmk(n, m, k).graph;
    }
    throw std::invalid_argument("unknown catalog id '" + id + "'");
}

}  // namespace multifold
