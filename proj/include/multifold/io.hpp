#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "multifold/colouring.hpp"
#include "multifold/graph.hpp"
#include "multifold/hypergraph.hpp"

namespace multifold {

using nlohmann::json;

// Graph JSON: {"n": <int>, "edges": [[u,v],...], "labels": {"name": id}?}
inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.labels().empty()) {
        json labels = json::object();
        for (const auto& [name, id] : g.labels()) labels[name] = id;
        j["labels"] = labels;
    }
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need fields 'n' and 'edges'");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edges must be [u,v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::map<std::string, int> labels;
    if (j.contains("labels"))
        for (const auto& [name, id] : j.at("labels").items())
            labels[name] = id.get<int>();
    return Graph(n, std::move(edges), std::move(labels));
}

// ListAssignment JSON: {"lists": {"<vertex>": [colours]}}
inline json lists_to_json(const ListAssignment& l) {
    json lists = json::object();
    for (int v = 0; v < l.size(); ++v) lists[std::to_string(v)] = l.lists[v];
    return json{{"lists", lists}};
}

inline ListAssignment lists_from_json(const json& j, int n) {
    if (!j.contains("lists")) throw std::invalid_argument("lists json: need field 'lists'");
    ListAssignment l;
    l.lists.assign(n, {});
    std::vector<bool> seen(n, false);
    for (const auto& [key, value] : j.at("lists").items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= n) throw std::invalid_argument("lists json: vertex out of range");
        l.lists[v] = value.get<std::vector<int>>();
        seen[v] = true;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw std::invalid_argument("lists json: vertex " + std::to_string(v) +
                                        " has no list");
    return l;
}

// BFoldColouring JSON: {"sets": {"<vertex>": [colours]}}; partial colourings
// simply omit vertices.
inline json colouring_to_json(const BFoldColouring& c) {
    json sets = json::object();
    for (int v = 0; v < c.size(); ++v)
        if (c.coloured(v)) sets[std::to_string(v)] = *c.sets[v];
    return json{{"sets", sets}};
}

inline BFoldColouring colouring_from_json(const json& j, int n) {
    if (!j.contains("sets")) throw std::invalid_argument("colouring json: need field 'sets'");
    BFoldColouring c = BFoldColouring::uncoloured(n);
    for (const auto& [key, value] : j.at("sets").items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= n)
            throw std::invalid_argument("colouring json: vertex out of range");
        c.assign(v, value.get<std::vector<int>>());
    }
    return c;
}

// Hypergraph JSON: {"n": <int>, "edges": [[...], ...]}
inline json hypergraph_to_json(const Hypergraph& h) {
    json j;
    j["n"] = h.vertex_count;
    j["edges"] = h.edges;
    return j;
}

inline Hypergraph hypergraph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph json: need fields 'n' and 'edges'");
    return Hypergraph(j.at("n").get<int>(),
                      j.at("edges").get<std::vector<std::vector<int>>>());
}

// Transcript JSON: {"rounds": [{"U": [...], "X": [...]}], "winner": ...}
inline json transcript_to_json(
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& rounds,
    const std::string& winner) {
    json rs = json::array();
    for (const auto& [u, x] : rounds) rs.push_back({{"U", u}, {"X", x}});
    return json{{"rounds", rs}, {"winner", winner}};
}

inline std::vector<std::pair<std::vector<int>, std::vector<int>>> transcript_rounds_from_json(
    const json& j) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rounds;
    for (const auto& r : j.at("rounds"))
        rounds.emplace_back(r.at("U").get<std::vector<int>>(),
                            r.at("X").get<std::vector<int>>());
    return rounds;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

inline void save_json_file(const std::string& path, const json& j, int indent = 1) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << j.dump(indent) << "\n";
}

}  // namespace multifold
