#pragma once

#include <set>
#include <string>
#include <utility>

namespace hashdrift {

// An immutable simple undirected graph handed to offline analysis.
// Edge pairs are stored with first < second.
struct FrozenGraph {
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;

    void add_node(std::string tag) { nodes.insert(std::move(tag)); }

    // Inserts both endpoints as nodes; self-loops are ignored.
    void add_edge(const std::string& u, const std::string& v) {
        if (u == v) return;
        nodes.insert(u);
        nodes.insert(v);
        edges.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    }

    bool has_edge(const std::string& u, const std::string& v) const {
        return edges.count(u < v ? std::make_pair(u, v) : std::make_pair(v, u)) > 0;
    }
};

}  // namespace hashdrift
