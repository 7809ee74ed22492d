#include "hashdrift/export.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hashdrift {

namespace {

// Tableau-style palette; community index cycles through it.
constexpr const char* kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::map<std::string, int> community_index(const FrozenGraph& g, const Partition& partition) {
    std::map<std::string, int> index;
    for (int c = 0; c < static_cast<int>(partition.communities.size()); ++c)
        for (const auto& tag : partition.communities[c]) index[tag] = c;
    for (const auto& tag : g.nodes)
        if (index.find(tag) == index.end())
            throw std::invalid_argument("partition does not cover node '" + tag + "'");
    return index;
}

double round6(double value) {
    return std::round(value * 1e6) / 1e6;
}

}  // namespace

ExportFormat parse_export_format(const std::string& name) {
    if (name == "graphml") return ExportFormat::GraphML;
    if (name == "dot") return ExportFormat::Dot;
    if (name == "json") return ExportFormat::Json;
    throw std::invalid_argument("unknown export format '" + name + "'");
}

std::string export_graph(const FrozenGraph& g, const Partition& partition, ExportFormat format) {
    auto community = community_index(g, partition);

    if (format == ExportFormat::Json) {
        nlohmann::ordered_json doc;
        doc["nodes"] = nlohmann::ordered_json::array();
        for (const auto& tag : g.nodes)
            doc["nodes"].push_back({{"tag", tag}, {"community", community.at(tag)}});
        doc["edges"] = nlohmann::ordered_json::array();
        for (const auto& [u, v] : g.edges) doc["edges"].push_back({u, v});
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    if (format == ExportFormat::GraphML) {
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
            << "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n"
            << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
        for (const auto& tag : g.nodes)
            out << "    <node id=\"" << xml_escape(tag) << "\"><data key=\"community\">"
                << community.at(tag) << "</data></node>\n";
        for (const auto& [u, v] : g.edges)
            out << "    <edge source=\"" << xml_escape(u) << "\" target=\"" << xml_escape(v)
                << "\"/>\n";
        out << "  </graph>\n</graphml>\n";
        return out.str();
    }

    out << "graph hashtags {\n  node [style=filled];\n";
    for (const auto& tag : g.nodes)
        out << "  " << dot_quote(tag) << " [fillcolor=" << dot_quote(kPalette[community.at(tag) % 12])
            << "];\n";
    for (const auto& [u, v] : g.edges)
        out << "  " << dot_quote(u) << " -- " << dot_quote(v) << ";\n";
    out << "}\n";
    return out.str();
}

std::pair<FrozenGraph, Partition> parse_graph_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
        throw std::invalid_argument("malformed graph document");

    FrozenGraph g;
    std::map<int, std::set<std::string>> communities;
    for (const auto& node : doc.at("nodes")) {
        if (!node.is_object() || !node.contains("tag") || !node.contains("community") ||
            !node.at("tag").is_string() || !node.at("community").is_number_integer())
            throw std::invalid_argument("malformed node entry");
        std::string tag = node.at("tag").get<std::string>();
        g.add_node(tag);
        communities[node.at("community").get<int>()].insert(std::move(tag));
    }
    for (const auto& edge : doc.at("edges")) {
        if (!edge.is_array() || edge.size() != 2 || !edge.at(0).is_string() ||
            !edge.at(1).is_string())
            throw std::invalid_argument("malformed edge entry");
        g.add_edge(edge.at(0).get<std::string>(), edge.at(1).get<std::string>());
    }

    std::vector<std::set<std::string>> ordered;
    for (auto& [index, members] : communities) ordered.push_back(std::move(members));
    return {std::move(g), canonical_partition(std::move(ordered))};
}

std::string snapshot_to_json(const Snapshot& snapshot) {
    nlohmann::ordered_json doc;
    doc["period"] = snapshot.period.str();
    doc["node_count"] = snapshot.node_count;
    doc["edge_count"] = snapshot.edge_count;
    doc["modularity"] = round6(snapshot.best.modularity);
    doc["top_communities"] = nlohmann::ordered_json::array();
    for (const auto& community : snapshot.top_communities) {
        nlohmann::ordered_json entry;
        entry["size"] = community.size();
        entry["members"] = community;
        doc["top_communities"].push_back(std::move(entry));
    }
    doc["top_tags"] = nlohmann::ordered_json::array();
    for (const auto& [tag, count] : snapshot.top_tags)
        doc["top_tags"].push_back({{"tag", tag}, {"count", count}});
    return doc.dump(2) + "\n";
}

std::string report_to_json(const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["lines_read"] = report.lines_read;
    doc["posts_processed"] = report.posts_processed;
    doc["skipped"] = report.skipped;
    doc["snapshots_emitted"] = report.snapshots_emitted;
    return doc.dump(2) + "\n";
}

}  // namespace hashdrift
