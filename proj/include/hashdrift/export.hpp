#pragma once

#include <string>
#include <utility>

#include "hashdrift/analytics.hpp"
#include "hashdrift/community.hpp"
#include "hashdrift/frozen_graph.hpp"
#include "hashdrift/ingest.hpp"

namespace hashdrift {

enum class ExportFormat { GraphML, Dot, Json };

// Parses "graphml" / "dot" / "json"; throws std::invalid_argument otherwise.
ExportFormat parse_export_format(const std::string& name);

// Serializes the graph with per-node community assignments. Output is
// byte-stable: nodes lexicographic, edges lexicographic, DOT colors from
// a fixed 12-color palette cycling by community index. The partition
// must cover the graph's nodes.
std::string export_graph(const FrozenGraph& g, const Partition& partition, ExportFormat format);

// Inverse of the JSON export, for re-rendering into other formats.
// Throws std::invalid_argument on malformed documents.
std::pair<FrozenGraph, Partition> parse_graph_json(const std::string& text);

// Deterministic snapshot document: period, counts, modularity (6 decimal
// places), top communities and top tags, keys always in that order.
std::string snapshot_to_json(const Snapshot& snapshot);

std::string report_to_json(const RunReport& report);

}  // namespace hashdrift
