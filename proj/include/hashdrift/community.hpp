#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hashdrift/frozen_graph.hpp"

namespace hashdrift {

// Disjoint node sets covering the graph, in canonical order: by size
// descending, ties by lexicographically smallest member.
struct Partition {
    std::vector<std::set<std::string>> communities;
};

// One partition per strict increase in component count during edge
// removal, starting from the initial connected-components partition and
// ending at all-singletons.
struct Dendrogram {
    std::vector<Partition> levels;
};

struct ScoredPartition {
    Partition partition;
    double modularity = 0.0;
};

// Sorts communities into the canonical order described on Partition.
Partition canonical_partition(std::vector<std::set<std::string>> communities);

// Edge betweenness over unordered node pairs: for each edge, the sum over
// pairs (s,t) of the fraction of shortest s-t paths through it. Brandes
// accumulation over unweighted BFS.
std::map<std::pair<std::string, std::string>, double> edge_betweenness(const FrozenGraph& g);

// Girvan-Newman: repeatedly remove the single highest-betweenness edge
// (ties: lexicographically smallest edge), recording a level whenever the
// component count grows, until no edges remain.
Dendrogram girvan_newman(const FrozenGraph& g);

// Newman-Girvan modularity of a partition against g's original edges.
// Throws std::invalid_argument when g has no edges or p does not
// partition g's nodes.
double modularity(const FrozenGraph& g, const Partition& p);

// The dendrogram level with maximum modularity (ties: fewest communities,
// then first occurrence). Edgeless graphs yield the all-singletons
// partition with modularity defined as 0.
ScoredPartition best_partition(const FrozenGraph& g);

}  // namespace hashdrift
