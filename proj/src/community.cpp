#include "hashdrift/community.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hashdrift {

namespace {

// Index view of a FrozenGraph: ids assigned in lexicographic tag order,
// so id order and tag order agree everywhere below.
struct IndexedGraph {
    std::vector<std::string> tags;                     // id -> tag
    std::vector<std::vector<int>> adjacency;           // sorted neighbor ids
    std::vector<std::pair<int, int>> edges;            // u < v, lexicographic
};

IndexedGraph index_graph(const FrozenGraph& g) {
    IndexedGraph ig;
    ig.tags.assign(g.nodes.begin(), g.nodes.end());
    std::map<std::string, int> id;
    for (int i = 0; i < static_cast<int>(ig.tags.size()); ++i) id[ig.tags[i]] = i;
    ig.adjacency.resize(ig.tags.size());
    for (const auto& [u, v] : g.edges) {
        auto ui = id.find(u), vi = id.find(v);
        if (ui == id.end() || vi == id.end())
            throw std::invalid_argument("edge endpoint missing from node set");
        ig.adjacency[ui->second].push_back(vi->second);
        ig.adjacency[vi->second].push_back(ui->second);
        ig.edges.emplace_back(std::min(ui->second, vi->second), std::max(ui->second, vi->second));
    }
    for (auto& neighbors : ig.adjacency) std::sort(neighbors.begin(), neighbors.end());
    std::sort(ig.edges.begin(), ig.edges.end());
    return ig;
}

// Brandes accumulation for one BFS source; adds contributions into `accum`
// keyed by (min,max) edge id pair.
void accumulate_from_source(int s, const std::vector<std::vector<int>>& adjacency,
                            std::map<std::pair<int, int>, double>& accum) {
    const int n = static_cast<int>(adjacency.size());
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> dist(n, -1);
    std::vector<double> sigma(n, 0.0), delta(n, 0.0);
    std::vector<std::vector<int>> preds(n);

    std::deque<int> queue;
    dist[s] = 0;
    sigma[s] = 1.0;
    queue.push_back(s);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w : adjacency[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if (dist[w] == dist[v] + 1) {
                sigma[w] += sigma[v];
                preds[w].push_back(v);
            }
        }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int w = *it;
        for (int u : preds[w]) {
            double c = sigma[u] / sigma[w] * (1.0 + delta[w]);
            accum[{std::min(u, w), std::max(u, w)}] += c;
            delta[u] += c;
        }
    }
}

std::map<std::pair<int, int>, double> brandes_edge_betweenness(
    const std::vector<std::vector<int>>& adjacency) {
    std::map<std::pair<int, int>, double> accum;
    for (int s = 0; s < static_cast<int>(adjacency.size()); ++s)
        accumulate_from_source(s, adjacency, accum);
    for (auto& [edge, value] : accum) value /= 2.0;  // each unordered pair counted once
    return accum;
}

std::vector<std::set<std::string>> components_of(const IndexedGraph& ig,
                                                 const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(ig.tags.size());
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adjacency[v]) {
                if (comp[w] < 0) {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        ++count;
    }
    std::vector<std::set<std::string>> communities(count);
    for (int v = 0; v < n; ++v) communities[comp[v]].insert(ig.tags[v]);
    return communities;
}

}  // namespace

Partition canonical_partition(std::vector<std::set<std::string>> communities) {
    std::sort(communities.begin(), communities.end(),
              [](const std::set<std::string>& a, const std::set<std::string>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return *a.begin() < *b.begin();
              });
    return Partition{std::move(communities)};
}

std::map<std::pair<std::string, std::string>, double> edge_betweenness(const FrozenGraph& g) {
    IndexedGraph ig = index_graph(g);
    auto raw = brandes_edge_betweenness(ig.adjacency);
    std::map<std::pair<std::string, std::string>, double> out;
    for (const auto& [u, v] : g.edges) out[{u, v}] = 0.0;
    for (const auto& [edge, value] : raw)
        out[{ig.tags[edge.first], ig.tags[edge.second]}] = value;
    return out;
}

Dendrogram girvan_newman(const FrozenGraph& g) {
    IndexedGraph ig = index_graph(g);
    std::vector<std::vector<int>> adjacency = ig.adjacency;

    Dendrogram dendrogram;
    auto initial = components_of(ig, adjacency);
    std::size_t component_count = initial.size();
    dendrogram.levels.push_back(canonical_partition(std::move(initial)));

    std::set<std::pair<int, int>> remaining(ig.edges.begin(), ig.edges.end());
    while (!remaining.empty()) {
        auto betweenness = brandes_edge_betweenness(adjacency);
        // Iterating in ascending edge order makes the lexicographically
        // smallest edge win ties via strict comparison.
        std::pair<int, int> target = *remaining.begin();
        double best = -1.0;
        for (const auto& edge : remaining) {
            auto it = betweenness.find(edge);
            double value = it == betweenness.end() ? 0.0 : it->second;
            if (value > best) {
                best = value;
                target = edge;
            }
        }

        remaining.erase(target);
        auto& nu = adjacency[target.first];
        nu.erase(std::find(nu.begin(), nu.end(), target.second));
        auto& nv = adjacency[target.second];
        nv.erase(std::find(nv.begin(), nv.end(), target.first));

        auto communities = components_of(ig, adjacency);
        if (communities.size() > component_count) {
            component_count = communities.size();
            dendrogram.levels.push_back(canonical_partition(std::move(communities)));
        }
    }
    return dendrogram;
}

double modularity(const FrozenGraph& g, const Partition& p) {
    const double m = static_cast<double>(g.edges.size());
    if (g.edges.empty()) throw std::invalid_argument("modularity undefined on an edgeless graph");

    std::map<std::string, int> community_of;
    for (int c = 0; c < static_cast<int>(p.communities.size()); ++c) {
        for (const auto& tag : p.communities[c]) {
            if (!community_of.emplace(tag, c).second)
                throw std::invalid_argument("partition communities are not disjoint");
            if (g.nodes.count(tag) == 0)
                throw std::invalid_argument("partition contains a tag outside the graph");
        }
    }
    if (community_of.size() != g.nodes.size())
        throw std::invalid_argument("partition does not cover the graph's nodes");

    std::vector<double> intra(p.communities.size(), 0.0), degree(p.communities.size(), 0.0);
    for (const auto& [u, v] : g.edges) {
        int cu = community_of.at(u), cv = community_of.at(v);
        degree[cu] += 1.0;
        degree[cv] += 1.0;
        if (cu == cv) intra[cu] += 1.0;
    }

    double q = 0.0;
    for (std::size_t c = 0; c < p.communities.size(); ++c) {
        double fraction = degree[c] / (2.0 * m);
        q += intra[c] / m - fraction * fraction;
    }
    return q;
}

ScoredPartition best_partition(const FrozenGraph& g) {
    if (g.edges.empty()) {
        std::vector<std::set<std::string>> singletons;
        for (const auto& tag : g.nodes) singletons.push_back({tag});
        return {canonical_partition(std::move(singletons)), 0.0};
    }

    Dendrogram dendrogram = girvan_newman(g);
    ScoredPartition best{dendrogram.levels.front(), modularity(g, dendrogram.levels.front())};
    for (std::size_t i = 1; i < dendrogram.levels.size(); ++i) {
        double q = modularity(g, dendrogram.levels[i]);
        // Levels have strictly increasing community counts, so on an
        // exact tie the earlier (fewer-communities) level stands.
        if (q > best.modularity) best = {dendrogram.levels[i], q};
    }
    return best;
}

}  // namespace hashdrift
