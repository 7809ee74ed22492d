#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "hashdrift/frozen_graph.hpp"
#include "hashdrift/normalize.hpp"

namespace hashdrift {

struct GraphConfig {
    int window_size = 200;    // max nodes held at once
    int min_freq = 5;         // pregraph promotions happen at this count
    int pregraph_cap = 10000; // staged below-threshold tags, LRU-evicted
    // Count a tag once per appearance instead of once per post (the
    // multi-increment reading of the add-node loop); default counts
    // per post so frequency means "posts containing the tag".
    bool literal_counting = false;
};

enum class PromotionStatus { AlreadyNode, StillPregraph, Promoted };

struct GraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::size_t pregraph_count = 0;
    std::uint64_t post_seq = 0;
};

// Online bounded co-occurrence graph over a hashtag stream.
//
// Tags are staged in a frequency-gated pregraph until they have been seen
// min_freq times, then promoted to window nodes. Nodes age by one per
// processed post and are evicted oldest-first when a promotion needs room.
// Co-occurrence of two node tags in a post adds an undirected edge and
// resets both ages to zero.
//
// Single-writer; freeze() hands an independent deep copy to readers.
class WindowedGraph {
public:
    explicit WindowedGraph(GraphConfig config = {});

    const GraphConfig& config() const { return config_; }

    // Increments every node's age by one. Pregraph entries are unaffected.
    void grow_old();

    // Routes one observation of a tag through the frequency gate:
    // existing nodes are untouched, pregraph entries are incremented
    // (created at 1), and an entry reaching min_freq is promoted to a
    // node with age 0, evicting the oldest node first if the window is
    // full. Callers are responsible for at-most-once-per-post semantics.
    PromotionStatus observe_tag(const std::string& tag);

    // Removes the node with maximum age (ties: smallest inserted_seq,
    // then lexicographically smallest tag) along with its incident
    // edges. Throws std::logic_error unless the window is full.
    std::string evict_oldest();

    // Processes one prepared post: ages all nodes, passes each tag
    // through observe_tag, then connects every pair of tags that are
    // both nodes, resetting their ages. The hashtag list must already be
    // deduplicated with the query tag excluded (see prepare_post).
    void add_post(const PostRecord& post);

    GraphStats stats() const;

    // Deep, independent snapshot of the current node and edge sets.
    FrozenGraph freeze() const;

    // Inspection
    bool has_node(const std::string& tag) const { return nodes_.count(tag) > 0; }
    std::optional<std::int64_t> node_age(const std::string& tag) const;
    std::optional<int> pregraph_count(const std::string& tag) const;
    bool has_edge(const std::string& u, const std::string& v) const;
    std::uint64_t edge_ensure_ops() const { return edge_ensure_ops_; }
    std::uint64_t evictions() const { return evictions_; }
    std::uint64_t promotions() const { return promotions_; }

private:
    struct Node {
        std::int64_t age = 0;
        std::uint64_t inserted_seq = 0;  // post_seq at insertion time
    };
    struct PregraphEntry {
        int count = 0;
        std::uint64_t last_seen_seq = 0;
    };

    void insert_node(const std::string& tag);
    void touch_pregraph(const std::string& tag, std::uint64_t seq);
    void drop_pregraph(std::map<std::string, PregraphEntry>::iterator it);
    void ensure_edge(const std::string& u, const std::string& v);
    bool is_node(const std::string& tag) const { return nodes_.count(tag) > 0; }

    GraphConfig config_;
    std::map<std::string, Node> nodes_;
    std::map<std::string, std::set<std::string>> adjacency_;
    std::size_t edge_count_ = 0;
    std::map<std::string, PregraphEntry> pregraph_;
    // (last_seen_seq, tag) mirror of pregraph_ for O(log n) LRU eviction
    std::set<std::pair<std::uint64_t, std::string>> pregraph_lru_;
    std::uint64_t post_seq_ = 0;
    std::uint64_t edge_ensure_ops_ = 0;
    std::uint64_t evictions_ = 0;
    std::uint64_t promotions_ = 0;
};

}  // namespace hashdrift
