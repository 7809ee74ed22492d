#include "hashdrift/windowed_graph.hpp"

#include <stdexcept>

namespace hashdrift {

WindowedGraph::WindowedGraph(GraphConfig config) : config_(config) {
    if (config_.window_size < 1) throw std::invalid_argument("window_size must be >= 1");
    if (config_.min_freq < 1) throw std::invalid_argument("min_freq must be >= 1");
    if (config_.pregraph_cap < 1) throw std::invalid_argument("pregraph_cap must be >= 1");
}

void WindowedGraph::grow_old() {
    for (auto& [tag, node] : nodes_) ++node.age;
}

PromotionStatus WindowedGraph::observe_tag(const std::string& tag) {
    if (is_node(tag)) return PromotionStatus::AlreadyNode;

    auto it = pregraph_.find(tag);
    if (it == pregraph_.end()) {
        if (config_.min_freq == 1) {
            // Gate is a no-op: first sighting is already at threshold.
            insert_node(tag);
            return PromotionStatus::Promoted;
        }
        if (pregraph_.size() >= static_cast<std::size_t>(config_.pregraph_cap)) {
            // Evict the least-recently-seen staged tag to stay bounded.
            auto lru = pregraph_lru_.begin();
            pregraph_.erase(lru->second);
            pregraph_lru_.erase(lru);
        }
        pregraph_.emplace(tag, PregraphEntry{1, post_seq_});
        pregraph_lru_.emplace(post_seq_, tag);
        return PromotionStatus::StillPregraph;
    }

    pregraph_lru_.erase({it->second.last_seen_seq, tag});
    ++it->second.count;
    it->second.last_seen_seq = post_seq_;
    if (it->second.count >= config_.min_freq) {
        pregraph_.erase(it);
        insert_node(tag);
        return PromotionStatus::Promoted;
    }
    pregraph_lru_.emplace(post_seq_, tag);
    return PromotionStatus::StillPregraph;
}

void WindowedGraph::insert_node(const std::string& tag) {
    if (nodes_.size() >= static_cast<std::size_t>(config_.window_size)) evict_oldest();
    nodes_.emplace(tag, Node{0, post_seq_});
    ++promotions_;
}

std::string WindowedGraph::evict_oldest() {
    if (nodes_.size() < static_cast<std::size_t>(config_.window_size))
        throw std::logic_error("evict_oldest called on a non-full window");

    auto victim = nodes_.begin();
    for (auto it = std::next(nodes_.begin()); it != nodes_.end(); ++it) {
        const bool older = it->second.age > victim->second.age;
        const bool tie_earlier = it->second.age == victim->second.age &&
                                 it->second.inserted_seq < victim->second.inserted_seq;
        if (older || tie_earlier) victim = it;
        // lexicographic tie-break is implicit: map iteration is ascending
    }

    std::string tag = victim->first;
    auto adj = adjacency_.find(tag);
    if (adj != adjacency_.end()) {
        for (const auto& neighbor : adj->second) {
            adjacency_[neighbor].erase(tag);
            --edge_count_;
        }
        adjacency_.erase(adj);
    }
    nodes_.erase(victim);
    ++evictions_;
    return tag;
}

void WindowedGraph::ensure_edge(const std::string& u, const std::string& v) {
    ++edge_ensure_ops_;
    if (adjacency_[u].insert(v).second) {
        adjacency_[v].insert(u);
        ++edge_count_;
    }
}

void WindowedGraph::add_post(const PostRecord& post) {
    grow_old();

    const auto& tags = post.hashtags;
    if (config_.literal_counting) {
        // Per-appearance counting: a tag is observed once in the outer
        // loop and again for every co-tag's inner loop, so its count can
        // rise by up to |tags| within one post.
        for (std::size_t i = 0; i < tags.size(); ++i) {
            observe_tag(tags[i]);
            for (std::size_t j = 0; j < tags.size(); ++j) {
                if (j == i) continue;
                observe_tag(tags[j]);
                if (is_node(tags[i]) && is_node(tags[j])) {
                    ensure_edge(tags[i], tags[j]);
                    nodes_[tags[i]].age = 0;
                    nodes_[tags[j]].age = 0;
                }
            }
        }
    } else {
        for (const auto& tag : tags) observe_tag(tag);

        std::vector<const std::string*> node_tags;
        node_tags.reserve(tags.size());
        for (const auto& tag : tags)
            if (is_node(tag)) node_tags.push_back(&tag);

        for (std::size_t i = 0; i < node_tags.size(); ++i) {
            for (std::size_t j = i + 1; j < node_tags.size(); ++j) {
                ensure_edge(*node_tags[i], *node_tags[j]);
                nodes_[*node_tags[i]].age = 0;
                nodes_[*node_tags[j]].age = 0;
            }
        }
    }

    ++post_seq_;
}

GraphStats WindowedGraph::stats() const {
    return {nodes_.size(), edge_count_, pregraph_.size(), post_seq_};
}

FrozenGraph WindowedGraph::freeze() const {
    FrozenGraph g;
    for (const auto& [tag, node] : nodes_) g.nodes.insert(tag);
    for (const auto& [tag, neighbors] : adjacency_)
        for (const auto& neighbor : neighbors)
            if (tag < neighbor) g.edges.emplace(tag, neighbor);
    return g;
}

std::optional<std::int64_t> WindowedGraph::node_age(const std::string& tag) const {
    auto it = nodes_.find(tag);
    if (it == nodes_.end()) return std::nullopt;
    return it->second.age;
}

std::optional<int> WindowedGraph::pregraph_count(const std::string& tag) const {
    auto it = pregraph_.find(tag);
    if (it == pregraph_.end()) return std::nullopt;
    return it->second.count;
}

bool WindowedGraph::has_edge(const std::string& u, const std::string& v) const {
    auto it = adjacency_.find(u);
    return it != adjacency_.end() && it->second.count(v) > 0;
}

}  // namespace hashdrift
