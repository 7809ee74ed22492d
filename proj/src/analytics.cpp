#include "hashdrift/analytics.hpp"

#include <algorithm>

#include "hashdrift/timeutil.hpp"

namespace hashdrift {

PeriodLabel PeriodLabel::of(Cadence cadence, std::int64_t epoch_seconds) {
    int year;
    unsigned month;
    timeutil::utc_year_month(epoch_seconds, year, month);
    if (cadence == Cadence::Year) return {cadence, year, 0};
    return {cadence, year, month};
}

std::string PeriodLabel::str() const {
    char buf[16];
    if (cadence == Cadence::Year)
        std::snprintf(buf, sizeof(buf), "%04d", year);
    else
        std::snprintf(buf, sizeof(buf), "%04d-%02u", year, month);
    return buf;
}

void PeriodTally::record(const PostRecord& post) {
    if (PeriodLabel::of(period_.cadence, post.timestamp) != period_)
        throw std::invalid_argument("post does not belong to this tally's period");
    record_unchecked(post);
}

void PeriodTally::record_unchecked(const PostRecord& post) {
    for (const auto& tag : post.hashtags) ++counts_[tag];
}

std::vector<std::pair<std::string, std::int64_t>> PeriodTally::top_k(int k) const {
    if (k < 1) throw std::invalid_argument("top_k: k must be >= 1");
    std::vector<std::pair<std::string, std::int64_t>> entries(counts_.begin(), counts_.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (entries.size() > static_cast<std::size_t>(k)) entries.resize(k);
    return entries;
}

DriftSummary drift_summary(const Snapshot& prev, const Snapshot& cur) {
    if (!(prev.period < cur.period))
        throw std::invalid_argument("drift_summary: snapshots out of order");

    static const std::set<std::string> empty;
    const auto& a = prev.best.partition.communities.empty() ? empty
                                                            : prev.best.partition.communities[0];
    const auto& b = cur.best.partition.communities.empty() ? empty
                                                           : cur.best.partition.communities[0];
    std::size_t intersection = 0;
    for (const auto& tag : a) intersection += b.count(tag);
    std::size_t unions = a.size() + b.size() - intersection;

    DriftSummary drift;
    drift.from = prev.period;
    drift.to = cur.period;
    // Two empty largest communities are identical, hence overlap 1.
    drift.largest_overlap =
        unions == 0 ? 1.0 : static_cast<double>(intersection) / static_cast<double>(unions);
    for (const auto& tag : cur.graph.nodes) drift.new_tags += prev.graph.nodes.count(tag) == 0;
    for (const auto& tag : prev.graph.nodes) drift.vanished_tags += cur.graph.nodes.count(tag) == 0;
    return drift;
}

StreamEngine::StreamEngine(EngineConfig config)
    : config_(std::move(config)), graph_(config_.graph) {
    if (config_.top_k < 1) throw std::invalid_argument("top_k must be >= 1");
    if (config_.min_len < 1) throw std::invalid_argument("min_len must be >= 1");
    if (config_.regression_slack_seconds < 0)
        throw std::invalid_argument("regression_slack_seconds must be >= 0");
}

std::optional<Snapshot> StreamEngine::maybe_rollover(std::int64_t timestamp) {
    if (finalized_) throw std::logic_error("engine already finalized");
    if (!have_period_) {
        current_period_ = PeriodLabel::of(config_.cadence, timestamp);
        tally_ = PeriodTally(current_period_);
        have_period_ = true;
        max_timestamp_ = timestamp;
        return std::nullopt;
    }
    if (timestamp < max_timestamp_ - config_.regression_slack_seconds)
        throw StaleTimestamp("timestamp regresses beyond slack: " +
                             timeutil::format_iso8601(timestamp) + " after " +
                             timeutil::format_iso8601(max_timestamp_));
    max_timestamp_ = std::max(max_timestamp_, timestamp);

    PeriodLabel period = PeriodLabel::of(config_.cadence, timestamp);
    if (period <= current_period_) return std::nullopt;

    Snapshot snapshot = make_snapshot();
    current_period_ = period;
    tally_ = PeriodTally(period);
    ++snapshots_emitted_;
    return snapshot;
}

std::optional<Snapshot> StreamEngine::process(const PostRecord& post) {
    std::optional<Snapshot> snapshot = maybe_rollover(post.timestamp);
    if (PeriodLabel::of(config_.cadence, post.timestamp) == current_period_)
        tally_.record(post);
    else
        tally_.record_unchecked(post);  // regression within slack
    graph_.add_post(post);
    return snapshot;
}

std::optional<Snapshot> StreamEngine::finalize() {
    if (finalized_ || !have_period_) return std::nullopt;
    finalized_ = true;
    ++snapshots_emitted_;
    return make_snapshot();
}

Snapshot StreamEngine::make_snapshot() const {
    Snapshot snapshot;
    snapshot.period = current_period_;
    snapshot.graph = graph_.freeze();
    snapshot.node_count = snapshot.graph.nodes.size();
    snapshot.edge_count = snapshot.graph.edges.size();
    snapshot.best = best_partition(snapshot.graph);
    const auto& communities = snapshot.best.partition.communities;
    const std::size_t k = static_cast<std::size_t>(config_.top_k);
    snapshot.top_communities.assign(communities.begin(),
                                    communities.begin() + std::min(k, communities.size()));
    snapshot.top_tags = tally_.top_k(config_.top_k);
    return snapshot;
}

}  // namespace hashdrift
