#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hashdrift/community.hpp"
#include "hashdrift/windowed_graph.hpp"

namespace hashdrift {

enum class Cadence { Year, Month };

// Calendar period a post falls into, derived from its UTC timestamp.
struct PeriodLabel {
    Cadence cadence = Cadence::Year;
    int year = 0;
    unsigned month = 0;  // 1-12 under monthly cadence, 0 otherwise

    static PeriodLabel of(Cadence cadence, std::int64_t epoch_seconds);

    std::string str() const;  // "2018" or "2018-02"

    auto operator<=>(const PeriodLabel&) const = default;
};

// Per-post tag frequencies for one period, independent of the window.
class PeriodTally {
public:
    PeriodTally() = default;
    explicit PeriodTally(PeriodLabel period) : period_(period) {}

    const PeriodLabel& period() const { return period_; }
    const std::map<std::string, std::int64_t>& counts() const { return counts_; }

    // Each distinct tag of the post counts once. Throws
    // std::invalid_argument unless the post falls into this period.
    void record(const PostRecord& post);

    // Slack-attributed posts land here regardless of their nominal period.
    void record_unchecked(const PostRecord& post);

    // k highest counts descending, ties lexicographically ascending.
    std::vector<std::pair<std::string, std::int64_t>> top_k(int k) const;

private:
    PeriodLabel period_;
    std::map<std::string, std::int64_t> counts_;
};

// Frozen per-period record. The graph itself persists across periods;
// this is a deep copy taken at the boundary.
struct Snapshot {
    PeriodLabel period;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    ScoredPartition best;
    std::vector<std::set<std::string>> top_communities;          // first k by size
    std::vector<std::pair<std::string, std::int64_t>> top_tags;  // first k by count
    FrozenGraph graph;
};

struct DriftSummary {
    PeriodLabel from;
    PeriodLabel to;
    double largest_overlap = 0.0;  // Jaccard of the largest communities
    std::size_t new_tags = 0;      // in cur's graph but not prev's
    std::size_t vanished_tags = 0;
};

// Jaccard similarity of the two snapshots' largest communities plus node
// turnover counts. Throws std::invalid_argument unless prev precedes cur.
DriftSummary drift_summary(const Snapshot& prev, const Snapshot& cur);

// Thrown when a timestamp regresses beyond the configured slack.
struct StaleTimestamp : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineConfig {
    GraphConfig graph;
    std::string query_tag = "mybodymychoice";
    int min_len = 3;
    Cadence cadence = Cadence::Year;
    int top_k = 5;
    std::int64_t regression_slack_seconds = 86400;
};

// Owns the live graph and the current period's tally; emits one Snapshot
// per completed period. The graph is never reset between periods.
class StreamEngine {
public:
    explicit StreamEngine(EngineConfig config);

    const EngineConfig& config() const { return config_; }
    const WindowedGraph& graph() const { return graph_; }
    const PeriodTally& tally() const { return tally_; }
    std::uint64_t snapshots_emitted() const { return snapshots_emitted_; }

    // Checks the post's period against the current one; when it moves
    // forward, freezes the live graph, detects communities, and returns
    // the completed period's Snapshot while a fresh tally begins. Posts
    // regressing within the slack are attributed to the current period;
    // beyond it, StaleTimestamp is thrown and nothing changes.
    std::optional<Snapshot> maybe_rollover(std::int64_t timestamp);

    // Full per-post path: maybe_rollover, then tally, then graph update.
    // The returned snapshot, if any, covers the period the post closed.
    std::optional<Snapshot> process(const PostRecord& post);

    // Emits the final period's snapshot exactly once at end of stream.
    std::optional<Snapshot> finalize();

private:
    Snapshot make_snapshot() const;

    EngineConfig config_;
    WindowedGraph graph_;
    PeriodTally tally_;
    bool have_period_ = false;
    PeriodLabel current_period_;
    std::int64_t max_timestamp_ = 0;
    bool finalized_ = false;
    std::uint64_t snapshots_emitted_ = 0;
};

}  // namespace hashdrift
