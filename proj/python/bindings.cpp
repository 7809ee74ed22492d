#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hashdrift/analytics.hpp"
#include "hashdrift/community.hpp"
#include "hashdrift/export.hpp"
#include "hashdrift/ingest.hpp"
#include "hashdrift/normalize.hpp"
#include "hashdrift/synth.hpp"
#include "hashdrift/timeutil.hpp"
#include "hashdrift/windowed_graph.hpp"

namespace py = pybind11;
using namespace hashdrift;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Streaming hashtag co-occurrence graphs with Girvan-Newman drift snapshots";

    py::register_exception<StaleTimestamp>(m, "StaleTimestampError", PyExc_ValueError);

    // --- normalization ---
    py::class_<PostRecord>(m, "PostRecord")
        .def(py::init<>())
        .def(py::init([](std::int64_t ts, std::vector<std::string> tags) {
                 return PostRecord{ts, std::move(tags)};
             }),
             py::arg("timestamp"), py::arg("hashtags"))
        .def_readwrite("timestamp", &PostRecord::timestamp)
        .def_readwrite("hashtags", &PostRecord::hashtags)
        .def("__repr__", [](const PostRecord& p) {
            return "PostRecord(timestamp=" + std::to_string(p.timestamp) + ", " +
                   std::to_string(p.hashtags.size()) + " tags)";
        });

    m.def("extract_raw_hashtags", &extract_raw_hashtags, py::arg("text"));
    m.def("normalize", &normalize, py::arg("raw"), py::arg("min_len") = 3);
    m.def("prepare_post", &prepare_post, py::arg("timestamp"), py::arg("raw_tags"),
          py::arg("query_tag"), py::arg("min_len") = 3);

    // --- windowed graph ---
    py::class_<GraphConfig>(m, "GraphConfig")
        .def(py::init<>())
        .def_readwrite("window_size", &GraphConfig::window_size)
        .def_readwrite("min_freq", &GraphConfig::min_freq)
        .def_readwrite("pregraph_cap", &GraphConfig::pregraph_cap)
        .def_readwrite("literal_counting", &GraphConfig::literal_counting);

    py::enum_<PromotionStatus>(m, "PromotionStatus")
        .value("ALREADY_NODE", PromotionStatus::AlreadyNode)
        .value("STILL_PREGRAPH", PromotionStatus::StillPregraph)
        .value("PROMOTED", PromotionStatus::Promoted);

    py::class_<GraphStats>(m, "GraphStats")
        .def_readonly("node_count", &GraphStats::node_count)
        .def_readonly("edge_count", &GraphStats::edge_count)
        .def_readonly("pregraph_count", &GraphStats::pregraph_count)
        .def_readonly("post_seq", &GraphStats::post_seq);

    py::class_<FrozenGraph>(m, "FrozenGraph")
        .def(py::init<>())
        .def_readwrite("nodes", &FrozenGraph::nodes)
        .def_readwrite("edges", &FrozenGraph::edges)
        .def("add_node", &FrozenGraph::add_node)
        .def("add_edge", &FrozenGraph::add_edge)
        .def("has_edge", &FrozenGraph::has_edge);

    py::class_<WindowedGraph>(m, "WindowedGraph")
        .def(py::init<GraphConfig>(), py::arg("config") = GraphConfig{})
        .def("grow_old", &WindowedGraph::grow_old)
        .def("observe_tag", &WindowedGraph::observe_tag, py::arg("tag"))
        .def("evict_oldest", &WindowedGraph::evict_oldest)
        .def("add_post", &WindowedGraph::add_post, py::arg("post"))
        .def("stats", &WindowedGraph::stats)
        .def("freeze", &WindowedGraph::freeze)
        .def("has_node", &WindowedGraph::has_node, py::arg("tag"))
        .def("node_age", &WindowedGraph::node_age, py::arg("tag"))
        .def("pregraph_count", &WindowedGraph::pregraph_count, py::arg("tag"))
        .def("has_edge", &WindowedGraph::has_edge, py::arg("u"), py::arg("v"));

    // --- community detection ---
    py::class_<Partition>(m, "Partition")
        .def(py::init<>())
        .def_readwrite("communities", &Partition::communities);

    py::class_<Dendrogram>(m, "Dendrogram").def_readwrite("levels", &Dendrogram::levels);

    py::class_<ScoredPartition>(m, "ScoredPartition")
        .def_readwrite("partition", &ScoredPartition::partition)
        .def_readwrite("modularity", &ScoredPartition::modularity);

    m.def("canonical_partition", &canonical_partition, py::arg("communities"));
    m.def("edge_betweenness", &edge_betweenness, py::arg("graph"));
    m.def("girvan_newman", &girvan_newman, py::arg("graph"));
    m.def("modularity", &modularity, py::arg("graph"), py::arg("partition"));
    m.def("best_partition", &best_partition, py::arg("graph"));

    // --- period analytics ---
    py::enum_<Cadence>(m, "Cadence").value("YEAR", Cadence::Year).value("MONTH", Cadence::Month);

    py::class_<PeriodLabel>(m, "PeriodLabel")
        .def_static("of", &PeriodLabel::of, py::arg("cadence"), py::arg("epoch_seconds"))
        .def_readonly("year", &PeriodLabel::year)
        .def_readonly("month", &PeriodLabel::month)
        .def("__str__", &PeriodLabel::str)
        .def("__eq__", [](const PeriodLabel& a, const PeriodLabel& b) { return a == b; })
        .def("__lt__", [](const PeriodLabel& a, const PeriodLabel& b) { return a < b; });

    py::class_<PeriodTally>(m, "PeriodTally")
        .def(py::init<PeriodLabel>(), py::arg("period"))
        .def_property_readonly("period", &PeriodTally::period)
        .def_property_readonly("counts", &PeriodTally::counts)
        .def("record", &PeriodTally::record, py::arg("post"))
        .def("top_k", &PeriodTally::top_k, py::arg("k"));

    py::class_<Snapshot>(m, "Snapshot")
        .def_readonly("period", &Snapshot::period)
        .def_readonly("node_count", &Snapshot::node_count)
        .def_readonly("edge_count", &Snapshot::edge_count)
        .def_readonly("best", &Snapshot::best)
        .def_readonly("top_communities", &Snapshot::top_communities)
        .def_readonly("top_tags", &Snapshot::top_tags)
        .def_readonly("graph", &Snapshot::graph);

    py::class_<DriftSummary>(m, "DriftSummary")
        .def_readonly("from_period", &DriftSummary::from)
        .def_readonly("to_period", &DriftSummary::to)
        .def_readonly("largest_overlap", &DriftSummary::largest_overlap)
        .def_readonly("new_tags", &DriftSummary::new_tags)
        .def_readonly("vanished_tags", &DriftSummary::vanished_tags);

    m.def("drift_summary", &drift_summary, py::arg("prev"), py::arg("cur"));

    py::class_<EngineConfig>(m, "EngineConfig")
        .def(py::init<>())
        .def_readwrite("graph", &EngineConfig::graph)
        .def_readwrite("query_tag", &EngineConfig::query_tag)
        .def_readwrite("min_len", &EngineConfig::min_len)
        .def_readwrite("cadence", &EngineConfig::cadence)
        .def_readwrite("top_k", &EngineConfig::top_k)
        .def_readwrite("regression_slack_seconds", &EngineConfig::regression_slack_seconds);

    py::class_<StreamEngine>(m, "StreamEngine")
        .def(py::init<EngineConfig>(), py::arg("config") = EngineConfig{})
        .def("maybe_rollover", &StreamEngine::maybe_rollover, py::arg("timestamp"))
        .def("process", &StreamEngine::process, py::arg("post"))
        .def("finalize", &StreamEngine::finalize)
        .def_property_readonly("graph", &StreamEngine::graph, py::return_value_policy::reference_internal)
        .def_property_readonly("snapshots_emitted", &StreamEngine::snapshots_emitted);

    // --- synthetic streams ---
    py::class_<SynthPhase>(m, "SynthPhase")
        .def(py::init<>())
        .def_readwrite("posts", &SynthPhase::posts)
        .def_readwrite("pools", &SynthPhase::pools)
        .def_readwrite("intensity", &SynthPhase::intensity)
        .def_readwrite("start_epoch", &SynthPhase::start_epoch);

    py::class_<SynthConfig>(m, "SynthConfig")
        .def(py::init<>())
        .def_static("basic", &SynthConfig::basic, py::arg("seed"), py::arg("posts"),
                    py::arg("pools") = 4, py::arg("pool_size") = 10)
        .def_readwrite("seed", &SynthConfig::seed)
        .def_readwrite("start_epoch", &SynthConfig::start_epoch)
        .def_readwrite("step_seconds", &SynthConfig::step_seconds)
        .def_readwrite("tags_min", &SynthConfig::tags_min)
        .def_readwrite("tags_max", &SynthConfig::tags_max)
        .def_readwrite("phases", &SynthConfig::phases);

    py::class_<SynthRecord>(m, "SynthRecord")
        .def_readonly("timestamp", &SynthRecord::timestamp)
        .def_readonly("raw_tags", &SynthRecord::raw_tags);

    m.def("generate_synthetic", [](const SynthConfig& config) {
        std::vector<SynthRecord> records;
        generate_synthetic(config, [&](const SynthRecord& r) { records.push_back(r); });
        return records;
    }, py::arg("config"));
    m.def("synth_record_to_jsonl", &synth_record_to_jsonl, py::arg("record"));

    // --- export ---
    m.def("export_graph",
          [](const FrozenGraph& g, const Partition& p, const std::string& format) {
              return export_graph(g, p, parse_export_format(format));
          },
          py::arg("graph"), py::arg("partition"), py::arg("format"));
    m.def("snapshot_to_json", &snapshot_to_json, py::arg("snapshot"));

    // --- time helpers ---
    m.def("parse_iso8601", &timeutil::parse_iso8601, py::arg("text"));
    m.def("format_iso8601", &timeutil::format_iso8601, py::arg("epoch_seconds"));
}
