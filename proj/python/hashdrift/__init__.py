"""Streaming hashtag co-occurrence graphs with Girvan-Newman drift snapshots."""

from hashdrift._core import (
    Cadence,
    DriftSummary,
    EngineConfig,
    FrozenGraph,
    GraphConfig,
    GraphStats,
    Partition,
    PeriodLabel,
    PeriodTally,
    PostRecord,
    PromotionStatus,
    ScoredPartition,
    Snapshot,
    StaleTimestampError,
    StreamEngine,
    SynthConfig,
    SynthPhase,
    SynthRecord,
    WindowedGraph,
    best_partition,
    canonical_partition,
    drift_summary,
    edge_betweenness,
    export_graph,
    extract_raw_hashtags,
    format_iso8601,
    generate_synthetic,
    girvan_newman,
    modularity,
    normalize,
    parse_iso8601,
    prepare_post,
    snapshot_to_json,
    synth_record_to_jsonl,
)

__version__ = "0.1.0"

__all__ = [
    "Cadence",
    "DriftSummary",
    "EngineConfig",
    "FrozenGraph",
    "GraphConfig",
    "GraphStats",
    "Partition",
    "PeriodLabel",
    "PeriodTally",
    "PostRecord",
    "PromotionStatus",
    "ScoredPartition",
    "Snapshot",
    "StaleTimestampError",
    "StreamEngine",
    "SynthConfig",
    "SynthPhase",
    "SynthRecord",
    "WindowedGraph",
    "best_partition",
    "canonical_partition",
    "drift_summary",
    "edge_betweenness",
    "export_graph",
    "extract_raw_hashtags",
    "format_iso8601",
    "generate_synthetic",
    "girvan_newman",
    "modularity",
    "normalize",
    "parse_iso8601",
    "prepare_post",
    "snapshot_to_json",
    "synth_record_to_jsonl",
]
