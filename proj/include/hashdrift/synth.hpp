#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hashdrift {

// One stretch of the synthetic stream. Posts draw their tags from this
// phase's pools; disjoint pools across phases produce clean drift.
struct SynthPhase {
    std::uint64_t posts = 0;
    std::vector<std::vector<std::string>> pools;
    // Probability that a post stays within a single pool; the rest mix
    // tags across pools.
    double intensity = 0.9;
    // When set, the clock jumps here on phase entry (never backwards).
    std::optional<std::int64_t> start_epoch;
};

struct SynthConfig {
    std::uint64_t seed = 42;
    std::int64_t start_epoch = 1514764800;  // 2018-01-01T00:00:00Z
    std::int64_t step_seconds = 600;
    int tags_min = 2;
    int tags_max = 4;
    std::vector<SynthPhase> phases;

    // Single phase: `pools` pools of `pool_size` deterministic tag names.
    static SynthConfig basic(std::uint64_t seed, std::uint64_t posts, int pools = 4,
                             int pool_size = 10);
};

struct SynthRecord {
    std::int64_t timestamp = 0;
    std::vector<std::string> raw_tags;  // '#'-prefixed, deduplicated
};

// Deterministic: identical config -> identical stream, byte for byte.
void generate_synthetic(const SynthConfig& config,
                        const std::function<void(const SynthRecord&)>& emit);

// The record as one JSONL line (no trailing newline).
std::string synth_record_to_jsonl(const SynthRecord& record);

}  // namespace hashdrift
