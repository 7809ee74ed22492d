#include "hashdrift/synth.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hashdrift/rng.hpp"
#include "hashdrift/timeutil.hpp"

#include <json.hpp>

namespace hashdrift {

SynthConfig SynthConfig::basic(std::uint64_t seed, std::uint64_t posts, int pools, int pool_size) {
    SynthConfig config;
    config.seed = seed;
    SynthPhase phase;
    phase.posts = posts;
    for (int p = 0; p < pools; ++p) {
        std::vector<std::string> pool;
        for (int t = 0; t < pool_size; ++t) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "pool%02dtag%02d", p, t);
            pool.emplace_back(buf);
        }
        phase.pools.push_back(std::move(pool));
    }
    config.phases.push_back(std::move(phase));
    return config;
}

namespace {

void validate(const SynthConfig& config) {
    if (config.phases.empty()) throw std::invalid_argument("synth: at least one phase required");
    if (config.tags_min < 1 || config.tags_max < config.tags_min)
        throw std::invalid_argument("synth: bad tags_per_post range");
    if (config.step_seconds < 1) throw std::invalid_argument("synth: step_seconds must be >= 1");
    for (const auto& phase : config.phases) {
        if (phase.posts < 1) throw std::invalid_argument("synth: phase duration must be >= 1");
        if (phase.pools.empty()) throw std::invalid_argument("synth: phase needs pools");
        for (const auto& pool : phase.pools)
            if (pool.empty()) throw std::invalid_argument("synth: empty pool");
        if (phase.intensity < 0.0 || phase.intensity > 1.0)
            throw std::invalid_argument("synth: intensity out of [0,1]");
    }
}

// Draw up to `want` distinct tags from one pool.
void draw_from_pool(SplitMix64& rng, const std::vector<std::string>& pool, std::size_t want,
                    std::vector<std::string>& out) {
    std::set<std::size_t> picked;
    want = std::min(want, pool.size());
    while (picked.size() < want) picked.insert(rng.bounded(pool.size()));
    for (std::size_t index : picked) out.push_back(pool[index]);
}

}  // namespace

void generate_synthetic(const SynthConfig& config,
                        const std::function<void(const SynthRecord&)>& emit) {
    validate(config);
    SplitMix64 rng(config.seed);
    std::int64_t clock = config.start_epoch;

    for (const auto& phase : config.phases) {
        if (phase.start_epoch) clock = std::max(clock, *phase.start_epoch);
        for (std::uint64_t i = 0; i < phase.posts; ++i) {
            std::size_t want = static_cast<std::size_t>(config.tags_min) +
                               rng.bounded(config.tags_max - config.tags_min + 1);
            std::vector<std::string> tags;
            if (phase.pools.size() == 1 || rng.next_double() < phase.intensity) {
                draw_from_pool(rng, phase.pools[rng.bounded(phase.pools.size())], want, tags);
            } else {
                // Cross-pool noise: each tag from an independently chosen pool.
                std::set<std::string> seen;
                for (std::size_t t = 0; t < want; ++t) {
                    const auto& pool = phase.pools[rng.bounded(phase.pools.size())];
                    seen.insert(pool[rng.bounded(pool.size())]);
                }
                tags.assign(seen.begin(), seen.end());
            }

            SynthRecord record;
            record.timestamp = clock;
            for (auto& tag : tags) record.raw_tags.push_back("#" + tag);
            emit(record);
            clock += config.step_seconds;
        }
    }
}

std::string synth_record_to_jsonl(const SynthRecord& record) {
    nlohmann::ordered_json doc;
    doc["timestamp"] = timeutil::format_iso8601(record.timestamp);
    doc["hashtags"] = record.raw_tags;
    return doc.dump();
}

}  // namespace hashdrift
