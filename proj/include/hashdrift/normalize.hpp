#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hashdrift {

// One post of the stream after normalization: a UTC timestamp plus the
// deduplicated hashtag list. The configured query tag is never present.
struct PostRecord {
    std::int64_t timestamp = 0;
    std::vector<std::string> hashtags;
};

// Every maximal token of the form '#'+word-characters, in order of
// appearance. In a run of '#'s only the final one starts a tag.
std::vector<std::string> extract_raw_hashtags(std::string_view text);

// Canonical form of a raw tag: leading '#' stripped, ASCII-lowercased,
// every character outside [a-z0-9_] removed. Rejects (nullopt) results
// shorter than min_len.
std::optional<std::string> normalize(std::string_view raw, int min_len = 3);

// Normalizes each raw tag, drops rejects and the query tag, and
// deduplicates preserving first occurrence.
PostRecord prepare_post(std::int64_t timestamp, const std::vector<std::string>& raw_tags,
                        const std::string& query_tag, int min_len = 3);

}  // namespace hashdrift
