#include "hashdrift/normalize.hpp"

#include <stdexcept>
#include <unordered_set>

namespace hashdrift {

namespace {

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + ('a' - 'A')) : c;
}

}  // namespace

std::vector<std::string> extract_raw_hashtags(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#' && i + 1 < text.size() && is_word_char(text[i + 1])) {
            std::size_t j = i + 1;
            while (j < text.size() && is_word_char(text[j])) ++j;
            out.emplace_back(text.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

std::optional<std::string> normalize(std::string_view raw, int min_len) {
    if (min_len < 1) throw std::invalid_argument("normalize: min_len must be >= 1");
    std::size_t start = (!raw.empty() && raw.front() == '#') ? 1 : 0;
    std::string out;
    out.reserve(raw.size() - start);
    for (std::size_t i = start; i < raw.size(); ++i) {
        char c = ascii_lower(raw[i]);
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_') out.push_back(c);
    }
    if (out.size() < static_cast<std::size_t>(min_len)) return std::nullopt;
    return out;
}

PostRecord prepare_post(std::int64_t timestamp, const std::vector<std::string>& raw_tags,
                        const std::string& query_tag, int min_len) {
    PostRecord post;
    post.timestamp = timestamp;
    std::unordered_set<std::string> seen;
    for (const auto& raw : raw_tags) {
        auto tag = normalize(raw, min_len);
        if (!tag || *tag == query_tag) continue;
        if (seen.insert(*tag).second) post.hashtags.push_back(std::move(*tag));
    }
    return post;
}

}  // namespace hashdrift
