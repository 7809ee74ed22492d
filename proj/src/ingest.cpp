#include "hashdrift/ingest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>
#include <zlib.h>

#include "hashdrift/normalize.hpp"
#include "hashdrift/timeutil.hpp"

namespace hashdrift {

namespace {

std::optional<std::int64_t> timestamp_from_json(const nlohmann::json& value) {
    if (value.is_number_integer()) return value.get<std::int64_t>();
    if (value.is_number_float()) return static_cast<std::int64_t>(value.get<double>());
    if (value.is_string()) return timeutil::parse_iso8601(value.get<std::string>());
    return std::nullopt;
}

ParsedLine parse_jsonl(std::string_view line, const FieldMap& fields) {
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return {std::nullopt, "not a JSON object"};

    auto ts = doc.find(fields.timestamp);
    if (ts == doc.end()) return {std::nullopt, "missing field '" + fields.timestamp + "'"};
    auto timestamp = timestamp_from_json(*ts);
    if (!timestamp) return {std::nullopt, "unparseable timestamp"};

    const bool has_text = doc.contains(fields.text);
    const bool has_tags = doc.contains(fields.hashtags);
    if (has_text == has_tags)
        return {std::nullopt,
                "expected exactly one of '" + fields.text + "' / '" + fields.hashtags + "'"};

    StreamRecord record;
    record.timestamp = *timestamp;
    if (has_text) {
        const auto& text = doc.at(fields.text);
        if (!text.is_string()) return {std::nullopt, "'" + fields.text + "' is not a string"};
        record.text = text.get<std::string>();
    } else {
        const auto& tags = doc.at(fields.hashtags);
        if (!tags.is_array())
            return {std::nullopt, "'" + fields.hashtags + "' is not an array"};
        std::vector<std::string> raw;
        for (const auto& tag : tags) {
            if (!tag.is_string())
                return {std::nullopt, "'" + fields.hashtags + "' holds a non-string"};
            raw.push_back(tag.get<std::string>());
        }
        record.hashtags = std::move(raw);
    }
    return {std::move(record), ""};
}

ParsedLine parse_csv(std::string_view line) {
    std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) return {std::nullopt, "expected 'timestamp,hashtags'"};

    std::string_view ts_field = line.substr(0, comma);
    auto timestamp = timeutil::parse_iso8601(ts_field);
    if (!timestamp) {
        // epoch seconds also accepted
        std::int64_t v = 0;
        bool ok = !ts_field.empty();
        bool neg = ok && ts_field[0] == '-';
        for (std::size_t i = neg ? 1 : 0; ok && i < ts_field.size(); ++i) {
            if (ts_field[i] < '0' || ts_field[i] > '9') ok = false;
            else v = v * 10 + (ts_field[i] - '0');
        }
        if (!ok) return {std::nullopt, "unparseable timestamp"};
        timestamp = neg ? -v : v;
    }

    std::string_view tags_field = line.substr(comma + 1);
    if (tags_field.size() >= 2 && tags_field.front() == '"' && tags_field.back() == '"')
        tags_field = tags_field.substr(1, tags_field.size() - 2);

    StreamRecord record;
    record.timestamp = *timestamp;
    std::vector<std::string> raw;
    std::size_t start = 0;
    while (start <= tags_field.size()) {
        std::size_t end = tags_field.find(';', start);
        if (end == std::string_view::npos) end = tags_field.size();
        if (end > start) raw.emplace_back(tags_field.substr(start, end - start));
        start = end + 1;
    }
    record.hashtags = std::move(raw);
    return {std::move(record), ""};
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Pull-based line reader over a zlib gzFile.
class GzBuf : public std::streambuf {
public:
    explicit GzBuf(gzFile file) : file_(file) {}
    ~GzBuf() override {
        if (file_) gzclose(file_);
    }

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        int n = gzread(file_, buffer_, sizeof(buffer_));
        if (n <= 0) return traits_type::eof();
        setg(buffer_, buffer_, buffer_ + n);
        return traits_type::to_int_type(*gptr());
    }

private:
    gzFile file_;
    char buffer_[1 << 16];
};

class GzStream : public std::istream {
public:
    explicit GzStream(gzFile file) : std::istream(nullptr), buf_(file) { rdbuf(&buf_); }

private:
    GzBuf buf_;
};

}  // namespace

ParsedLine parse_record(std::string_view line, InputFormat format, const FieldMap& fields) {
    return format == InputFormat::Jsonl ? parse_jsonl(line, fields) : parse_csv(line);
}

void consume_stream(std::istream& in, InputFormat format, const FieldMap& fields,
                    StreamEngine& engine, RunReport& report, const StreamCallbacks& callbacks) {
    auto diagnose = [&](std::uint64_t line_no, const std::string& message) {
        ++report.skipped;
        if (callbacks.on_diagnostic) {
            std::ostringstream out;
            out << "line " << line_no << ": " << message;
            callbacks.on_diagnostic(out.str());
        }
    };
    auto emit = [&](const Snapshot& snapshot) {
        ++report.snapshots_emitted;
        if (callbacks.on_snapshot) callbacks.on_snapshot(snapshot);
    };

    std::string line;
    std::uint64_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line)) continue;
        if (format == InputFormat::Csv && !header_seen) {
            header_seen = true;
            continue;
        }
        ++report.lines_read;

        ParsedLine parsed = parse_record(line, format, fields);
        if (!parsed.record) {
            diagnose(line_no, parsed.error);
            continue;
        }

        const StreamRecord& record = *parsed.record;
        std::vector<std::string> raw =
            record.text ? extract_raw_hashtags(*record.text) : *record.hashtags;
        PostRecord post = prepare_post(record.timestamp, raw, engine.config().query_tag,
                                       engine.config().min_len);
        try {
            if (auto snapshot = engine.process(post)) emit(*snapshot);
            ++report.posts_processed;
        } catch (const StaleTimestamp& e) {
            diagnose(line_no, e.what());
        }
    }
}

void finalize_stream(StreamEngine& engine, RunReport& report, const StreamCallbacks& callbacks) {
    if (auto snapshot = engine.finalize()) {
        ++report.snapshots_emitted;
        if (callbacks.on_snapshot) callbacks.on_snapshot(*snapshot);
    }
}

RunReport run_stream(std::istream& in, InputFormat format, const FieldMap& fields,
                     StreamEngine& engine, const StreamCallbacks& callbacks) {
    RunReport report;
    consume_stream(in, format, fields, engine, report, callbacks);
    finalize_stream(engine, report, callbacks);
    return report;
}

std::unique_ptr<std::istream> open_input(const std::string& path) {
    if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
        gzFile file = gzopen(path.c_str(), "rb");
        if (!file) return nullptr;
        return std::make_unique<GzStream>(file);
    }
    auto stream = std::make_unique<std::ifstream>(path);
    if (!stream->is_open()) return nullptr;
    return stream;
}

}  // namespace hashdrift
