#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hashdrift/analytics.hpp"

namespace hashdrift {

// One raw stream element before normalization: a timestamp plus either
// post text (hashtags extracted downstream) or pre-extracted raw tags.
struct StreamRecord {
    std::int64_t timestamp = 0;
    std::optional<std::string> text;
    std::optional<std::vector<std::string>> hashtags;
};

enum class InputFormat { Jsonl, Csv };

// Maps record fields onto the input's actual column/key names.
struct FieldMap {
    std::string timestamp = "timestamp";
    std::string text = "text";
    std::string hashtags = "hashtags";
};

struct ParsedLine {
    std::optional<StreamRecord> record;
    std::string error;  // set iff record is empty
};

// Parses one line. CSV lines are `timestamp,tag;tag;...`; the hashtags
// field may be double-quoted. Malformed input yields an error message,
// never a throw.
ParsedLine parse_record(std::string_view line, InputFormat format, const FieldMap& fields = {});

struct RunReport {
    std::uint64_t lines_read = 0;  // record lines; blank lines and the CSV header are not records
    std::uint64_t posts_processed = 0;
    std::uint64_t skipped = 0;
    std::uint64_t snapshots_emitted = 0;
};

struct StreamCallbacks {
    std::function<void(const Snapshot&)> on_snapshot;
    std::function<void(const std::string&)> on_diagnostic;
};

// Feeds one source into the engine without finalizing; counts accumulate
// into `report`. Per-record failures are skipped, counted, and reported
// as diagnostics. Lets several files replay into a single engine.
void consume_stream(std::istream& in, InputFormat format, const FieldMap& fields,
                    StreamEngine& engine, RunReport& report,
                    const StreamCallbacks& callbacks = {});

// Emits the engine's final snapshot, if any, into the report/callbacks.
void finalize_stream(StreamEngine& engine, RunReport& report,
                     const StreamCallbacks& callbacks = {});

// Single-pass replay of one source: each record is prepared, tallied,
// rolled over and added to the graph in order; the final period is
// flushed at exhaustion.
RunReport run_stream(std::istream& in, InputFormat format, const FieldMap& fields,
                     StreamEngine& engine, const StreamCallbacks& callbacks = {});

// Opens a file for reading, transparently inflating a trailing ".gz".
// Returns nullptr when the file cannot be opened.
std::unique_ptr<std::istream> open_input(const std::string& path);

}  // namespace hashdrift
