#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hashdrift/export.hpp"
#include "hashdrift/ingest.hpp"
#include "hashdrift/synth.hpp"
#include "hashdrift/timeutil.hpp"

namespace fs = std::filesystem;
using namespace hashdrift;

namespace {

struct RunOptions {
    std::vector<std::string> inputs;
    std::string format = "auto";  // auto | jsonl | csv
    std::string out_dir = ".";
    int window_size = 200;
    int min_freq = 5;
    int min_len = 3;
    std::string query_tag = "mybodymychoice";
    std::string cadence = "year";
    int top_k = 5;
    std::vector<std::string> export_formats;
    bool literal_counting = false;
    std::int64_t slack_seconds = 86400;
    FieldMap fields;
    bool quiet = false;
};

struct SynthOptions {
    std::uint64_t seed = 42;
    std::uint64_t posts = 1000;
    int pools = 4;
    int pool_size = 10;
    int tags_min = 2;
    int tags_max = 4;
    double intensity = 0.9;
    std::string start = "2018-01-01T00:00:00Z";
    std::int64_t step_seconds = 600;
    std::string phases_file;
    std::string output = "-";
};

struct ExportOptions {
    std::string input = "-";
    std::string format = "dot";
    std::string output = "-";
};

InputFormat detect_format(const std::string& flag, const std::string& path) {
    if (flag == "jsonl") return InputFormat::Jsonl;
    if (flag == "csv") return InputFormat::Csv;
    std::string name = path;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, ".gz") == 0)
        name = name.substr(0, name.size() - 3);
    if (name.size() > 4 && name.compare(name.size() - 4, 4, ".csv") == 0) return InputFormat::Csv;
    return InputFormat::Jsonl;
}

bool write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

int cmd_run(const RunOptions& options) {
    EngineConfig config;
    config.graph.window_size = options.window_size;
    config.graph.min_freq = options.min_freq;
    config.graph.literal_counting = options.literal_counting;
    config.query_tag = options.query_tag;
    config.min_len = options.min_len;
    config.cadence = options.cadence == "month" ? Cadence::Month : Cadence::Year;
    config.top_k = options.top_k;
    config.regression_slack_seconds = options.slack_seconds;
    StreamEngine engine(config);

    std::error_code ec;
    fs::create_directories(options.out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory '" << options.out_dir << "'\n";
        return 1;
    }

    std::vector<ExportFormat> exports;
    for (const auto& name : options.export_formats) exports.push_back(parse_export_format(name));

    RunReport total;
    StreamCallbacks callbacks;
    bool write_failed = false;
    callbacks.on_snapshot = [&](const Snapshot& snapshot) {
        fs::path base = fs::path(options.out_dir);
        if (!write_file(base / ("snapshot-" + snapshot.period.str() + ".json"),
                        snapshot_to_json(snapshot)))
            write_failed = true;
        for (ExportFormat format : exports) {
            const char* ext = format == ExportFormat::GraphML ? ".graphml"
                              : format == ExportFormat::Dot   ? ".dot"
                                                              : ".json";
            if (!write_file(base / ("graph-" + snapshot.period.str() + ext),
                            export_graph(snapshot.graph, snapshot.best.partition, format)))
                write_failed = true;
        }
        if (!options.quiet)
            std::cerr << "snapshot " << snapshot.period.str() << ": " << snapshot.node_count
                      << " nodes, " << snapshot.edge_count << " edges, "
                      << snapshot.best.partition.communities.size() << " communities\n";
    };
    callbacks.on_diagnostic = [&](const std::string& message) {
        std::cerr << "warning: " << message << "\n";
    };

    for (const auto& input : options.inputs) {
        InputFormat format = detect_format(options.format, input);
        if (input == "-") {
            consume_stream(std::cin, format, options.fields, engine, total, callbacks);
        } else {
            auto stream = open_input(input);
            if (!stream) {
                std::cerr << "error: cannot open input '" << input << "'\n";
                return 1;
            }
            consume_stream(*stream, format, options.fields, engine, total, callbacks);
        }
    }
    finalize_stream(engine, total, callbacks);

    if (!write_file(fs::path(options.out_dir) / "report.json", report_to_json(total)))
        write_failed = true;
    if (write_failed) {
        std::cerr << "error: failed writing outputs under '" << options.out_dir << "'\n";
        return 1;
    }
    return 0;
}

int cmd_synth(const SynthOptions& options) {
    if (options.posts == 0 && options.phases_file.empty()) {
        if (options.output == "-") return 0;
        return write_file(options.output, "") ? 0 : 1;
    }

    SynthConfig config = SynthConfig::basic(options.seed, options.posts, options.pools,
                                            options.pool_size);
    config.tags_min = options.tags_min;
    config.tags_max = options.tags_max;
    config.step_seconds = options.step_seconds;
    config.phases[0].intensity = options.intensity;
    auto start = timeutil::parse_iso8601(options.start);
    if (!start) {
        std::cerr << "error: unparseable --start timestamp\n";
        return 2;
    }
    config.start_epoch = *start;

    if (!options.phases_file.empty()) {
        std::ifstream in(options.phases_file);
        if (!in) {
            std::cerr << "error: cannot open phases file '" << options.phases_file << "'\n";
            return 1;
        }
        nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
        if (doc.is_discarded() || !doc.is_array()) {
            std::cerr << "error: phases file must hold a JSON array of phases\n";
            return 2;
        }
        config.phases.clear();
        try {
            for (const auto& item : doc) {
                SynthPhase phase;
                phase.posts = item.value("posts", std::uint64_t{1});
                phase.intensity = item.value("intensity", options.intensity);
                if (item.contains("start")) {
                    auto epoch = timeutil::parse_iso8601(item.at("start").get<std::string>());
                    if (!epoch) {
                        std::cerr << "error: unparseable phase start\n";
                        return 2;
                    }
                    phase.start_epoch = *epoch;
                }
                for (const auto& pool : item.value("pools", nlohmann::json::array()))
                    phase.pools.push_back(pool.get<std::vector<std::string>>());
                config.phases.push_back(std::move(phase));
            }
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "error: bad phases file: " << e.what() << "\n";
            return 2;
        }
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (options.output != "-") {
        file.open(options.output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output '" << options.output << "'\n";
            return 1;
        }
        out = &file;
    }

    try {
        generate_synthetic(config, [&](const SynthRecord& record) {
            *out << synth_record_to_jsonl(record) << "\n";
        });
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    out->flush();
    return out->good() ? 0 : 1;
}

int cmd_export(const ExportOptions& options) {
    std::string text;
    if (options.input == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        auto stream = open_input(options.input);
        if (!stream) {
            std::cerr << "error: cannot open input '" << options.input << "'\n";
            return 1;
        }
        std::ostringstream buffer;
        buffer << stream->rdbuf();
        text = buffer.str();
    }

    std::string rendered;
    try {
        auto [graph, partition] = parse_graph_json(text);
        rendered = export_graph(graph, partition, parse_export_format(options.format));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (options.output == "-") {
        std::cout << rendered;
        return std::cout.good() ? 0 : 1;
    }
    return write_file(options.output, rendered) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Streaming hashtag co-occurrence graphs with periodic community snapshots"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Replay a post stream and emit period snapshots");
    run_cmd->add_option("--input,-i", run.inputs, "Input file(s); '-' for stdin")->required();
    run_cmd->add_option("--format", run.format, "Input format: auto, jsonl, csv")
        ->check(CLI::IsMember({"auto", "jsonl", "csv"}))
        ->capture_default_str();
    run_cmd->add_option("--out,-o", run.out_dir, "Output directory")->capture_default_str();
    run_cmd->add_option("--window", run.window_size, "Node window size")
        ->envname("HASHDRIFT_WINDOW")
        ->capture_default_str();
    run_cmd->add_option("--min-freq", run.min_freq, "Promotion frequency threshold")
        ->envname("HASHDRIFT_MIN_FREQ")
        ->capture_default_str();
    run_cmd->add_option("--min-len", run.min_len, "Minimum normalized tag length")
        ->envname("HASHDRIFT_MIN_LEN")
        ->capture_default_str();
    run_cmd->add_option("--query-tag", run.query_tag, "Query tag excluded from the graph")
        ->envname("HASHDRIFT_QUERY_TAG")
        ->capture_default_str();
    run_cmd->add_option("--cadence", run.cadence, "Snapshot cadence")
        ->check(CLI::IsMember({"year", "month"}))
        ->envname("HASHDRIFT_CADENCE")
        ->capture_default_str();
    run_cmd->add_option("--top-k", run.top_k, "Communities and tags per report")
        ->capture_default_str();
    run_cmd->add_option("--export", run.export_formats, "Per-period graph exports")
        ->check(CLI::IsMember({"graphml", "dot", "json"}))
        ->delimiter(',');
    run_cmd->add_flag("--literal-counting", run.literal_counting,
                      "Count a tag once per appearance instead of once per post");
    run_cmd->add_option("--slack-seconds", run.slack_seconds,
                        "Tolerated timestamp regression before a record is rejected")
        ->capture_default_str();
    run_cmd->add_option("--timestamp-field", run.fields.timestamp, "JSON key for the timestamp")
        ->capture_default_str();
    run_cmd->add_option("--text-field", run.fields.text, "JSON key for post text")
        ->capture_default_str();
    run_cmd->add_option("--hashtags-field", run.fields.hashtags, "JSON key for raw hashtags")
        ->capture_default_str();
    run_cmd->add_flag("--quiet,-q", run.quiet, "Suppress per-snapshot progress lines");

    SynthOptions synth;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a deterministic synthetic stream");
    synth_cmd->add_option("--seed", synth.seed, "PRNG seed")->capture_default_str();
    synth_cmd->add_option("--posts", synth.posts, "Number of posts")->capture_default_str();
    synth_cmd->add_option("--pools", synth.pools, "Topic pools")->check(CLI::PositiveNumber)
        ->capture_default_str();
    synth_cmd->add_option("--pool-size", synth.pool_size, "Tags per pool")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    synth_cmd->add_option("--tags-min", synth.tags_min, "Minimum tags per post")
        ->capture_default_str();
    synth_cmd->add_option("--tags-max", synth.tags_max, "Maximum tags per post")
        ->capture_default_str();
    synth_cmd->add_option("--intensity", synth.intensity, "Single-pool post probability")
        ->capture_default_str();
    synth_cmd->add_option("--start", synth.start, "First timestamp")->capture_default_str();
    synth_cmd->add_option("--step-seconds", synth.step_seconds, "Clock advance per post")
        ->capture_default_str();
    synth_cmd->add_option("--phases-file", synth.phases_file,
                          "JSON array of {posts, pools, intensity, start} phases");
    synth_cmd->add_option("--output", synth.output, "Output file; '-' for stdout")
        ->capture_default_str();

    ExportOptions exp;
    auto* export_cmd = app.add_subcommand("export", "Re-render a graph JSON document");
    export_cmd->add_option("--input,-i", exp.input, "Graph JSON file; '-' for stdin")
        ->capture_default_str();
    export_cmd->add_option("--format,-f", exp.format, "Target format")
        ->check(CLI::IsMember({"graphml", "dot", "json"}))
        ->capture_default_str();
    export_cmd->add_option("--output,-o", exp.output, "Output file; '-' for stdout")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run);
        if (synth_cmd->parsed()) return cmd_synth(synth);
        return cmd_export(exp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
