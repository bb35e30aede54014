// Copyright 2026 Repbench Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <ctime>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "repbench/archive.hpp"
#include "repbench/bench.hpp"
#include "repbench/decoder.hpp"
#include "repbench/errors.hpp"
#include "repbench/rep_code.hpp"
#include "repbench/simulator.hpp"
#include "repbench/syndrome_graph.hpp"
#include "repbench/textio.hpp"

namespace {

using namespace repbench;

// Exit codes (also documented in the README):
//   0 success, 1 usage error, 2 invalid configuration or argument,
//   3 I/O failure, 4 text parse error, 5 layout validation failure,
//   6 matching capacity exceeded, 7 internal invariant failure
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitParse = 4;
constexpr int kExitLayout = 5;
constexpr int kExitCapacity = 6;
constexpr int kExitInternal = 7;

/// Honors SOURCE_DATE_EPOCH so archives can be made byte-reproducible.
std::string current_timestamp() {
    std::time_t when = std::time(nullptr);
    if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        try {
            when = static_cast<std::time_t>(std::stoll(epoch));
        } catch (const std::exception &) {
            // fall through to wall-clock time
        }
    }
    char buffer[32];
    std::tm tm_utc{};
    gmtime_r(&when, &tm_utc);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buffer;
}

ResultsArchive load_archive(const std::string &path, const std::string &format) {
    const std::string text = read_text_file(path);
    if (format == "json") return parse_json_archive(text);
    if (format == "dict-literal") return parse_dict_literal_archive(text);
    // auto: the first quote character tells the two formats apart
    for (char c : text) {
        if (c == '"') return parse_json_archive(text);
        if (c == '\'') return parse_dict_literal_archive(text);
    }
    return parse_dict_literal_archive(text);
}

int count_cx(const Circuit &circuit) {
    int count = 0;
    for (const Instruction &instruction : circuit.instructions())
        if (std::holds_alternative<CXGate>(instruction)) ++count;
    return count;
}

void print_rows(const std::vector<BenchRow> &rows) { std::cout << rows_to_csv(rows); }

struct BenchOptions {
    BenchConfig config;
    std::string out_dir;
    bool export_dot = false;
    bool plot_script = false;
    bool layout_check = false;
};

int run_bench(BenchOptions &options) {
    options.config.timestamp = current_timestamp();
    if (options.layout_check) {
        for (int n = options.config.n_min; n <= options.config.n_max;
             n += options.config.n_step) {
            const RepetitionCode code = build_repetition_code(n, options.config.rounds);
            const int expected = 2 * (n - 1) * options.config.rounds;
            for (const Circuit *circuit : {&code.circuit_0, &code.circuit_1}) {
                const int actual = count_cx(*circuit);
                if (actual != expected)
                    throw std::runtime_error("layout check failed: " + std::to_string(actual) +
                                             " instead of " + std::to_string(expected) +
                                             " cx gates for n = " + std::to_string(n));
            }
            std::cout << "layout check n=" << n << ": " << expected << " cx gates\n";
        }
    }
    BenchResult result = bench_run(options.config);
    emit_reports(result, options.out_dir, {options.export_dot, options.plot_script});
    print_rows(result.rows);
    std::cout << "wrote " << options.out_dir << "\n";
    return 0;
}

struct ProcessOptions {
    std::string in_path;
    std::string format = "auto";
    std::string out_path;
};

int run_process(const ProcessOptions &options) {
    const ResultsArchive archive = load_archive(options.in_path, options.format);
    nlohmann::json j;
    j["format"] = "repbench-processed";
    j["version"] = ResultsArchive::format_version;
    j["entries"] = nlohmann::json::array();
    for (const ArchiveEntry &entry : archive.entries) {
        const RepetitionCode code = build_repetition_code(entry.n, entry.rounds);
        const LabeledCounts processed = process_results(code, entry.counts);
        nlohmann::json item;
        item["n"] = entry.n;
        item["rounds"] = entry.rounds;
        item["counts"] = nlohmann::json::object();
        for (const auto &[label, counts] : processed) {
            nlohmann::json bucket = nlohmann::json::object();
            for (const auto &[outcome, count] : counts) bucket[outcome] = count;
            item["counts"][label] = std::move(bucket);
        }
        j["entries"].push_back(std::move(item));
    }
    const std::string text = j.dump(2) + "\n";
    if (options.out_path.empty())
        std::cout << text;
    else
        write_text_file(options.out_path, text);
    return 0;
}

struct DecodeOptions {
    std::string in_path;
    std::string format = "auto";
    std::string decoder = "matching";
    std::string weighting = "unit";
    std::string table_path;
    std::string out_dir;
};

int run_decode(const DecodeOptions &options) {
    const ResultsArchive archive = load_archive(options.in_path, options.format);
    const DecoderKind decoder = decoder_kind_from_string(options.decoder);
    const WeightingKind weighting = weighting_kind_from_string(options.weighting);

    ResultsArchive table;
    if (decoder == DecoderKind::lookup) {
        if (options.table_path.empty())
            throw std::invalid_argument("lookup decoding needs --table with reference results");
        table = load_archive(options.table_path, "auto");
    }

    BenchResult result;
    result.archive = archive;
    for (const ArchiveEntry &entry : archive.entries) {
        const RepetitionCode code = build_repetition_code(entry.n, entry.rounds);
        const LabeledCounts processed = process_results(code, entry.counts);

        LogicalErrorReport report;
        if (decoder == DecoderKind::matching) {
            SyndromeGraph graph = build_graph(code);
            if (weighting == WeightingKind::data) {
                graph = weight_syndrome_graph(graph, processed.at("0"));
                result.edge_summaries.emplace_back(entry.n, edge_probability_summary(graph));
            }
            try {
                report = get_logical_prob(processed, graph, all_pairs_distances(graph));
            } catch (const CapacityError &e) {
                throw CapacityError("n=" + std::to_string(entry.n) + ": " + e.what());
            }
            result.graphs.emplace_back(entry.n, std::move(graph));
        } else {
            const ArchiveEntry *reference = table.find(entry.n);
            if (reference == nullptr)
                throw std::invalid_argument("table archive has no entry for n=" +
                                            std::to_string(entry.n));
            report = lookup_decode(entry.counts, reference->counts);
        }
        for (const auto &[label, item] : report.labels)
            result.rows.push_back({entry.n, label, item.p_logical, item.shots});
    }

    print_rows(result.rows);
    if (!options.out_dir.empty()) emit_reports(result, options.out_dir, {});
    return 0;
}

struct GraphOptions {
    int n = 3;
    int rounds = 1;
    std::string export_format = "dot";
    std::string out_path;
    std::string weight_from;
};

int run_graph(const GraphOptions &options) {
    const RepetitionCode code = build_repetition_code(options.n, options.rounds);
    SyndromeGraph graph = build_graph(code);
    if (!options.weight_from.empty()) {
        const ResultsArchive archive = load_archive(options.weight_from, "auto");
        const ArchiveEntry *entry = archive.find(options.n);
        if (entry == nullptr)
            throw std::invalid_argument("archive has no entry for n=" + std::to_string(options.n));
        if (entry->rounds != options.rounds)
            throw std::invalid_argument("archive entry for n=" + std::to_string(options.n) +
                                        " has rounds=" + std::to_string(entry->rounds));
        const LabeledCounts processed = process_results(code, entry->counts);
        graph = weight_syndrome_graph(graph, processed.at("0"));
    }
    const std::string text =
        options.export_format == "json" ? graph_to_json(graph) : graph_to_dot(graph);
    if (options.out_path.empty())
        std::cout << text;
    else
        write_text_file(options.out_path, text);
    return 0;
}

struct IngestOptions {
    std::string in_path;
    std::string format = "auto";
    std::string to = "json";
    std::string out_path;
};

int run_ingest(const IngestOptions &options) {
    const ResultsArchive archive = load_archive(options.in_path, options.format);
    std::uint64_t shots = 0;
    for (const ArchiveEntry &entry : archive.entries)
        for (const auto &[label, counts] : entry.counts) shots += total_counts(counts);
    std::cerr << "ingested " << archive.entries.size() << " code size(s), " << shots
              << " shot(s) total\n";

    const std::string text =
        options.to == "dict-literal" ? archive_to_dict_literal(archive) : archive_to_json(archive);
    if (options.out_path.empty())
        std::cout << text;
    else
        write_text_file(options.out_path, text);
    return 0;
}

struct StatsOptions {
    std::string in_path;
    std::string format = "auto";
    int n = 0;  // 0 means the largest n in the archive
};

int run_stats(const StatsOptions &options) {
    const ResultsArchive archive = load_archive(options.in_path, options.format);
    if (archive.entries.empty()) throw std::invalid_argument("archive holds no results");

    const ArchiveEntry *entry =
        options.n == 0 ? &archive.entries.back() : archive.find(options.n);
    if (entry == nullptr)
        throw std::invalid_argument("archive has no entry for n=" + std::to_string(options.n));

    const RepetitionCode code = build_repetition_code(entry->n, entry->rounds);
    const LabeledCounts processed = process_results(code, entry->counts);
    const SyndromeGraph graph =
        weight_syndrome_graph(build_graph(code), processed.at("0"));
    std::cout << summary_to_text(edge_probability_summary(graph));
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Repetition-code quantum error correction benchmarking toolkit"};
    app.require_subcommand(1);

    BenchOptions bench;
    auto *bench_cmd =
        app.add_subcommand("bench", "Simulate, decode and report a sweep over code sizes");
    bench_cmd->add_option("--n-min", bench.config.n_min, "Smallest code size");
    bench_cmd->add_option("--n-max", bench.config.n_max, "Largest code size");
    bench_cmd->add_option("--n-step", bench.config.n_step, "Code size increment");
    bench_cmd->add_option("--rounds", bench.config.rounds, "Syndrome measurement rounds");
    bench_cmd->add_option("--rho-meas", bench.config.rho_meas, "Measurement flip probability");
    bench_cmd->add_option("--rho-gate", bench.config.rho_gate, "Gate depolarizing probability");
    bench_cmd->add_option("--shots", bench.config.shots, "Shots per circuit");
    bench_cmd->add_option("--table-shots", bench.config.table_shots,
                          "Shots for the lookup reference run");
    bench_cmd->add_option("--seed", bench.config.seed, "RNG seed");
    std::string decoder_name = "matching", weighting_name = "unit";
    bench_cmd->add_option("--decoder", decoder_name, "lookup or matching");
    bench_cmd->add_option("--weighting", weighting_name, "unit or data");
    bench_cmd->add_option("--out", bench.out_dir, "Output directory")->required();
    bench_cmd->add_flag("--export-dot", bench.export_dot, "Also write per-n DOT graphs");
    bench_cmd->add_flag("--plot-script", bench.plot_script, "Also write plot.py");
    bench_cmd->add_flag("--layout-check", bench.layout_check,
                        "Assert the per-circuit cx count is 2(n-1)T before running");

    ProcessOptions process;
    auto *process_cmd =
        app.add_subcommand("process", "Rewrite raw results in the syndrome-change convention");
    process_cmd->add_option("--in", process.in_path, "Input archive")->required();
    process_cmd->add_option("--format", process.format, "auto, json or dict-literal");
    process_cmd->add_option("--out", process.out_path, "Output file (stdout when omitted)");

    DecodeOptions decode;
    auto *decode_cmd = app.add_subcommand("decode", "Decode an archive and report error rates");
    decode_cmd->add_option("--in", decode.in_path, "Input archive")->required();
    decode_cmd->add_option("--format", decode.format, "auto, json or dict-literal");
    decode_cmd->add_option("--decoder", decode.decoder, "lookup or matching");
    decode_cmd->add_option("--weighting", decode.weighting, "unit or data");
    decode_cmd->add_option("--table", decode.table_path, "Reference archive for lookup decoding");
    decode_cmd->add_option("--out", decode.out_dir, "Report directory (stdout only when omitted)");

    GraphOptions graph;
    auto *graph_cmd = app.add_subcommand("graph", "Export the decoding graph for one code");
    graph_cmd->add_option("--n", graph.n, "Code size");
    graph_cmd->add_option("--rounds", graph.rounds, "Syndrome measurement rounds");
    graph_cmd->add_option("--export", graph.export_format, "dot or json");
    graph_cmd->add_option("--out", graph.out_path, "Output file (stdout when omitted)");
    graph_cmd->add_option("--weight-from", graph.weight_from,
                          "Archive whose logical-0 results set the edge weights");

    IngestOptions ingest;
    auto *ingest_cmd =
        app.add_subcommand("ingest", "Validate an archive and rewrite it in a chosen format");
    ingest_cmd->add_option("--in", ingest.in_path, "Input file")->required();
    ingest_cmd->add_option("--format", ingest.format, "auto, json or dict-literal");
    ingest_cmd->add_option("--to", ingest.to, "json or dict-literal");
    ingest_cmd->add_option("--out", ingest.out_path, "Output file (stdout when omitted)");

    StatsOptions stats;
    auto *stats_cmd =
        app.add_subcommand("stats", "Edge probability summary from an archive's results");
    stats_cmd->add_option("--in", stats.in_path, "Input archive")->required();
    stats_cmd->add_option("--format", stats.format, "auto, json or dict-literal");
    stats_cmd->add_option("--n", stats.n, "Code size (largest in the archive when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ? 0 : kExitUsage;
    }

    try {
        bench.config.decoder = decoder_kind_from_string(decoder_name);
        bench.config.weighting = weighting_kind_from_string(weighting_name);
        if (bench_cmd->parsed()) return run_bench(bench);
        if (process_cmd->parsed()) return run_process(process);
        if (decode_cmd->parsed()) return run_decode(decode);
        if (graph_cmd->parsed()) return run_graph(graph);
        if (ingest_cmd->parsed()) return run_ingest(ingest);
        if (stats_cmd->parsed()) return run_stats(stats);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const LayoutError &e) {
        std::cerr << "layout error: " << e.what() << "\n";
        return kExitLayout;
    } catch (const CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
