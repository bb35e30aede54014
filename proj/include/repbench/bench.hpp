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

#ifndef REPBENCH_BENCH_H
#define REPBENCH_BENCH_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "repbench/archive.hpp"
#include "repbench/counts.hpp"
#include "repbench/decoder.hpp"
#include "repbench/syndrome_graph.hpp"

namespace repbench {

enum class DecoderKind { lookup, matching };
enum class WeightingKind { unit, data };

std::string to_string(DecoderKind kind);
std::string to_string(WeightingKind kind);
DecoderKind decoder_kind_from_string(const std::string &name);
WeightingKind weighting_kind_from_string(const std::string &name);

struct BenchConfig {
    int n_min = 3;
    int n_max = 3;
    int n_step = 1;
    int rounds = 1;
    double rho_meas = 0.0;
    double rho_gate = 0.0;
    std::uint64_t shots = 1024;
    std::uint64_t table_shots = 10000;  // lookup decoder reference run
    std::uint64_t seed = 0;
    DecoderKind decoder = DecoderKind::matching;
    WeightingKind weighting = WeightingKind::unit;
    std::string timestamp;  // recorded in the archive; empty keeps it out

    void validate() const;
    std::string to_json() const;
};

struct BenchRow {
    int n = 0;
    std::string label;
    double p_logical = 0.0;
    std::uint64_t shots = 0;
};

struct BenchResult {
    BenchConfig config;
    ResultsArchive archive;
    std::vector<BenchRow> rows;                            // ordered by (n, label)
    std::vector<std::pair<int, EdgeSummary>> edge_summaries;  // data weighting only
    std::vector<std::pair<int, SyndromeGraph>> graphs;        // per n, as decoded with
};

/// Runs the three-step procedure per code size: build the circuits, sample
/// both encodings, process, construct (and optionally data-weight) the
/// decoding graph, decode, and tabulate logical error probabilities.
BenchResult bench_run(const BenchConfig &config);

std::string rows_to_csv(const std::vector<BenchRow> &rows);
std::string rows_to_json(const std::vector<BenchRow> &rows);

struct EmitOptions {
    bool export_dot = false;
    bool plot_script = false;
};

/// Writes results.csv, results.json, archive.json and, when present,
/// edge_stats.txt (plus optional per-n DOT graphs and a plotting script)
/// into `out_dir`. Output bytes depend only on the BenchResult contents.
void emit_reports(const BenchResult &result, const std::filesystem::path &out_dir,
                  const EmitOptions &options = {});

/// Per-(seed, n, label, purpose) sampling stream id used by bench_run; kept
/// public so external tooling can reproduce individual cells.
std::uint64_t bench_stream(std::uint64_t seed, int n, int label, int purpose);

}  // namespace repbench

#endif
