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

#include "repbench/bench.hpp"

#include <stdexcept>

#include <json.hpp>

#include "repbench/errors.hpp"
#include "repbench/rep_code.hpp"
#include "repbench/rng.hpp"
#include "repbench/simulator.hpp"
#include "repbench/textio.hpp"

namespace repbench {

std::string to_string(DecoderKind kind) {
    return kind == DecoderKind::lookup ? "lookup" : "matching";
}

std::string to_string(WeightingKind kind) { return kind == WeightingKind::unit ? "unit" : "data"; }

DecoderKind decoder_kind_from_string(const std::string &name) {
    if (name == "lookup") return DecoderKind::lookup;
    if (name == "matching") return DecoderKind::matching;
    throw std::invalid_argument("unknown decoder '" + name + "' (expected lookup or matching)");
}

WeightingKind weighting_kind_from_string(const std::string &name) {
    if (name == "unit") return WeightingKind::unit;
    if (name == "data") return WeightingKind::data;
    throw std::invalid_argument("unknown weighting '" + name + "' (expected unit or data)");
}

void BenchConfig::validate() const {
    if (n_min < 2) throw std::invalid_argument("n_min must be at least 2");
    if (n_max < n_min) throw std::invalid_argument("n_max must be at least n_min");
    if (n_step < 1) throw std::invalid_argument("n_step must be at least 1");
    if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");
    if (shots < 1) throw std::invalid_argument("shots must be at least 1");
    if (decoder == DecoderKind::lookup && table_shots < 1)
        throw std::invalid_argument("lookup decoding needs table_shots >= 1");
    NoiseModel check(rho_meas, rho_gate);  // range-checks the probabilities
    (void)check;
}

std::string BenchConfig::to_json() const {
    nlohmann::json j;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["n_step"] = n_step;
    j["rounds"] = rounds;
    j["rho_meas"] = rho_meas;
    j["rho_gate"] = rho_gate;
    j["shots"] = shots;
    j["table_shots"] = table_shots;
    j["seed"] = seed;
    j["decoder"] = to_string(decoder);
    j["weighting"] = to_string(weighting);
    return j.dump();
}

std::uint64_t bench_stream(std::uint64_t seed, int n, int label, int purpose) {
    return derive_stream(derive_stream(seed, static_cast<std::uint64_t>(n)),
                         static_cast<std::uint64_t>(label * 2 + purpose));
}

BenchResult bench_run(const BenchConfig &config) {
    config.validate();
    const NoiseModel noise(config.rho_meas, config.rho_gate);

    BenchResult result;
    result.config = config;
    result.archive.created = config.timestamp;
    result.archive.config_json = config.to_json();

    for (int n = config.n_min; n <= config.n_max; n += config.n_step) {
        const RepetitionCode code = build_repetition_code(n, config.rounds);

        LabeledCounts raw;
        raw["0"] = sample(code.circuit_0, noise, config.shots, bench_stream(config.seed, n, 0, 0));
        raw["1"] = sample(code.circuit_1, noise, config.shots, bench_stream(config.seed, n, 1, 0));
        result.archive.entries.push_back({n, config.rounds, raw});

        const LabeledCounts processed = process_results(code, raw);

        SyndromeGraph graph = build_graph(code);
        if (config.weighting == WeightingKind::data) {
            graph = weight_syndrome_graph(graph, processed.at("0"));
            result.edge_summaries.emplace_back(n, edge_probability_summary(graph));
        }

        LogicalErrorReport report;
        if (config.decoder == DecoderKind::matching) {
            const DistanceTable distances = all_pairs_distances(graph);
            try {
                report = get_logical_prob(processed, graph, distances);
            } catch (const CapacityError &e) {
                throw CapacityError("n=" + std::to_string(n) + ": " + e.what());
            }
        } else {
            LabeledCounts table;
            table["0"] = sample(code.circuit_0, noise, config.table_shots,
                                bench_stream(config.seed, n, 0, 1));
            table["1"] = sample(code.circuit_1, noise, config.table_shots,
                                bench_stream(config.seed, n, 1, 1));
            report = lookup_decode(raw, table);
        }

        for (const auto &[label, entry] : report.labels)
            result.rows.push_back({n, label, entry.p_logical, entry.shots});
        result.graphs.emplace_back(n, std::move(graph));
    }
    return result;
}

std::string rows_to_csv(const std::vector<BenchRow> &rows) {
    std::string out = "n,label,P,shots\n";
    for (const BenchRow &row : rows)
        out += std::to_string(row.n) + "," + row.label + "," + format_double(row.p_logical) + "," +
               std::to_string(row.shots) + "\n";
    return out;
}

std::string rows_to_json(const std::vector<BenchRow> &rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const BenchRow &row : rows) {
        nlohmann::json item;
        item["n"] = row.n;
        item["label"] = row.label;
        item["P"] = row.p_logical;
        item["shots"] = row.shots;
        j.push_back(item);
    }
    return j.dump(2) + "\n";
}

namespace {

constexpr const char *kPlotScript = R"(#!/usr/bin/env python3
"""Plots logical error probability against code distance from results.csv."""
import csv
import matplotlib.pyplot as plt

series = {"0": {}, "1": {}}
with open("results.csv") as f:
    for row in csv.DictReader(f):
        series[row["label"]][int(row["n"])] = float(row["P"])

for label, marker in (("0", "o"), ("1", "s")):
    ns = sorted(series[label])
    plt.scatter(ns, [series[label][n] for n in ns], label=f"logical {label}",
                s=128, marker=marker)
plt.xlabel("Code distance, n")
plt.ylabel("Logical error probability")
if any(p > 0 for points in series.values() for p in points.values()):
    plt.yscale("log")
plt.legend()
plt.savefig("logical_error.png", dpi=160, bbox_inches="tight")
)";

}  // namespace

void emit_reports(const BenchResult &result, const std::filesystem::path &out_dir,
                  const EmitOptions &options) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir.string() + "'");

    write_text_file(out_dir / "results.csv", rows_to_csv(result.rows));
    write_text_file(out_dir / "results.json", rows_to_json(result.rows));
    write_text_file(out_dir / "archive.json", archive_to_json(result.archive));

    for (const auto &[n, summary] : result.edge_summaries)
        write_text_file(out_dir / ("edge_stats_" + std::to_string(n) + ".txt"),
                        summary_to_text(summary));

    if (options.export_dot)
        for (const auto &[n, graph] : result.graphs)
            write_text_file(out_dir / ("graph_" + std::to_string(n) + ".dot"), graph_to_dot(graph));

    if (options.plot_script) write_text_file(out_dir / "plot.py", kPlotScript);
}

}  // namespace repbench
