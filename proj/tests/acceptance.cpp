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

// End-to-end acceptance suite. Each numbered check prints one PASS/FAIL
// line; the process exit code is the number of failures. Stochastic checks
// run at fixed seeds with the tolerance stated next to them.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "repbench/archive.hpp"
#include "repbench/bench.hpp"
#include "repbench/decoder.hpp"
#include "repbench/errors.hpp"
#include "repbench/rep_code.hpp"
#include "repbench/simulator.hpp"
#include "repbench/syndrome_graph.hpp"
#include "repbench/textio.hpp"

using namespace repbench;

namespace {

int failures = 0;

void criterion(int id, const std::string &name, bool pass, const std::string &detail = "") {
    std::printf("[%s] %2d %s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double binomial_se(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

// ---------------------------------------------------------------------------

void check_analytic_majority() {
    const double value = analytic_majority(3, 0.01);
    criterion(1, "analytic majority P(3, 0.01)", value == 0.00029800000000000003,
              "got " + format_double(value));
}

void check_golden_strings() {
    const RepetitionCode code31 = build_repetition_code(3, 1);
    const RepetitionCode code34 = build_repetition_code(3, 4);
    const RepetitionCode code54 = build_repetition_code(5, 4);
    const bool pass = run_ideal(code31.circuit_0) == "000 00" &&
                      run_ideal(code31.circuit_1) == "111 00" &&
                      run_ideal(code34.circuit_0) == "000 00 00 00 00" &&
                      run_ideal(code54.circuit_1) == "11111 0000 0000 0000 0000";
    criterion(2, "noiseless result strings for (3,1), (3,4), (5,4)", pass);
}

void check_processing_goldens() {
    const RepetitionCode code = build_repetition_code(3, 2);
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"000 00 00", "0 0  00 00 00"},
        {"111 00 10", "1 1  10 10 00"},
        {"111 01 00", "1 1  00 01 01"},
        {"000 00 01", "0 0  01 01 00"},
    };
    bool pass = true;
    std::string detail;
    for (const auto &[raw, expected] : pairs) {
        const std::string got = process_string(code, raw);
        if (got != expected) {
            pass = false;
            detail = "'" + raw + "' -> '" + got + "', expected '" + expected + "'";
            break;
        }
    }
    criterion(3, "raw-to-processed conversion of the four known pairs", pass, detail);
}

void check_two_character_property() {
    bool pass = true;
    std::string detail;
    for (int n : {3, 4, 5}) {
        for (int rounds : {1, 2}) {
            const RepetitionCode code = build_repetition_code(n, rounds);
            const std::string ideal = process_string(code, run_ideal(code.circuit_0));
            for (const ErrorLocation &location : enumerate_error_locations(code.circuit_0)) {
                const std::string processed =
                    process_string(code, run_with_errors(code.circuit_0, {location}));
                int flips = 0;
                for (std::size_t i = 0; i < ideal.size(); ++i) flips += processed[i] != ideal[i];
                if (flips != 0 && flips != 2) {
                    pass = false;
                    detail = to_string(location) + " flipped " + std::to_string(flips) +
                             " characters at n=" + std::to_string(n) +
                             ", T=" + std::to_string(rounds);
                }
            }
        }
    }
    criterion(4, "every single fault flips exactly 0 or 2 characters (n in 3..5, T in 1..2)",
              pass, detail);
}

void check_single_error_correction() {
    bool pass = true;
    std::string detail;
    std::size_t cases = 0;
    for (int n : {3, 5}) {
        for (int rounds : {1, 2}) {
            const RepetitionCode code = build_repetition_code(n, rounds);
            const SyndromeGraph graph = build_graph(code);
            const DistanceTable distances = all_pairs_distances(graph);
            for (int encoded : {0, 1}) {
                const Circuit &circuit = encoded == 0 ? code.circuit_0 : code.circuit_1;
                for (const ErrorLocation &location : enumerate_error_locations(circuit)) {
                    const std::string processed =
                        process_string(code, run_with_errors(circuit, {location}));
                    ++cases;
                    if (matching_decode(graph, distances, processed) != encoded) {
                        pass = false;
                        detail = to_string(location) + " misdecoded at n=" + std::to_string(n) +
                                 ", T=" + std::to_string(rounds) +
                                 ", encoded=" + std::to_string(encoded);
                    }
                }
            }
        }
    }
    criterion(5, "matching decoder corrects all single faults (n in {3,5}, T in {1,2})", pass,
              pass ? std::to_string(cases) + " cases" : detail);
}

void check_mwpm_against_oracle() {
    const SyndromeGraph graph = build_graph(build_repetition_code(7, 2));
    const int node_count = static_cast<int>(graph.nodes.size());
    std::mt19937_64 gen(20260810);

    auto random_defects = [&](int max_pairs) {
        std::vector<int> all(static_cast<std::size_t>(node_count));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), gen);
        const int size = 2 * (1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_pairs)));
        all.resize(static_cast<std::size_t>(size));
        std::sort(all.begin(), all.end());
        return all;
    };

    bool pass = true;
    std::string detail;
    std::size_t checked = 0;

    for (int variant = 0; variant < 2 && pass; ++variant) {
        SyndromeGraph weighted = graph;
        if (variant == 1)
            for (Edge &edge : weighted.edges)
                edge.weight = 0.05 + static_cast<double>(gen() % 10000) / 4000.0;
        const DistanceTable distances = all_pairs_distances(weighted);
        for (int trial = 0; trial < 600 && pass; ++trial) {
            const auto defects = random_defects(4);  // sizes 2, 4, 6, 8
            const double solver = mwpm(defects, distances).total_weight;
            const double oracle = oracles::brute_force_matching_cost(defects, distances);
            ++checked;
            if (solver != oracle) {
                pass = false;
                detail = "solver " + format_double(solver) + " vs oracle " +
                         format_double(oracle) + " on a " + std::to_string(defects.size()) +
                         "-defect set";
            }
        }
    }
    criterion(6, "exact matching equals brute-force enumeration on build(7,2)", pass,
              pass ? std::to_string(checked) + " defect sets" : detail);
}

void check_lookup_reproduction() {
    const RepetitionCode code = build_repetition_code(3, 1);
    const NoiseModel noise(0.05, 0.05);

    LabeledCounts raw, table;
    raw["0"] = sample(code.circuit_0, noise, 1024, 11001);
    raw["1"] = sample(code.circuit_1, noise, 1024, 11002);
    table["0"] = sample(code.circuit_0, noise, 10000, 11003);
    table["1"] = sample(code.circuit_1, noise, 10000, 11004);

    const LogicalErrorReport report = lookup_decode(raw, table);
    const double p0 = report.labels.at("0").p_logical;
    const double p1 = report.labels.at("1").p_logical;

    // reference values 0.0238 / 0.0237, tolerance 3 binomial SEs at 1024 shots
    const double band0 = 3.0 * binomial_se(0.0238, 1024.0);
    const double band1 = 3.0 * binomial_se(0.0237, 1024.0);
    const bool pass = std::abs(p0 - 0.0238) <= band0 && std::abs(p1 - 0.0237) <= band1;
    criterion(7, "lookup decoding at (0.05, 0.05) reproduces P of about 0.024", pass,
              "P0=" + format_double(p0) + ", P1=" + format_double(p1) + ", tolerance +/-" +
                  format_double(band0));
}

void check_decay_trend() {
    BenchConfig config;
    config.n_min = 3;
    config.n_max = 7;
    config.n_step = 2;
    config.rounds = 1;
    config.rho_meas = 0.01;
    config.rho_gate = 0.01;
    config.shots = 100000;
    config.seed = 8100;
    const BenchResult result = bench_run(config);

    std::map<std::string, std::vector<double>> p_by_label;
    std::ostringstream detail;
    for (const BenchRow &row : result.rows) {
        p_by_label[row.label].push_back(row.p_logical);
        if (row.label == "0") detail << "n=" << row.n << ": ";
        detail << "P" << row.label << "=" << format_double(row.p_logical) << " ";
    }

    const double shots = static_cast<double>(config.shots);
    bool pass = p_by_label.size() == 2;
    for (const auto &[label, values] : p_by_label) {
        if (values.size() != 3) pass = false;
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            const double se_sum = 3.0 * std::sqrt(std::pow(binomial_se(values[i], shots), 2) +
                                                  std::pow(binomial_se(values[i + 1], shots), 2));
            if (values[i + 1] > values[i] + se_sum) pass = false;
        }
    }
    criterion(8, "logical error probability is non-increasing over n in {3,5,7} within 3 sigma",
              pass, detail.str());
}

void check_edge_weight_recovery() {
    const RepetitionCode code = build_repetition_code(3, 1);
    const NoiseModel noise(0.05, 0.05);
    const std::uint64_t shots = 200000;

    const Counts raw = sample(code.circuit_0, noise, shots, 91001);
    Counts processed;
    for (const auto &[outcome, count] : raw) processed[process_string(code, outcome)] += count;

    const SyndromeGraph graph = build_graph(code);
    const SyndromeGraph weighted = weight_syndrome_graph(graph, processed);

    bool pass = true;
    std::string detail;
    double worst = 0.0;
    for (const Edge &edge : weighted.edges) {
        const auto estimand = oracles::edge_estimand(code, noise, graph, edge);
        const double pairs = static_cast<double>(edge.stats->c11 + edge.stats->c00);
        const double sigma = std::sqrt(estimand.p * (1.0 - estimand.p) / pairs);
        const double pull = std::abs(edge.stats->p_estimate - estimand.p) / sigma;
        worst = std::max(worst, pull);
        if (pull > 3.0) {
            pass = false;
            detail = node_name(weighted.nodes[edge.u]) + "--" + node_name(weighted.nodes[edge.v]) +
                     ": estimate " + format_double(edge.stats->p_estimate) + " vs exact " +
                     format_double(estimand.p) + " (" + format_double(pull) + " sigma)";
        }
    }

    // the describe-style summary must expose all eight fields
    const std::string text = summary_to_text(edge_probability_summary(weighted));
    for (const char *field : {"count: ", "mean: ", "std: ", "min: ", "25%: ", "50%: ", "75%: ",
                              "max: "})
        if (text.find(field) == std::string::npos) {
            pass = false;
            detail = std::string("summary line missing: ") + field;
        }

    criterion(9, "edge probability estimates match exact per-edge fault probabilities", pass,
              pass ? "worst deviation " + format_double(worst) + " sigma" : detail);
}

void check_determinism() {
    BenchConfig config;
    config.n_min = 3;
    config.n_max = 5;
    config.rounds = 1;
    config.rho_meas = 0.01;
    config.rho_gate = 0.01;
    config.shots = 20000;
    config.seed = 424242;
    config.weighting = WeightingKind::data;
    config.timestamp = "2026-08-01T00:00:00Z";

    const BenchResult a = bench_run(config);
    const BenchResult b = bench_run(config);

    namespace fs = std::filesystem;
    const fs::path dir_a = fs::temp_directory_path() / "repbench_accept_a";
    const fs::path dir_b = fs::temp_directory_path() / "repbench_accept_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    emit_reports(a, dir_a, {true, true});
    emit_reports(b, dir_b, {true, true});

    bool pass = true;
    std::string detail;
    std::size_t file_count = 0;
    for (const auto &entry : fs::directory_iterator(dir_a)) {
        ++file_count;
        const auto name = entry.path().filename();
        if (!fs::exists(dir_b / name) ||
            read_text_file(entry.path()) != read_text_file(dir_b / name)) {
            pass = false;
            detail = "mismatch in " + name.string();
        }
    }
    if (file_count < 5) {
        pass = false;
        detail = "only " + std::to_string(file_count) + " files emitted";
    }
    criterion(10, "two identical bench runs emit byte-identical CSV/JSON outputs", pass,
              pass ? std::to_string(file_count) + " files compared" : detail);
}

void check_ingestion_round_trip() {
    bool pass = true;
    std::string detail;

    const std::string dict_text =
        "{3: {'0': {'000 00': 512, '001 00': 32}, '1': {'111 00': 500, '110 00': 44}}, "
        "5: {'0': {'00000 0000': 7}, '1': {'11111 0000': 9}}}";
    try {
        const ResultsArchive first = parse_dict_literal_archive(dict_text);
        const ResultsArchive second = parse_dict_literal_archive(archive_to_dict_literal(first));
        if (archive_to_dict_literal(first) != archive_to_dict_literal(second)) {
            pass = false;
            detail = "dict-literal text not a fixed point";
        }
        for (std::size_t i = 0; i < first.entries.size(); ++i)
            if (second.entries[i].counts != first.entries[i].counts) {
                pass = false;
                detail = "dict-literal counts changed in the round trip";
            }

        const ResultsArchive via_json = parse_json_archive(archive_to_json(first));
        for (std::size_t i = 0; i < first.entries.size(); ++i)
            if (via_json.entries[i].counts != first.entries[i].counts) {
                pass = false;
                detail = "JSON counts changed in the round trip";
            }
        if (archive_to_json(via_json) != archive_to_json(first)) {
            pass = false;
            detail = "JSON text not a fixed point";
        }
    } catch (const std::exception &e) {
        pass = false;
        detail = e.what();
    }

    try {
        parse_dict_literal_archive("{3: {'0': \n{'000 00' 512}}}");
        pass = false;
        detail = "missing colon was accepted";
    } catch (const ParseError &e) {
        if (e.line != 2 || e.col <= 1) {
            pass = false;
            detail = "parse error position wrong: line " + std::to_string(e.line) + ", col " +
                     std::to_string(e.col);
        }
    }
    try {
        parse_dict_literal_archive("{3: {'0': {'000 0': 4}}}");
        pass = false;
        detail = "bad layout was accepted";
    } catch (const LayoutError &) {
        // expected
    }

    criterion(11, "archives survive write/read round trips and reject malformed input", pass,
              detail);
}

}  // namespace

int main() {
    check_analytic_majority();
    check_golden_strings();
    check_processing_goldens();
    check_two_character_property();
    check_single_error_correction();
    check_mwpm_against_oracle();
    check_lookup_reproduction();
    check_decay_trend();
    check_edge_weight_recovery();
    check_determinism();
    check_ingestion_round_trip();

    if (failures == 0)
        std::printf("all acceptance checks passed\n");
    else
        std::printf("%d acceptance check(s) failed\n", failures);
    return failures;
}
