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

#include "repbench/decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "repbench/errors.hpp"

namespace repbench {

namespace {

double binomial_coefficient(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

double analytic_majority(int n, double p) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("majority vote needs an odd count, got " + std::to_string(n));
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability must be in [0, 1], got " + std::to_string(p));

    double total = 0.0;
    for (int k = n / 2 + 1; k <= n; ++k)
        total += binomial_coefficient(n, k) * std::pow(p, k) * std::pow(1.0 - p, n - k);
    return total;
}

LogicalErrorReport lookup_decode(const LabeledCounts &raw, const LabeledCounts &table) {
    std::uint64_t table_total = 0;
    for (const auto &[label, counts] : table) table_total += total_counts(counts);
    if (table_total == 0) throw std::invalid_argument("lookup table is empty");

    auto table_count = [&](const std::string &label, const std::string &outcome) -> std::uint64_t {
        auto entry = table.find(label);
        if (entry == table.end()) return 0;
        auto hit = entry->second.find(outcome);
        return hit == entry->second.end() ? 0 : hit->second;
    };

    LogicalErrorReport report;
    report.decoder = "lookup";
    for (const auto &[label, counts] : raw) {
        const std::uint64_t total = total_counts(counts);
        if (total == 0) throw std::invalid_argument("no shots recorded for label " + label);

        double error_weight = 0.0;
        for (const auto &[outcome, count] : counts) {
            const std::uint64_t c0 = table_count("0", outcome);
            const std::uint64_t c1 = table_count("1", outcome);
            if (c0 == c1) {
                error_weight += static_cast<double>(count) / 2.0;
            } else {
                const std::string decoded = c0 > c1 ? "0" : "1";
                if (decoded != label) error_weight += static_cast<double>(count);
            }
        }
        report.labels[label] = {error_weight / static_cast<double>(total), total};
    }
    return report;
}

Matching mwpm(const std::vector<int> &defects, const DistanceTable &distances, int limit) {
    if (defects.size() % 2 != 0)
        throw std::invalid_argument("defect set has odd cardinality " +
                                    std::to_string(defects.size()) +
                                    "; perfect matching needs an even count");
    if (static_cast<int>(defects.size()) > limit)
        throw CapacityError("exact matching limited to " + std::to_string(limit) +
                            " defects, got " + std::to_string(defects.size()));

    std::vector<int> sorted = defects;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw std::invalid_argument("duplicate defect node " + std::to_string(sorted[i]));
    for (int node : sorted)
        if (node < 0 || node >= distances.size())
            throw std::invalid_argument("defect node " + std::to_string(node) +
                                        " outside the distance table");

    const int k = static_cast<int>(sorted.size());
    if (k == 0) return {};

    const unsigned full = (1u << k) - 1u;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> best(full + 1, inf);
    std::vector<int> partner(full + 1, -1);
    best[0] = 0.0;

    for (unsigned mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        const int i = std::countr_zero(mask);
        for (int j = i + 1; j < k; ++j) {
            if (!(mask & (1u << j))) continue;
            const unsigned rest = mask & ~(1u << i) & ~(1u << j);
            const double candidate = distances.at(sorted[i], sorted[j]) + best[rest];
            if (candidate < best[mask]) {
                best[mask] = candidate;
                partner[mask] = j;
            }
        }
    }

    Matching matching;
    matching.total_weight = best[full];
    unsigned mask = full;
    while (mask != 0) {
        const int i = std::countr_zero(mask);
        const int j = partner[mask];
        matching.pairs.emplace_back(sorted[i], sorted[j]);
        mask &= ~(1u << i) & ~(1u << j);
    }
    return matching;
}

namespace {

std::vector<int> defects_for_hypothesis(const SyndromeGraph &graph, const StringLayout &layout,
                                        std::string_view processed, char logical_expected) {
    std::vector<int> defects;
    for (std::size_t index = 0; index < graph.nodes.size(); ++index) {
        const Node &node = graph.nodes[index];
        const char actual = processed[static_cast<std::size_t>(layout.char_index(node))];
        const char expected = node.kind == Node::Kind::syndrome ? '0' : logical_expected;
        if (actual != expected) defects.push_back(static_cast<int>(index));
    }
    return defects;
}

}  // namespace

int matching_decode(const SyndromeGraph &graph, const DistanceTable &distances,
                    std::string_view processed, int limit) {
    StringLayout layout = graph.layout();
    layout.check_string(processed);

    const auto defects_0 = defects_for_hypothesis(graph, layout, processed, '0');
    const auto defects_1 = defects_for_hypothesis(graph, layout, processed, '1');
    if (defects_0.size() % 2 != 0 && defects_1.size() % 2 != 0)
        throw std::invalid_argument("string '" + std::string(processed) +
                                    "' has odd defect parity under both hypotheses");

    const double w0 = mwpm(defects_0, distances, limit).total_weight;
    const double w1 = mwpm(defects_1, distances, limit).total_weight;
    if (w0 < w1) return 0;
    if (w1 < w0) return 1;

    // cost tie: trust the logical readouts if they agree, otherwise 0
    const char left = processed[0];
    const char right = processed[2];
    return (left == '1' && right == '1') ? 1 : 0;
}

int matching_decode(const SyndromeGraph &graph, std::string_view processed, int limit) {
    return matching_decode(graph, all_pairs_distances(graph), processed, limit);
}

LogicalErrorReport get_logical_prob(const LabeledCounts &processed, const SyndromeGraph &graph,
                                    const DistanceTable &distances, int limit) {
    if (processed.empty()) throw std::invalid_argument("no results to decode");

    LogicalErrorReport report;
    report.decoder = "matching";
    for (const auto &[label, counts] : processed) {
        const std::uint64_t total = total_counts(counts);
        if (total == 0) throw std::invalid_argument("no shots recorded for label " + label);

        const int encoded = label == "1" ? 1 : 0;
        std::uint64_t errors = 0;
        for (const auto &[outcome, count] : counts) {
            int decoded;
            try {
                decoded = matching_decode(graph, distances, outcome, limit);
            } catch (const CapacityError &e) {
                throw CapacityError(std::string(e.what()) + " while decoding '" + outcome + "'");
            }
            if (decoded != encoded) errors += count;
        }
        report.labels[label] = {static_cast<double>(errors) / static_cast<double>(total), total};
    }
    return report;
}

}  // namespace repbench
