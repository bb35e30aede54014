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

#ifndef REPBENCH_SYNDROME_GRAPH_H
#define REPBENCH_SYNDROME_GRAPH_H

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repbench/counts.hpp"
#include "repbench/rep_code.hpp"
#include "repbench/simulator.hpp"

namespace repbench {

/// One character of a processed string: either a logical readout (left or
/// right end of the line) or a syndrome bit, identified by change-block
/// index t in 1..T+1 and link index j in 0..n-2.
struct Node {
    enum class Kind : std::uint8_t { logical_left, logical_right, syndrome };

    Kind kind = Kind::logical_left;
    int block = 0;
    int link = 0;

    auto operator<=>(const Node &) const = default;
};

/// Stable display name: "LL", "LR" or "S<t>_<j>".
std::string node_name(const Node &node);

/// Geometry of processed strings for a given (n, rounds): maps between
/// nodes and character positions.
class StringLayout {
  public:
    StringLayout(int n, int rounds);

    int n() const { return n_; }
    int rounds() const { return rounds_; }
    int string_length() const;
    int num_nodes() const { return 2 + (rounds_ + 1) * (n_ - 1); }

    /// Nodes in canonical order (logical left, logical right, then syndrome
    /// by block then link). This is also the node-index order used by
    /// SyndromeGraph and DistanceTable.
    std::vector<Node> nodes() const;

    int char_index(const Node &node) const;
    Node node_at_char(int char_index) const;
    bool is_node_position(int char_index) const;

    /// Validates processed-string shape (length, spaces, binary chars);
    /// throws LayoutError naming the string otherwise.
    void check_string(std::string_view processed) const;

  private:
    int n_;
    int rounds_;
};

struct EdgeStats {
    std::uint64_t c11 = 0;
    std::uint64_t c00 = 0;
    double p_estimate = 0.0;
};

struct Edge {
    int u = 0;  // node indices, u < v
    int v = 0;
    double weight = 1.0;
    std::vector<ErrorLocation> provenance;
    std::optional<EdgeStats> stats;
};

/// Decoding graph: one node per processed-string character, one edge per
/// pair of characters that some single fault flips together.
struct SyndromeGraph {
    int n = 0;
    int rounds = 0;
    std::vector<Node> nodes;  // canonical order, matches StringLayout::nodes()
    std::vector<Edge> edges;  // sorted by (u, v)
    bool data_weighted = false;

    StringLayout layout() const { return StringLayout(n, rounds); }
    int node_index(const Node &node) const;
    const Edge *find_edge(int u, int v) const;
};

/// Builds the graph by injecting every enumerated single fault into the
/// logical-0 circuit and recording which processed characters flip. A fault
/// flipping anything other than 0 or 2 characters throws
/// GraphConstructionError naming the location. All edge weights start at 1.
SyndromeGraph build_graph(const RepetitionCode &code);

/// Symmetric all-pairs shortest-path distances over graph nodes.
class DistanceTable {
  public:
    DistanceTable() = default;
    DistanceTable(int size, std::vector<double> distances);

    int size() const { return size_; }
    double at(int u, int v) const { return distances_[static_cast<std::size_t>(u) * size_ + v]; }
    bool fully_connected() const;

  private:
    int size_ = 0;
    std::vector<double> distances_;
};

/// Floyd-Warshall over the edge weights. Rejects negative weights up front;
/// unreachable pairs are reported as +infinity by the table.
DistanceTable all_pairs_distances(const SyndromeGraph &graph);

/// Re-weights every edge from data: for edge (u, v), C11 counts shots in
/// `processed_zero` where both characters read '1' and C00 where both read
/// '0'; the edge gets weight -ln(p/(1-p)) with p = C11/(C11+C00).
/// Degenerate cases are clamped: C11 = 0 gives p = 1/(C00+2), C00 = 0 gives
/// p = 1 - 1/(C11+2), and any p > 1/2 clamps the weight to 0 so shortest
/// paths stay non-negative. Topology is unchanged; per-edge stats are kept.
SyndromeGraph weight_syndrome_graph(const SyndromeGraph &graph, const Counts &processed_zero);

/// Descriptive statistics over the per-edge probability estimates.
struct EdgeSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;       // sample standard deviation (N-1)
    bool stddev_defined = true;  // false when count < 2 (stddev reported as 0)
    double min = 0.0;
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double max = 0.0;
};

/// Summarizes {p_estimate} over all edges of a data-weighted graph using
/// linear-interpolation quantiles. Rejects graphs without data weights.
EdgeSummary edge_probability_summary(const SyndromeGraph &graph);

/// Linear-interpolation quantile of a sorted, non-empty sample.
double quantile_linear(const std::vector<double> &sorted_values, double q);

std::string graph_to_dot(const SyndromeGraph &graph);
std::string graph_to_json(const SyndromeGraph &graph);

}  // namespace repbench

#endif
