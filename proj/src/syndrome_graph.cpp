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

#include "repbench/syndrome_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "repbench/errors.hpp"
#include "repbench/textio.hpp"

namespace repbench {

std::string node_name(const Node &node) {
    switch (node.kind) {
        case Node::Kind::logical_left:
            return "LL";
        case Node::Kind::logical_right:
            return "LR";
        case Node::Kind::syndrome:
            return "S" + std::to_string(node.block) + "_" + std::to_string(node.link);
    }
    return "?";
}

StringLayout::StringLayout(int n, int rounds) : n_(n), rounds_(rounds) {
    if (n < 2 || rounds < 1) throw std::invalid_argument("string layout needs n >= 2, rounds >= 1");
}

int StringLayout::string_length() const {
    // "l l" + two spaces + T+1 blocks of n-1 chars joined by single spaces
    return 3 + 2 + (rounds_ + 1) * (n_ - 1) + rounds_;
}

std::vector<Node> StringLayout::nodes() const {
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(num_nodes()));
    nodes.push_back({Node::Kind::logical_left, 0, 0});
    nodes.push_back({Node::Kind::logical_right, 0, 0});
    for (int t = 1; t <= rounds_ + 1; ++t)
        for (int j = 0; j < n_ - 1; ++j) nodes.push_back({Node::Kind::syndrome, t, j});
    return nodes;
}

int StringLayout::char_index(const Node &node) const {
    switch (node.kind) {
        case Node::Kind::logical_left:
            return 0;
        case Node::Kind::logical_right:
            return 2;
        case Node::Kind::syndrome: {
            if (node.block < 1 || node.block > rounds_ + 1 || node.link < 0 || node.link > n_ - 2)
                throw std::invalid_argument("node " + node_name(node) +
                                            " outside layout for n=" + std::to_string(n_) +
                                            ", rounds=" + std::to_string(rounds_));
            // blocks start at 5 with stride n (n-1 chars + separator);
            // within a block the lowest link index is rightmost
            return 5 + (node.block - 1) * n_ + (n_ - 2 - node.link);
        }
    }
    throw std::invalid_argument("bad node kind");
}

Node StringLayout::node_at_char(int char_index) const {
    if (char_index == 0) return {Node::Kind::logical_left, 0, 0};
    if (char_index == 2) return {Node::Kind::logical_right, 0, 0};
    if (char_index >= 5 && char_index < string_length()) {
        int offset = (char_index - 5) % n_;
        if (offset != n_ - 1)
            return {Node::Kind::syndrome, (char_index - 5) / n_ + 1, n_ - 2 - offset};
    }
    throw std::invalid_argument("position " + std::to_string(char_index) +
                                " is not a character position of the layout");
}

bool StringLayout::is_node_position(int char_index) const {
    if (char_index == 0 || char_index == 2) return true;
    if (char_index < 5 || char_index >= string_length()) return false;
    return (char_index - 5) % n_ != n_ - 1;
}

void StringLayout::check_string(std::string_view processed) const {
    auto fail = [&](const std::string &why) {
        throw LayoutError("processed string '" + std::string(processed) +
                          "' does not match n=" + std::to_string(n_) +
                          ", rounds=" + std::to_string(rounds_) + ": " + why);
    };
    if (static_cast<int>(processed.size()) != string_length())
        fail("length " + std::to_string(processed.size()) + ", expected " +
             std::to_string(string_length()));
    for (int i = 0; i < string_length(); ++i) {
        char c = processed[static_cast<std::size_t>(i)];
        if (is_node_position(i)) {
            if (c != '0' && c != '1') fail(std::string("expected bit at position ") +
                                           std::to_string(i) + ", got '" + c + "'");
        } else if (c != ' ') {
            fail(std::string("expected space at position ") + std::to_string(i) + ", got '" + c +
                 "'");
        }
    }
}

int SyndromeGraph::node_index(const Node &node) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
    if (it == nodes.end() || *it != node)
        throw std::invalid_argument("node " + node_name(node) + " is not in the graph");
    return static_cast<int>(it - nodes.begin());
}

const Edge *SyndromeGraph::find_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const Edge &edge : edges)
        if (edge.u == u && edge.v == v) return &edge;
    return nullptr;
}

SyndromeGraph build_graph(const RepetitionCode &code) {
    SyndromeGraph graph;
    graph.n = code.n;
    graph.rounds = code.rounds;
    StringLayout layout = graph.layout();
    graph.nodes = layout.nodes();

    const std::string ideal = process_string(code, run_ideal(code.circuit_0));

    std::map<std::pair<int, int>, std::vector<ErrorLocation>> edge_map;
    for (const ErrorLocation &location : enumerate_error_locations(code.circuit_0)) {
        const std::string processed =
            process_string(code, run_with_errors(code.circuit_0, {location}));

        int first = -1, second = -1, flips = 0;
        for (std::size_t i = 0; i < processed.size(); ++i) {
            if (processed[i] == ideal[i]) continue;
            ++flips;
            if (first < 0)
                first = static_cast<int>(i);
            else
                second = static_cast<int>(i);
        }
        if (flips == 0) continue;
        if (flips != 2)
            throw GraphConstructionError("injected error (" + to_string(location) + ") flipped " +
                                         std::to_string(flips) +
                                         " characters; the convention requires 0 or 2");
        int u = graph.node_index(layout.node_at_char(first));
        int v = graph.node_index(layout.node_at_char(second));
        if (u > v) std::swap(u, v);
        edge_map[{u, v}].push_back(location);
    }

    graph.edges.reserve(edge_map.size());
    for (auto &[key, provenance] : edge_map) {
        std::sort(provenance.begin(), provenance.end());
        graph.edges.push_back({key.first, key.second, 1.0, std::move(provenance), std::nullopt});
    }
    return graph;
}

DistanceTable::DistanceTable(int size, std::vector<double> distances)
    : size_(size), distances_(std::move(distances)) {
    if (distances_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
        throw std::invalid_argument("distance table size mismatch");
}

bool DistanceTable::fully_connected() const {
    for (double d : distances_)
        if (!(d < std::numeric_limits<double>::infinity())) return false;
    return true;
}

DistanceTable all_pairs_distances(const SyndromeGraph &graph) {
    for (const Edge &edge : graph.edges)
        if (edge.weight < 0.0)
            throw std::invalid_argument("negative edge weight " + format_double(edge.weight) +
                                        " on " + node_name(graph.nodes[edge.u]) + " -- " +
                                        node_name(graph.nodes[edge.v]));

    const int size = static_cast<int>(graph.nodes.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(static_cast<std::size_t>(size) * size, inf);
    for (int i = 0; i < size; ++i) d[static_cast<std::size_t>(i) * size + i] = 0.0;
    for (const Edge &edge : graph.edges) {
        auto &duv = d[static_cast<std::size_t>(edge.u) * size + edge.v];
        duv = std::min(duv, edge.weight);
        d[static_cast<std::size_t>(edge.v) * size + edge.u] = duv;
    }
    for (int k = 0; k < size; ++k)
        for (int i = 0; i < size; ++i) {
            const double dik = d[static_cast<std::size_t>(i) * size + k];
            if (dik == inf) continue;
            for (int j = 0; j < size; ++j) {
                double candidate = dik + d[static_cast<std::size_t>(k) * size + j];
                auto &dij = d[static_cast<std::size_t>(i) * size + j];
                if (candidate < dij) dij = candidate;
            }
        }
    return DistanceTable(size, std::move(d));
}

SyndromeGraph weight_syndrome_graph(const SyndromeGraph &graph, const Counts &processed_zero) {
    if (processed_zero.empty())
        throw std::invalid_argument("weight_syndrome_graph requires non-empty results");

    StringLayout layout = graph.layout();
    for (const auto &[outcome, count] : processed_zero) layout.check_string(outcome);

    SyndromeGraph weighted = graph;
    weighted.data_weighted = true;
    for (Edge &edge : weighted.edges) {
        const int pos_u = layout.char_index(weighted.nodes[edge.u]);
        const int pos_v = layout.char_index(weighted.nodes[edge.v]);

        EdgeStats stats;
        for (const auto &[outcome, count] : processed_zero) {
            const char a = outcome[static_cast<std::size_t>(pos_u)];
            const char b = outcome[static_cast<std::size_t>(pos_v)];
            if (a == '1' && b == '1')
                stats.c11 += count;
            else if (a == '0' && b == '0')
                stats.c00 += count;
        }

        double p;
        if (stats.c11 == 0)
            p = 1.0 / (static_cast<double>(stats.c00) + 2.0);
        else if (stats.c00 == 0)
            p = 1.0 - 1.0 / (static_cast<double>(stats.c11) + 2.0);
        else
            p = static_cast<double>(stats.c11) /
                static_cast<double>(stats.c11 + stats.c00);
        stats.p_estimate = p;

        edge.weight = p < 0.5 ? -std::log(p / (1.0 - p)) : 0.0;
        edge.stats = stats;
    }
    return weighted;
}

double quantile_linear(const std::vector<double> &sorted_values, double q) {
    if (sorted_values.empty()) throw std::invalid_argument("quantile of empty sample");
    if (sorted_values.size() == 1) return sorted_values.front();
    const double position = q * static_cast<double>(sorted_values.size() - 1);
    const std::size_t lower = static_cast<std::size_t>(position);
    const double fraction = position - static_cast<double>(lower);
    if (lower + 1 >= sorted_values.size()) return sorted_values.back();
    return sorted_values[lower] + fraction * (sorted_values[lower + 1] - sorted_values[lower]);
}

EdgeSummary edge_probability_summary(const SyndromeGraph &graph) {
    if (!graph.data_weighted)
        throw std::invalid_argument(
            "edge_probability_summary needs a data-weighted graph; call weight_syndrome_graph "
            "first");

    std::vector<double> probs;
    probs.reserve(graph.edges.size());
    for (const Edge &edge : graph.edges) probs.push_back(edge.stats->p_estimate);
    std::sort(probs.begin(), probs.end());

    EdgeSummary summary;
    summary.count = probs.size();
    double sum = 0.0;
    for (double p : probs) sum += p;
    summary.mean = sum / static_cast<double>(probs.size());
    if (probs.size() >= 2) {
        double ss = 0.0;
        for (double p : probs) ss += (p - summary.mean) * (p - summary.mean);
        summary.stddev = std::sqrt(ss / static_cast<double>(probs.size() - 1));
        summary.stddev_defined = true;
    } else {
        summary.stddev = 0.0;
        summary.stddev_defined = false;
    }
    summary.min = probs.front();
    summary.q25 = quantile_linear(probs, 0.25);
    summary.q50 = quantile_linear(probs, 0.50);
    summary.q75 = quantile_linear(probs, 0.75);
    summary.max = probs.back();
    return summary;
}

std::string graph_to_dot(const SyndromeGraph &graph) {
    std::string out = "graph syndrome {\n";
    for (const Node &node : graph.nodes) out += "  \"" + node_name(node) + "\";\n";
    for (const Edge &edge : graph.edges) {
        out += "  \"" + node_name(graph.nodes[edge.u]) + "\" -- \"" +
               node_name(graph.nodes[edge.v]) + "\" [label=\"" + format_double(edge.weight) +
               "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string graph_to_json(const SyndromeGraph &graph) {
    nlohmann::json j;
    j["n"] = graph.n;
    j["rounds"] = graph.rounds;
    j["data_weighted"] = graph.data_weighted;
    j["nodes"] = nlohmann::json::array();
    for (const Node &node : graph.nodes) j["nodes"].push_back(node_name(node));
    j["edges"] = nlohmann::json::array();
    for (const Edge &edge : graph.edges) {
        nlohmann::json e;
        e["u"] = node_name(graph.nodes[edge.u]);
        e["v"] = node_name(graph.nodes[edge.v]);
        e["weight"] = edge.weight;
        e["provenance"] = nlohmann::json::array();
        for (const ErrorLocation &location : edge.provenance)
            e["provenance"].push_back(to_string(location));
        if (edge.stats) {
            e["c11"] = edge.stats->c11;
            e["c00"] = edge.stats->c00;
            e["p_estimate"] = edge.stats->p_estimate;
        }
        j["edges"].push_back(e);
    }
    return j.dump(2) + "\n";
}

}  // namespace repbench
