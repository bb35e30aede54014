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

#ifndef REPBENCH_DECODER_H
#define REPBENCH_DECODER_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repbench/counts.hpp"
#include "repbench/syndrome_graph.hpp"

namespace repbench {

/// Probability that the majority of n independent replies is wrong when each
/// flips with probability p. n must be odd.
double analytic_majority(int n, double p);

struct LabelReport {
    double p_logical = 0.0;
    std::uint64_t shots = 0;
};

struct LogicalErrorReport {
    std::string decoder;
    std::map<std::string, LabelReport> labels;
};

/// Decodes each raw outcome by comparing its frequency under the two table
/// entries: the more frequent label wins, exact ties (including strings
/// absent from both) count half. P is (misdecoded + ties/2) / total.
LogicalErrorReport lookup_decode(const LabeledCounts &raw, const LabeledCounts &table);

/// Highest defect count the exact matching solver accepts.
inline constexpr int kDefaultMatchingLimit = 16;

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // node-index pairs, first < second
    double total_weight = 0.0;
};

/// Exact minimum-weight perfect matching over the defect set, by dynamic
/// programming on subsets. `defects` holds node indices into the distance
/// table; its size must be even and at most `limit` (CapacityError
/// otherwise). Ties resolve to the lexicographically smallest pairing.
Matching mwpm(const std::vector<int> &defects, const DistanceTable &distances,
              int limit = kDefaultMatchingLimit);

/// Decodes one processed string against the graph: for each hypothesis
/// h in {0, 1} collect the characters that disagree with it (logical chars
/// against h, syndrome chars against '0') and compute the minimum matching
/// cost over shortest-path distances; the cheaper hypothesis wins. Cost ties
/// fall to the value both logical readouts agree on, then to 0.
int matching_decode(const SyndromeGraph &graph, const DistanceTable &distances,
                    std::string_view processed, int limit = kDefaultMatchingLimit);

/// Convenience overload that computes the distance table on the fly.
int matching_decode(const SyndromeGraph &graph, std::string_view processed,
                    int limit = kDefaultMatchingLimit);

/// Fraction of shots whose matching_decode result differs from the encoded
/// label, per label.
LogicalErrorReport get_logical_prob(const LabeledCounts &processed, const SyndromeGraph &graph,
                                    const DistanceTable &distances,
                                    int limit = kDefaultMatchingLimit);

}  // namespace repbench

#endif
