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

#ifndef REPBENCH_COUNTS_H
#define REPBENCH_COUNTS_H

#include <cstdint>
#include <map>
#include <string>

namespace repbench {

/// Outcome string -> number of shots that produced it. Ordered so that
/// iteration (and therefore serialization) is deterministic.
using Counts = std::map<std::string, std::uint64_t>;

/// Logical label ("0" or "1") -> counts for the circuit encoding that label.
using LabeledCounts = std::map<std::string, Counts>;

inline std::uint64_t total_counts(const Counts &counts) {
    std::uint64_t total = 0;
    for (const auto &[key, value] : counts) total += value;
    return total;
}

}  // namespace repbench

#endif
