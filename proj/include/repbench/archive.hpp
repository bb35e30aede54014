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

#ifndef REPBENCH_ARCHIVE_H
#define REPBENCH_ARCHIVE_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repbench/counts.hpp"

namespace repbench {

/// Raw results for one code size.
struct ArchiveEntry {
    int n = 0;
    int rounds = 0;
    LabeledCounts counts;
};

/// Raw results for a sweep over code sizes, plus metadata. The canonical
/// on-disk form is versioned JSON; a Python-dict-literal text form is also
/// read and written for interoperability with externally saved result files.
struct ResultsArchive {
    static constexpr int format_version = 1;

    std::vector<ArchiveEntry> entries;  // sorted by n, one entry per n
    std::string created;                // ISO-8601 timestamp, may be empty
    std::string config_json;            // serialized run config, may be empty

    const ArchiveEntry *find(int n) const;
};

/// Checks every stored string against its entry's (n, rounds) layout.
/// Throws LayoutError naming the offending string.
void validate_archive(const ResultsArchive &archive);

ResultsArchive parse_json_archive(std::string_view text);
std::string archive_to_json(const ResultsArchive &archive);

/// Parses the dict-literal form, e.g. {3: {'0': {'000 00': 1024}}}.
/// Grammar: object = '{' [entry (',' entry)*] '}'; entry = key ':' value;
/// key = integer | quoted string; value = integer | object. Whitespace is
/// insignificant. Syntax errors throw ParseError with line/column; the
/// result is layout-validated (rounds are inferred from the strings).
ResultsArchive parse_dict_literal_archive(std::string_view text);
std::string archive_to_dict_literal(const ResultsArchive &archive);

}  // namespace repbench

#endif
