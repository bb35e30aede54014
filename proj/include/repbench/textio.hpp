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

#ifndef REPBENCH_TEXTIO_H
#define REPBENCH_TEXTIO_H

#include <filesystem>
#include <string>

#include "repbench/syndrome_graph.hpp"

namespace repbench {

/// Shortest decimal representation that round-trips, with a trailing ".0"
/// for integral values so floats always look like floats.
std::string format_double(double value);

/// The eight-line describe-style block:
/// count/mean/std/min/25%/50%/75%/max, one "name: value" per line.
std::string summary_to_text(const EdgeSummary &summary);

/// Writes a file atomically enough for our purposes; throws IoError with the
/// path on failure.
void write_text_file(const std::filesystem::path &path, const std::string &contents);

std::string read_text_file(const std::filesystem::path &path);

}  // namespace repbench

#endif
