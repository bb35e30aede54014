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

#include "repbench/textio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "repbench/errors.hpp"

namespace repbench {

std::string format_double(double value) {
    char buffer[64];
    auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    std::string text(buffer, result.ptr);
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find("inf") == std::string::npos && text.find("nan") == std::string::npos)
        text += ".0";
    return text;
}

std::string summary_to_text(const EdgeSummary &summary) {
    std::string out;
    out += "count: " + format_double(static_cast<double>(summary.count)) + "\n";
    out += "mean: " + format_double(summary.mean) + "\n";
    out += "std: " + format_double(summary.stddev) + "\n";
    out += "min: " + format_double(summary.min) + "\n";
    out += "25%: " + format_double(summary.q25) + "\n";
    out += "50%: " + format_double(summary.q50) + "\n";
    out += "75%: " + format_double(summary.q75) + "\n";
    out += "max: " + format_double(summary.max) + "\n";
    return out;
}

void write_text_file(const std::filesystem::path &path, const std::string &contents) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) throw IoError("cannot open '" + path.string() + "' for writing");
    stream << contents;
    if (!stream) throw IoError("write failed for '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

}  // namespace repbench
