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

#include "repbench/archive.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

#include "repbench/errors.hpp"
#include "repbench/rep_code.hpp"

namespace repbench {

const ArchiveEntry *ResultsArchive::find(int n) const {
    for (const ArchiveEntry &entry : entries)
        if (entry.n == n) return &entry;
    return nullptr;
}

namespace {

/// Number of syndrome rounds implied by a raw string for code size n, or -1
/// when the string cannot belong to that n at all.
int infer_rounds(std::string_view raw, int n) {
    std::vector<std::string_view> blocks;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= raw.size(); ++i) {
        if (i == raw.size() || raw[i] == ' ') {
            if (i == start) return -1;
            blocks.push_back(raw.substr(start, i - start));
            start = i + 1;
        }
    }
    if (blocks.size() < 2) return -1;
    if (static_cast<int>(blocks[0].size()) != n) return -1;
    for (std::size_t b = 1; b < blocks.size(); ++b) {
        if (static_cast<int>(blocks[b].size()) != n - 1) return -1;
        for (char c : blocks[b])
            if (c != '0' && c != '1') return -1;
    }
    for (char c : blocks[0])
        if (c != '0' && c != '1') return -1;
    return static_cast<int>(blocks.size()) - 1;
}

void sort_entries(ResultsArchive &archive) {
    std::sort(archive.entries.begin(), archive.entries.end(),
              [](const ArchiveEntry &a, const ArchiveEntry &b) { return a.n < b.n; });
    for (std::size_t i = 0; i + 1 < archive.entries.size(); ++i)
        if (archive.entries[i].n == archive.entries[i + 1].n)
            throw LayoutError("duplicate archive entry for n=" +
                              std::to_string(archive.entries[i].n));
}

}  // namespace

void validate_archive(const ResultsArchive &archive) {
    for (const ArchiveEntry &entry : archive.entries) {
        if (entry.n < 2)
            throw LayoutError("archive entry has invalid n=" + std::to_string(entry.n));
        if (entry.rounds < 1)
            throw LayoutError("archive entry n=" + std::to_string(entry.n) +
                              " has invalid rounds=" + std::to_string(entry.rounds));
        for (const auto &[label, counts] : entry.counts) {
            if (label != "0" && label != "1")
                throw LayoutError("archive entry n=" + std::to_string(entry.n) +
                                  " has unexpected logical label '" + label + "'");
            for (const auto &[outcome, count] : counts)
                split_raw_string(outcome, entry.n, entry.rounds);  // throws LayoutError
        }
    }
}

ResultsArchive parse_json_archive(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        // nlohmann reports a byte offset; surface it as column on line 1-based
        int line = 1, col = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }

    if (!j.is_object() || j.value("format", "") != "repbench-archive")
        throw LayoutError("not a repbench archive (missing format marker)");
    if (j.value("version", 0) != ResultsArchive::format_version)
        throw LayoutError("unsupported archive version " +
                          std::to_string(j.value("version", 0)));

    ResultsArchive archive;
    archive.created = j.value("created", "");
    if (j.contains("config")) archive.config_json = j["config"].dump();

    if (!j.contains("entries") || !j["entries"].is_array())
        throw LayoutError("archive is missing its entries array");
    for (const auto &item : j["entries"]) {
        ArchiveEntry entry;
        entry.n = item.at("n").get<int>();
        entry.rounds = item.at("rounds").get<int>();
        for (const auto &[label, counts] : item.at("counts").items()) {
            Counts bucket;
            for (const auto &[outcome, count] : counts.items())
                bucket[outcome] = count.get<std::uint64_t>();
            entry.counts[label] = std::move(bucket);
        }
        archive.entries.push_back(std::move(entry));
    }
    sort_entries(archive);
    validate_archive(archive);
    return archive;
}

std::string archive_to_json(const ResultsArchive &archive) {
    nlohmann::json j;
    j["format"] = "repbench-archive";
    j["version"] = ResultsArchive::format_version;
    if (!archive.created.empty()) j["created"] = archive.created;
    if (!archive.config_json.empty()) j["config"] = nlohmann::json::parse(archive.config_json);
    j["entries"] = nlohmann::json::array();
    for (const ArchiveEntry &entry : archive.entries) {
        nlohmann::json item;
        item["n"] = entry.n;
        item["rounds"] = entry.rounds;
        item["counts"] = nlohmann::json::object();
        for (const auto &[label, counts] : entry.counts) {
            nlohmann::json bucket = nlohmann::json::object();
            for (const auto &[outcome, count] : counts) bucket[outcome] = count;
            item["counts"][label] = std::move(bucket);
        }
        j["entries"].push_back(std::move(item));
    }
    return j.dump(2) + "\n";
}

namespace {

/// Recursive-descent parser for the Python-dict-literal result files.
class DictLiteralParser {
  public:
    explicit DictLiteralParser(std::string_view text) : text_(text) {}

    ResultsArchive parse() {
        skip_whitespace();
        ResultsArchive archive = parse_top_level();
        skip_whitespace();
        if (pos_ < text_.size()) fail("trailing content after the top-level object");
        sort_entries(archive);
        validate_archive(archive);
        return archive;
    }

  private:
    struct Value {
        bool is_object = false;
        std::uint64_t integer = 0;
        std::vector<std::pair<std::string, Value>> object;  // key order preserved
    };

    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(message, line_, col_);
    }

    bool eof() const { return pos_ >= text_.size(); }

    char peek() const {
        if (eof()) fail("unexpected end of input");
        return text_[pos_];
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_whitespace() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    std::uint64_t parse_integer() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::uint64_t value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            advance();
        }
        return value;
    }

    std::string parse_quoted() {
        expect('\'');
        std::string out;
        while (!eof() && peek() != '\'') {
            out += peek();
            advance();
        }
        expect('\'');
        return out;
    }

    // key is an integer (rendered back to text) or a quoted string
    std::string parse_key(bool &was_integer) {
        if (peek() == '\'') {
            was_integer = false;
            return parse_quoted();
        }
        was_integer = true;
        return std::to_string(parse_integer());
    }

    Value parse_value() {
        Value value;
        if (peek() == '{') {
            value.is_object = true;
            value.object = parse_object();
        } else {
            value.integer = parse_integer();
        }
        return value;
    }

    std::vector<std::pair<std::string, Value>> parse_object() {
        std::vector<std::pair<std::string, Value>> entries;
        expect('{');
        skip_whitespace();
        if (!eof() && peek() == '}') {
            advance();
            return entries;
        }
        while (true) {
            skip_whitespace();
            bool key_is_integer = false;
            std::string key = parse_key(key_is_integer);
            skip_whitespace();
            expect(':');
            skip_whitespace();
            entries.emplace_back(std::move(key), parse_value());
            skip_whitespace();
            if (eof()) fail("unterminated object");
            if (peek() == ',') {
                advance();
                continue;
            }
            expect('}');
            return entries;
        }
    }

    ResultsArchive parse_top_level() {
        const int start_line = line_, start_col = col_;
        auto top = parse_object();
        ResultsArchive archive;
        for (auto &[n_text, labels] : top) {
            ArchiveEntry entry;
            try {
                entry.n = std::stoi(n_text);
            } catch (const std::exception &) {
                throw ParseError("top-level key '" + n_text + "' is not a code size", start_line,
                                 start_col);
            }
            if (!labels.is_object)
                throw ParseError("entry for n=" + n_text + " must be an object", start_line,
                                 start_col);
            int rounds = -1;
            for (auto &[label, outcomes] : labels.object) {
                if (!outcomes.is_object)
                    throw ParseError("counts for label '" + label + "' must be an object",
                                     start_line, start_col);
                Counts bucket;
                for (auto &[outcome, count] : outcomes.object) {
                    if (count.is_object)
                        throw ParseError("count for '" + outcome + "' must be an integer",
                                         start_line, start_col);
                    bucket[outcome] = count.integer;
                    const int implied = infer_rounds(outcome, entry.n);
                    if (implied < 1)
                        throw LayoutError("raw string '" + outcome +
                                          "' does not match any layout for n=" + n_text);
                    if (rounds == -1) rounds = implied;
                    if (implied != rounds)
                        throw LayoutError("raw string '" + outcome + "' implies " +
                                          std::to_string(implied) + " rounds but n=" + n_text +
                                          " started with " + std::to_string(rounds));
                }
                entry.counts[label] = std::move(bucket);
            }
            if (rounds == -1)
                throw LayoutError("entry for n=" + n_text + " holds no outcome strings");
            entry.rounds = rounds;
            archive.entries.push_back(std::move(entry));
        }
        return archive;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

ResultsArchive parse_dict_literal_archive(std::string_view text) {
    return DictLiteralParser(text).parse();
}

std::string archive_to_dict_literal(const ResultsArchive &archive) {
    std::string out = "{";
    bool first_entry = true;
    for (const ArchiveEntry &entry : archive.entries) {
        if (!first_entry) out += ", ";
        first_entry = false;
        out += std::to_string(entry.n) + ": {";
        bool first_label = true;
        for (const auto &[label, counts] : entry.counts) {
            if (!first_label) out += ", ";
            first_label = false;
            out += "'" + label + "': {";
            bool first_outcome = true;
            for (const auto &[outcome, count] : counts) {
                if (!first_outcome) out += ", ";
                first_outcome = false;
                out += "'" + outcome + "': " + std::to_string(count);
            }
            out += "}";
        }
        out += "}";
    }
    out += "}";
    return out;
}

}  // namespace repbench
