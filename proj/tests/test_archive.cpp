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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repbench/archive.hpp"
#include "repbench/errors.hpp"

using namespace repbench;

namespace {

ResultsArchive sample_archive() {
    ResultsArchive archive;
    archive.entries.push_back(
        {3, 1, {{"0", {{"000 00", 900}, {"010 00", 52}}}, {"1", {{"111 00", 870}}}}});
    archive.entries.push_back({5, 2, {{"0", {{"00000 0000 0000", 64}}}}});
    archive.created = "2026-08-01T00:00:00Z";
    return archive;
}

}  // namespace

TEST_CASE("dict-literal parsing of the documented examples") {
    ResultsArchive archive = parse_dict_literal_archive("{3: {'0': {'000 00': 1024}}}");
    REQUIRE(archive.entries.size() == 1);
    CHECK(archive.entries[0].n == 3);
    CHECK(archive.entries[0].rounds == 1);
    CHECK(archive.entries[0].counts.at("0").at("000 00") == 1024);

    CHECK(parse_dict_literal_archive("{}").entries.empty());

    // whitespace-insensitive, multiple entries, inferred rounds
    ResultsArchive spread = parse_dict_literal_archive(
        "{ 3 : {'0': {'000 00 00': 10,\n '111 00 00': 2}, '1': {'111 10 00': 5}},\n"
        "  5 : {'0': {'00000 0000': 7}} }");
    REQUIRE(spread.entries.size() == 2);
    CHECK(spread.entries[0].rounds == 2);
    CHECK(spread.entries[1].rounds == 1);
    CHECK(spread.entries[0].counts.at("1").at("111 10 00") == 5);
}

TEST_CASE("dict-literal layout validation names the bad string") {
    try {
        parse_dict_literal_archive("{3: {'0': {'000 0': 1}}}");
        FAIL_CHECK("expected a layout error");
    } catch (const LayoutError &e) {
        CHECK(std::string(e.what()).find("000 0") != std::string::npos);
    }
    // rounds must be consistent within one entry
    CHECK_THROWS_AS(
        parse_dict_literal_archive("{3: {'0': {'000 00': 1, '000 00 00': 1}}}"),
        LayoutError);
    // duplicate n
    CHECK_THROWS_AS(
        parse_dict_literal_archive("{3: {'0': {'000 00': 1}}, 3: {'0': {'000 00': 2}}}"),
        LayoutError);
    // alien logical label
    CHECK_THROWS_AS(parse_dict_literal_archive("{3: {'2': {'000 00': 1}}}"), LayoutError);
}

TEST_CASE("dict-literal syntax errors carry line and column") {
    try {
        parse_dict_literal_archive("{3: {'0': \n  {'000 00' 1}}}");
        FAIL_CHECK("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line == 2);
        CHECK(e.col == 13);
    }
    CHECK_THROWS_AS(parse_dict_literal_archive("{3: "), ParseError);
    CHECK_THROWS_AS(parse_dict_literal_archive("{3: {'0': {'000 00': }}}"), ParseError);
    CHECK_THROWS_AS(parse_dict_literal_archive("{3: {'0': {'000 00': 1}}} tail"), ParseError);
    CHECK_THROWS_AS(parse_dict_literal_archive(""), ParseError);
}

TEST_CASE("dict-literal write -> read is the identity on counts") {
    ResultsArchive archive = sample_archive();
    ResultsArchive reread = parse_dict_literal_archive(archive_to_dict_literal(archive));
    REQUIRE(reread.entries.size() == archive.entries.size());
    for (std::size_t i = 0; i < archive.entries.size(); ++i) {
        CHECK(reread.entries[i].n == archive.entries[i].n);
        CHECK(reread.entries[i].rounds == archive.entries[i].rounds);
        CHECK(reread.entries[i].counts == archive.entries[i].counts);
    }
    // and the text form itself is a fixed point
    CHECK(archive_to_dict_literal(reread) == archive_to_dict_literal(archive));
}

TEST_CASE("json write -> read is the identity, metadata included") {
    ResultsArchive archive = sample_archive();
    archive.config_json = R"({"shots":1000})";
    const std::string text = archive_to_json(archive);
    ResultsArchive reread = parse_json_archive(text);
    CHECK(reread.created == archive.created);
    REQUIRE(reread.entries.size() == archive.entries.size());
    for (std::size_t i = 0; i < archive.entries.size(); ++i)
        CHECK(reread.entries[i].counts == archive.entries[i].counts);
    CHECK(archive_to_json(reread) == text);
}

TEST_CASE("json archives are validated on read") {
    CHECK_THROWS_AS(parse_json_archive("{3: {'0': {}}}"), ParseError);  // not JSON
    CHECK_THROWS_AS(parse_json_archive("{\"answer\": 42}"), LayoutError);
    CHECK_THROWS_AS(
        parse_json_archive(R"({"format": "repbench-archive", "version": 99, "entries": []})"),
        LayoutError);
    CHECK_THROWS_AS(
        parse_json_archive(R"({"format": "repbench-archive", "version": 1,
            "entries": [{"n": 3, "rounds": 1, "counts": {"0": {"000 0": 4}}}]})"),
        LayoutError);
}

TEST_CASE("find retrieves entries by code size") {
    ResultsArchive archive = sample_archive();
    REQUIRE(archive.find(5) != nullptr);
    CHECK(archive.find(5)->rounds == 2);
    CHECK(archive.find(4) == nullptr);
}
