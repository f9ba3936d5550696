#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/temp_dir.hpp"
#include "vibesift/csv.hpp"
#include "vibesift/errors.hpp"

namespace csv = vibesift::csv;

TEST_CASE("parses quoted fields with commas, quotes, and newlines") {
    const std::string content =
        "a,b,c\n"
        "1,\"x,y\",plain\n"
        "2,\"he said \"\"hi\"\"\",\"line1\nline2\"\n";
    const auto table = csv::parse(content, "test");
    REQUIRE(table.header == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0][1] == "x,y");
    CHECK(table.rows[1][1] == "he said \"hi\"");
    CHECK(table.rows[1][2] == "line1\nline2");
    CHECK(table.row_lines[0] == 2);
    CHECK(table.row_lines[1] == 3);  // row 2 starts on physical line 3
}

TEST_CASE("accepts CRLF and missing trailing newline") {
    const auto table = csv::parse("a,b\r\n1,2\r\n3,4", "test");
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[1][1] == "4");
}

TEST_CASE("field count mismatch is a malformed row with a line number") {
    CHECK_THROWS_AS(csv::parse("a,b\n1,2,3\n", "test"), vibesift::MalformedRowError);
    try {
        csv::parse("a,b\n1,2\n1\n", "test");
        FAIL("expected throw");
    } catch (const vibesift::MalformedRowError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("structural errors") {
    CHECK_THROWS_AS(csv::parse("a,b\n\"unterminated\n", "t"), vibesift::MalformedRowError);
    CHECK_THROWS_AS(csv::parse("a,b\nx\"y,2\n", "t"), vibesift::MalformedRowError);
    CHECK_THROWS_AS(csv::parse("", "t"), vibesift::MalformedRowError);
    CHECK_THROWS_AS(csv::read_file("/nonexistent/file.csv"), vibesift::IoError);
}

TEST_CASE("escape quotes only when needed") {
    CHECK(csv::escape("plain") == "plain");
    CHECK(csv::escape("a,b") == "\"a,b\"");
    CHECK(csv::escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv::escape("two\nlines") == "\"two\nlines\"");
    CHECK(csv::escape("") == "");
}

TEST_CASE("write/parse round trip over adversarial fields") {
    // Field pool mixes separators, quotes, newlines, and emoji.
    const std::vector<std::string> pool = {
        "",          "plain",          "with,comma", "with\"quote",
        "multi\nline", "\"quoted\"",   "emoji \xF0\x9F\x92\x89",
        " leading",  "trailing ",      ",",          "\"",
        "\n",        "a,b\"c\nd",      "NaN",
    };
    std::mt19937_64 rng(20240811);
    const std::vector<std::string> header = {"c1", "c2", "c3"};
    for (int round = 0; round < 50; ++round) {
        std::vector<std::vector<std::string>> rows;
        const std::size_t n_rows = rng() % 8;
        for (std::size_t r = 0; r < n_rows; ++r) {
            rows.push_back({pool[rng() % pool.size()], pool[rng() % pool.size()],
                            pool[rng() % pool.size()]});
        }
        std::string serialized = csv::format_row(header);
        for (const auto& row : rows) {
            serialized += csv::format_row(row);
        }
        const auto parsed = csv::parse(serialized, "roundtrip");
        REQUIRE(parsed.header == header);
        REQUIRE(parsed.rows.size() == rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            CHECK(parsed.rows[r] == rows[r]);
        }
    }
}

TEST_CASE("write_file then read_file preserves a table") {
    testsupport::TempDir dir("csv");
    const std::vector<std::string> header = {"x", "y"};
    const std::vector<std::vector<std::string>> rows = {{"1", "a,b"}, {"2", "c\nd"}};
    csv::write_file(dir.file("t.csv"), header, rows);
    const auto table = csv::read_file(dir.file("t.csv"));
    CHECK(table.header == header);
    CHECK(table.rows == rows);
}
