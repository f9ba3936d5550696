#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vibesift::csv {

/// A parsed CSV file: header row plus data rows. `row_lines[i]` is the
/// physical line on which data row i starts (1-based, header is line 1).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;
};

/// RFC-4180 parse of a whole buffer. Quoted fields may contain commas,
/// quotes (doubled), and newlines. Every data row must have as many fields
/// as the header. Throws MalformedRowError on structural errors.
Table parse(std::string_view content, std::string_view source_name);

/// Reads and parses a file. Throws IoError if unreadable.
Table read_file(const std::filesystem::path& path);

/// Quotes a field when it contains a comma, quote, CR, or LF.
std::string escape(std::string_view field);

/// Serializes one record, fields escaped, terminated by '\n'.
std::string format_row(std::span<const std::string> fields);

/// Writes header + rows to a file. Throws IoError on failure.
void write_file(const std::filesystem::path& path, std::span<const std::string> header,
                std::span<const std::vector<std::string>> rows);

}  // namespace vibesift::csv
