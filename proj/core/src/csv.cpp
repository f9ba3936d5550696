#include "vibesift/csv.hpp"

#include <fstream>
#include <sstream>

#include "vibesift/errors.hpp"

namespace vibesift::csv {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char advance() {
        const char c = text[pos++];
        if (c == '\n') {
            ++line;
        }
        return c;
    }

    // Consumes LF or CRLF or lone CR as one record break.
    bool consume_newline() {
        if (done()) {
            return false;
        }
        if (peek() == '\r') {
            advance();
            if (!done() && peek() == '\n') {
                advance();
            }
            return true;
        }
        if (peek() == '\n') {
            advance();
            return true;
        }
        return false;
    }
};

// Parses one record; returns false at end of input.
bool parse_record(Cursor& cur, std::vector<std::string>& fields, std::size_t& start_line) {
    fields.clear();
    if (cur.done()) {
        return false;
    }
    start_line = cur.line;
    std::string field;
    bool record_open = true;
    while (record_open) {
        field.clear();
        if (!cur.done() && cur.peek() == '"') {
            cur.advance();
            bool closed = false;
            while (!cur.done()) {
                const char c = cur.advance();
                if (c == '"') {
                    if (!cur.done() && cur.peek() == '"') {
                        field.push_back('"');
                        cur.advance();
                    } else {
                        closed = true;
                        break;
                    }
                } else {
                    field.push_back(c);
                }
            }
            if (!closed) {
                throw MalformedRowError(start_line, "unterminated quoted field");
            }
            if (!cur.done() && cur.peek() != ',' && cur.peek() != '\r' && cur.peek() != '\n') {
                throw MalformedRowError(cur.line, "unexpected character after closing quote");
            }
        } else {
            while (!cur.done() && cur.peek() != ',' && cur.peek() != '\r' && cur.peek() != '\n') {
                const char c = cur.advance();
                if (c == '"') {
                    throw MalformedRowError(cur.line, "bare quote in unquoted field");
                }
                field.push_back(c);
            }
        }
        fields.push_back(field);
        if (cur.done()) {
            record_open = false;
        } else if (cur.peek() == ',') {
            cur.advance();
        } else {
            cur.consume_newline();
            record_open = false;
        }
    }
    return true;
}

}  // namespace

Table parse(std::string_view content, std::string_view source_name) {
    Table table;
    Cursor cur{content};
    std::vector<std::string> fields;
    std::size_t start_line = 1;
    if (!parse_record(cur, fields, start_line)) {
        throw MalformedRowError(1, "empty file, header row required in " + std::string(source_name));
    }
    table.header = fields;
    while (parse_record(cur, fields, start_line)) {
        if (fields.size() == 1 && fields[0].empty()) {
            continue;  // blank line
        }
        if (fields.size() != table.header.size()) {
            throw MalformedRowError(start_line, "expected " + std::to_string(table.header.size()) +
                                                    " fields, got " + std::to_string(fields.size()));
        }
        table.rows.push_back(fields);
        table.row_lines.push_back(start_line);
    }
    return table;
}

Table read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(path.string(), "cannot open for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError(path.string(), "read failed");
    }
    return parse(buffer.str(), path.string());
}

std::string escape(std::string_view field) {
    const bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) {
        return std::string(field);
    }
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (const char c : field) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_row(std::span<const std::string> fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += escape(fields[i]);
    }
    out.push_back('\n');
    return out;
}

void write_file(const std::filesystem::path& path, std::span<const std::string> header,
                std::span<const std::vector<std::string>> rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError(path.string(), "cannot open for writing");
    }
    out << format_row(header);
    for (const auto& row : rows) {
        out << format_row(row);
    }
    out.flush();
    if (!out) {
        throw IoError(path.string(), "write failed");
    }
}

}  // namespace vibesift::csv
