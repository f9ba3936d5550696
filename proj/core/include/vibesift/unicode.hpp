#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vibesift::unicode {

/// Decodes strict UTF-8 into codepoints. Rejects overlong forms, surrogates,
/// values above U+10FFFF, and truncated sequences.
std::optional<std::vector<char32_t>> decode_utf8(std::string_view text);

bool is_valid_utf8(std::string_view text);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::span<const char32_t> codepoints);

/// Codepoint count of a valid UTF-8 string. Falls back to byte count on
/// invalid input.
std::size_t length(std::string_view text);

/// Case mapping over ASCII, Latin-1, Latin Extended-A, Greek, and Cyrillic.
/// Codepoints outside those blocks map to themselves.
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_punct(char32_t cp);
bool is_letter(char32_t cp);

/// Lowercases a UTF-8 string via to_lower. Invalid input is lowered
/// byte-wise over ASCII only.
std::string fold_lower(std::string_view text);

}  // namespace vibesift::unicode
