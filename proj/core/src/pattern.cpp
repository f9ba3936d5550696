#include "vibesift/pattern.hpp"

#include <charconv>
#include <fstream>

#include "vibesift/defaults.hpp"
#include "vibesift/errors.hpp"
#include "vibesift/unicode.hpp"

namespace vibesift {

namespace {

double parse_number(std::string_view text, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw LexiconParseError(line, "not a number: \"" + std::string(text) + "\"");
    }
    return value;
}

}  // namespace

PatternLexicon load_pattern_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path.string(), "cannot open for reading");
    }
    PatternLexicon lexicon;
    lexicon.negators = default_negators();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos || tab1 == 0 ||
            tab2 + 1 >= line.size()) {
            throw LexiconParseError(line_no, "expected token<TAB>polarity<TAB>subjectivity");
        }
        const std::string token = unicode::fold_lower(line.substr(0, tab1));
        PatternEntry entry;
        entry.polarity =
            parse_number(std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1), line_no);
        entry.subjectivity = parse_number(std::string_view(line).substr(tab2 + 1), line_no);
        if (entry.polarity < -1.0 || entry.polarity > 1.0 || entry.subjectivity < 0.0 ||
            entry.subjectivity > 1.0) {
            throw BoundViolationError(token);
        }
        lexicon.entries[token] = entry;
    }
    return lexicon;
}

PolarityScore score(std::span<const std::string> full_tokens, const PatternLexicon& lexicon) {
    double polarity_sum = 0.0;
    double subjectivity_sum = 0.0;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < full_tokens.size(); ++i) {
        const auto entry = lexicon.entries.find(full_tokens[i]);
        if (entry == lexicon.entries.end()) {
            continue;
        }
        double polarity = entry->second.polarity;
        for (std::size_t d = 1; d <= 2 && d <= i; ++d) {
            if (lexicon.negators.contains(full_tokens[i - d])) {
                polarity *= lexicon.negation_factor;
                break;
            }
        }
        polarity_sum += polarity;
        subjectivity_sum += entry->second.subjectivity;
        ++matched;
    }
    if (matched == 0) {
        return PolarityScore{};
    }
    const auto count = static_cast<double>(matched);
    return PolarityScore{polarity_sum / count, subjectivity_sum / count, matched};
}

PolarityScore score_mixed(std::span<const std::string> full_tokens,
                          const PatternLexicon& lexicon) {
    return score(full_tokens, lexicon);
}

}  // namespace vibesift
