#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace vibesift {

struct PatternEntry {
    double polarity = 0.0;      // [-1, 1]
    double subjectivity = 0.0;  // [0, 1]
};

/// Polarity/subjectivity lexicon for the averaging scorer.
struct PatternLexicon {
    std::unordered_map<std::string, PatternEntry> entries;
    std::unordered_set<std::string> negators;
    double negation_factor = -0.5;
};

struct PolarityScore {
    double polarity = 0.0;
    double subjectivity = 0.0;
    std::size_t matched_count = 0;
};

/// Parses token<TAB>polarity<TAB>subjectivity lines ('#' comments).
/// Negators come from the shipped defaults. Throws LexiconParseError,
/// BoundViolationError.
PatternLexicon load_pattern_lexicon(const std::filesystem::path& path);

/// Averages the polarities of matched tokens; a negator within the two
/// preceding tokens multiplies that token's polarity by negation_factor.
/// Subjectivity is the plain mean of matched subjectivities. No matches
/// returns exactly (0.0, 0.0, 0).
PolarityScore score(std::span<const std::string> full_tokens, const PatternLexicon& lexicon);

/// Same computation as score; named for reading multi-polarity sentences,
/// where opposing matches average toward zero.
PolarityScore score_mixed(std::span<const std::string> full_tokens,
                          const PatternLexicon& lexicon);

}  // namespace vibesift
