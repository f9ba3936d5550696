#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace vibesift {

/// Valence-intensity lexicon with the token sets the rule heuristics read.
/// Keys are lowercase; lookups fold case first.
struct ValenceLexicon {
    std::unordered_map<std::string, double> valences;  // token -> [-4, 4]
    std::unordered_map<std::string, double> boosters;  // token -> increment
    std::unordered_set<std::string> negators;
    std::unordered_set<std::string> but_words = {"but"};
};

/// Rule constants, overridable through a key=value file.
struct ValenceRules {
    double caps_emphasis = 0.733;
    double negation_factor = -0.74;
    double exclaim_boost = 0.292;   // per '!', at most 4 counted
    double question_boost = 0.18;   // per '?' beyond the first, at most 3 counted
    double alpha = 15.0;
    double booster_decay_1 = 1.0;
    double booster_decay_2 = 0.95;
    double booster_decay_3 = 0.9;
    double but_pre = 0.5;
    double but_post = 1.5;
    int window = 3;
};

/// neg/neu/pos ratios plus the normalized compound in [-1, 1].
struct ValenceScore {
    double neg = 0.0;
    double neu = 0.0;
    double pos = 0.0;
    double compound = 0.0;
};

/// Parses token<TAB>valence lines ('#' comments). Duplicate tokens keep the
/// last value with a warning. Boosters, negators, and but-words come from
/// the shipped defaults. Throws LexiconParseError, ValenceOutOfRangeError.
ValenceLexicon load_valence_lexicon(const std::filesystem::path& path);

/// Rule-constant override file: key = value lines. Unknown keys are errors.
ValenceRules load_valence_rules(const std::filesystem::path& path);

/// s / sqrt(s^2 + alpha), clamped to [-1, 1]. Odd and strictly increasing.
double normalize_compound(double s, double alpha = 15.0);

/// Scores case/punctuation-preserving (MINIMAL profile) text. Tokens of one
/// codepoint or less are dropped before scoring; matched tokens pick up
/// ALL-CAPS emphasis, booster and negation windows, and but-clause
/// weighting; '!'/'?' emphasis joins the summed valence before compound
/// normalization. Unmatched text scores all-neutral.
ValenceScore score(std::string_view text, const ValenceLexicon& lexicon,
                   const ValenceRules& rules = {});

/// Display form: compound rounded to 4 decimals, ratios to 3 (stored values
/// stay full precision).
std::string format_score(const ValenceScore& score);

}  // namespace vibesift
