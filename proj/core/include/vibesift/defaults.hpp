#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vibesift/pattern.hpp"
#include "vibesift/valence.hpp"

namespace vibesift {

/// Negation tokens shared by both scorers.
const std::unordered_set<std::string>& default_negators();

/// Intensifiers (+0.293) and dampeners (-0.293) for the valence rules.
const std::unordered_map<std::string, double>& default_boosters();

/// The standard 127-word English stopword list.
const std::unordered_set<std::string>& default_stopwords();

/// Seed keyword list for corpus flagging.
const std::vector<std::string>& default_keywords();

/// Seed lexicons; identical to the files shipped under data/.
ValenceLexicon default_valence_lexicon();
PatternLexicon default_pattern_lexicon();

}  // namespace vibesift
