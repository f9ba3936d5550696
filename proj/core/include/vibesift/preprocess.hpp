#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vibesift/sentiment_class.hpp"

namespace vibesift {

/// FULL lowercases and strips punctuation/sigils for the pattern scorer;
/// MINIMAL keeps the case and punctuation cues the valence scorer reads.
enum class Profile { Full, Minimal };

struct CleanTweet {
    std::string id;
    Profile profile = Profile::Full;
    std::vector<std::string> tokens;
    /// Tokens joined by single spaces.
    std::string normalized_text;
};

/// Inclusive codepoint intervals removed by strip_emoji.
struct EmojiRanges {
    std::vector<std::pair<char32_t, char32_t>> ranges;

    bool contains(char32_t cp) const;
};

EmojiRanges default_emoji_ranges();

/// Whitespace split with tweet-aware chunk handling: URLs, @mentions,
/// #hashtags, and table emoticons stay intact; leading/trailing punctuation
/// runs peel off as their own tokens; internal apostrophes stay inside.
/// Never produces empty tokens; drops nothing but whitespace.
std::vector<std::string> tweet_tokenize(std::string_view text);

/// Removes codepoints inside `ranges` plus U+FE0F; removes U+200D only when
/// adjacent to another removed codepoint. Idempotent.
std::string strip_emoji(std::string_view text, const EmojiRanges& ranges);
std::string strip_emoji(std::string_view text);

/// strip_emoji -> tweet_tokenize -> profile rules.
/// FULL: drop URL/@mention tokens, strip '#' sigils, lowercase, drop
/// punctuation-only tokens. MINIMAL: drop URL/@mention tokens only.
CleanTweet normalize(std::string_view text, Profile profile, const EmojiRanges& ranges);
CleanTweet normalize(std::string_view text, Profile profile);

/// Order-preserving removal of exact stoplist matches.
std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const std::unordered_set<std::string>& stoplist);

/// Per-class stopword frequencies and a chi-square style divergence score
/// per stopword (0 = uniform across classes).
struct StopwordProfile {
    std::map<SentimentClass, std::map<std::string, double>> class_frequencies;
    std::map<std::string, double> divergence;
};

/// `token_lists[i]` holds the FULL-profile tokens of tweet i with class
/// `classes[i]`. With `require_all_classes`, throws EmptyClassError when a
/// sentiment class has zero tweets; otherwise computes over the classes
/// present.
StopwordProfile stopword_profile(std::span<const std::vector<std::string>> token_lists,
                                 std::span<const SentimentClass> classes,
                                 const std::unordered_set<std::string>& stoplist,
                                 bool require_all_classes = true);

/// One token per line, '#' comments, UTF-8.
std::unordered_set<std::string> load_stoplist(const std::filesystem::path& path);
std::vector<std::string> load_word_list(const std::filesystem::path& path);

bool is_url_token(std::string_view token);
bool is_mention_token(std::string_view token);
bool is_hashtag_token(std::string_view token);
bool is_punct_token(std::string_view token);
bool is_emoticon(std::string_view token);

}  // namespace vibesift
