#include "vibesift/preprocess.hpp"

#include <algorithm>
#include <array>
#include <fstream>

#include "vibesift/errors.hpp"
#include "vibesift/unicode.hpp"

namespace vibesift {

namespace uc = unicode;

namespace {

constexpr std::array<std::string_view, 44> kEmoticons = {
    ":)",  ":-)", ":))", "(:",  ":(",  ":-(", "):",  ":D",  ":-D", ";)",  ";-)",
    ":P",  ":-P", ":p",  ":-p", ":/",  ":-/", ":\\", ":|",  ":O",  ":o",  ":3",
    "<3",  "</3", ":*",  "=)",  "=(",  ":'(", ":')", "xD",  "XD",  "D:",  ":@",
    ":$",  "8)",  "B)",  "8-)", "B-)", "^_^", "-_-", "o_O", "O_o", ":s",  ":S"};

constexpr char32_t kVariationSelector = 0xFE0F;
constexpr char32_t kZeroWidthJoiner = 0x200D;

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool all_punct(std::span<const char32_t> cps) {
    return !cps.empty() && std::all_of(cps.begin(), cps.end(), uc::is_punct);
}

// Emits the chunk's tokens: special chunks stay whole, otherwise edge
// punctuation runs peel off and the core is re-examined.
void emit_chunk(std::span<const char32_t> cps, std::vector<std::string>& out) {
    if (cps.empty()) {
        return;
    }
    const std::string chunk = uc::encode_utf8(cps);
    if (is_url_token(chunk) || is_mention_token(chunk) || is_hashtag_token(chunk) ||
        is_emoticon(chunk) || all_punct(cps)) {
        out.push_back(chunk);
        return;
    }
    std::size_t lead = 0;
    while (lead < cps.size() && uc::is_punct(cps[lead])) {
        ++lead;
    }
    if (lead > 0) {
        out.push_back(uc::encode_utf8(cps.subspan(0, lead)));
        emit_chunk(cps.subspan(lead), out);
        return;
    }
    std::size_t trail = cps.size();
    while (trail > 0 && uc::is_punct(cps[trail - 1])) {
        --trail;
    }
    if (trail < cps.size()) {
        emit_chunk(cps.subspan(0, trail), out);
        out.push_back(uc::encode_utf8(cps.subspan(trail)));
        return;
    }
    out.push_back(chunk);
}

std::string strip_hashtag_sigil(const std::string& token) {
    return is_hashtag_token(token) ? token.substr(1) : token;
}

}  // namespace

bool EmojiRanges::contains(char32_t cp) const {
    for (const auto& [lo, hi] : ranges) {
        if (cp >= lo && cp <= hi) {
            return true;
        }
    }
    return false;
}

EmojiRanges default_emoji_ranges() {
    return EmojiRanges{{
        {0x1F300, 0x1F5FF},
        {0x1F600, 0x1F64F},
        {0x1F680, 0x1F6FF},
        {0x1F900, 0x1F9FF},
        {0x1FA70, 0x1FAFF},
        {0x2600, 0x26FF},
        {0x2700, 0x27BF},
        {0x1F1E6, 0x1F1FF},
    }};
}

bool is_url_token(std::string_view token) {
    const auto starts_with_ci = [&](std::string_view prefix) {
        if (token.size() < prefix.size()) {
            return false;
        }
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const char c = token[i];
            const char lower = (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
            if (lower != prefix[i]) {
                return false;
            }
        }
        return true;
    };
    if (starts_with_ci("www.") && token.size() > 4) {
        return true;
    }
    const auto scheme_end = token.find("://");
    if (scheme_end == std::string_view::npos || scheme_end == 0 ||
        scheme_end + 3 >= token.size()) {
        return false;
    }
    for (std::size_t i = 0; i < scheme_end; ++i) {
        const char c = token[i];
        if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) {
            return false;
        }
    }
    return true;
}

bool is_mention_token(std::string_view token) {
    if (token.size() < 2 || token[0] != '@') {
        return false;
    }
    return std::all_of(token.begin() + 1, token.end(), is_word_char);
}

bool is_hashtag_token(std::string_view token) {
    if (token.size() < 2 || token[0] != '#') {
        return false;
    }
    const char first = token[1];
    if (!((first >= 'a' && first <= 'z') || (first >= 'A' && first <= 'Z'))) {
        return false;
    }
    return std::all_of(token.begin() + 1, token.end(), is_word_char);
}

bool is_punct_token(std::string_view token) {
    const auto cps = uc::decode_utf8(token);
    return cps && all_punct(*cps);
}

bool is_emoticon(std::string_view token) {
    return std::find(kEmoticons.begin(), kEmoticons.end(), token) != kEmoticons.end();
}

std::vector<std::string> tweet_tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    const auto cps = uc::decode_utf8(text);
    if (!cps) {
        return tokens;
    }
    std::size_t i = 0;
    const std::size_t n = cps->size();
    while (i < n) {
        while (i < n && uc::is_space((*cps)[i])) {
            ++i;
        }
        std::size_t start = i;
        while (i < n && !uc::is_space((*cps)[i])) {
            ++i;
        }
        if (i > start) {
            emit_chunk(std::span<const char32_t>(cps->data() + start, i - start), tokens);
        }
    }
    return tokens;
}

std::string strip_emoji(std::string_view text, const EmojiRanges& ranges) {
    const auto cps = uc::decode_utf8(text);
    if (!cps) {
        return std::string(text);
    }
    const std::size_t n = cps->size();
    std::vector<bool> removed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const char32_t cp = (*cps)[i];
        removed[i] = cp == kVariationSelector || ranges.contains(cp);
    }
    // Joiners fall with their neighbors; iterate until stable so joiner
    // chains collapse in either direction.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (removed[i] || (*cps)[i] != kZeroWidthJoiner) {
                continue;
            }
            const bool prev_removed = i > 0 && removed[i - 1];
            const bool next_removed = i + 1 < n && removed[i + 1];
            if (prev_removed || next_removed) {
                removed[i] = true;
                changed = true;
            }
        }
    }
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!removed[i]) {
            uc::append_utf8(out, (*cps)[i]);
        }
    }
    return out;
}

std::string strip_emoji(std::string_view text) {
    static const EmojiRanges ranges = default_emoji_ranges();
    return strip_emoji(text, ranges);
}

CleanTweet normalize(std::string_view text, Profile profile, const EmojiRanges& ranges) {
    CleanTweet clean;
    clean.profile = profile;
    const std::string stripped = strip_emoji(text, ranges);
    for (std::string& token : tweet_tokenize(stripped)) {
        if (is_url_token(token) || is_mention_token(token)) {
            continue;
        }
        if (profile == Profile::Full) {
            token = strip_hashtag_sigil(token);
            token = uc::fold_lower(token);
            if (token.empty() || is_punct_token(token)) {
                continue;
            }
        }
        clean.tokens.push_back(std::move(token));
    }
    for (std::size_t i = 0; i < clean.tokens.size(); ++i) {
        if (i > 0) {
            clean.normalized_text.push_back(' ');
        }
        clean.normalized_text += clean.tokens[i];
    }
    return clean;
}

CleanTweet normalize(std::string_view text, Profile profile) {
    static const EmojiRanges ranges = default_emoji_ranges();
    return normalize(text, profile, ranges);
}

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const std::unordered_set<std::string>& stoplist) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& token : tokens) {
        if (!stoplist.contains(token)) {
            kept.push_back(token);
        }
    }
    return kept;
}

StopwordProfile stopword_profile(std::span<const std::vector<std::string>> token_lists,
                                 std::span<const SentimentClass> classes,
                                 const std::unordered_set<std::string>& stoplist,
                                 bool require_all_classes) {
    if (token_lists.size() != classes.size()) {
        throw ConfigError("stopword_profile: token list and class counts differ");
    }
    std::map<SentimentClass, std::size_t> tweets_per_class;
    for (const SentimentClass c : classes) {
        ++tweets_per_class[c];
    }
    if (require_all_classes) {
        for (const SentimentClass c : kAllClasses) {
            if (!tweets_per_class.contains(c)) {
                throw EmptyClassError(std::string(to_string(c)));
            }
        }
    }

    // n[c][w]: stopword occurrences per class.
    std::map<SentimentClass, std::map<std::string, std::size_t>> counts;
    std::map<SentimentClass, std::size_t> class_totals;
    std::map<std::string, std::size_t> word_totals;
    std::size_t grand_total = 0;
    for (std::size_t i = 0; i < token_lists.size(); ++i) {
        for (const auto& token : token_lists[i]) {
            if (!stoplist.contains(token)) {
                continue;
            }
            ++counts[classes[i]][token];
            ++class_totals[classes[i]];
            ++word_totals[token];
            ++grand_total;
        }
    }

    StopwordProfile profile;
    for (const auto& [cls, words] : counts) {
        const double total = static_cast<double>(class_totals.at(cls));
        for (const auto& [word, count] : words) {
            profile.class_frequencies[cls][word] = static_cast<double>(count) / total;
        }
    }
    if (grand_total == 0) {
        return profile;
    }
    // Chi-square against class-marginal expectations.
    for (const auto& [word, row_total] : word_totals) {
        double score = 0.0;
        for (const auto& [cls, cls_total] : class_totals) {
            const double expected = static_cast<double>(row_total) *
                                    static_cast<double>(cls_total) /
                                    static_cast<double>(grand_total);
            if (expected <= 0.0) {
                continue;
            }
            double observed = 0.0;
            const auto cls_it = counts.find(cls);
            if (cls_it != counts.end()) {
                const auto word_it = cls_it->second.find(word);
                if (word_it != cls_it->second.end()) {
                    observed = static_cast<double>(word_it->second);
                }
            }
            const double diff = observed - expected;
            score += diff * diff / expected;
        }
        profile.divergence[word] = score;
    }
    return profile;
}

std::vector<std::string> load_word_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path.string(), "cannot open for reading");
    }
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        const auto begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) {
            continue;
        }
        const auto end = line.find_last_not_of(" \t");
        words.push_back(line.substr(begin, end - begin + 1));
    }
    return words;
}

std::unordered_set<std::string> load_stoplist(const std::filesystem::path& path) {
    const auto words = load_word_list(path);
    return {words.begin(), words.end()};
}

}  // namespace vibesift
