#include "vibesift/valence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "vibesift/defaults.hpp"
#include "vibesift/errors.hpp"
#include "vibesift/log.hpp"
#include "vibesift/preprocess.hpp"
#include "vibesift/unicode.hpp"

namespace vibesift {

namespace uc = unicode;

namespace {

constexpr double kMaxAbsValence = 4.0;

bool is_all_caps(std::string_view token) {
    const auto cps = uc::decode_utf8(token);
    if (!cps) {
        return false;
    }
    bool has_upper = false;
    for (const char32_t cp : *cps) {
        if (uc::is_lower(cp)) {
            return false;
        }
        if (uc::is_upper(cp)) {
            has_upper = true;
        }
    }
    return has_upper;
}

// Emphasis only applies when capitalization is mixed across the tokens.
bool all_caps_differential(std::span<const std::string> tokens) {
    std::size_t caps = 0;
    for (const auto& token : tokens) {
        if (is_all_caps(token)) {
            ++caps;
        }
    }
    return caps > 0 && caps < tokens.size();
}

double parse_number(std::string_view text, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw LexiconParseError(line, "not a number: \"" + std::string(text) + "\"");
    }
    return value;
}

double decay_for_distance(const ValenceRules& rules, int distance) {
    switch (std::min(distance, 3)) {
        case 1:
            return rules.booster_decay_1;
        case 2:
            return rules.booster_decay_2;
        default:
            return rules.booster_decay_3;
    }
}

}  // namespace

ValenceLexicon load_valence_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path.string(), "cannot open for reading");
    }
    ValenceLexicon lexicon;
    lexicon.boosters = default_boosters();
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
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
            throw LexiconParseError(line_no, "expected token<TAB>valence");
        }
        const std::string token = uc::fold_lower(line.substr(0, tab));
        const double value = parse_number(std::string_view(line).substr(tab + 1), line_no);
        if (std::fabs(value) > kMaxAbsValence) {
            throw ValenceOutOfRangeError(token, value);
        }
        if (lexicon.valences.contains(token)) {
            log_warning("duplicate valence entry \"" + token + "\" at line " +
                        std::to_string(line_no) + ", last value wins");
        }
        lexicon.valences[token] = value;
    }
    return lexicon;
}

ValenceRules load_valence_rules(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path.string(), "cannot open for reading");
    }
    ValenceRules rules;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t") != std::string::npos) {
                throw LexiconParseError(line_no, "expected key = value");
            }
            continue;
        }
        const auto trim = [](std::string_view s) {
            const auto b = s.find_first_not_of(" \t");
            if (b == std::string_view::npos) {
                return std::string_view();
            }
            const auto e = s.find_last_not_of(" \t");
            return s.substr(b, e - b + 1);
        };
        const auto key = trim(std::string_view(line).substr(0, eq));
        const auto value_text = trim(std::string_view(line).substr(eq + 1));
        if (key.empty() || value_text.empty()) {
            throw LexiconParseError(line_no, "expected key = value");
        }
        const double value = parse_number(value_text, line_no);
        if (key == "caps_emphasis") {
            rules.caps_emphasis = value;
        } else if (key == "negation_factor") {
            rules.negation_factor = value;
        } else if (key == "exclaim_boost") {
            rules.exclaim_boost = value;
        } else if (key == "question_boost") {
            rules.question_boost = value;
        } else if (key == "alpha") {
            rules.alpha = value;
        } else if (key == "booster_decay_1") {
            rules.booster_decay_1 = value;
        } else if (key == "booster_decay_2") {
            rules.booster_decay_2 = value;
        } else if (key == "booster_decay_3") {
            rules.booster_decay_3 = value;
        } else if (key == "but_pre") {
            rules.but_pre = value;
        } else if (key == "but_post") {
            rules.but_post = value;
        } else if (key == "window") {
            rules.window = static_cast<int>(value);
        } else {
            throw LexiconParseError(line_no, "unknown rule key: " + std::string(key));
        }
    }
    return rules;
}

double normalize_compound(double s, double alpha) {
    const double normalized = s / std::sqrt(s * s + alpha);
    return std::clamp(normalized, -1.0, 1.0);
}

ValenceScore score(std::string_view text, const ValenceLexicon& lexicon,
                   const ValenceRules& rules) {
    const CleanTweet minimal = normalize(text, Profile::Minimal);

    // Single-codepoint tokens carry no usable signal and would inflate the
    // neutral count.
    std::vector<std::string> tokens;
    tokens.reserve(minimal.tokens.size());
    for (const auto& token : minimal.tokens) {
        if (uc::length(token) > 1) {
            tokens.push_back(token);
        }
    }
    std::vector<std::string> lowered;
    lowered.reserve(tokens.size());
    for (const auto& token : tokens) {
        lowered.push_back(uc::fold_lower(token));
    }

    const bool cap_diff = all_caps_differential(tokens);
    std::vector<double> valences(tokens.size(), 0.0);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto entry = lexicon.valences.find(lowered[i]);
        if (entry == lexicon.valences.end()) {
            continue;
        }
        double v = entry->second;
        if (v != 0.0 && cap_diff && is_all_caps(tokens[i])) {
            v += (v > 0.0) ? rules.caps_emphasis : -rules.caps_emphasis;
        }
        if (v != 0.0) {
            bool negated = false;
            for (int d = 1; d <= rules.window && static_cast<std::size_t>(d) <= i; ++d) {
                const std::string& prev = lowered[i - static_cast<std::size_t>(d)];
                const auto booster = lexicon.boosters.find(prev);
                if (booster != lexicon.boosters.end()) {
                    double inc = booster->second * decay_for_distance(rules, d);
                    if (v < 0.0) {
                        inc = -inc;
                    }
                    v += inc;
                }
                if (lexicon.negators.contains(prev)) {
                    negated = true;
                }
            }
            if (negated) {
                v *= rules.negation_factor;
            }
        }
        valences[i] = v;
    }

    // Contrast clause: everything before the first but-word is discounted,
    // everything after it is weighted up.
    for (std::size_t k = 0; k < lowered.size(); ++k) {
        if (lexicon.but_words.contains(lowered[k])) {
            for (std::size_t i = 0; i < valences.size(); ++i) {
                if (i < k) {
                    valences[i] *= rules.but_pre;
                } else if (i > k) {
                    valences[i] *= rules.but_post;
                }
            }
            break;
        }
    }

    double sum = 0.0;
    for (const double v : valences) {
        sum += v;
    }

    std::size_t exclaims = 0;
    std::size_t questions = 0;
    for (const char c : text) {
        if (c == '!') {
            ++exclaims;
        } else if (c == '?') {
            ++questions;
        }
    }
    const double punct_mass =
        rules.exclaim_boost * static_cast<double>(std::min<std::size_t>(exclaims, 4)) +
        rules.question_boost *
            static_cast<double>(std::min<std::size_t>(questions > 0 ? questions - 1 : 0, 3));
    double adjusted_sum = sum;
    if (sum > 0.0) {
        adjusted_sum += punct_mass;
    } else if (sum < 0.0) {
        adjusted_sum -= punct_mass;
    }

    ValenceScore result;
    result.compound = normalize_compound(adjusted_sum, rules.alpha);

    double pos_sum = 0.0;
    double neg_sum = 0.0;
    std::size_t neu_count = 0;
    for (const double v : valences) {
        if (v > 0.0) {
            pos_sum += v + 1.0;  // +-1 compensates for neutrals counting as 1
        } else if (v < 0.0) {
            neg_sum += v - 1.0;
        } else {
            ++neu_count;
        }
    }
    // Punctuation mass joins the side the adjusted sum points to.
    if (punct_mass > 0.0) {
        if (adjusted_sum > 0.0) {
            pos_sum += punct_mass;
        } else if (adjusted_sum < 0.0) {
            neg_sum -= punct_mass;
        }
    }
    const double total = pos_sum + std::fabs(neg_sum) + static_cast<double>(neu_count);
    if (total > 0.0) {
        result.pos = pos_sum / total;
        result.neg = std::fabs(neg_sum) / total;
        result.neu = static_cast<double>(neu_count) / total;
    }
    return result;
}

std::string format_score(const ValenceScore& score) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "{'compound': %.4f, 'neg': %.3f, 'neu': %.3f, 'pos': %.3f}",
                  score.compound, score.neg, score.neu, score.pos);
    return buf;
}

}  // namespace vibesift
