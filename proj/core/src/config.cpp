#include "vibesift/config.hpp"

#include <charconv>
#include <fstream>

#include "vibesift/defaults.hpp"
#include "vibesift/errors.hpp"

namespace vibesift {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_double_value(const std::string& key, const std::string& value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(key + " is not a number: \"" + value + "\"");
    }
    return out;
}

std::int64_t parse_int_value(const std::string& key, const std::string& value) {
    std::int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(key + " is not an integer: \"" + value + "\"");
    }
    return out;
}

bool parse_bool_value(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no" || value == "off") {
        return false;
    }
    throw ConfigError(key + " is not a boolean: \"" + value + "\"");
}

char32_t parse_hex_codepoint(std::string_view text) {
    unsigned long value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value, 16);
    if (ec != std::errc() || ptr != text.data() + text.size() || value > 0x10FFFF) {
        throw ConfigError("bad codepoint in emoji range: \"" + std::string(text) + "\"");
    }
    return static_cast<char32_t>(value);
}

void require_exists(const std::filesystem::path& path, const std::string& what) {
    if (!std::filesystem::exists(path)) {
        throw ConfigError(what + " does not exist: " + path.string());
    }
}

}  // namespace

EngagementDirection parse_direction(const std::string& text) {
    if (text == "rpf" || text == "retweets_per_follower") {
        return EngagementDirection::RetweetsPerFollower;
    }
    if (text == "fpr" || text == "followers_per_retweet") {
        return EngagementDirection::FollowersPerRetweet;
    }
    throw ConfigError("engagement_direction must be rpf or fpr, got \"" + text + "\"");
}

std::string direction_label(EngagementDirection direction) {
    return direction == EngagementDirection::RetweetsPerFollower ? "retweets_per_follower"
                                                                 : "followers_per_retweet";
}

EmojiRanges parse_emoji_ranges(const std::string& spec) {
    EmojiRanges ranges;
    std::string_view rest = spec;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item =
            trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
        if (item.empty()) {
            continue;
        }
        const auto dash = item.find('-');
        char32_t lo;
        char32_t hi;
        if (dash == std::string_view::npos) {
            lo = hi = parse_hex_codepoint(item);
        } else {
            lo = parse_hex_codepoint(trim(item.substr(0, dash)));
            hi = parse_hex_codepoint(trim(item.substr(dash + 1)));
        }
        if (hi < lo) {
            throw ConfigError("emoji range is reversed: \"" + std::string(item) + "\"");
        }
        ranges.ranges.emplace_back(lo, hi);
    }
    if (ranges.ranges.empty()) {
        throw ConfigError("emoji_ranges is empty");
    }
    return ranges;
}

void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "input") {
        config.input = value;
    } else if (key == "out_dir") {
        config.out_dir = value;
    } else if (key == "keywords") {
        config.keywords_path = value;
    } else if (key == "stoplist") {
        config.stoplist_path = value;
    } else if (key == "valence_lexicon") {
        config.valence_lexicon_path = value;
    } else if (key == "pattern_lexicon") {
        config.pattern_lexicon_path = value;
    } else if (key == "rules") {
        config.rules_path = value;
    } else if (key == "emoji_ranges") {
        config.emoji_ranges_spec = value;
    } else if (key == "train_fraction") {
        config.split.train_fraction = parse_double_value(key, value);
    } else if (key == "dev_fraction") {
        config.split.dev_fraction = parse_double_value(key, value);
    } else if (key == "test_fraction") {
        config.split.test_fraction = parse_double_value(key, value);
    } else if (key == "seed") {
        const auto parsed = parse_int_value(key, value);
        if (parsed < 0) {
            throw ConfigError("seed must be non-negative");
        }
        config.seed = static_cast<std::uint64_t>(parsed);
    } else if (key == "positive_min") {
        config.thresholds.positive_min = parse_double_value(key, value);
    } else if (key == "negative_max") {
        config.thresholds.negative_max = parse_double_value(key, value);
    } else if (key == "band_lo") {
        config.band_lo = parse_int_value(key, value);
    } else if (key == "band_hi") {
        config.band_hi = parse_int_value(key, value);
    } else if (key == "apply_band") {
        config.apply_band = parse_bool_value(key, value);
    } else if (key == "engagement_direction") {
        config.direction = parse_direction(value);
    } else if (key == "quiet") {
        config.quiet = parse_bool_value(key, value);
    } else {
        throw ConfigError("unknown config key: " + key);
    }
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path.string());
    }
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
        if (trim(line).empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              " is not key = value: \"" + line + "\"");
        }
        const std::string key{trim(std::string_view(line).substr(0, eq))};
        const std::string value{trim(std::string_view(line).substr(eq + 1))};
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + " has an empty key");
        }
        apply_config_entry(config, key, value);
    }
}

void validate(const RunConfig& config, bool require_input) {
    if (require_input) {
        if (config.input.empty()) {
            throw ConfigError("input path is required");
        }
        require_exists(config.input, "input file");
    }
    if (config.keywords_path) {
        require_exists(*config.keywords_path, "keywords file");
    }
    if (config.stoplist_path) {
        require_exists(*config.stoplist_path, "stoplist file");
    }
    if (config.valence_lexicon_path) {
        require_exists(*config.valence_lexicon_path, "valence lexicon");
    }
    if (config.pattern_lexicon_path) {
        require_exists(*config.pattern_lexicon_path, "pattern lexicon");
    }
    if (config.rules_path) {
        require_exists(*config.rules_path, "rules file");
    }
    config.split.validate();
    config.thresholds.validate();
    if (config.band_lo > config.band_hi) {
        throw ConfigError("band_lo must not exceed band_hi");
    }
    if (config.emoji_ranges_spec) {
        parse_emoji_ranges(*config.emoji_ranges_spec);  // throws on bad spec
    }
}

Resources load_resources(const RunConfig& config) {
    Resources res;
    res.keywords =
        config.keywords_path ? load_word_list(*config.keywords_path) : default_keywords();
    res.stoplist =
        config.stoplist_path ? load_stoplist(*config.stoplist_path) : default_stopwords();
    res.valence_lexicon = config.valence_lexicon_path
                              ? load_valence_lexicon(*config.valence_lexicon_path)
                              : default_valence_lexicon();
    res.pattern_lexicon = config.pattern_lexicon_path
                              ? load_pattern_lexicon(*config.pattern_lexicon_path)
                              : default_pattern_lexicon();
    if (config.rules_path) {
        res.rules = load_valence_rules(*config.rules_path);
    }
    res.emoji_ranges = config.emoji_ranges_spec ? parse_emoji_ranges(*config.emoji_ranges_spec)
                                                : default_emoji_ranges();
    return res;
}

}  // namespace vibesift
