#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "vibesift/analytics.hpp"
#include "vibesift/corpus.hpp"
#include "vibesift/pattern.hpp"
#include "vibesift/preprocess.hpp"
#include "vibesift/valence.hpp"

namespace vibesift {

/// Full pipeline configuration. Defaults exist for everything but the
/// input path. Precedence: defaults < config file < command-line flags.
struct RunConfig {
    std::filesystem::path input;
    std::filesystem::path out_dir = "out";
    std::optional<std::filesystem::path> keywords_path;
    std::optional<std::filesystem::path> stoplist_path;
    std::optional<std::filesystem::path> valence_lexicon_path;
    std::optional<std::filesystem::path> pattern_lexicon_path;
    std::optional<std::filesystem::path> rules_path;
    std::optional<std::string> emoji_ranges_spec;  // "1F300-1F5FF,2600-26FF"
    SplitSpec split;
    ClassThresholds thresholds;
    std::int64_t band_lo = 400;
    std::int64_t band_hi = 500;
    bool apply_band = true;
    EngagementDirection direction = EngagementDirection::RetweetsPerFollower;
    std::uint64_t seed = 42;
    bool quiet = false;
};

/// Applies one config entry; throws ConfigError on unknown keys or bad
/// values. Recognized keys: input, out_dir, keywords, stoplist,
/// valence_lexicon, pattern_lexicon, rules, emoji_ranges, train_fraction,
/// dev_fraction, test_fraction, seed, positive_min, negative_max, band_lo,
/// band_hi, apply_band, engagement_direction, quiet.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

/// Flat key = value file with '#' comments.
void load_config_file(RunConfig& config, const std::filesystem::path& path);

/// Fail-fast validation: referenced files must exist, fractions must sum
/// to 1, thresholds and band must be ordered. No output is touched before
/// this passes.
void validate(const RunConfig& config, bool require_input);

/// "rpf" / "fpr" and back.
EngagementDirection parse_direction(const std::string& text);
std::string direction_label(EngagementDirection direction);

/// Comma-separated inclusive hex ranges, e.g. "1F300-1F5FF,2600-26FF".
EmojiRanges parse_emoji_ranges(const std::string& spec);

/// Materialized lexicons and lists, from files when configured, otherwise
/// the compiled-in defaults.
struct Resources {
    std::vector<std::string> keywords;
    std::unordered_set<std::string> stoplist;
    ValenceLexicon valence_lexicon;
    PatternLexicon pattern_lexicon;
    ValenceRules rules;
    EmojiRanges emoji_ranges;
};

Resources load_resources(const RunConfig& config);

}  // namespace vibesift
