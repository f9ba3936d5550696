#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vibesift/corpus.hpp"
#include "vibesift/pattern.hpp"
#include "vibesift/preprocess.hpp"
#include "vibesift/sentiment_class.hpp"
#include "vibesift/valence.hpp"

namespace vibesift {

/// How interactions are normalized by audience size. RETWEETS_PER_FOLLOWER
/// captures the normalization intent; FOLLOWERS_PER_RETWEET is the literal
/// reciprocal.
enum class EngagementDirection { RetweetsPerFollower, FollowersPerRetweet };

/// Cutoffs binning a score into NEGATIVE / NEUTRAL / POSITIVE.
struct ClassThresholds {
    double positive_min = 0.05;
    double negative_max = -0.05;

    void validate() const;
};

/// A tweet joined with both scores, ranks, classes, and engagement.
struct ScoredTweet {
    RawTweet tweet;
    ValenceScore valence;
    PolarityScore pattern;
    double rank_valence = 0.0;  // 10 x compound
    double rank_pattern = 0.0;  // 10 x polarity
    SentimentClass class_valence = SentimentClass::Neutral;
    SentimentClass class_pattern = SentimentClass::Neutral;
    std::optional<double> engagement;

    double rank_for(Scorer s) const { return s == Scorer::Valence ? rank_valence : rank_pattern; }
    SentimentClass class_for(Scorer s) const {
        return s == Scorer::Valence ? class_valence : class_pattern;
    }
};

/// Correlation between engagement and sentiment extremity.
struct HypothesisReport {
    double spearman_rho = 0.0;
    double pearson_r = 0.0;
    std::size_t n = 0;
    std::map<SentimentClass, double> class_mean_engagement;
    std::string verdict_text;
};

/// Linear map onto the -10..10 scale; inputs outside [-1,1] are clamped
/// with a warning.
double to_rank(double score);

SentimentClass classify(double value, const ClassThresholds& thresholds = {});

/// Absent when the needed denominator is zero or a field is missing.
std::optional<double> engagement(const RawTweet& tweet, EngagementDirection direction);

/// Keeps tweets whose follower_count lies in [lo, hi], both ends inclusive.
Corpus follower_band_filter(const Corpus& corpus, std::int64_t lo = 400, std::int64_t hi = 500);
std::vector<ScoredTweet> follower_band_filter(std::span<const ScoredTweet> scored,
                                              std::int64_t lo = 400, std::int64_t hi = 500);

/// Runs both scorers over every tweet: MINIMAL profile feeds the valence
/// scorer, FULL feeds the pattern scorer.
std::vector<ScoredTweet> score_corpus(const Corpus& corpus, const ValenceLexicon& valence_lexicon,
                                      const PatternLexicon& pattern_lexicon,
                                      const ValenceRules& rules = {},
                                      const ClassThresholds& thresholds = {},
                                      EngagementDirection direction =
                                          EngagementDirection::RetweetsPerFollower,
                                      const EmojiRanges& ranges = default_emoji_ranges());

/// Spearman rank correlation with average-rank ties and Pearson correlation
/// between engagement and |rank| for the chosen scorer, over tweets with
/// engagement present. Throws TooFewPointsError below `min_points`.
HypothesisReport hypothesis_test(std::span<const ScoredTweet> scored, Scorer scorer,
                                 std::size_t min_points = 3);

/// Zero-variance inputs yield 0 by convention.
double pearson(std::span<const double> x, std::span<const double> y);
double spearman(std::span<const double> x, std::span<const double> y);

/// scored.csv: the canonical columns plus both scores, ranks, classes, and
/// engagement. Score fields are display-rounded (compound 4 decimals,
/// ratios 3, the rest 6).
void write_scored_csv(std::span<const ScoredTweet> scored, const std::filesystem::path& path);
std::vector<ScoredTweet> load_scored_csv(const std::filesystem::path& path);

}  // namespace vibesift
