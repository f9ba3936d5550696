#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vibesift/sentiment_class.hpp"

namespace vibesift {

/// One ingested tweet with engagement metadata.
struct RawTweet {
    std::string id;
    std::string text;
    std::optional<std::string> keyword;
    std::optional<std::int64_t> like_count;
    std::optional<std::int64_t> reply_count;
    std::int64_t retweet_count = 0;
    std::optional<bool> retweeted;
    std::optional<std::int64_t> follower_count;
    /// Reference sentiment from the source file, passed through unchanged.
    std::optional<double> sentiment;

    bool operator==(const RawTweet&) const = default;
};

/// Ordered tweet collection; iteration order equals ingestion order.
struct Corpus {
    std::vector<RawTweet> tweets;
    std::string source_label;

    std::size_t size() const { return tweets.size(); }
    bool empty() const { return tweets.empty(); }
};

/// Canonical CSV column order. `sentiment` is optional on input.
inline constexpr std::array<std::string_view, 9> kCanonicalColumns = {
    "id",        "keyword",   "tweet",          "like_count",    "reply_count",
    "retweet_count", "retweeted", "follower_count", "sentiment"};

/// Train/dev/test fractions plus the shuffle seed.
struct SplitSpec {
    double train_fraction = 0.8;
    double dev_fraction = 0.1;
    double test_fraction = 0.1;
    std::uint64_t seed = 42;

    /// Throws ConfigError unless every fraction is in (0,1) and they sum to 1.
    void validate() const;
};

struct SplitResult {
    Corpus train;
    Corpus dev;
    Corpus test;
};

/// Index partition produced by the seeded shuffle, reusable on any
/// row-aligned collection.
struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> dev;
    std::vector<std::size_t> test;
};

struct ClassLengthStats {
    double mean = 0.0;
    double median = 0.0;
    std::size_t count = 0;
};

/// Corpus-level descriptive statistics over tweet text lengths.
struct CorpusStats {
    std::size_t tweet_count = 0;
    /// Bucket lower bound (width 20 codepoints) -> tweet count.
    std::map<std::size_t, std::size_t> char_length_histogram;
    /// Present only when sentiment classes were supplied.
    std::map<SentimentClass, ClassLengthStats> char_length_by_class;
};

/// Loads a corpus from a UTF-8, RFC-4180 CSV file. `required_columns` must
/// all appear in the header (any order); unknown columns are ignored. When
/// no id column exists, ids are synthesized as "<source_label>:<row-index>"
/// with 0-based data-row indices. Empty cells and literal "NaN" become
/// absent optionals.
///
/// Throws MissingColumnError, MalformedRowError, DuplicateIdError, IoError.
Corpus load_csv(const std::filesystem::path& path,
                std::span<const std::string> required_columns);
Corpus load_csv(const std::filesystem::path& path);

/// Writes the canonical 9 columns. Absent optionals become empty cells.
/// load_csv(write_csv(c)) reproduces the tweets field-for-field (the
/// source_label is derived from the file name, not round-tripped).
void write_csv(const Corpus& corpus, const std::filesystem::path& path);

/// Marks each tweet with the first keyword (in list order) whose token
/// sequence occurs in the tweet's normalized tokens; clears the field on
/// tweets with no match. Matching is case-insensitive on whole tokens.
Corpus flag_keywords(const Corpus& corpus, std::span<const std::string> keywords);

/// Keeps exactly the tweets with a keyword present, in original order.
Corpus filter_flagged(const Corpus& corpus);

/// Seeded Fisher-Yates shuffle, then contiguous slices of sizes
/// floor(n*train), floor(n*dev), remainder. Deterministic for a fixed seed
/// across platforms. Throws CorpusTooSmallError when n < 3.
SplitIndices split_indices(std::size_t n, const SplitSpec& spec);
SplitResult split(const Corpus& corpus, const SplitSpec& spec);

/// Histogram over codepoint counts of tweet text; per-class mean/median is
/// filled only when `classes` (row-aligned with the corpus) is non-empty.
CorpusStats corpus_stats(const Corpus& corpus, std::span<const SentimentClass> classes = {});

}  // namespace vibesift
