#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vibesift/analytics.hpp"
#include "vibesift/sentiment_class.hpp"

namespace vibesift {

/// Bar-chart data: tweets per sentiment class for one scorer.
struct ClassCountSeries {
    std::map<SentimentClass, std::size_t> counts;
    std::size_t total = 0;
};

/// Scatter axis layout: sentiment on the y-axis or on the x-axis.
enum class Orientation { SentimentY, SentimentX };

struct ScorePoint {
    double score = 0.0;      // engagement measure
    double sentiment = 0.0;  // rank units, -10..10
    Scorer scorer = Scorer::Valence;
};

struct ScoreSentimentSeries {
    std::vector<ScorePoint> points;
    Orientation orientation = Orientation::SentimentY;
};

/// Both scorers' series over the identical tweet subset (tweets lacking
/// engagement are skipped from both and counted).
struct SeriesBundle {
    ScoreSentimentSeries valence;
    ScoreSentimentSeries pattern;
    std::size_t skipped = 0;
};

ClassCountSeries class_counts(std::span<const ScoredTweet> scored, Scorer scorer);

SeriesBundle score_sentiment_series(std::span<const ScoredTweet> scored,
                                    Orientation orientation);

/// CSV with header score,sentiment,scorer; rows from both series sorted by
/// (score, scorer, sentiment) for reproducible diffs.
void emit_series_csv(const SeriesBundle& bundle, const std::filesystem::path& path);

struct SvgStyle {
    int width = 800;
    int height = 600;
    std::string valence_color = "darkorange";
    std::string pattern_color = "steelblue";
};

/// Standalone SVG 1.1 documents with no external references. Bar chart for
/// class counts, two-color scatter for the score/sentiment series.
void emit_svg(const ClassCountSeries& counts, const std::filesystem::path& path,
              const std::string& title, const SvgStyle& style = {});
void emit_svg(const SeriesBundle& bundle, const std::filesystem::path& path,
              const std::string& title, const SvgStyle& style = {});

/// Everything the textual run summary reports. Ingest-stage counts are
/// absent when analyze runs standalone on an existing scored.csv.
struct RunSummaryInputs {
    std::optional<std::size_t> ingested;
    std::optional<std::size_t> flagged;
    std::size_t scored = 0;
    std::optional<std::size_t> band_filtered;  // absent when the band was off
    ClassCountSeries counts_valence;
    ClassCountSeries counts_pattern;
    std::optional<HypothesisReport> hypothesis_valence;
    std::optional<HypothesisReport> hypothesis_pattern;
    std::uint64_t seed = 42;
    std::string engagement_direction_label = "retweets_per_follower";
};

/// Deterministic human-readable summary; ends with a conclusion sentence
/// derived from the per-class mean engagement ordering when correlation
/// data exists.
std::string run_summary(const RunSummaryInputs& inputs);

}  // namespace vibesift
