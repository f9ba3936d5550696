#pragma once

#include <cstddef>
#include <iosfwd>

#include "vibesift/config.hpp"

namespace vibesift::pipeline {

/// Row counts reported by each stage.
struct StageCounts {
    std::size_t ingested = 0;
    std::size_t flagged = 0;
    std::size_t written = 0;
};

/// Loads the input CSV, flags and filters by keyword, writes corpus.csv.
StageCounts ingest(const RunConfig& config, const Resources& resources,
                   std::ostream* progress = nullptr);

/// Scores corpus.csv with both scorers, writes scored.csv.
std::size_t score(const RunConfig& config, const Resources& resources,
                  std::ostream* progress = nullptr);

/// Splits scored.csv into train.csv, test.csv, dev.csv.
void split(const RunConfig& config, std::ostream* progress = nullptr);

/// Band-filters, runs the hypothesis test for both scorers, writes
/// report.txt, series.csv, and the four SVG charts. Throws
/// TooFewPointsError when fewer than 3 usable points remain.
void analyze(const RunConfig& config, std::ostream* progress = nullptr);

/// Writes stats.txt: character-length distributions and the stopword
/// divergence tables.
void stats(const RunConfig& config, const Resources& resources,
           std::ostream* progress = nullptr);

/// Runs ingest, score, split, analyze, stats in order.
void all(const RunConfig& config, const Resources& resources,
         std::ostream* progress = nullptr);

}  // namespace vibesift::pipeline
