#include "vibesift/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "vibesift/analytics.hpp"
#include "vibesift/csv.hpp"
#include "vibesift/errors.hpp"
#include "vibesift/log.hpp"
#include "vibesift/report.hpp"

namespace vibesift::pipeline {

namespace {

void ensure_out_dir(const RunConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) {
        throw IoError(config.out_dir.string(), "cannot create output directory: " + ec.message());
    }
}

std::filesystem::path out_path(const RunConfig& config, std::string_view name) {
    return config.out_dir / name;
}

void note(std::ostream* progress, const std::string& line) {
    if (progress != nullptr) {
        *progress << line << '\n';
    }
}

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError(path.string(), "cannot open for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError(path.string(), "write failed");
    }
}

void run_analyze(const RunConfig& config, std::ostream* progress, const StageCounts* counts) {
    const auto scored = load_scored_csv(out_path(config, "scored.csv"));

    std::vector<ScoredTweet> selected;
    if (config.apply_band) {
        selected = follower_band_filter(std::span<const ScoredTweet>(scored), config.band_lo,
                                        config.band_hi);
    } else {
        selected.assign(scored.begin(), scored.end());
    }

    // Correlations run first: nothing is written when data is insufficient.
    const HypothesisReport hyp_valence = hypothesis_test(selected, Scorer::Valence);
    const HypothesisReport hyp_pattern = hypothesis_test(selected, Scorer::Pattern);

    ensure_out_dir(config);

    // Bar charts cover the full scored corpus; the band only gates the
    // engagement analysis.
    const ClassCountSeries counts_valence = class_counts(scored, Scorer::Valence);
    const ClassCountSeries counts_pattern = class_counts(scored, Scorer::Pattern);
    emit_svg(counts_valence, out_path(config, "bar_valence.svg"),
             "tweet counts by sentiment class (valence)");
    emit_svg(counts_pattern, out_path(config, "bar_pattern.svg"),
             "tweet counts by sentiment class (pattern)");

    const SeriesBundle series_y = score_sentiment_series(selected, Orientation::SentimentY);
    const SeriesBundle series_x = score_sentiment_series(selected, Orientation::SentimentX);
    emit_series_csv(series_y, out_path(config, "series.csv"));
    emit_svg(series_y, out_path(config, "scatter_sentiment_y.svg"),
             "score vs sentiment (sentiment on y)");
    emit_svg(series_x, out_path(config, "scatter_sentiment_x.svg"),
             "score vs sentiment (sentiment on x)");

    RunSummaryInputs summary;
    if (counts != nullptr) {
        summary.ingested = counts->ingested;
        summary.flagged = counts->flagged;
    }
    summary.scored = scored.size();
    if (config.apply_band) {
        summary.band_filtered = selected.size();
    }
    summary.counts_valence = counts_valence;
    summary.counts_pattern = counts_pattern;
    summary.hypothesis_valence = hyp_valence;
    summary.hypothesis_pattern = hyp_pattern;
    summary.seed = config.seed;
    summary.engagement_direction_label = direction_label(config.direction);
    write_text_file(out_path(config, "report.txt"), run_summary(summary));

    note(progress, "analyze: " + std::to_string(selected.size()) + " tweets in scope, report.txt" +
                       ", series.csv, and 4 SVG charts written");
}

}  // namespace

StageCounts ingest(const RunConfig& config, const Resources& resources, std::ostream* progress) {
    const Corpus raw = load_csv(config.input);
    const Corpus flagged = flag_keywords(raw, resources.keywords);
    const Corpus kept = filter_flagged(flagged);
    ensure_out_dir(config);
    write_csv(kept, out_path(config, "corpus.csv"));
    StageCounts counts{raw.size(), kept.size(), kept.size()};
    note(progress, "ingest: " + std::to_string(counts.ingested) + " rows read, " +
                       std::to_string(counts.flagged) + " flagged, corpus.csv written");
    return counts;
}

std::size_t score(const RunConfig& config, const Resources& resources, std::ostream* progress) {
    const Corpus corpus = load_csv(out_path(config, "corpus.csv"));
    const auto scored =
        score_corpus(corpus, resources.valence_lexicon, resources.pattern_lexicon,
                     resources.rules, config.thresholds, config.direction,
                     resources.emoji_ranges);
    ensure_out_dir(config);
    write_scored_csv(scored, out_path(config, "scored.csv"));
    note(progress, "score: " + std::to_string(scored.size()) + " tweets scored, scored.csv written");
    return scored.size();
}

void split(const RunConfig& config, std::ostream* progress) {
    const csv::Table table = csv::read_file(out_path(config, "scored.csv"));
    SplitSpec spec = config.split;
    spec.seed = config.seed;
    const SplitIndices indices = split_indices(table.rows.size(), spec);
    ensure_out_dir(config);
    const auto write_part = [&](const std::vector<std::size_t>& idx, std::string_view name) {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(idx.size());
        for (const std::size_t i : idx) {
            rows.push_back(table.rows[i]);
        }
        csv::write_file(out_path(config, name), table.header, rows);
    };
    write_part(indices.train, "train.csv");
    write_part(indices.test, "test.csv");
    write_part(indices.dev, "dev.csv");
    note(progress, "split: train/test/dev = " + std::to_string(indices.train.size()) + "/" +
                       std::to_string(indices.test.size()) + "/" +
                       std::to_string(indices.dev.size()));
}

void analyze(const RunConfig& config, std::ostream* progress) {
    run_analyze(config, progress, nullptr);
}

void stats(const RunConfig& config, const Resources& resources, std::ostream* progress) {
    const auto scored = load_scored_csv(out_path(config, "scored.csv"));

    Corpus corpus;
    std::vector<SentimentClass> class_valence;
    std::vector<SentimentClass> class_pattern;
    std::vector<std::vector<std::string>> full_tokens;
    for (const ScoredTweet& s : scored) {
        corpus.tweets.push_back(s.tweet);
        class_valence.push_back(s.class_valence);
        class_pattern.push_back(s.class_pattern);
        full_tokens.push_back(
            normalize(s.tweet.text, Profile::Full, resources.emoji_ranges).tokens);
    }

    std::ostringstream out;
    out << "vibesift corpus statistics\n";
    out << "==========================\n";
    out << "tweets: " << scored.size() << "\n\n";

    const CorpusStats base = corpus_stats(corpus);
    out << "character length histogram (bucket width 20):\n";
    for (const auto& [bucket, count] : base.char_length_histogram) {
        out << "  [" << bucket << "," << bucket + 20 << "): " << count << "\n";
    }
    if (base.char_length_histogram.empty()) {
        out << "  (empty corpus)\n";
    }

    const auto class_section = [&](const char* label, std::span<const SentimentClass> classes) {
        const CorpusStats stats = corpus_stats(corpus, classes);
        out << "\ncharacter length by class (" << label << "):\n";
        for (const SentimentClass c : kAllClasses) {
            const auto it = stats.char_length_by_class.find(c);
            if (it == stats.char_length_by_class.end()) {
                out << "  " << to_string(c) << ": (no tweets)\n";
            } else {
                out << "  " << to_string(c) << ": n=" << it->second.count
                    << " mean=" << fixed(it->second.mean, 2)
                    << " median=" << fixed(it->second.median, 1) << "\n";
            }
        }
    };
    class_section("valence", class_valence);
    class_section("pattern", class_pattern);

    const auto stopword_section = [&](const char* label, std::span<const SentimentClass> classes) {
        bool all_present = true;
        for (const SentimentClass c : kAllClasses) {
            if (std::find(classes.begin(), classes.end(), c) == classes.end()) {
                log_warning("sentiment class \"" + std::string(to_string(c)) + "\" is empty (" +
                            label + "); stopword table covers present classes only");
                all_present = false;
            }
        }
        const StopwordProfile profile =
            stopword_profile(full_tokens, classes, resources.stoplist, all_present);
        out << "\nstopword divergence (" << label << "), top 25 by chi-square:\n";
        std::vector<std::pair<std::string, double>> ordered(profile.divergence.begin(),
                                                            profile.divergence.end());
        std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) {
                return a.second > b.second;
            }
            return a.first < b.first;
        });
        if (ordered.empty()) {
            out << "  (no stopwords observed)\n";
            return;
        }
        const std::size_t limit = std::min<std::size_t>(ordered.size(), 25);
        for (std::size_t i = 0; i < limit; ++i) {
            out << "  " << ordered[i].first << ": chi2=" << fixed(ordered[i].second, 4);
            for (const SentimentClass c : kAllClasses) {
                const auto cls_it = profile.class_frequencies.find(c);
                double freq = 0.0;
                if (cls_it != profile.class_frequencies.end()) {
                    const auto word_it = cls_it->second.find(ordered[i].first);
                    if (word_it != cls_it->second.end()) {
                        freq = word_it->second;
                    }
                }
                out << " " << to_string(c) << "=" << fixed(freq, 4);
            }
            out << "\n";
        }
    };
    stopword_section("valence", class_valence);
    stopword_section("pattern", class_pattern);

    ensure_out_dir(config);
    write_text_file(out_path(config, "stats.txt"), out.str());
    note(progress, "stats: stats.txt written");
}

void all(const RunConfig& config, const Resources& resources, std::ostream* progress) {
    const StageCounts counts = ingest(config, resources, progress);
    score(config, resources, progress);
    split(config, progress);
    run_analyze(config, progress, &counts);
    stats(config, resources, progress);
}

}  // namespace vibesift::pipeline
