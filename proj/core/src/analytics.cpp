#include "vibesift/analytics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "vibesift/csv.hpp"
#include "vibesift/errors.hpp"
#include "vibesift/log.hpp"

namespace vibesift {

namespace {

constexpr std::array<std::string_view, 11> kScoreColumns = {
    "valence_compound", "valence_neg",  "valence_neu",  "valence_pos",
    "pattern_polarity", "pattern_subjectivity", "rank_valence", "rank_pattern",
    "class_valence",    "class_pattern", "engagement"};

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

double parse_double_cell(std::string_view cell, std::size_t line, std::string_view column) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw MalformedRowError(line, std::string(column) + " is not a number: \"" +
                                          std::string(cell) + "\"");
    }
    return value;
}

SentimentClass parse_class_cell(std::string_view cell, std::size_t line) {
    for (const SentimentClass c : kAllClasses) {
        if (cell == to_string(c)) {
            return c;
        }
    }
    throw MalformedRowError(line, "unknown sentiment class: \"" + std::string(cell) + "\"");
}

// Average ranks (1-based); ties share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = shared;
        }
        i = j + 1;
    }
    return ranks;
}

std::string_view magnitude_bucket(double rho) {
    const double m = std::fabs(rho);
    if (m < 0.1) {
        return "negligible";
    }
    if (m < 0.3) {
        return "weak";
    }
    if (m < 0.5) {
        return "moderate";
    }
    return "strong";
}

}  // namespace

void ClassThresholds::validate() const {
    if (!(negative_max < positive_min)) {
        throw ConfigError("negative_max must be below positive_min");
    }
}

double to_rank(double score) {
    if (score < -1.0 || score > 1.0) {
        log_warning("rank input outside [-1,1], clamping: " + fixed(score, 6));
        score = std::clamp(score, -1.0, 1.0);
    }
    return score * 10.0;
}

SentimentClass classify(double value, const ClassThresholds& thresholds) {
    if (value >= thresholds.positive_min) {
        return SentimentClass::Positive;
    }
    if (value <= thresholds.negative_max) {
        return SentimentClass::Negative;
    }
    return SentimentClass::Neutral;
}

std::optional<double> engagement(const RawTweet& tweet, EngagementDirection direction) {
    if (direction == EngagementDirection::RetweetsPerFollower) {
        if (!tweet.follower_count || *tweet.follower_count <= 0) {
            return std::nullopt;
        }
        return static_cast<double>(tweet.retweet_count) /
               static_cast<double>(*tweet.follower_count);
    }
    if (tweet.retweet_count <= 0 || !tweet.follower_count) {
        return std::nullopt;
    }
    return static_cast<double>(*tweet.follower_count) / static_cast<double>(tweet.retweet_count);
}

Corpus follower_band_filter(const Corpus& corpus, std::int64_t lo, std::int64_t hi) {
    Corpus kept;
    kept.source_label = corpus.source_label;
    for (const RawTweet& tweet : corpus.tweets) {
        if (tweet.follower_count && *tweet.follower_count >= lo && *tweet.follower_count <= hi) {
            kept.tweets.push_back(tweet);
        }
    }
    return kept;
}

std::vector<ScoredTweet> follower_band_filter(std::span<const ScoredTweet> scored,
                                              std::int64_t lo, std::int64_t hi) {
    std::vector<ScoredTweet> kept;
    for (const ScoredTweet& s : scored) {
        if (s.tweet.follower_count && *s.tweet.follower_count >= lo &&
            *s.tweet.follower_count <= hi) {
            kept.push_back(s);
        }
    }
    return kept;
}

std::vector<ScoredTweet> score_corpus(const Corpus& corpus, const ValenceLexicon& valence_lexicon,
                                      const PatternLexicon& pattern_lexicon,
                                      const ValenceRules& rules, const ClassThresholds& thresholds,
                                      EngagementDirection direction, const EmojiRanges& ranges) {
    thresholds.validate();
    std::vector<ScoredTweet> out;
    out.reserve(corpus.size());
    for (const RawTweet& tweet : corpus.tweets) {
        ScoredTweet s;
        s.tweet = tweet;
        const std::string stripped = strip_emoji(tweet.text, ranges);
        s.valence = score(stripped, valence_lexicon, rules);
        const CleanTweet full = normalize(stripped, Profile::Full, ranges);
        s.pattern = score(full.tokens, pattern_lexicon);
        s.rank_valence = to_rank(s.valence.compound);
        s.rank_pattern = to_rank(s.pattern.polarity);
        s.class_valence = classify(s.valence.compound, thresholds);
        s.class_pattern = classify(s.pattern.polarity, thresholds);
        s.engagement = engagement(tweet, direction);
        out.push_back(std::move(s));
    }
    return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = std::min(x.size(), y.size());
    if (n == 0) {
        return 0.0;
    }
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        return 0.0;  // degenerate: no variation
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);
    return pearson(rx, ry);
}

HypothesisReport hypothesis_test(std::span<const ScoredTweet> scored, Scorer scorer,
                                 std::size_t min_points) {
    std::vector<double> engagements;
    std::vector<double> extremities;
    std::map<SentimentClass, std::pair<double, std::size_t>> class_engagement;
    for (const ScoredTweet& s : scored) {
        if (!s.engagement) {
            continue;
        }
        engagements.push_back(*s.engagement);
        extremities.push_back(std::fabs(s.rank_for(scorer)));
        auto& [sum, count] = class_engagement[s.class_for(scorer)];
        sum += *s.engagement;
        ++count;
    }
    if (engagements.size() < min_points) {
        throw TooFewPointsError(engagements.size());
    }
    HypothesisReport report;
    report.n = engagements.size();
    report.spearman_rho = spearman(engagements, extremities);
    report.pearson_r = pearson(engagements, extremities);
    for (const auto& [cls, acc] : class_engagement) {
        report.class_mean_engagement[cls] = acc.first / static_cast<double>(acc.second);
    }
    char buf[192];
    std::snprintf(buf, sizeof(buf),
                  "%s %s association between engagement and sentiment extremity "
                  "(spearman rho = %.3f, pearson r = %.3f, n = %zu)",
                  std::string(magnitude_bucket(report.spearman_rho)).c_str(),
                  report.spearman_rho >= 0.0 ? "positive" : "negative", report.spearman_rho,
                  report.pearson_r, report.n);
    report.verdict_text = buf;
    return report;
}

void write_scored_csv(std::span<const ScoredTweet> scored, const std::filesystem::path& path) {
    std::vector<std::string> header;
    for (const auto column : kCanonicalColumns) {
        header.emplace_back(column);
    }
    for (const auto column : kScoreColumns) {
        header.emplace_back(column);
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(scored.size());
    for (const ScoredTweet& s : scored) {
        const RawTweet& t = s.tweet;
        char sentiment_buf[32];
        std::string sentiment_cell;
        if (t.sentiment) {
            const auto [ptr, ec] =
                std::to_chars(sentiment_buf, sentiment_buf + sizeof(sentiment_buf), *t.sentiment);
            sentiment_cell.assign(sentiment_buf, ptr);
        }
        rows.push_back({
            t.id,
            t.keyword.value_or(""),
            t.text,
            t.like_count ? std::to_string(*t.like_count) : "",
            t.reply_count ? std::to_string(*t.reply_count) : "",
            std::to_string(t.retweet_count),
            t.retweeted ? (*t.retweeted ? "true" : "false") : "",
            t.follower_count ? std::to_string(*t.follower_count) : "",
            sentiment_cell,
            fixed(s.valence.compound, 4),
            fixed(s.valence.neg, 3),
            fixed(s.valence.neu, 3),
            fixed(s.valence.pos, 3),
            fixed(s.pattern.polarity, 6),
            fixed(s.pattern.subjectivity, 6),
            fixed(s.rank_valence, 4),
            fixed(s.rank_pattern, 4),
            std::string(to_string(s.class_valence)),
            std::string(to_string(s.class_pattern)),
            s.engagement ? fixed(*s.engagement, 6) : "",
        });
    }
    csv::write_file(path, header, rows);
}

std::vector<ScoredTweet> load_scored_csv(const std::filesystem::path& path) {
    std::vector<std::string> required;
    for (const auto column : kCanonicalColumns) {
        required.emplace_back(column);
    }
    for (const auto column : kScoreColumns) {
        required.emplace_back(column);
    }
    const csv::Table table = csv::read_file(path);
    std::map<std::string_view, std::size_t> index;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        index.emplace(table.header[i], i);
    }
    for (const auto& column : required) {
        if (!index.contains(column)) {
            throw MissingColumnError(column);
        }
    }
    const Corpus base = load_csv(path, required);
    std::vector<ScoredTweet> out;
    out.reserve(base.size());
    const auto cell = [&](std::size_t row, std::string_view column) -> const std::string& {
        return table.rows[row][index.at(column)];
    };
    for (std::size_t r = 0; r < base.size(); ++r) {
        const std::size_t line = table.row_lines[r];
        ScoredTweet s;
        s.tweet = base.tweets[r];
        s.valence.compound = parse_double_cell(cell(r, "valence_compound"), line, "valence_compound");
        s.valence.neg = parse_double_cell(cell(r, "valence_neg"), line, "valence_neg");
        s.valence.neu = parse_double_cell(cell(r, "valence_neu"), line, "valence_neu");
        s.valence.pos = parse_double_cell(cell(r, "valence_pos"), line, "valence_pos");
        s.pattern.polarity = parse_double_cell(cell(r, "pattern_polarity"), line, "pattern_polarity");
        s.pattern.subjectivity =
            parse_double_cell(cell(r, "pattern_subjectivity"), line, "pattern_subjectivity");
        s.rank_valence = parse_double_cell(cell(r, "rank_valence"), line, "rank_valence");
        s.rank_pattern = parse_double_cell(cell(r, "rank_pattern"), line, "rank_pattern");
        s.class_valence = parse_class_cell(cell(r, "class_valence"), line);
        s.class_pattern = parse_class_cell(cell(r, "class_pattern"), line);
        const std::string& eng = cell(r, "engagement");
        if (!eng.empty()) {
            s.engagement = parse_double_cell(eng, line, "engagement");
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace vibesift
