#include "vibesift/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "vibesift/csv.hpp"
#include "vibesift/errors.hpp"
#include "vibesift/preprocess.hpp"
#include "vibesift/unicode.hpp"

namespace vibesift {

namespace {

bool is_absent_cell(std::string_view cell) {
    return cell.empty() || cell == "NaN" || cell == "nan" || cell == "NAN";
}

// Counts may appear as "606" or, mirroring pandas exports, "606.0".
std::optional<std::int64_t> parse_count(std::string_view cell, std::size_t line,
                                        std::string_view column) {
    if (is_absent_cell(cell)) {
        return std::nullopt;
    }
    std::string_view digits = cell;
    const auto dot = cell.find('.');
    if (dot != std::string_view::npos) {
        const auto frac = cell.substr(dot + 1);
        if (frac.find_first_not_of('0') != std::string_view::npos) {
            throw MalformedRowError(line, std::string(column) + " is not an integer: \"" +
                                              std::string(cell) + "\"");
        }
        digits = cell.substr(0, dot);
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw MalformedRowError(line, std::string(column) + " is not a valid count: \"" +
                                          std::string(cell) + "\"");
    }
    if (value < 0) {
        throw MalformedRowError(line, std::string(column) + " is negative: " + std::string(cell));
    }
    return value;
}

std::optional<bool> parse_flag(std::string_view cell, std::size_t line, std::string_view column) {
    if (is_absent_cell(cell)) {
        return std::nullopt;
    }
    std::string lower(cell);
    for (char& c : lower) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (lower == "true" || lower == "1") {
        return true;
    }
    if (lower == "false" || lower == "0") {
        return false;
    }
    throw MalformedRowError(line, std::string(column) + " is not a boolean: \"" +
                                      std::string(cell) + "\"");
}

std::optional<double> parse_real(std::string_view cell, std::size_t line,
                                 std::string_view column) {
    if (is_absent_cell(cell)) {
        return std::nullopt;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw MalformedRowError(line, std::string(column) + " is not a number: \"" +
                                          std::string(cell) + "\"");
    }
    return value;
}

std::string format_count(const std::optional<std::int64_t>& value) {
    return value ? std::to_string(*value) : std::string();
}

std::string format_real(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

// Keyword tokens must appear as a consecutive run in the tweet's tokens.
bool contains_sequence(std::span<const std::string> haystack,
                       std::span<const std::string> needle) {
    if (needle.empty() || haystack.size() < needle.size()) {
        return false;
    }
    for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        bool hit = true;
        for (std::size_t k = 0; k < needle.size(); ++k) {
            if (haystack[i + k] != needle[k]) {
                hit = false;
                break;
            }
        }
        if (hit) {
            return true;
        }
    }
    return false;
}

// Deterministic across platforms: mt19937_64 is fully specified, unlike
// std::shuffle / uniform_int_distribution.
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

}  // namespace

void SplitSpec::validate() const {
    const auto in_unit = [](double f) { return f > 0.0 && f < 1.0; };
    if (!in_unit(train_fraction) || !in_unit(dev_fraction) || !in_unit(test_fraction)) {
        throw ConfigError("split fractions must lie in (0,1)");
    }
    const double sum = train_fraction + dev_fraction + test_fraction;
    if (std::fabs(sum - 1.0) > 1e-9) {
        throw ConfigError("split fractions must sum to 1, got " + format_real(sum));
    }
}

Corpus load_csv(const std::filesystem::path& path,
                std::span<const std::string> required_columns) {
    const csv::Table table = csv::read_file(path);

    std::unordered_map<std::string_view, std::size_t> column_index;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        column_index.emplace(table.header[i], i);
    }
    for (const auto& column : required_columns) {
        if (!column_index.contains(column)) {
            throw MissingColumnError(column);
        }
    }
    const auto find = [&](std::string_view name) -> std::optional<std::size_t> {
        const auto it = column_index.find(name);
        if (it == column_index.end()) {
            return std::nullopt;
        }
        return it->second;
    };
    const auto col_id = find("id");
    const auto col_keyword = find("keyword");
    const auto col_text = find("tweet");
    const auto col_like = find("like_count");
    const auto col_reply = find("reply_count");
    const auto col_retweet = find("retweet_count");
    const auto col_retweeted = find("retweeted");
    const auto col_follower = find("follower_count");
    const auto col_sentiment = find("sentiment");
    if (!col_text) {
        throw MissingColumnError("tweet");
    }

    Corpus corpus;
    corpus.source_label = path.stem().string();
    corpus.tweets.reserve(table.rows.size());
    std::unordered_set<std::string> seen_ids;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t line = table.row_lines[r];
        for (const auto& cell : row) {
            if (!unicode::is_valid_utf8(cell)) {
                throw MalformedRowError(line, "invalid UTF-8 byte sequence");
            }
        }
        RawTweet tweet;
        tweet.id = col_id && !row[*col_id].empty()
                       ? row[*col_id]
                       : corpus.source_label + ":" + std::to_string(r);
        tweet.text = row[*col_text];
        if (col_keyword && !is_absent_cell(row[*col_keyword])) {
            tweet.keyword = row[*col_keyword];
        }
        if (col_like) {
            tweet.like_count = parse_count(row[*col_like], line, "like_count");
        }
        if (col_reply) {
            tweet.reply_count = parse_count(row[*col_reply], line, "reply_count");
        }
        if (col_retweet) {
            tweet.retweet_count = parse_count(row[*col_retweet], line, "retweet_count").value_or(0);
        }
        if (col_retweeted) {
            tweet.retweeted = parse_flag(row[*col_retweeted], line, "retweeted");
        }
        if (col_follower) {
            tweet.follower_count = parse_count(row[*col_follower], line, "follower_count");
        }
        if (col_sentiment) {
            tweet.sentiment = parse_real(row[*col_sentiment], line, "sentiment");
        }
        if (!seen_ids.insert(tweet.id).second) {
            throw DuplicateIdError(tweet.id);
        }
        corpus.tweets.push_back(std::move(tweet));
    }
    return corpus;
}

Corpus load_csv(const std::filesystem::path& path) {
    const std::vector<std::string> required = {"tweet"};
    return load_csv(path, required);
}

void write_csv(const Corpus& corpus, const std::filesystem::path& path) {
    std::vector<std::string> header;
    header.reserve(kCanonicalColumns.size());
    for (const auto column : kCanonicalColumns) {
        header.emplace_back(column);
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(corpus.size());
    for (const RawTweet& t : corpus.tweets) {
        rows.push_back({
            t.id,
            t.keyword.value_or(""),
            t.text,
            format_count(t.like_count),
            format_count(t.reply_count),
            std::to_string(t.retweet_count),
            t.retweeted ? (*t.retweeted ? "true" : "false") : "",
            format_count(t.follower_count),
            t.sentiment ? format_real(*t.sentiment) : "",
        });
    }
    csv::write_file(path, header, rows);
}

Corpus flag_keywords(const Corpus& corpus, std::span<const std::string> keywords) {
    if (keywords.empty()) {
        throw ConfigError("keyword list must not be empty");
    }
    std::vector<std::vector<std::string>> keyword_tokens;
    keyword_tokens.reserve(keywords.size());
    for (const auto& keyword : keywords) {
        keyword_tokens.push_back(normalize(keyword, Profile::Full).tokens);
    }
    Corpus flagged = corpus;
    for (RawTweet& tweet : flagged.tweets) {
        tweet.keyword.reset();
        const auto tokens = normalize(tweet.text, Profile::Full).tokens;
        for (std::size_t k = 0; k < keywords.size(); ++k) {
            if (contains_sequence(tokens, keyword_tokens[k])) {
                tweet.keyword = keywords[k];
                break;
            }
        }
    }
    return flagged;
}

Corpus filter_flagged(const Corpus& corpus) {
    Corpus kept;
    kept.source_label = corpus.source_label;
    for (const RawTweet& tweet : corpus.tweets) {
        if (tweet.keyword) {
            kept.tweets.push_back(tweet);
        }
    }
    return kept;
}

SplitIndices split_indices(std::size_t n, const SplitSpec& spec) {
    spec.validate();
    if (n < 3) {
        throw CorpusTooSmallError(n);
    }
    const auto perm = shuffled_indices(n, spec.seed);
    const auto n_train =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.train_fraction));
    const auto n_dev =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * spec.dev_fraction));
    SplitIndices out;
    out.train.assign(perm.begin(), perm.begin() + n_train);
    out.dev.assign(perm.begin() + n_train, perm.begin() + n_train + n_dev);
    out.test.assign(perm.begin() + n_train + n_dev, perm.end());
    return out;
}

SplitResult split(const Corpus& corpus, const SplitSpec& spec) {
    const SplitIndices indices = split_indices(corpus.size(), spec);
    const auto take = [&](const std::vector<std::size_t>& idx, std::string_view label) {
        Corpus part;
        part.source_label = std::string(label);
        part.tweets.reserve(idx.size());
        for (const std::size_t i : idx) {
            part.tweets.push_back(corpus.tweets[i]);
        }
        return part;
    };
    return SplitResult{take(indices.train, "train"), take(indices.dev, "dev"),
                       take(indices.test, "test")};
}

CorpusStats corpus_stats(const Corpus& corpus, std::span<const SentimentClass> classes) {
    CorpusStats stats;
    stats.tweet_count = corpus.size();
    std::vector<std::size_t> lengths;
    lengths.reserve(corpus.size());
    for (const RawTweet& tweet : corpus.tweets) {
        const std::size_t len = unicode::length(tweet.text);
        lengths.push_back(len);
        ++stats.char_length_histogram[(len / 20) * 20];
    }
    if (!classes.empty() && classes.size() == corpus.size()) {
        std::map<SentimentClass, std::vector<std::size_t>> by_class;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            by_class[classes[i]].push_back(lengths[i]);
        }
        for (auto& [cls, values] : by_class) {
            std::sort(values.begin(), values.end());
            double sum = 0.0;
            for (const std::size_t v : values) {
                sum += static_cast<double>(v);
            }
            const std::size_t mid = values.size() / 2;
            const double median =
                values.size() % 2 == 1
                    ? static_cast<double>(values[mid])
                    : (static_cast<double>(values[mid - 1]) + static_cast<double>(values[mid])) / 2.0;
            stats.char_length_by_class[cls] =
                ClassLengthStats{sum / static_cast<double>(values.size()), median, values.size()};
        }
    }
    return stats;
}

}  // namespace vibesift
