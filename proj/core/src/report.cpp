#include "vibesift/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vibesift/csv.hpp"
#include "vibesift/errors.hpp"

namespace vibesift {

namespace {

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            case '\'':
                out += "&apos;";
                break;
            default:
                out.push_back(c);
        }
    }
    return out;
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

struct Frame {
    double margin_left = 70.0;
    double margin_right = 30.0;
    double margin_top = 50.0;
    double margin_bottom = 60.0;
    double width;
    double height;

    double plot_w() const { return width - margin_left - margin_right; }
    double plot_h() const { return height - margin_top - margin_bottom; }
};

void open_svg(std::ostringstream& svg, const SvgStyle& style, const std::string& title) {
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width
        << "\" height=\"" << style.height << "\" viewBox=\"0 0 " << style.width << " "
        << style.height << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
        << "\" fill=\"white\"/>\n";
    svg << "  <text x=\"" << style.width / 2
        << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
        << xml_escape(title) << "</text>\n";
}

void axis_lines(std::ostringstream& svg, const Frame& f) {
    svg << "  <line x1=\"" << fixed(f.margin_left, 1) << "\" y1=\"" << fixed(f.margin_top, 1)
        << "\" x2=\"" << fixed(f.margin_left, 1) << "\" y2=\""
        << fixed(f.margin_top + f.plot_h(), 1) << "\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"" << fixed(f.margin_left, 1) << "\" y1=\""
        << fixed(f.margin_top + f.plot_h(), 1) << "\" x2=\"" << fixed(f.margin_left + f.plot_w(), 1)
        << "\" y2=\"" << fixed(f.margin_top + f.plot_h(), 1) << "\" stroke=\"black\"/>\n";
}

void no_data_text(std::ostringstream& svg, const SvgStyle& style) {
    svg << "  <text x=\"" << style.width / 2 << "\" y=\"" << style.height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "fill=\"gray\">no data</text>\n";
}

}  // namespace

ClassCountSeries class_counts(std::span<const ScoredTweet> scored, Scorer scorer) {
    ClassCountSeries series;
    for (const SentimentClass c : kAllClasses) {
        series.counts[c] = 0;
    }
    for (const ScoredTweet& s : scored) {
        ++series.counts[s.class_for(scorer)];
    }
    series.total = scored.size();
    return series;
}

SeriesBundle score_sentiment_series(std::span<const ScoredTweet> scored,
                                    Orientation orientation) {
    SeriesBundle bundle;
    bundle.valence.orientation = orientation;
    bundle.pattern.orientation = orientation;
    for (const ScoredTweet& s : scored) {
        if (!s.engagement) {
            ++bundle.skipped;
            continue;
        }
        bundle.valence.points.push_back({*s.engagement, s.rank_valence, Scorer::Valence});
        bundle.pattern.points.push_back({*s.engagement, s.rank_pattern, Scorer::Pattern});
    }
    return bundle;
}

void emit_series_csv(const SeriesBundle& bundle, const std::filesystem::path& path) {
    std::vector<ScorePoint> points;
    points.reserve(bundle.valence.points.size() + bundle.pattern.points.size());
    points.insert(points.end(), bundle.valence.points.begin(), bundle.valence.points.end());
    points.insert(points.end(), bundle.pattern.points.begin(), bundle.pattern.points.end());
    std::sort(points.begin(), points.end(), [](const ScorePoint& a, const ScorePoint& b) {
        if (a.score != b.score) {
            return a.score < b.score;
        }
        if (a.scorer != b.scorer) {
            return to_string(a.scorer) < to_string(b.scorer);
        }
        return a.sentiment < b.sentiment;
    });
    const std::vector<std::string> header = {"score", "sentiment", "scorer"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(points.size());
    for (const ScorePoint& p : points) {
        rows.push_back({fixed(p.score, 6), fixed(p.sentiment, 4), std::string(to_string(p.scorer))});
    }
    csv::write_file(path, header, rows);
}

void emit_svg(const ClassCountSeries& counts, const std::filesystem::path& path,
              const std::string& title, const SvgStyle& style) {
    const Frame f{.width = static_cast<double>(style.width),
                  .height = static_cast<double>(style.height)};
    std::ostringstream svg;
    open_svg(svg, style, title);
    axis_lines(svg, f);
    std::size_t max_count = 0;
    for (const auto& [cls, count] : counts.counts) {
        max_count = std::max(max_count, count);
    }
    if (max_count == 0) {
        no_data_text(svg, style);
    } else {
        const double band = f.plot_w() / static_cast<double>(counts.counts.size());
        std::size_t slot = 0;
        for (const auto& [cls, count] : counts.counts) {
            const double h = f.plot_h() * static_cast<double>(count) /
                             static_cast<double>(max_count);
            const double x = f.margin_left + band * static_cast<double>(slot) + band * 0.15;
            const double y = f.margin_top + f.plot_h() - h;
            svg << "  <rect x=\"" << fixed(x, 2) << "\" y=\"" << fixed(y, 2) << "\" width=\""
                << fixed(band * 0.7, 2) << "\" height=\"" << fixed(h, 2)
                << "\" fill=\"" << xml_escape(style.pattern_color) << "\"/>\n";
            svg << "  <text x=\"" << fixed(x + band * 0.35, 2) << "\" y=\""
                << fixed(f.margin_top + f.plot_h() + 20.0, 2)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
                << to_string(cls) << "</text>\n";
            svg << "  <text x=\"" << fixed(x + band * 0.35, 2) << "\" y=\"" << fixed(y - 6.0, 2)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
                << count << "</text>\n";
            ++slot;
        }
        svg << "  <text x=\"" << fixed(f.margin_left - 10.0, 2) << "\" y=\""
            << fixed(f.margin_top + 4.0, 2)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << max_count
            << "</text>\n";
    }
    svg << "  <text x=\"" << style.width / 2 << "\" y=\"" << style.height - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">sentiment "
           "class</text>\n";
    svg << "</svg>\n";
    write_text_file(path, svg.str());
}

void emit_svg(const SeriesBundle& bundle, const std::filesystem::path& path,
              const std::string& title, const SvgStyle& style) {
    const Frame f{.width = static_cast<double>(style.width),
                  .height = static_cast<double>(style.height)};
    const Orientation orientation = bundle.valence.orientation;
    std::ostringstream svg;
    open_svg(svg, style, title);
    axis_lines(svg, f);

    std::vector<const ScorePoint*> all;
    for (const ScorePoint& p : bundle.valence.points) {
        all.push_back(&p);
    }
    for (const ScorePoint& p : bundle.pattern.points) {
        all.push_back(&p);
    }
    const std::string score_label = "score (engagement)";
    const std::string sentiment_label = "sentiment rank (-10..10)";
    const std::string& x_label =
        orientation == Orientation::SentimentY ? score_label : sentiment_label;
    const std::string& y_label =
        orientation == Orientation::SentimentY ? sentiment_label : score_label;

    if (all.empty()) {
        no_data_text(svg, style);
    } else {
        double score_min = all.front()->score;
        double score_max = score_min;
        for (const ScorePoint* p : all) {
            score_min = std::min(score_min, p->score);
            score_max = std::max(score_max, p->score);
        }
        if (score_max - score_min < 1e-12) {
            score_min -= 1.0;
            score_max += 1.0;
        }
        const double sent_min = -10.0;
        const double sent_max = 10.0;
        const auto place = [&](const ScorePoint& p) {
            const double score_t = (p.score - score_min) / (score_max - score_min);
            const double sent_t = (p.sentiment - sent_min) / (sent_max - sent_min);
            const double tx = orientation == Orientation::SentimentY ? score_t : sent_t;
            const double ty = orientation == Orientation::SentimentY ? sent_t : score_t;
            return std::pair<double, double>{f.margin_left + tx * f.plot_w(),
                                             f.margin_top + (1.0 - ty) * f.plot_h()};
        };
        for (const ScorePoint* p : all) {
            const auto [cx, cy] = place(*p);
            const std::string& color =
                p->scorer == Scorer::Valence ? style.valence_color : style.pattern_color;
            svg << "  <circle cx=\"" << fixed(cx, 2) << "\" cy=\"" << fixed(cy, 2)
                << "\" r=\"3\" fill=\"" << xml_escape(color) << "\" fill-opacity=\"0.7\"/>\n";
        }
        // Legend and extremes of each axis.
        svg << "  <circle cx=\"" << fixed(f.margin_left + 10.0, 2) << "\" cy=\"38\" r=\"4\" fill=\""
            << xml_escape(style.valence_color) << "\"/>\n";
        svg << "  <text x=\"" << fixed(f.margin_left + 20.0, 2)
            << "\" y=\"42\" font-family=\"sans-serif\" font-size=\"12\">valence</text>\n";
        svg << "  <circle cx=\"" << fixed(f.margin_left + 90.0, 2) << "\" cy=\"38\" r=\"4\" fill=\""
            << xml_escape(style.pattern_color) << "\"/>\n";
        svg << "  <text x=\"" << fixed(f.margin_left + 100.0, 2)
            << "\" y=\"42\" font-family=\"sans-serif\" font-size=\"12\">pattern</text>\n";
        const std::string x_min_text =
            orientation == Orientation::SentimentY ? fixed(score_min, 4) : fixed(sent_min, 0);
        const std::string x_max_text =
            orientation == Orientation::SentimentY ? fixed(score_max, 4) : fixed(sent_max, 0);
        const std::string y_min_text =
            orientation == Orientation::SentimentY ? fixed(sent_min, 0) : fixed(score_min, 4);
        const std::string y_max_text =
            orientation == Orientation::SentimentY ? fixed(sent_max, 0) : fixed(score_max, 4);
        svg << "  <text x=\"" << fixed(f.margin_left, 2) << "\" y=\""
            << fixed(f.margin_top + f.plot_h() + 20.0, 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << x_min_text << "</text>\n";
        svg << "  <text x=\"" << fixed(f.margin_left + f.plot_w(), 2) << "\" y=\""
            << fixed(f.margin_top + f.plot_h() + 20.0, 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << x_max_text << "</text>\n";
        svg << "  <text x=\"" << fixed(f.margin_left - 8.0, 2) << "\" y=\""
            << fixed(f.margin_top + f.plot_h(), 2)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << y_min_text
            << "</text>\n";
        svg << "  <text x=\"" << fixed(f.margin_left - 8.0, 2) << "\" y=\""
            << fixed(f.margin_top + 8.0, 2)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << y_max_text
            << "</text>\n";
    }
    svg << "  <text x=\"" << style.width / 2 << "\" y=\"" << style.height - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << xml_escape(x_label) << "</text>\n";
    svg << "  <text x=\"18\" y=\"" << style.height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << style.height / 2 << ")\">" << xml_escape(y_label) << "</text>\n";
    svg << "</svg>\n";
    write_text_file(path, svg.str());
}

std::string run_summary(const RunSummaryInputs& inputs) {
    std::ostringstream out;
    out << "vibesift run summary\n";
    out << "====================\n";
    out << "seed: " << inputs.seed << "\n";
    out << "engagement direction: " << inputs.engagement_direction_label << "\n";
    out << "\n";
    const auto count_or_na = [](const std::optional<std::size_t>& n) {
        return n ? std::to_string(*n) : std::string("n/a");
    };
    out << "corpus stages:\n";
    out << "  ingested: " << count_or_na(inputs.ingested) << "\n";
    out << "  flagged:  " << count_or_na(inputs.flagged) << "\n";
    out << "  scored:   " << inputs.scored << "\n";
    if (inputs.band_filtered) {
        out << "  in follower band: " << *inputs.band_filtered << "\n";
    } else {
        out << "  in follower band: (band filter off)\n";
    }
    out << "\n";
    const auto emit_counts = [&](const char* label, const ClassCountSeries& series) {
        out << "class counts (" << label << "):";
        for (const SentimentClass c : kAllClasses) {
            const auto it = series.counts.find(c);
            const std::size_t n = it == series.counts.end() ? 0 : it->second;
            out << " " << to_string(c) << "=" << n;
        }
        out << " total=" << series.total << "\n";
    };
    emit_counts("valence", inputs.counts_valence);
    emit_counts("pattern", inputs.counts_pattern);
    out << "\n";
    const auto emit_hypothesis = [&](const char* label,
                                     const std::optional<HypothesisReport>& report) {
        if (!report) {
            out << "engagement correlation (" << label << "): not computed\n";
            return;
        }
        out << "engagement correlation (" << label << "): " << report->verdict_text << "\n";
        out << "  mean engagement by class:";
        for (const SentimentClass c : kAllClasses) {
            const auto it = report->class_mean_engagement.find(c);
            out << " " << to_string(c) << "=";
            if (it == report->class_mean_engagement.end()) {
                out << "n/a";
            } else {
                out << fixed(it->second, 6);
            }
        }
        out << "\n";
    };
    emit_hypothesis("valence", inputs.hypothesis_valence);
    emit_hypothesis("pattern", inputs.hypothesis_pattern);

    const auto conclusion = [&](const char* label,
                                const std::optional<HypothesisReport>& report) {
        if (!report || report->class_mean_engagement.empty()) {
            return;
        }
        std::vector<std::pair<SentimentClass, double>> ordered(
            report->class_mean_engagement.begin(), report->class_mean_engagement.end());
        std::stable_sort(ordered.begin(), ordered.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        out << "conclusion (" << label << "): " << to_string(ordered.front().first)
            << " sentiment tweets draw the most engagement";
        for (std::size_t i = 1; i < ordered.size(); ++i) {
            out << (i == 1 ? ", followed by " : ", then ") << to_string(ordered[i].first);
        }
        out << ".\n";
    };
    if (inputs.hypothesis_valence || inputs.hypothesis_pattern) {
        out << "\n";
        conclusion("valence", inputs.hypothesis_valence);
        conclusion("pattern", inputs.hypothesis_pattern);
    }
    return out.str();
}

}  // namespace vibesift
