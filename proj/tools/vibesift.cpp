#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vibesift/config.hpp"
#include "vibesift/errors.hpp"
#include "vibesift/log.hpp"
#include "vibesift/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInsufficientData = 4;

void print_usage_hint(std::ostream& out) {
    out << "usage: vibesift <subcommand> [options]\n"
           "  subcommands: ingest, score, split, analyze, stats, all\n"
           "  run 'vibesift --help' for the full option list\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vibesift - lexicon-rule sentiment analysis over tweet corpora"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    std::string config_path;
    std::string input;
    std::string out_dir;
    std::string direction;
    std::uint64_t seed = 0;
    bool no_band = false;
    bool quiet_flag = false;

    const auto config_opt = app.add_option("--config", config_path, "key = value config file");
    const auto out_opt = app.add_option("--out", out_dir, "output directory (default: out)");
    const auto seed_opt = app.add_option("--seed", seed, "PRNG seed (default: 42)");
    const auto band_opt = app.add_flag("--no-band", no_band, "skip the follower band filter");
    const auto dir_opt = app.add_option("--engagement-direction", direction,
                                        "engagement measure: rpf or fpr");
    const auto quiet_opt = app.add_flag("--quiet", quiet_flag, "suppress progress output");

    CLI::Option* input_opt = nullptr;
    const auto add_input = [&](CLI::App* sub) {
        input_opt = sub->add_option("input,--input", input, "input tweet CSV");
    };
    CLI::App* cmd_ingest = app.add_subcommand("ingest", "load, flag keywords, filter flagged");
    add_input(cmd_ingest);
    CLI::App* cmd_score = app.add_subcommand("score", "score corpus.csv with both scorers");
    CLI::App* cmd_split = app.add_subcommand("split", "split scored.csv into train/test/dev");
    CLI::App* cmd_analyze = app.add_subcommand("analyze", "correlations, report, charts");
    CLI::App* cmd_stats = app.add_subcommand("stats", "length and stopword statistics");
    CLI::App* cmd_all = app.add_subcommand("all", "run the whole pipeline");
    add_input(cmd_all);
    (void)cmd_score;
    (void)cmd_split;
    (void)cmd_analyze;
    (void)cmd_stats;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        print_usage_hint(std::cerr);
        return kExitConfig;
    }

    try {
        vibesift::RunConfig config;
        if (config_opt->count() == 0) {
            if (const char* env = std::getenv("VIBESIFT_CONFIG"); env != nullptr && *env != '\0') {
                config_path = env;
            }
        }
        if (!config_path.empty()) {
            vibesift::load_config_file(config, config_path);
        }
        if (input_opt != nullptr && input_opt->count() > 0) {
            config.input = input;
        }
        if (out_opt->count() > 0) {
            config.out_dir = out_dir;
        }
        if (seed_opt->count() > 0) {
            config.seed = seed;
        }
        if (band_opt->count() > 0) {
            config.apply_band = false;
        }
        if (dir_opt->count() > 0) {
            config.direction = vibesift::parse_direction(direction);
        }
        if (quiet_opt->count() > 0) {
            config.quiet = true;
        }
        config.split.seed = config.seed;
        vibesift::set_quiet(config.quiet);

        const bool needs_input = cmd_ingest->parsed() || cmd_all->parsed();
        vibesift::validate(config, needs_input);
        const vibesift::Resources resources = vibesift::load_resources(config);
        std::ostream* progress = config.quiet ? nullptr : &std::cout;

        if (cmd_ingest->parsed()) {
            vibesift::pipeline::ingest(config, resources, progress);
        } else if (cmd_score->parsed()) {
            vibesift::pipeline::score(config, resources, progress);
        } else if (cmd_split->parsed()) {
            vibesift::pipeline::split(config, progress);
        } else if (cmd_analyze->parsed()) {
            vibesift::pipeline::analyze(config, progress);
        } else if (cmd_stats->parsed()) {
            vibesift::pipeline::stats(config, resources, progress);
        } else if (cmd_all->parsed()) {
            vibesift::pipeline::all(config, resources, progress);
        }
        return kExitOk;
    } catch (const vibesift::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        print_usage_hint(std::cerr);
        return kExitConfig;
    } catch (const vibesift::CorpusTooSmallError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const vibesift::LexiconParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const vibesift::ValenceOutOfRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const vibesift::BoundViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const vibesift::TooFewPointsError& e) {
        std::cerr << "error: " << e.what()
                  << " (need at least 3 tweets with engagement in scope; "
                     "--no-band widens the selection)\n";
        return kExitInsufficientData;
    } catch (const vibesift::EmptyClassError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsufficientData;
    } catch (const vibesift::Error& e) {
        // Remaining library errors are file problems: unreadable inputs,
        // malformed rows, duplicate ids, failed writes.
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
