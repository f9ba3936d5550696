// Deterministic synthetic tweet corpus generator. Regenerates the bundled
// fixture: gencorpus --n 3000 --seed 7 --out data/fixtures/synthetic_3000.csv
#include <array>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "vibesift/corpus.hpp"
#include "vibesift/errors.hpp"

namespace {

using vibesift::Corpus;
using vibesift::RawTweet;

// Every template embeds a "{kw}" slot so the whole corpus survives
// keyword flagging.
struct Template {
    const char* text;
    int mood;  // -1 negative-ish, 0 neutral-ish, +1 positive-ish wording
};

constexpr std::array<Template, 36> kTemplates = {{
    {"Got my {kw} today and I feel great, thank you NHS", 1},
    {"The {kw} was painless and the nurses were amazing \xF0\x9F\x92\x89", 1},
    {"So grateful for the {kw}, best decision I made this year", 1},
    {"Second {kw} done! Feeling safe and happy \xE2\x9C\x85", 1},
    {"Honestly the {kw} rollout here has been excellent", 1},
    {"LOVE that my whole family finally got the {kw} \xE2\x9D\xA4\xEF\xB8\x8F", 1},
    {"I like how quick the {kw} appointment was :)", 1},
    {"Very effective {kw}, zero side effects so far", 1},
    {"The {kw} saved my grandmother, I am so thankful", 1},
    {"Booked my {kw} at last, really excited!!", 1},
    {"hope the {kw} protects us this winter", 1},
    {"My arm hurts but the {kw} is worth it", 1},
    {"The {kw} side effects are awful, fever all night \xF0\x9F\x98\xB7", -1},
    {"I don't trust this {kw} at all!!!", -1},
    {"Worst experience after my {kw}, never again", -1},
    {"The {kw} made me so sick I missed work", -1},
    {"Scared of the {kw}, my cousin had a terrible reaction", -1},
    {"This {kw} mandate is a scam, wake up people", -1},
    {"NOT taking the {kw}, the risk is too high for me", -1},
    {"My {kw} appointment was cancelled AGAIN, this system is broken", -1},
    {"Fear and panic everywhere, the {kw} debate is a disaster", -1},
    {"I hate how politicised the {kw} has become", -1},
    {"the {kw} queue was horrible, 3 hours in the rain", -1},
    {"Bad batch of {kw} reported downtown, what a mess", -1},
    {"3 communities to get priority {kw} access this week", 0},
    {"The clinic offers the {kw} from 9 to 5 on weekdays", 0},
    {"Minister announces new {kw} shipment for the region", 0},
    {"You can now register for the {kw} at the city portal", 0},
    {"Second round of {kw} appointments opens Monday", 0},
    {"The {kw} study enrolled 1,200 participants, results pending", 0},
    {"Pharmacies will stock the {kw} starting next month", 0},
    {"Our office is collecting {kw} certificates, says HR", 0},
    {"Local news: {kw} drive-through opens at the stadium", 0},
    {"\"Supplies of the {kw} are stable\", officials said", 0},
    {"2nd shot in the arm\nMore paperwork than I thought, {kw} card issued", 0},
    {"Reminder: bring ID and your {kw} booking code", 0},
}};

constexpr std::array<const char*, 8> kKeywordForms = {
    "vaccine", "covid vaccine", "Pfizer", "booster",
    "dose",    "immunity",      "#vaccine", "VACCINE",
};

constexpr std::array<const char*, 8> kSuffixes = {
    "",
    "",
    "",
    " @cityhealth",
    " https://example.org/info",
    " #covid19",
    " :)",
    " \xF0\x9F\x98\xB7",
};

std::string substitute(std::string text, const std::string& keyword) {
    const auto pos = text.find("{kw}");
    if (pos != std::string::npos) {
        text.replace(pos, 4, keyword);
    }
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gencorpus - deterministic synthetic tweet corpus"};
    std::size_t n = 3000;
    std::uint64_t seed = 7;
    std::string out_path;
    app.add_option("--n", n, "number of tweets");
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--out", out_path, "output CSV path")->required();
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(seed);
    const auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };

    Corpus corpus;
    corpus.source_label = "synthetic";
    corpus.tweets.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Template& tpl = kTemplates[pick(kTemplates.size())];
        const std::string keyword = kKeywordForms[pick(kKeywordForms.size())];
        RawTweet tweet;
        char id_buf[24];
        std::snprintf(id_buf, sizeof(id_buf), "syn-%06zu", i);
        tweet.id = id_buf;
        tweet.text = substitute(tpl.text, keyword) + kSuffixes[pick(kSuffixes.size())];

        // Follower counts: roughly a third inside the 400-500 band so the
        // band-filtered analysis always has data.
        const std::size_t follower_bucket = pick(100);
        if (follower_bucket < 30) {
            tweet.follower_count = 400 + static_cast<std::int64_t>(pick(101));
        } else if (follower_bucket < 95) {
            tweet.follower_count = 10 + static_cast<std::int64_t>(pick(20000));
        }  // else absent

        // Neutral/negative wording trends toward slightly more retweets.
        const std::size_t retweet_roll = pick(100);
        if (retweet_roll >= 40) {
            const std::size_t spread = tpl.mood <= 0 ? 60 : 40;
            tweet.retweet_count = static_cast<std::int64_t>(pick(spread));
        }
        if (pick(100) < 15) {
            tweet.like_count = static_cast<std::int64_t>(pick(500));
        }
        if (pick(100) < 10) {
            tweet.reply_count = static_cast<std::int64_t>(pick(80));
        }
        if (pick(100) < 10) {
            tweet.retweeted = pick(2) == 1;
        }
        corpus.tweets.push_back(std::move(tweet));
    }

    try {
        vibesift::write_csv(corpus, out_path);
    } catch (const vibesift::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    std::cout << "wrote " << corpus.size() << " tweets to " << out_path << "\n";
    return 0;
}
