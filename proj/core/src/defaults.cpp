#include "vibesift/defaults.hpp"

namespace vibesift {

namespace {

constexpr double kBoosterIncrement = 0.293;

struct ValenceEntry {
    const char* token;
    double value;
};

// Hand-assigned seed values; mirrors data/valence_lexicon.tsv.
constexpr ValenceEntry kValenceSeed[] = {
    {"amazing", 2.8},   {"awesome", 3.1},   {"awful", -2.0},    {"bad", -2.5},
    {"best", 3.2},      {"blessed", 2.9},   {"brilliant", 2.8}, {"broken", -2.0},
    {"calm", 1.3},      {"care", 2.2},      {"crisis", -1.9},   {"cure", 2.3},
    {"danger", -2.4},   {"dangerous", -2.2}, {"dead", -3.3},    {"death", -2.9},
    {"die", -2.9},      {"disaster", -3.1}, {"distrust", -2.3}, {"effective", 2.1},
    {"excellent", 2.9}, {"excited", 2.4},   {"fail", -2.3},     {"fake", -1.7},
    {"fear", -2.2},     {"fine", 1.1},      {"free", 1.2},      {"glad", 2.0},
    {"good", 1.9},      {"grateful", 2.4},  {"great", 3.1},     {"happy", 2.7},
    {"hate", -2.7},     {"hope", 1.9},      {"horrible", -2.5}, {"hurt", -1.9},
    {"joy", 2.9},       {"kill", -3.0},     {"lie", -2.1},      {"like", 1.5},
    {"love", 3.2},      {"lucky", 2.4},     {"nice", 1.8},      {"pain", -2.0},
    {"panic", -2.4},    {"perfect", 2.7},   {"protect", 1.9},   {"proud", 2.2},
    {"relief", 1.8},    {"risk", -1.1},     {"sad", -2.1},      {"safe", 1.8},
    {"scam", -2.6},     {"scared", -1.9},   {"sick", -1.7},     {"smile", 2.1},
    {"terrible", -2.1}, {"thankful", 2.3},  {"trust", 2.1},     {"win", 2.4},
    {"worry", -1.6},    {"worse", -2.6},    {"worst", -3.1},    {"wrong", -2.1},
};

struct PatternSeedEntry {
    const char* token;
    double polarity;
    double subjectivity;
};

// Mirrors data/pattern_lexicon.tsv.
constexpr PatternSeedEntry kPatternSeed[] = {
    {"amazing", 0.6, 0.9},     {"awesome", 1.0, 1.0},   {"awful", -1.0, 1.0},
    {"bad", -0.7, 0.667},      {"best", 1.0, 0.3},      {"better", 0.5, 0.5},
    {"brilliant", 0.9, 0.9},   {"broken", -0.4, 0.4},   {"calm", 0.3, 0.4},
    {"dangerous", -0.6, 0.9},  {"dead", -0.2, 0.4},     {"effective", 0.6, 0.55},
    {"excellent", 1.0, 1.0},   {"excited", 0.375, 0.75}, {"fake", -0.5, 0.7},
    {"fine", 0.4, 0.5},        {"free", 0.4, 0.6},      {"glad", 0.5, 1.0},
    {"good", 0.7, 0.6},        {"great", 0.8, 0.75},    {"happy", 0.8, 1.0},
    {"hate", -0.8, 0.9},       {"hopeful", 0.3, 0.6},   {"horrible", -1.0, 1.0},
    {"hurt", -0.5, 0.6},       {"lucky", 0.5, 0.6},     {"nice", 0.6, 1.0},
    {"painful", -0.7, 0.9},    {"perfect", 1.0, 1.0},   {"poor", -0.4, 0.6},
    {"proud", 0.8, 0.6},       {"relieved", 0.4, 0.5},  {"sad", -0.5, 1.0},
    {"safe", 0.5, 0.5},        {"scared", -0.6, 0.8},   {"sick", -0.7, 0.8},
    {"slow", -0.3, 0.4},       {"terrible", -1.0, 1.0}, {"useless", -0.5, 0.6},
    {"weak", -0.4, 0.6},       {"wonderful", 1.0, 1.0}, {"worried", -0.3, 0.6},
    {"worst", -1.0, 1.0},      {"wrong", -0.5, 0.7},
};

}  // namespace

const std::unordered_set<std::string>& default_negators() {
    static const std::unordered_set<std::string> negators = {
        "aint",      "ain't",    "arent",     "aren't",    "cannot",   "cant",
        "can't",     "couldnt",  "couldn't",  "darent",    "daren't",  "didnt",
        "didn't",    "doesnt",   "doesn't",   "dont",      "don't",    "hadnt",
        "hadn't",    "hasnt",    "hasn't",    "havent",    "haven't",  "isnt",
        "isn't",     "mightnt",  "mightn't",  "mustnt",    "mustn't",  "neednt",
        "needn't",   "neither",  "never",     "no",        "none",     "nope",
        "nor",       "not",      "nothing",   "nowhere",   "oughtnt",  "oughtn't",
        "rarely",    "seldom",   "shant",     "shan't",    "shouldnt", "shouldn't",
        "uhuh",      "uh-uh",    "wasnt",     "wasn't",    "werent",   "weren't",
        "without",   "wont",     "won't",     "wouldnt",   "wouldn't",
    };
    return negators;
}

const std::unordered_map<std::string, double>& default_boosters() {
    static const std::unordered_map<std::string, double> boosters = [] {
        std::unordered_map<std::string, double> map;
        for (const char* token :
             {"absolutely", "amazingly",  "awfully",      "completely",  "considerably",
              "decidedly",  "deeply",     "enormously",   "entirely",    "especially",
              "exceptionally", "extremely", "fabulously", "fully",       "greatly",
              "highly",     "hugely",     "incredibly",   "intensely",   "majorly",
              "more",       "most",       "particularly", "purely",      "quite",
              "really",     "remarkably", "so",           "substantially", "thoroughly",
              "totally",    "tremendously", "uber",       "unbelievably", "unusually",
              "utterly",    "very"}) {
            map.emplace(token, kBoosterIncrement);
        }
        for (const char* token :
             {"almost", "barely", "hardly", "kinda", "kindof", "kind-of", "less", "little",
              "marginally", "occasionally", "partly", "scarcely", "slightly", "somewhat",
              "sorta", "sortof", "sort-of"}) {
            map.emplace(token, -kBoosterIncrement);
        }
        return map;
    }();
    return boosters;
}

const std::unordered_set<std::string>& default_stopwords() {
    static const std::unordered_set<std::string> stopwords = {
        "i",       "me",      "my",       "myself", "we",      "our",     "ours",
        "ourselves", "you",   "your",     "yours",  "yourself", "yourselves", "he",
        "him",     "his",     "himself",  "she",    "her",     "hers",    "herself",
        "it",      "its",     "itself",   "they",   "them",    "their",   "theirs",
        "themselves", "what", "which",    "who",    "whom",    "this",    "that",
        "these",   "those",   "am",       "is",     "are",     "was",     "were",
        "be",      "been",    "being",    "have",   "has",     "had",     "having",
        "do",      "does",    "did",      "doing",  "a",       "an",      "the",
        "and",     "but",     "if",       "or",     "because", "as",      "until",
        "while",   "of",      "at",       "by",     "for",     "with",    "about",
        "against", "between", "into",     "through", "during", "before",  "after",
        "above",   "below",   "to",       "from",   "up",      "down",    "in",
        "out",     "on",      "off",      "over",   "under",   "again",   "further",
        "then",    "once",    "here",     "there",  "when",    "where",   "why",
        "how",     "all",     "any",      "both",   "each",    "few",     "more",
        "most",    "other",   "some",     "such",   "no",      "nor",     "not",
        "only",    "own",     "same",     "so",     "than",    "too",     "very",
        "s",       "t",       "can",      "will",   "just",    "don",     "should",
        "now",
    };
    return stopwords;
}

const std::vector<std::string>& default_keywords() {
    static const std::vector<std::string> keywords = {
        "vaccine", "covid vaccine", "Pfizer", "immunity", "dose", "booster",
    };
    return keywords;
}

ValenceLexicon default_valence_lexicon() {
    ValenceLexicon lexicon;
    lexicon.boosters = default_boosters();
    lexicon.negators = default_negators();
    for (const auto& [token, value] : kValenceSeed) {
        lexicon.valences.emplace(token, value);
    }
    return lexicon;
}

PatternLexicon default_pattern_lexicon() {
    PatternLexicon lexicon;
    lexicon.negators = default_negators();
    for (const auto& [token, polarity, subjectivity] : kPatternSeed) {
        lexicon.entries.emplace(token, PatternEntry{polarity, subjectivity});
    }
    return lexicon;
}

}  // namespace vibesift
