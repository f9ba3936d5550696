#pragma once

#include <array>
#include <string_view>

namespace vibesift {

/// Three-way sentiment bin. Ordered so NEGATIVE < NEUTRAL < POSITIVE.
enum class SentimentClass { Negative = 0, Neutral = 1, Positive = 2 };

inline constexpr std::array<SentimentClass, 3> kAllClasses = {
    SentimentClass::Negative, SentimentClass::Neutral, SentimentClass::Positive};

constexpr std::string_view to_string(SentimentClass c) {
    switch (c) {
        case SentimentClass::Negative:
            return "negative";
        case SentimentClass::Neutral:
            return "neutral";
        case SentimentClass::Positive:
            return "positive";
    }
    return "neutral";
}

/// Which of the two scorers a value belongs to.
enum class Scorer { Valence, Pattern };

constexpr std::string_view to_string(Scorer s) {
    return s == Scorer::Valence ? "valence" : "pattern";
}

}  // namespace vibesift
