#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "emotone/corpus.hpp"
#include "emotone/emotion.hpp"

namespace emotone {

inline constexpr double kDefaultTheta = 0.6;

struct AnalyzedText {
    NewsRecord record;
    EmotionDistribution distribution;
    double stimulus = 0.0;
    double ebi = 0.0;
    double fre = 0.0;
};

struct CollectionStats {
    std::size_t n = 0;
    double mean_stimulus = 0.0;
    double hir = 0.0;
    double mean_ebi = 0.0;
    double mean_fre = 0.0;
    EmotionDistribution mean_distribution;
};

// min(1, p_anger + p_fear + p_surprise). For any valid distribution the
// clamp is inactive; it guards rounding at the boundary.
double stimulus_score(const EmotionDistribution& d);

// Fraction of scores strictly above theta. Empty input is a DomainError;
// theta outside [0,1] a ContractError.
double high_impact_rate(std::span<const double> scores, double theta);

// 1 - 1/2 * sum |p(c) - 1/6|; 1 for uniform, 1/6 for one-hot.
double emotion_balance_index(const EmotionDistribution& d);

struct TextStats {
    std::size_t words = 0;
    std::size_t sentences = 0;
    std::size_t syllables = 0;
};

// Counts under the pinned segmentation rules (see text.hpp).
TextStats fre_components(std::string_view text);

// 206.835 - 1.015 * words/sentences - 84.6 * syllables/words.
// Zero words is a DomainError.
double flesch_reading_ease(std::string_view text);

// Componentwise mean of the texts' distributions (again a valid distribution).
EmotionDistribution mean_distribution(std::span<const AnalyzedText> texts);

CollectionStats aggregate(std::span<const AnalyzedText> texts, double theta);

// Fills stimulus, ebi and fre from the distribution and raw text.
AnalyzedText analyze_text(NewsRecord record, EmotionDistribution distribution);

}  // namespace emotone
