#include "emotone/metrics.hpp"

#include <algorithm>

#include "emotone/errors.hpp"
#include "emotone/text.hpp"

namespace emotone {

double stimulus_score(const EmotionDistribution& d) {
    const double s = d[Emotion::anger] + d[Emotion::fear] + d[Emotion::surprise];
    return std::min(1.0, s);
}

double high_impact_rate(std::span<const double> scores, double theta) {
    if (scores.empty()) throw DomainError("high_impact_rate: empty score sequence");
    if (!(theta >= 0.0 && theta <= 1.0)) throw ContractError("theta must lie in [0,1]");
    std::size_t hits = 0;
    for (double s : scores)
        if (s > theta) ++hits;
    return static_cast<double>(hits) / static_cast<double>(scores.size());
}

double emotion_balance_index(const EmotionDistribution& d) {
    double l1 = 0.0;
    for (std::size_t i = 0; i < kEmotionCount; ++i) l1 += std::abs(d.at(i) - 1.0 / 6.0);
    return 1.0 - 0.5 * l1;
}

TextStats fre_components(std::string_view text) {
    TextStats stats;
    stats.sentences = count_sentences(text);
    for (const std::string& word : split_words(text)) {
        ++stats.words;
        stats.syllables += count_syllables_word(word);
    }
    return stats;
}

double flesch_reading_ease(std::string_view text) {
    const TextStats s = fre_components(text);
    if (s.words == 0) throw DomainError("flesch_reading_ease: text has no words");
    const double words = static_cast<double>(s.words);
    const double sentences = static_cast<double>(s.sentences);
    const double syllables = static_cast<double>(s.syllables);
    return 206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words);
}

EmotionDistribution mean_distribution(std::span<const AnalyzedText> texts) {
    if (texts.empty()) throw DomainError("mean_distribution: empty sequence");
    std::array<double, kEmotionCount> sums{};
    for (const AnalyzedText& t : texts)
        for (std::size_t i = 0; i < kEmotionCount; ++i) sums[i] += t.distribution.at(i);
    return EmotionDistribution::normalized(sums);
}

CollectionStats aggregate(std::span<const AnalyzedText> texts, double theta) {
    if (texts.empty()) throw DomainError("aggregate: empty sequence");
    CollectionStats stats;
    stats.n = texts.size();
    std::vector<double> stimuli;
    stimuli.reserve(texts.size());
    double sum_stimulus = 0.0, sum_ebi = 0.0, sum_fre = 0.0;
    for (const AnalyzedText& t : texts) {
        stimuli.push_back(t.stimulus);
        sum_stimulus += t.stimulus;
        sum_ebi += t.ebi;
        sum_fre += t.fre;
    }
    const double n = static_cast<double>(texts.size());
    stats.mean_stimulus = sum_stimulus / n;
    stats.mean_ebi = sum_ebi / n;
    stats.mean_fre = sum_fre / n;
    stats.hir = high_impact_rate(stimuli, theta);
    stats.mean_distribution = mean_distribution(texts);
    return stats;
}

AnalyzedText analyze_text(NewsRecord record, EmotionDistribution distribution) {
    AnalyzedText out;
    out.stimulus = stimulus_score(distribution);
    out.ebi = emotion_balance_index(distribution);
    out.fre = flesch_reading_ease(record.text);
    out.record = std::move(record);
    out.distribution = distribution;
    return out;
}

}  // namespace emotone
