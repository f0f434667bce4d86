#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emotone/backends.hpp"
#include "emotone/detox.hpp"

namespace emotone {

inline constexpr std::size_t kNliMaxTokens = 256;

enum class NliLabel { entailment = 0, neutral, contradiction };

std::string_view nli_label_name(NliLabel label);
NliLabel nli_label_from_name(std::string_view name);

struct FidelityRecord {
    std::int64_t text_id = 0;
    PresentationMode mode = PresentationMode::BALANCED;
    double cosine = 0.0;
    NliLabel nli_label = NliLabel::neutral;
};

struct FidelitySummary {
    double mean_cosine = 0.0;
    double entailment_rate = 0.0;
    double neutral_rate = 0.0;
    double contradiction_rate = 0.0;
};

// dot(a,b) / (|a| |b|), clamped to [-1, 1]. Zero-norm input is a
// DomainError, a dimension mismatch a ContractError.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

// Backend embedding of a non-empty text.
std::vector<double> embed(const std::string& text, EmbeddingBackend& backend);

// Premise = original, hypothesis = rewrite; both truncated separately to 256
// whitespace tokens. Argmax label, ties broken entailment > neutral >
// contradiction.
NliLabel nli_judge(const std::string& premise, const std::string& hypothesis,
                   NliBackend& backend);

// Pure argmax/tie-break step, exposed for direct testing.
NliLabel nli_argmax(const NliScores& scores);

// Mean cosine plus label rates over records of a single mode.
FidelitySummary summarize_fidelity(std::span<const FidelityRecord> records);

}  // namespace emotone
