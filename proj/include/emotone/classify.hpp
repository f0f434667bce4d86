#pragma once

#include <memory>
#include <string>

#include "emotone/backends.hpp"
#include "emotone/emotion.hpp"

namespace emotone {

inline constexpr std::size_t kClassifierMaxTokens = 128;

// First 128 whitespace-delimited tokens rejoined by single spaces; shorter
// texts pass through with whitespace normalized. Token here means a
// whitespace-delimited unit: the backend's own tokenizer may truncate
// further, this bound is applied on our side regardless.
std::string truncate_for_classifier(const std::string& text);

// Six-emotion probabilities through a pluggable backend. classify() applies
// truncation defensively, clamps negative raw scores to 0 and renormalizes
// to sum 1; safe for concurrent invocation.
class ClassifierGateway {
  public:
    explicit ClassifierGateway(const ClassifierBackendConfig& config);
    explicit ClassifierGateway(std::shared_ptr<ClassifierBackend> backend);

    EmotionDistribution classify(const std::string& text) const;

  private:
    std::shared_ptr<ClassifierBackend> backend_;
};

// Deterministic offline fallback: case-insensitive hits against the built-in
// word->emotion lexicon, Laplace smoothing of 1 per emotion, normalized.
EmotionDistribution lexicon_classify(const std::string& text);

}  // namespace emotone
