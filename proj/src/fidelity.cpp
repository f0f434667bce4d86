#include "emotone/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "emotone/errors.hpp"
#include "emotone/text.hpp"

namespace emotone {

namespace {
constexpr std::string_view kLabelNames[] = {"entailment", "neutral", "contradiction"};
}

std::string_view nli_label_name(NliLabel label) {
    return kLabelNames[static_cast<std::size_t>(label)];
}

NliLabel nli_label_from_name(std::string_view name) {
    for (std::size_t i = 0; i < 3; ++i)
        if (kLabelNames[i] == name) return static_cast<NliLabel>(i);
    throw ContractError("unknown NLI label: " + std::string(name));
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ContractError("cosine_similarity: dimension mismatch");
    if (a.empty()) throw ContractError("cosine_similarity: empty vectors");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw DomainError("cosine_similarity: zero-norm vector");
    return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

std::vector<double> embed(const std::string& text, EmbeddingBackend& backend) {
    if (trim(text).empty()) throw ContractError("embed: empty text");
    return backend.embed(text);
}

NliLabel nli_argmax(const NliScores& scores) {
    // Fixed tie order: entailment > neutral > contradiction.
    NliLabel best = NliLabel::entailment;
    double best_score = scores.entailment;
    if (scores.neutral > best_score) {
        best = NliLabel::neutral;
        best_score = scores.neutral;
    }
    if (scores.contradiction > best_score) best = NliLabel::contradiction;
    return best;
}

NliLabel nli_judge(const std::string& premise, const std::string& hypothesis,
                   NliBackend& backend) {
    if (trim(premise).empty() || trim(hypothesis).empty())
        throw ContractError("nli_judge: empty premise or hypothesis");
    const std::string p = truncate_tokens(premise, kNliMaxTokens);
    const std::string h = truncate_tokens(hypothesis, kNliMaxTokens);
    return nli_argmax(backend.score(p, h));
}

FidelitySummary summarize_fidelity(std::span<const FidelityRecord> records) {
    if (records.empty()) throw DomainError("summarize_fidelity: empty record sequence");
    const PresentationMode mode = records.front().mode;
    double sum_cosine = 0.0;
    std::size_t counts[3] = {0, 0, 0};
    for (const FidelityRecord& r : records) {
        if (r.mode != mode) throw ContractError("summarize_fidelity: mixed presentation modes");
        sum_cosine += r.cosine;
        ++counts[static_cast<std::size_t>(r.nli_label)];
    }
    const double n = static_cast<double>(records.size());
    FidelitySummary s;
    s.mean_cosine = sum_cosine / n;
    s.entailment_rate = static_cast<double>(counts[0]) / n;
    s.neutral_rate = static_cast<double>(counts[1]) / n;
    s.contradiction_rate = static_cast<double>(counts[2]) / n;
    return s;
}

}  // namespace emotone
