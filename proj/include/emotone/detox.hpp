#pragma once

#include <string>
#include <string_view>

#include "emotone/backends.hpp"

namespace emotone {

enum class PresentationMode { RAW = 0, BALANCED, COOL };

std::string_view mode_name(PresentationMode mode);
PresentationMode mode_from_name(std::string_view name);

inline constexpr double kRewriteTemperature = 0.2;
inline constexpr int kRewriteMaxTokens = 150;
// Total backend calls per text per mode: first attempt plus two corrective retries.
inline constexpr int kMaxRewriteAttempts = 3;

enum class RewriteStatus { ok, length_violation, sentence_count_violation, accepted_after_retries };

std::string_view rewrite_status_name(RewriteStatus status);
RewriteStatus rewrite_status_from_name(std::string_view name);

struct RewriteRequest {
    std::string original;
    PresentationMode mode = PresentationMode::BALANCED;
    double temperature = kRewriteTemperature;
    int max_output_tokens = kRewriteMaxTokens;
};

struct Prompts {
    std::string system_prompt;
    std::string user_prompt;
};

// The fixed rewrite prompts for a mode; RAW is a ContractError.
Prompts build_prompts(const std::string& original, PresentationMode mode);

// One backend call with the built prompts; returns the reply trimmed of
// surrounding whitespace. An empty reply is a ProtocolError.
std::string rewrite(const RewriteRequest& request, ChatBackend& backend);

// Character length (code points) within [0.8L, 1.2L], both ends inclusive,
// checked in exact integer arithmetic; then sentence count (1 for BALANCED,
// 2 for COOL) under the shared segmenter. Violations are statuses, not errors.
RewriteStatus validate_rewrite(const std::string& original, const std::string& rewritten,
                               PresentationMode mode);

struct RewriteBundle {
    std::string original;
    std::string balanced;
    std::string cool;
    RewriteStatus balanced_status = RewriteStatus::ok;
    RewriteStatus cool_status = RewriteStatus::ok;
};

// Produces both modes. On a validation failure the prompt is retried with an
// appended corrective instruction up to 2 extra times; a still-failing text
// keeps the last output with status accepted_after_retries.
RewriteBundle detoxify(const std::string& original, ChatBackend& backend);

}  // namespace emotone
