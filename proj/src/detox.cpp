#include "emotone/detox.hpp"

#include "emotone/errors.hpp"
#include "emotone/prompts.hpp"
#include "emotone/text.hpp"

namespace emotone {

namespace {

constexpr std::string_view kModeNames[] = {"RAW", "BALANCED", "COOL"};
constexpr std::string_view kStatusNames[] = {"ok", "length_violation", "sentence_count_violation",
                                             "accepted_after_retries"};

std::string rewrite_once(const std::string& original, PresentationMode mode,
                         std::string_view correction, ChatBackend& backend) {
    Prompts p = build_prompts(original, mode);
    if (!correction.empty()) {
        p.user_prompt += "\n";
        p.user_prompt += correction;
    }
    ChatRequest request;
    request.system = std::move(p.system_prompt);
    request.user = std::move(p.user_prompt);
    request.temperature = kRewriteTemperature;
    request.max_tokens = kRewriteMaxTokens;
    const std::string reply = trim(backend.complete(request));
    if (reply.empty()) throw ProtocolError("chat backend returned an empty rewrite");
    return reply;
}

std::pair<std::string, RewriteStatus> rewrite_validated(const std::string& original,
                                                        PresentationMode mode,
                                                        ChatBackend& backend) {
    std::string last;
    RewriteStatus status = RewriteStatus::ok;
    for (int attempt = 0; attempt < kMaxRewriteAttempts; ++attempt) {
        const std::string_view correction =
            attempt == 0 ? std::string_view{}
                         : (mode == PresentationMode::BALANCED ? prompts::kBalancedCorrection
                                                               : prompts::kCoolCorrection);
        last = rewrite_once(original, mode, correction, backend);
        status = validate_rewrite(original, last, mode);
        if (status == RewriteStatus::ok) return {last, status};
    }
    return {last, RewriteStatus::accepted_after_retries};
}

}  // namespace

std::string_view mode_name(PresentationMode mode) {
    return kModeNames[static_cast<std::size_t>(mode)];
}

PresentationMode mode_from_name(std::string_view name) {
    for (std::size_t i = 0; i < 3; ++i)
        if (kModeNames[i] == name) return static_cast<PresentationMode>(i);
    throw ContractError("unknown presentation mode: " + std::string(name));
}

std::string_view rewrite_status_name(RewriteStatus status) {
    return kStatusNames[static_cast<std::size_t>(status)];
}

RewriteStatus rewrite_status_from_name(std::string_view name) {
    for (std::size_t i = 0; i < 4; ++i)
        if (kStatusNames[i] == name) return static_cast<RewriteStatus>(i);
    throw ContractError("unknown rewrite status: " + std::string(name));
}

Prompts build_prompts(const std::string& original, PresentationMode mode) {
    if (mode == PresentationMode::RAW)
        throw ContractError("build_prompts: RAW is not a rewrite mode");
    Prompts p;
    p.system_prompt = std::string(prompts::kRewriteSystem);
    p.user_prompt = std::string(mode == PresentationMode::BALANCED ? prompts::kBalancedUserHeader
                                                                   : prompts::kCoolUserHeader);
    p.user_prompt += "\n";
    p.user_prompt += prompts::wrap_block(prompts::kRewriteTextLabel, original);
    return p;
}

std::string rewrite(const RewriteRequest& request, ChatBackend& backend) {
    if (request.mode == PresentationMode::RAW)
        throw ContractError("rewrite: RAW is not a rewrite mode");
    if (request.temperature != kRewriteTemperature)
        throw ContractError("rewrite: temperature is fixed at 0.2");
    if (request.max_output_tokens != kRewriteMaxTokens)
        throw ContractError("rewrite: max_output_tokens is fixed at 150");
    if (trim(request.original).empty()) throw ContractError("rewrite: original text is empty");
    return rewrite_once(request.original, request.mode, {}, backend);
}

RewriteStatus validate_rewrite(const std::string& original, const std::string& rewritten,
                               PresentationMode mode) {
    if (mode == PresentationMode::RAW)
        throw ContractError("validate_rewrite: RAW is not a rewrite mode");
    // len in [0.8L, 1.2L]  <=>  5*len in [4L, 6L], exact at the boundaries.
    const std::size_t len = utf8_length(rewritten);
    const std::size_t original_len = utf8_length(original);
    if (5 * len < 4 * original_len || 5 * len > 6 * original_len)
        return RewriteStatus::length_violation;
    const std::size_t sentences = count_sentences(rewritten);
    const std::size_t required = mode == PresentationMode::BALANCED ? 1 : 2;
    if (sentences != required) return RewriteStatus::sentence_count_violation;
    return RewriteStatus::ok;
}

RewriteBundle detoxify(const std::string& original, ChatBackend& backend) {
    if (trim(original).empty()) throw ContractError("detoxify: original text is empty");
    RewriteBundle bundle;
    bundle.original = original;
    auto [balanced, balanced_status] =
        rewrite_validated(original, PresentationMode::BALANCED, backend);
    bundle.balanced = std::move(balanced);
    bundle.balanced_status = balanced_status;
    auto [cool, cool_status] = rewrite_validated(original, PresentationMode::COOL, backend);
    bundle.cool = std::move(cool);
    bundle.cool_status = cool_status;
    return bundle;
}

}  // namespace emotone
