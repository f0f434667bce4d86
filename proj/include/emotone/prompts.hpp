#pragma once

#include <string>
#include <string_view>

// The exact prompt strings sent to the chat backend. They are fixed
// constants (mirrored under data/prompts/) so runs are reproducible; the
// rule-based offline chat backend parses the same markers.

namespace emotone::prompts {

inline constexpr std::string_view kBlockOpen = "<<<";
inline constexpr std::string_view kBlockClose = ">>>";

inline constexpr std::string_view kRewriteTextLabel = "TEXT";
inline constexpr std::string_view kAdviceSummaryLabel = "WEEKLY_SUMMARY_JSON";
inline constexpr std::string_view kPersonaLabel = "PERSONA";

inline constexpr std::string_view kRewriteSystem =
    "You are a careful editor. Reduce the emotional intensity of the text while "
    "preserving all facts, proper nouns, numerical values, and the core meaning. "
    "Do not add opinions. Keep the output concise.";

inline constexpr std::string_view kBalancedUserHeader =
    "Rewrite the news text between the markers. Replace sensational vocabulary with "
    "neutral expressions and output the same information as the original in a single "
    "sentence. Keep the length within ±20% of the original.";

inline constexpr std::string_view kCoolUserHeader =
    "Rewrite the news text between the markers. Replace sensational vocabulary with "
    "neutral expressions, then append one supplementary sentence of background "
    "information or definitions that helps a calm reading, for a total of exactly "
    "two sentences. Keep the length within ±20% of the original.";

inline constexpr std::string_view kBalancedCorrection =
    "Your previous rewrite violated a constraint. Produce exactly 1 sentence and "
    "keep the character length within ±20% of the original.";

inline constexpr std::string_view kCoolCorrection =
    "Your previous rewrite violated a constraint. Produce exactly 2 sentences, the "
    "second being the supplementary sentence, and keep the character length within "
    "±20% of the original.";

inline constexpr std::string_view kAdviceSystem =
    "You are an expert in diagnosing bias in a consumer's information consumption. "
    "Identify which emotions are excessively high or low in the weekly summary and "
    "propose one actionable behavioral change. Mention the numbers that justify the "
    "diagnosis.";

inline constexpr std::string_view kAdviceUserFooter =
    "Write short advice (2-4 sentences) for this consumer.";

inline constexpr std::string_view kRecommendSystem =
    "You choose the initial presentation mode for a news reader. Modes: RAW = the "
    "original text unchanged; BALANCED = a single-sentence neutralized rewrite; "
    "COOL = a neutralized rewrite plus one supplementary background sentence (the "
    "strongest softening). Reply with exactly two lines:\n"
    "MODE: <RAW|BALANCED|COOL>\n"
    "REASON: <one sentence>";

// "LABEL <<<\nbody\n>>>"
std::string wrap_block(std::string_view label, std::string_view body);

// Extracts the body of a labelled block; empty string when absent.
std::string extract_block(std::string_view prompt, std::string_view label);

bool has_block(std::string_view prompt, std::string_view label);

}  // namespace emotone::prompts
