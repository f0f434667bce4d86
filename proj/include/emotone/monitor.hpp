#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emotone/backends.hpp"
#include "emotone/detox.hpp"
#include "emotone/metrics.hpp"

namespace emotone {

inline constexpr std::size_t kDefaultConsumerCount = 5;
inline constexpr std::size_t kDefaultTextsPerConsumer = 100;
inline constexpr double kMonitorTemperature = 0.3;
inline constexpr int kAdviceMaxTokens = 256;

struct BrowsingEvent {
    std::int64_t consumer_id = 0;
    std::int64_t text_id = 0;
    std::int64_t timestamp = 0;  // Unix seconds, UTC
    PresentationMode mode_viewed = PresentationMode::RAW;
};

// Parses ISO-8601 instants ("2026-08-09T12:00:00Z" or with a +hh:mm offset)
// to Unix seconds, normalized to UTC. Throws DomainError on malformed input.
std::int64_t parse_timestamp(const std::string& iso8601);
std::string format_timestamp(std::int64_t unix_seconds);

struct IsoWeek {
    int year = 0;
    int week = 0;
    auto operator<=>(const IsoWeek&) const = default;
};

// ISO-8601 week of the UTC instant.
IsoWeek iso_week_utc(std::int64_t unix_seconds);

struct WeeklySummary {
    std::int64_t consumer_id = 0;
    std::size_t n = 0;
    double mean_stimulus = 0.0;
    double hir = 0.0;
    double ebi = 0.0;
    EmotionDistribution mean_emotions;
};

// Weekly EBI is computed on the mean distribution by default; the mean of
// per-text EBI values is available behind the switch for sensitivity checks.
enum class WeeklyEbiMode { of_mean_distribution, mean_of_texts };

// Per consumer, draws per_consumer texts without replacement from the full
// pool (draws independent across consumers) using the seeded generator.
std::map<std::int64_t, std::vector<AnalyzedText>> simulate_consumers(
    std::span<const AnalyzedText> pool, std::size_t n_consumers, std::size_t per_consumer,
    std::uint64_t seed);

WeeklySummary weekly_summary(std::span<const AnalyzedText> texts, std::int64_t consumer_id,
                             double theta,
                             WeeklyEbiMode ebi_mode = WeeklyEbiMode::of_mean_distribution);

// Fixed field order, numbers rendered with 3 decimal places.
std::string weekly_summary_json(const WeeklySummary& summary);

Prompts advice_prompt(const WeeklySummary& summary);

struct AdviceResult {
    std::string text;
    bool flagged = false;  // failed validation even after retries
};

// Advice must be non-empty and mention at least one numeric value from the
// summary; failing replies are retried twice, then returned flagged.
AdviceResult generate_advice(const WeeklySummary& summary, ChatBackend& backend);

struct PersonaProfile {
    std::string id;
    std::string description;
};

struct ModeRecommendation {
    std::string persona_id;
    PresentationMode mode = PresentationMode::BALANCED;
    std::string rationale;  // single sentence
};

// The three sensitivity personas shipped with the toolkit (mirrored at
// data/personas.jsonl).
std::vector<PersonaProfile> default_personas();

// Line-delimited JSON objects {"id": ..., "description": ...}.
std::vector<PersonaProfile> load_personas(const std::string& path);

// Prompts the backend with the persona and the three mode definitions and
// parses the MODE/REASON reply. An unparseable mode after 2 retries is a
// ProtocolError naming the raw reply.
ModeRecommendation recommend_mode(const PersonaProfile& persona, ChatBackend& backend);

// Browsing-log persistence: line-delimited records.
void append_browsing_events(const std::string& path, std::span<const BrowsingEvent> events);
std::vector<BrowsingEvent> load_browsing_events(const std::string& path);

// Events grouped by (consumer, ISO week), values are text ids in log order.
std::map<std::pair<std::int64_t, IsoWeek>, std::vector<std::int64_t>> group_by_consumer_week(
    std::span<const BrowsingEvent> events);

}  // namespace emotone
