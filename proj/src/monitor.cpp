#include "emotone/monitor.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emotone/errors.hpp"
#include "emotone/prompts.hpp"
#include "emotone/rng.hpp"
#include "emotone/text.hpp"

namespace emotone {

namespace {

using nlohmann::json;

std::string three_decimals(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// Days since 1970-01-01 -> civil date (Howard Hinnant's algorithm).
void civil_from_days(std::int64_t z, int& year, int& month, int& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const std::int64_t doe = z - era * 146097;
    const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = yoe + era * 400;
    const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const std::int64_t mp = (5 * doy + 2) / 153;
    day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    month = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
    year = static_cast<int>(month <= 2 ? y + 1 : y);
}

std::int64_t days_from_civil(int year, int month, int day) {
    const std::int64_t y = year - (month <= 2 ? 1 : 0);
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const std::int64_t yoe = y - era * 400;
    const std::int64_t doy = (153 * (month > 2 ? month - 3 : month + 9) + 2) / 5 + day - 1;
    const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

// ISO weekday, Monday=1 ... Sunday=7 (1970-01-01 was a Thursday).
int iso_weekday(std::int64_t days) {
    std::int64_t wd = (days + 3) % 7;
    if (wd < 0) wd += 7;
    return static_cast<int>(wd) + 1;
}

bool validate_advice(const std::string& advice, const WeeklySummary& summary) {
    if (trim(advice).empty()) return false;
    std::vector<double> values = {summary.mean_stimulus, summary.hir, summary.ebi};
    for (std::size_t i = 0; i < kEmotionCount; ++i) values.push_back(summary.mean_emotions.at(i));
    for (double v : values) {
        char pct[64], two[64];
        std::snprintf(pct, sizeof(pct), "%.1f", v * 100.0);
        std::snprintf(two, sizeof(two), "%.2f", v);
        if (advice.find(three_decimals(v)) != std::string::npos) return true;
        if (advice.find(pct) != std::string::npos) return true;
        if (advice.find(two) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

std::int64_t parse_timestamp(const std::string& iso8601) {
    int year, month, day, hour, minute, second;
    int consumed = 0;
    if (std::sscanf(iso8601.c_str(), "%d-%d-%dT%d:%d:%d%n", &year, &month, &day, &hour, &minute,
                    &second, &consumed) != 6)
        throw DomainError("unparseable timestamp: " + iso8601);
    const std::string rest = iso8601.substr(consumed);
    std::int64_t offset_s = 0;
    if (rest == "Z" || rest == "z" || rest.empty()) {
        offset_s = 0;
    } else if ((rest[0] == '+' || rest[0] == '-')) {
        int oh = 0, om = 0;
        if (std::sscanf(rest.c_str() + 1, "%d:%d", &oh, &om) < 1)
            throw DomainError("unparseable timezone offset: " + iso8601);
        offset_s = (rest[0] == '+' ? 1 : -1) * (oh * 3600 + om * 60);
    } else {
        throw DomainError("unparseable timestamp suffix: " + iso8601);
    }
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour < 0 || hour > 23 || minute < 0 ||
        minute > 59 || second < 0 || second > 60)
        throw DomainError("timestamp fields out of range: " + iso8601);
    const std::int64_t days = days_from_civil(year, month, day);
    return days * 86400 + hour * 3600 + minute * 60 + second - offset_s;
}

std::string format_timestamp(std::int64_t unix_seconds) {
    std::int64_t days = unix_seconds / 86400;
    std::int64_t rem = unix_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    int year, month, day;
    civil_from_days(days, year, month, day);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", year, month, day,
                  static_cast<int>(rem / 3600), static_cast<int>((rem % 3600) / 60),
                  static_cast<int>(rem % 60));
    return buf;
}

IsoWeek iso_week_utc(std::int64_t unix_seconds) {
    std::int64_t days = unix_seconds / 86400;
    if (unix_seconds % 86400 < 0) days -= 1;
    // The ISO week of a date is the week containing its Thursday.
    const std::int64_t thursday = days - (iso_weekday(days) - 4);
    int year, month, day;
    civil_from_days(thursday, year, month, day);
    const std::int64_t jan1 = days_from_civil(year, 1, 1);
    const int week = static_cast<int>((thursday - jan1) / 7) + 1;
    return {year, week};
}

std::map<std::int64_t, std::vector<AnalyzedText>> simulate_consumers(
    std::span<const AnalyzedText> pool, std::size_t n_consumers, std::size_t per_consumer,
    std::uint64_t seed) {
    if (pool.size() < per_consumer)
        throw DomainError("consumer pool has " + std::to_string(pool.size()) +
                          " texts, need " + std::to_string(per_consumer));
    std::map<std::int64_t, std::vector<AnalyzedText>> out;
    for (std::size_t c = 0; c < n_consumers; ++c) {
        std::mt19937_64 gen(derive_seed(seed, "consumer", c));
        std::vector<AnalyzedText> texts;
        texts.reserve(per_consumer);
        for (std::size_t i : sample_without_replacement(gen, pool.size(), per_consumer))
            texts.push_back(pool[i]);
        out.emplace(static_cast<std::int64_t>(c), std::move(texts));
    }
    return out;
}

WeeklySummary weekly_summary(std::span<const AnalyzedText> texts, std::int64_t consumer_id,
                             double theta, WeeklyEbiMode ebi_mode) {
    if (texts.empty()) throw DomainError("weekly_summary: empty text sequence");
    const CollectionStats stats = aggregate(texts, theta);
    WeeklySummary s;
    s.consumer_id = consumer_id;
    s.n = stats.n;
    s.mean_stimulus = stats.mean_stimulus;
    s.hir = stats.hir;
    s.mean_emotions = stats.mean_distribution;
    s.ebi = ebi_mode == WeeklyEbiMode::of_mean_distribution
                ? emotion_balance_index(stats.mean_distribution)
                : stats.mean_ebi;
    return s;
}

std::string weekly_summary_json(const WeeklySummary& summary) {
    std::ostringstream out;
    out << "{\"consumer_id\": " << summary.consumer_id << ", \"n\": " << summary.n
        << ", \"mean_stimulus\": " << three_decimals(summary.mean_stimulus)
        << ", \"hir\": " << three_decimals(summary.hir)
        << ", \"ebi\": " << three_decimals(summary.ebi) << ", \"emotions\": {";
    for (std::size_t i = 0; i < kEmotionCount; ++i) {
        if (i) out << ", ";
        out << '"' << emotion_name(static_cast<Emotion>(i))
            << "\": " << three_decimals(summary.mean_emotions.at(i));
    }
    out << "}}";
    return out.str();
}

Prompts advice_prompt(const WeeklySummary& summary) {
    Prompts p;
    p.system_prompt = std::string(prompts::kAdviceSystem);
    p.user_prompt = prompts::wrap_block(prompts::kAdviceSummaryLabel, weekly_summary_json(summary));
    p.user_prompt += "\n";
    p.user_prompt += prompts::kAdviceUserFooter;
    return p;
}

AdviceResult generate_advice(const WeeklySummary& summary, ChatBackend& backend) {
    const Prompts p = advice_prompt(summary);
    ChatRequest request;
    request.system = p.system_prompt;
    request.user = p.user_prompt;
    request.temperature = kMonitorTemperature;
    request.max_tokens = kAdviceMaxTokens;

    std::string last;
    for (int attempt = 0; attempt < 3; ++attempt) {
        last = trim(backend.complete(request));
        if (validate_advice(last, summary)) return {last, false};
    }
    return {last, true};
}

std::vector<PersonaProfile> default_personas() {
    return {
        {"P1",
         "A high-sensitivity reader who is sensitive to anxiety and anger and prone to "
         "doom-scrolling late into the night."},
        {"P2", "A moderate reader who wants both the facts and a sense of the emotional tone."},
        {"P3",
         "A stimulus-seeking reader who enjoys bold, dramatic expression while also valuing "
         "accuracy."},
    };
}

std::vector<PersonaProfile> load_personas(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open personas file: " + path);
    std::vector<PersonaProfile> personas;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        json row;
        try {
            row = json::parse(line);
        } catch (const json::parse_error& e) {
            throw DomainError("personas line " + std::to_string(lineno) + ": " + e.what());
        }
        PersonaProfile p;
        p.id = row.at("id").get<std::string>();
        p.description = row.at("description").get<std::string>();
        if (trim(p.description).empty())
            throw DomainError("personas line " + std::to_string(lineno) + ": empty description");
        personas.push_back(std::move(p));
    }
    return personas;
}

ModeRecommendation recommend_mode(const PersonaProfile& persona, ChatBackend& backend) {
    if (trim(persona.description).empty())
        throw ContractError("recommend_mode: persona description is empty");
    ChatRequest request;
    request.system = std::string(prompts::kRecommendSystem);
    request.user = prompts::wrap_block(prompts::kPersonaLabel, persona.description);
    request.temperature = kMonitorTemperature;
    request.max_tokens = kAdviceMaxTokens;

    std::string last;
    for (int attempt = 0; attempt < 3; ++attempt) {
        last = trim(backend.complete(request));
        std::istringstream lines(last);
        std::string line, mode_text, reason_text;
        while (std::getline(lines, line)) {
            if (line.rfind("MODE:", 0) == 0) mode_text = trim(line.substr(5));
            if (line.rfind("REASON:", 0) == 0) reason_text = trim(line.substr(7));
        }
        if (mode_text.empty() || reason_text.empty()) continue;
        PresentationMode mode;
        try {
            mode = mode_from_name(mode_text);
        } catch (const ContractError&) {
            continue;
        }
        // Keep the rationale to one sentence under the shared segmenter.
        const std::vector<std::string> sentences = split_sentences(reason_text);
        if (sentences.empty()) continue;
        return {persona.id, mode, sentences.front()};
    }
    throw ProtocolError("recommend_mode: unparseable reply after retries: " + last);
}

void append_browsing_events(const std::string& path, std::span<const BrowsingEvent> events) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw DomainError("cannot open browsing log for append: " + path);
    for (const BrowsingEvent& e : events) {
        json row = {{"consumer_id", e.consumer_id},
                    {"text_id", e.text_id},
                    {"timestamp", format_timestamp(e.timestamp)},
                    {"mode", std::string(mode_name(e.mode_viewed))}};
        out << row.dump() << '\n';
    }
}

std::vector<BrowsingEvent> load_browsing_events(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open browsing log: " + path);
    std::vector<BrowsingEvent> events;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            const json row = json::parse(line);
            BrowsingEvent e;
            e.consumer_id = row.at("consumer_id").get<std::int64_t>();
            e.text_id = row.at("text_id").get<std::int64_t>();
            e.timestamp = parse_timestamp(row.at("timestamp").get<std::string>());
            e.mode_viewed = mode_from_name(row.at("mode").get<std::string>());
            events.push_back(e);
        } catch (const json::exception& e) {
            throw DomainError("browsing log line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return events;
}

std::map<std::pair<std::int64_t, IsoWeek>, std::vector<std::int64_t>> group_by_consumer_week(
    std::span<const BrowsingEvent> events) {
    std::map<std::pair<std::int64_t, IsoWeek>, std::vector<std::int64_t>> groups;
    for (const BrowsingEvent& e : events)
        groups[{e.consumer_id, iso_week_utc(e.timestamp)}].push_back(e.text_id);
    return groups;
}

}  // namespace emotone
