#include "emotone/artifacts.hpp"

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "emotone/errors.hpp"
#include "emotone/text.hpp"

namespace emotone {

namespace {

using nlohmann::json;

json distribution_to_json(const EmotionDistribution& d) {
    json out;
    for (Emotion e : kEmotions) out[std::string(emotion_name(e))] = d[e];
    return out;
}

EmotionDistribution distribution_from_json(const json& j) {
    std::array<double, kEmotionCount> raw{};
    for (Emotion e : kEmotions)
        raw[static_cast<std::size_t>(e)] = j.at(std::string(emotion_name(e))).get<double>();
    return EmotionDistribution::from_values(raw);
}

template <typename T, typename Fn>
std::vector<T> load_lines(const std::string& path, Fn parse) {
    std::vector<T> out;
    if (!file_exists(path)) return out;
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open artifact file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        try {
            out.push_back(parse(line));
        } catch (const std::exception& e) {
            throw DomainError(path + " line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

std::string to_jsonl_line(const NewsRecord& record) {
    const json j = {{"id", record.id},
                    {"category", std::string(category_name(record.category))},
                    {"text", record.text}};
    return j.dump();
}

NewsRecord news_record_from_line(const std::string& line) {
    const json j = json::parse(line);
    NewsRecord r;
    r.id = j.at("id").get<std::int64_t>();
    r.category = category_from_name(j.at("category").get<std::string>());
    r.text = j.at("text").get<std::string>();
    return r;
}

std::string to_jsonl_line(const AnalyzedText& text) {
    const json j = {{"id", text.record.id},
                    {"category", std::string(category_name(text.record.category))},
                    {"text", text.record.text},
                    {"distribution", distribution_to_json(text.distribution)},
                    {"stimulus", text.stimulus},
                    {"ebi", text.ebi},
                    {"fre", text.fre}};
    return j.dump();
}

AnalyzedText analyzed_text_from_line(const std::string& line) {
    const json j = json::parse(line);
    AnalyzedText t;
    t.record.id = j.at("id").get<std::int64_t>();
    t.record.category = category_from_name(j.at("category").get<std::string>());
    t.record.text = j.at("text").get<std::string>();
    t.distribution = distribution_from_json(j.at("distribution"));
    t.stimulus = j.at("stimulus").get<double>();
    t.ebi = j.at("ebi").get<double>();
    t.fre = j.at("fre").get<double>();
    return t;
}

std::string to_jsonl_line(const RewriteRecord& record) {
    const json j = {{"id", record.id},
                    {"original", record.bundle.original},
                    {"balanced", record.bundle.balanced},
                    {"cool", record.bundle.cool},
                    {"balanced_status", std::string(rewrite_status_name(record.bundle.balanced_status))},
                    {"cool_status", std::string(rewrite_status_name(record.bundle.cool_status))},
                    {"skipped_low_stimulus", record.skipped_low_stimulus}};
    return j.dump();
}

RewriteRecord rewrite_record_from_line(const std::string& line) {
    const json j = json::parse(line);
    RewriteRecord r;
    r.id = j.at("id").get<std::int64_t>();
    r.bundle.original = j.at("original").get<std::string>();
    r.bundle.balanced = j.at("balanced").get<std::string>();
    r.bundle.cool = j.at("cool").get<std::string>();
    r.bundle.balanced_status = rewrite_status_from_name(j.at("balanced_status").get<std::string>());
    r.bundle.cool_status = rewrite_status_from_name(j.at("cool_status").get<std::string>());
    r.skipped_low_stimulus = j.value("skipped_low_stimulus", false);
    return r;
}

std::string to_jsonl_line(const FidelityRecord& record) {
    const json j = {{"id", record.text_id},
                    {"mode", std::string(mode_name(record.mode))},
                    {"cosine", record.cosine},
                    {"nli", std::string(nli_label_name(record.nli_label))}};
    return j.dump();
}

FidelityRecord fidelity_record_from_line(const std::string& line) {
    const json j = json::parse(line);
    FidelityRecord r;
    r.text_id = j.at("id").get<std::int64_t>();
    r.mode = mode_from_name(j.at("mode").get<std::string>());
    r.cosine = j.at("cosine").get<double>();
    r.nli_label = nli_label_from_name(j.at("nli").get<std::string>());
    return r;
}

std::string to_jsonl_line(const WeeklySummary& summary) {
    const json j = {{"consumer_id", summary.consumer_id},
                    {"n", summary.n},
                    {"mean_stimulus", summary.mean_stimulus},
                    {"hir", summary.hir},
                    {"ebi", summary.ebi},
                    {"emotions", distribution_to_json(summary.mean_emotions)}};
    return j.dump();
}

WeeklySummary weekly_summary_from_line(const std::string& line) {
    const json j = json::parse(line);
    WeeklySummary s;
    s.consumer_id = j.at("consumer_id").get<std::int64_t>();
    s.n = j.at("n").get<std::size_t>();
    s.mean_stimulus = j.at("mean_stimulus").get<double>();
    s.hir = j.at("hir").get<double>();
    s.ebi = j.at("ebi").get<double>();
    s.mean_emotions = distribution_from_json(j.at("emotions"));
    return s;
}

template <typename T>
std::vector<T> load_jsonl(const std::string& path);

template <>
std::vector<NewsRecord> load_jsonl(const std::string& path) {
    return load_lines<NewsRecord>(path, news_record_from_line);
}
template <>
std::vector<AnalyzedText> load_jsonl(const std::string& path) {
    return load_lines<AnalyzedText>(path, analyzed_text_from_line);
}
template <>
std::vector<RewriteRecord> load_jsonl(const std::string& path) {
    return load_lines<RewriteRecord>(path, rewrite_record_from_line);
}
template <>
std::vector<FidelityRecord> load_jsonl(const std::string& path) {
    return load_lines<FidelityRecord>(path, fidelity_record_from_line);
}
template <>
std::vector<WeeklySummary> load_jsonl(const std::string& path) {
    return load_lines<WeeklySummary>(path, weekly_summary_from_line);
}

void append_lines(const std::string& path, const std::vector<std::string>& lines) {
    if (lines.empty()) return;
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw DomainError("cannot open artifact file for append: " + path);
    for (const std::string& line : lines) out << line << '\n';
}

bool file_exists(const std::string& path) {
    std::error_code ec;
    return std::filesystem::exists(path, ec);
}

}  // namespace emotone
