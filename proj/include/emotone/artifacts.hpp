#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "emotone/detox.hpp"
#include "emotone/fidelity.hpp"
#include "emotone/metrics.hpp"
#include "emotone/monitor.hpp"

// Line-delimited JSON persistence for the pipeline's intermediate
// artifacts. Every record is keyed by text id so stages can resume without
// re-calling backends; keys serialize in sorted order, which keeps reruns
// byte-identical.

namespace emotone {

struct RewriteRecord {
    std::int64_t id = 0;
    RewriteBundle bundle;
    bool skipped_low_stimulus = false;
};

std::string to_jsonl_line(const NewsRecord& record);
std::string to_jsonl_line(const AnalyzedText& text);
std::string to_jsonl_line(const RewriteRecord& record);
std::string to_jsonl_line(const FidelityRecord& record);
std::string to_jsonl_line(const WeeklySummary& summary);

NewsRecord news_record_from_line(const std::string& line);
AnalyzedText analyzed_text_from_line(const std::string& line);
RewriteRecord rewrite_record_from_line(const std::string& line);
FidelityRecord fidelity_record_from_line(const std::string& line);
WeeklySummary weekly_summary_from_line(const std::string& line);

// Returns an empty vector when the file does not exist; malformed lines are
// DomainErrors naming the line number.
template <typename T>
std::vector<T> load_jsonl(const std::string& path);

void append_lines(const std::string& path, const std::vector<std::string>& lines);

bool file_exists(const std::string& path);

}  // namespace emotone
