#include "emotone/corpus.hpp"

#include <array>
#include <fstream>
#include <random>
#include <sstream>

#include "emotone/errors.hpp"
#include "emotone/rng.hpp"
#include "emotone/text.hpp"

namespace emotone {

namespace {

constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "World", "Sports", "Business", "SciTech"};

// One RFC-4180 style record: comma delimiter, fields optionally wrapped in
// double quotes, doubled quotes escape a quote, quoted fields may span lines.
// Returns false at end of input.
bool read_record(std::string_view content, std::size_t& pos, std::vector<std::string>& fields) {
    fields.clear();
    const std::size_t n = content.size();
    if (pos >= n) return false;
    std::string field;
    bool quoted = false;
    for (;;) {
        if (pos >= n) {
            fields.push_back(std::move(field));
            return true;
        }
        const char c = content[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < n && content[pos + 1] == '"') {
                    field.push_back('"');
                    pos += 2;
                } else {
                    quoted = false;
                    ++pos;
                }
            } else {
                field.push_back(c);
                ++pos;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
            ++pos;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            ++pos;
        } else if (c == '\n' || c == '\r') {
            fields.push_back(std::move(field));
            if (c == '\r' && pos + 1 < n && content[pos + 1] == '\n') ++pos;
            ++pos;
            return true;
        } else {
            field.push_back(c);
            ++pos;
        }
    }
}

}  // namespace

std::string_view category_name(Category c) {
    return kCategoryNames[static_cast<std::size_t>(c)];
}

Category category_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kCategoryCount; ++i)
        if (kCategoryNames[i] == name) return static_cast<Category>(i);
    throw ContractError("unknown category name: " + std::string(name));
}

std::vector<NewsRecord> parse_corpus(std::string_view content) {
    std::vector<NewsRecord> records;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    std::size_t row = 0;
    while (read_record(content, pos, fields)) {
        ++row;
        if (fields.size() == 1 && trim(fields[0]).empty()) continue;  // blank line
        if (fields.size() != 3)
            throw DomainError("row " + std::to_string(row) + ": expected 3 fields, got " +
                              std::to_string(fields.size()));
        const std::string cls = trim(fields[0]);
        if (cls.size() != 1 || cls[0] < '1' || cls[0] > '4')
            throw DomainError("row " + std::to_string(row) + ": class index '" + cls +
                              "' outside 1-4");
        NewsRecord rec;
        rec.id = static_cast<std::int64_t>(records.size());
        rec.category = static_cast<Category>(cls[0] - '1');
        std::string text = trim(fields[1]);
        const std::string desc = trim(fields[2]);
        if (!text.empty() && !desc.empty()) text += ' ';
        text += desc;
        if (trim(text).empty())
            throw DomainError("row " + std::to_string(row) + ": empty text");
        rec.text = std::move(text);
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<NewsRecord> load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
}

std::vector<NewsRecord> sample_balanced(const std::vector<NewsRecord>& records,
                                        const SamplePlan& plan) {
    if (plan.per_class_count < 1) throw ContractError("per_class_count must be >= 1");
    std::array<std::vector<std::size_t>, kCategoryCount> by_category;
    for (std::size_t i = 0; i < records.size(); ++i)
        by_category[static_cast<std::size_t>(records[i].category)].push_back(i);

    for (std::size_t c = 0; c < kCategoryCount; ++c) {
        if (by_category[c].size() < plan.per_class_count)
            throw DomainError("category " + std::string(kCategoryNames[c]) + " has only " +
                              std::to_string(by_category[c].size()) + " records, short by " +
                              std::to_string(plan.per_class_count - by_category[c].size()));
    }

    std::mt19937_64 gen(plan.seed);
    std::vector<NewsRecord> out;
    out.reserve(kCategoryCount * plan.per_class_count);
    for (std::size_t c = 0; c < kCategoryCount; ++c) {
        const auto& pool = by_category[c];
        for (std::size_t i : sample_without_replacement(gen, pool.size(), plan.per_class_count))
            out.push_back(records[pool[i]]);
    }
    return out;
}

}  // namespace emotone
