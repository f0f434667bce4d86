#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace emotone {

enum class Category { World = 0, Sports, Business, SciTech };

inline constexpr std::size_t kCategoryCount = 4;

std::string_view category_name(Category c);
Category category_from_name(std::string_view name);

struct NewsRecord {
    std::int64_t id = 0;
    Category category = Category::World;
    std::string text;  // title and description joined by a single space
};

struct SamplePlan {
    std::size_t per_class_count = 200;
    std::uint64_t seed = 0;
};

// Reads a comma-delimited file with double-quote quoting and rows of
// (class index 1-4, title, description). Ids are assigned by row order
// starting at 0. Throws DomainError naming the row on any malformed row;
// rows never get silently skipped.
std::vector<NewsRecord> load_corpus(const std::string& path);

// Same parser over an in-memory buffer (used by tests and load_corpus).
std::vector<NewsRecord> parse_corpus(std::string_view content);

// Draws plan.per_class_count records per category, uniformly without
// replacement, using the pinned seeded generator. Output is the World
// block, then Sports, Business, SciTech, each block in draw order;
// deterministic for a fixed seed. Throws DomainError naming the category
// and the shortfall when a category is too small.
std::vector<NewsRecord> sample_balanced(const std::vector<NewsRecord>& records,
                                        const SamplePlan& plan);

}  // namespace emotone
