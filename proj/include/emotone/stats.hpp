#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emotone/detox.hpp"
#include "emotone/metrics.hpp"

namespace emotone {

struct PairedTResult {
    double t = 0.0;
    double p_raw = 0.0;
    double d = 0.0;  // paired Cohen's d_z = mean(diff)/sd(diff) = t/sqrt(n)
};

struct StatTestResult {
    std::string metric;      // "S", "EBI" or "FRE"
    std::string comparison;  // "RAW vs BAL" / "RAW vs COOL"
    double t = 0.0;
    double p_raw = 0.0;
    double p_adjusted = 0.0;
    double d = 0.0;
};

// Two-tailed paired t-test on diffs = baseline - treatment, sd with n-1
// denominator, p from the Student-t CDF with n-1 degrees of freedom.
// Zero-variance diffs are a DomainError, a length mismatch a ContractError.
PairedTResult paired_t(std::span<const double> baseline, std::span<const double> treatment);

// Step-down Holm adjustment, mapped back to input order.
std::vector<double> holm_adjust(std::span<const double> p_values);

// 100 * (raw - treated) / raw; negative for increases, raw = 0 a DomainError.
double percent_reduction(double raw, double treated);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

// Pearson r of per-text stimulus reduction against embedding similarity.
double reduction_similarity_correlation(std::span<const double> reductions,
                                        std::span<const double> similarities);

// Student-t distribution via the regularized incomplete beta function
// (continued-fraction evaluation, accuracy target 1e-10).
double student_t_cdf(double t, double df);
double student_t_two_tailed_p(double t, double df);
double regularized_incomplete_beta(double a, double b, double x);

using ConditionTexts = std::map<PresentationMode, std::vector<AnalyzedText>>;

struct CategoryRow {
    Category category = Category::World;
    double mean_raw = 0.0;
    double mean_balanced = 0.0;
    double mean_cool = 0.0;
    double delta_balanced_pct = 0.0;
    double delta_cool_pct = 0.0;
};

// Per-category mean stimulus per condition plus percent reductions against
// RAW. All conditions must cover the same text ids.
std::vector<CategoryRow> category_breakdown(const ConditionTexts& by_condition);

// Componentwise mean emotion probabilities per condition (figure data).
std::map<PresentationMode, EmotionDistribution> emotion_delta(const ConditionTexts& by_condition);

// The six paired comparisons (S, EBI, FRE x BALANCED, COOL) under one Holm
// family, paired by text id.
std::vector<StatTestResult> run_stat_tests(const ConditionTexts& by_condition);

// Published reference rows used by the report's effect-size self-check
// (|d - t/sqrt(n)| < 0.001 with n = 800).
struct ReferenceTestRow {
    const char* metric;
    const char* comparison;
    double t;
    double d;
};

inline constexpr std::array<ReferenceTestRow, 6> kReferenceTestRows = {{
    {"S", "RAW vs BAL", 5.93, 0.210},
    {"S", "RAW vs COOL", 7.97, 0.282},
    {"EBI", "RAW vs BAL", -4.26, -0.151},
    {"EBI", "RAW vs COOL", -5.67, -0.201},
    {"FRE", "RAW vs BAL", 17.23, 0.609},
    {"FRE", "RAW vs COOL", 9.60, 0.339},
}};

inline constexpr double kReferenceTestN = 800.0;

}  // namespace emotone
