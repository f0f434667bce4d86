#include "emotone/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "emotone/errors.hpp"

namespace emotone {

namespace {

// Continued fraction for the incomplete beta function (Lentz's method).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-14;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

double mean_of(std::span<const double> xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

std::vector<double> metric_values(const std::vector<AnalyzedText>& texts,
                                  const std::string& metric) {
    std::vector<double> out;
    out.reserve(texts.size());
    for (const AnalyzedText& t : texts) {
        if (metric == "S")
            out.push_back(t.stimulus);
        else if (metric == "EBI")
            out.push_back(t.ebi);
        else
            out.push_back(t.fre);
    }
    return out;
}

void require_same_ids(const ConditionTexts& by_condition) {
    const auto raw = by_condition.find(PresentationMode::RAW);
    if (raw == by_condition.end()) throw ContractError("missing RAW condition");
    for (const auto& [mode, texts] : by_condition) {
        if (texts.size() != raw->second.size())
            throw ContractError("conditions cover different text counts");
        for (std::size_t i = 0; i < texts.size(); ++i)
            if (texts[i].record.id != raw->second[i].record.id)
                throw ContractError("conditions cover different text ids");
    }
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw ContractError("incomplete beta: a, b must be positive");
    if (x < 0.0 || x > 1.0) throw ContractError("incomplete beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    // The continued fraction converges fast for x < (a+1)/(a+b+2).
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_tailed_p(double t, double df) {
    if (!(df > 0.0)) throw ContractError("student t: df must be positive");
    if (t == 0.0) return 1.0;
    return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

double student_t_cdf(double t, double df) {
    const double p = student_t_two_tailed_p(t, df);
    return t >= 0.0 ? 1.0 - p / 2.0 : p / 2.0;
}

PairedTResult paired_t(std::span<const double> baseline, std::span<const double> treatment) {
    if (baseline.size() != treatment.size())
        throw ContractError("paired_t: baseline and treatment lengths differ");
    const std::size_t n = baseline.size();
    if (n < 2) throw DomainError("paired_t: need at least 2 pairs");

    std::vector<double> diffs(n);
    for (std::size_t i = 0; i < n; ++i) diffs[i] = baseline[i] - treatment[i];
    const double mean = mean_of(diffs);
    double ss = 0.0;
    for (double d : diffs) ss += (d - mean) * (d - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0)) throw DomainError("paired_t: zero-variance differences");

    PairedTResult r;
    r.d = mean / sd;
    r.t = r.d * std::sqrt(static_cast<double>(n));
    r.p_raw = student_t_two_tailed_p(r.t, static_cast<double>(n - 1));
    return r;
}

std::vector<double> holm_adjust(std::span<const double> p_values) {
    const std::size_t m = p_values.size();
    for (double p : p_values)
        if (!(p >= 0.0 && p <= 1.0)) throw ContractError("holm_adjust: p outside [0,1]");

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });

    std::vector<double> adjusted(m);
    double running_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double scaled = static_cast<double>(m - i) * p_values[order[i]];
        running_max = std::max(running_max, scaled);
        adjusted[order[i]] = std::min(1.0, running_max);
    }
    return adjusted;
}

double percent_reduction(double raw, double treated) {
    if (raw == 0.0) throw DomainError("percent_reduction: raw value is zero");
    return 100.0 * (raw - treated) / raw;
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ContractError("pearson: length mismatch");
    if (x.size() < 2) throw DomainError("pearson: need at least 2 points");
    const double mx = mean_of(x);
    const double my = mean_of(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw DomainError("pearson: zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double reduction_similarity_correlation(std::span<const double> reductions,
                                        std::span<const double> similarities) {
    return pearson_correlation(reductions, similarities);
}

std::vector<CategoryRow> category_breakdown(const ConditionTexts& by_condition) {
    require_same_ids(by_condition);
    const std::vector<AnalyzedText>& raw = by_condition.at(PresentationMode::RAW);
    const std::vector<AnalyzedText>& bal = by_condition.at(PresentationMode::BALANCED);
    const std::vector<AnalyzedText>& cool = by_condition.at(PresentationMode::COOL);

    std::vector<CategoryRow> rows;
    for (std::size_t c = 0; c < kCategoryCount; ++c) {
        const Category cat = static_cast<Category>(c);
        double sum_raw = 0.0, sum_bal = 0.0, sum_cool = 0.0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i].record.category != cat) continue;
            sum_raw += raw[i].stimulus;
            sum_bal += bal[i].stimulus;
            sum_cool += cool[i].stimulus;
            ++n;
        }
        if (n == 0) continue;
        CategoryRow row;
        row.category = cat;
        row.mean_raw = sum_raw / static_cast<double>(n);
        row.mean_balanced = sum_bal / static_cast<double>(n);
        row.mean_cool = sum_cool / static_cast<double>(n);
        row.delta_balanced_pct = percent_reduction(row.mean_raw, row.mean_balanced);
        row.delta_cool_pct = percent_reduction(row.mean_raw, row.mean_cool);
        rows.push_back(row);
    }
    return rows;
}

std::map<PresentationMode, EmotionDistribution> emotion_delta(const ConditionTexts& by_condition) {
    require_same_ids(by_condition);
    std::map<PresentationMode, EmotionDistribution> means;
    for (const auto& [mode, texts] : by_condition) means[mode] = mean_distribution(texts);
    return means;
}

std::vector<StatTestResult> run_stat_tests(const ConditionTexts& by_condition) {
    require_same_ids(by_condition);
    const std::vector<AnalyzedText>& raw = by_condition.at(PresentationMode::RAW);

    std::vector<StatTestResult> results;
    std::vector<double> raw_ps;
    for (const char* metric : {"S", "EBI", "FRE"}) {
        for (PresentationMode mode : {PresentationMode::BALANCED, PresentationMode::COOL}) {
            const std::vector<double> baseline = metric_values(raw, metric);
            const std::vector<double> treatment = metric_values(by_condition.at(mode), metric);
            const PairedTResult r = paired_t(baseline, treatment);
            StatTestResult row;
            row.metric = metric;
            row.comparison = mode == PresentationMode::BALANCED ? "RAW vs BAL" : "RAW vs COOL";
            row.t = r.t;
            row.p_raw = r.p_raw;
            row.d = r.d;
            results.push_back(std::move(row));
            raw_ps.push_back(r.p_raw);
        }
    }
    const std::vector<double> adjusted = holm_adjust(raw_ps);
    for (std::size_t i = 0; i < results.size(); ++i) results[i].p_adjusted = adjusted[i];
    return results;
}

}  // namespace emotone
