#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "emotone/fidelity.hpp"
#include "emotone/metrics.hpp"
#include "emotone/monitor.hpp"
#include "emotone/stats.hpp"

namespace emotone {

struct ScatterPoint {
    std::int64_t text_id = 0;
    double reduction = 0.0;   // S_RAW - S_mode
    double similarity = 0.0;  // embedding cosine
};

struct AdviceRow {
    std::int64_t consumer_id = 0;
    std::string advice;
    bool flagged = false;
};

// Everything the report needs, computed upstream. emit_report checks each
// section for presence and throws DomainError naming the missing one.
struct ReportInputs {
    std::map<PresentationMode, CollectionStats> primary_metrics;            // section 1
    std::vector<StatTestResult> stat_tests;                                 // section 2
    std::vector<CategoryRow> category_rows;                                 // section 3
    std::map<PresentationMode, FidelitySummary> fidelity;                   // section 4
    std::vector<WeeklySummary> weekly;                                      // section 5
    std::vector<AdviceRow> advice;                                          // section 6
    std::vector<ModeRecommendation> recommendations;                        // section 7
    std::map<PresentationMode, EmotionDistribution> emotion_means;          // fig 2
    std::map<PresentationMode, std::vector<ScatterPoint>> scatter;          // fig 3
    std::map<PresentationMode, double> reduction_similarity_r;
};

struct ReportFiles {
    std::string report_path;
    std::string emotion_means_path;
    std::string scatter_path;
};

// Writes report.md, fig2_emotion_means.csv and fig3_scatter.csv under
// out_dir with deterministic formatting and field ordering.
ReportFiles emit_report(const ReportInputs& inputs, const std::string& out_dir);

// The rendered report document (exposed for tests).
std::string render_report(const ReportInputs& inputs);

}  // namespace emotone
