#include "emotone/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "emotone/errors.hpp"

namespace emotone {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

void require_section(bool present, const char* name) {
    if (!present) throw DomainError(std::string("missing report section: ") + name);
}

void check_inputs(const ReportInputs& in) {
    require_section(in.primary_metrics.size() == 3, "primary metrics");
    require_section(!in.stat_tests.empty(), "paired tests");
    require_section(!in.category_rows.empty(), "category breakdown");
    require_section(!in.fidelity.empty(), "semantic preservation");
    require_section(!in.weekly.empty(), "weekly summaries");
    require_section(!in.advice.empty(), "personalized advice");
    require_section(!in.recommendations.empty(), "mode recommendations");
    require_section(!in.emotion_means.empty(), "emotion means");
    require_section(!in.scatter.empty(), "reduction-similarity scatter");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << content;
}

}  // namespace

std::string render_report(const ReportInputs& in) {
    check_inputs(in);
    std::ostringstream md;
    md << "# Evaluation Report\n";

    md << "\n## 1. Primary Metrics across Presentation Modes\n\n";
    md << "| Mode | S_mean | HIR | EBI | FRE |\n|---|---|---|---|---|\n";
    for (const auto& [mode, stats] : in.primary_metrics) {
        md << "| " << mode_name(mode) << " | " << fmt("%.3f", stats.mean_stimulus) << " | "
           << fmt("%.3f", stats.hir) << " | " << fmt("%.3f", stats.mean_ebi) << " | "
           << fmt("%.2f", stats.mean_fre) << " |\n";
    }

    md << "\n## 2. Paired t-Tests (Holm correction, n=" << in.primary_metrics.begin()->second.n
       << ")\n\n";
    md << "| Metric | Comparison | t | p_adj | d |\n|---|---|---|---|---|\n";
    for (const StatTestResult& r : in.stat_tests) {
        md << "| " << r.metric << " | " << r.comparison << " | " << fmt("%.2f", r.t) << " | "
           << fmt("%.3g", r.p_adjusted) << " | " << fmt("%.3f", r.d) << " |\n";
    }

    md << "\n## 3. Mean Stimulus Score by Category\n\n";
    md << "| Category | S_RAW | S_BAL | S_COOL | dBAL% | dCOOL% |\n|---|---|---|---|---|---|\n";
    for (const CategoryRow& row : in.category_rows) {
        md << "| " << category_name(row.category) << " | " << fmt("%.3f", row.mean_raw) << " | "
           << fmt("%.3f", row.mean_balanced) << " | " << fmt("%.3f", row.mean_cool) << " | "
           << fmt("%.1f", row.delta_balanced_pct) << " | " << fmt("%.1f", row.delta_cool_pct)
           << " |\n";
    }

    md << "\n## 4. Semantic Preservation\n\n";
    md << "| Verification method |";
    for (const auto& [mode, summary] : in.fidelity) md << " " << mode_name(mode) << " |";
    md << "\n|---|";
    for (std::size_t i = 0; i < in.fidelity.size(); ++i) md << "---|";
    md << "\n";
    const auto fidelity_row = [&](const char* label, auto getter) {
        md << "| " << label << " |";
        for (const auto& [mode, summary] : in.fidelity) md << " " << getter(summary) << " |";
        md << "\n";
    };
    fidelity_row("Embedding similarity (mean)",
                 [&](const FidelitySummary& s) { return fmt("%.3f", s.mean_cosine); });
    fidelity_row("NLI entailment rate",
                 [&](const FidelitySummary& s) { return fmt("%.1f%%", s.entailment_rate * 100.0); });
    fidelity_row("NLI neutral rate",
                 [&](const FidelitySummary& s) { return fmt("%.1f%%", s.neutral_rate * 100.0); });
    fidelity_row("NLI contradiction rate", [&](const FidelitySummary& s) {
        return fmt("%.1f%%", s.contradiction_rate * 100.0);
    });
    md << "\nReduction-similarity correlation (Pearson r):";
    for (const auto& [mode, r] : in.reduction_similarity_r)
        md << " " << mode_name(mode) << " = " << fmt("%.3f", r) << ";";
    md << "\n";

    md << "\n## 5. Weekly Summary of Pseudo-Consumers\n\n";
    md << "| Consumer ID | S_mean | HIR | EBI | anger |\n|---|---|---|---|---|\n";
    for (const WeeklySummary& w : in.weekly) {
        md << "| " << w.consumer_id << " | " << fmt("%.3f", w.mean_stimulus) << " | "
           << fmt("%.2f", w.hir) << " | " << fmt("%.3f", w.ebi) << " | "
           << fmt("%.3f", w.mean_emotions[Emotion::anger]) << " |\n";
    }

    md << "\n## 6. Personalized Advice\n\n";
    md << "| ID | Advice |\n|---|---|\n";
    for (const AdviceRow& a : in.advice) {
        md << "| " << a.consumer_id << " | " << a.advice << (a.flagged ? " *(flagged)*" : "")
           << " |\n";
    }

    md << "\n## 7. Mode Recommendations by Persona\n\n";
    md << "| ID | Rec. | Rationale |\n|---|---|---|\n";
    for (const ModeRecommendation& r : in.recommendations)
        md << "| " << r.persona_id << " | " << mode_name(r.mode) << " | " << r.rationale << " |\n";

    md << "\n## Self-check: effect-size consistency of reference results\n\n";
    md << "| Metric | Comparison | t | d | t/sqrt(n) | diff | status |\n"
       << "|---|---|---|---|---|---|---|\n";
    for (const ReferenceTestRow& row : kReferenceTestRows) {
        const double derived = row.t / std::sqrt(kReferenceTestN);
        const double diff = std::fabs(row.d - derived);
        md << "| " << row.metric << " | " << row.comparison << " | " << fmt("%.2f", row.t) << " | "
           << fmt("%.3f", row.d) << " | " << fmt("%.4f", derived) << " | " << fmt("%.4f", diff)
           << " | " << (diff < 0.001 ? "PASS" : "FAIL") << " |\n";
    }
    return md.str();
}

ReportFiles emit_report(const ReportInputs& in, const std::string& out_dir) {
    const std::string report = render_report(in);
    std::filesystem::create_directories(out_dir);

    ReportFiles files;
    files.report_path = out_dir + "/report.md";
    write_file(files.report_path, report);

    std::ostringstream fig2;
    fig2 << "condition,anger,fear,sadness,joy,love,surprise\n";
    for (const auto& [mode, dist] : in.emotion_means) {
        fig2 << mode_name(mode);
        for (std::size_t i = 0; i < kEmotionCount; ++i) fig2 << "," << fmt("%.6f", dist.at(i));
        fig2 << "\n";
    }
    files.emotion_means_path = out_dir + "/fig2_emotion_means.csv";
    write_file(files.emotion_means_path, fig2.str());

    std::ostringstream fig3;
    fig3 << "mode,text_id,stimulus_reduction,similarity\n";
    for (const auto& [mode, points] : in.scatter)
        for (const ScatterPoint& p : points)
            fig3 << mode_name(mode) << "," << p.text_id << "," << fmt("%.6f", p.reduction) << ","
                 << fmt("%.6f", p.similarity) << "\n";
    files.scatter_path = out_dir + "/fig3_scatter.csv";
    write_file(files.scatter_path, fig3.str());
    return files;
}

}  // namespace emotone
