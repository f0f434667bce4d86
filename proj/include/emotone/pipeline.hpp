#pragma once

#include <string>

#include "emotone/config.hpp"
#include "emotone/report.hpp"

namespace emotone {

// File layout under the configured output directory. Every artifact is
// line-delimited JSON keyed by text id, so each stage can be re-run and
// diffed independently.
struct ArtifactPaths {
    explicit ArtifactPaths(const std::string& out_dir);

    std::string sample;             // sample.jsonl
    std::string analyzed_raw;       // analyzed_raw.jsonl
    std::string rewrites;           // rewrites.jsonl
    std::string analyzed_balanced;  // analyzed_balanced.jsonl
    std::string analyzed_cool;      // analyzed_cool.jsonl
    std::string fidelity;           // fidelity.jsonl
    std::string fidelity_summary;   // fidelity_summary.json
    std::string weekly;             // weekly.jsonl
    std::string advice;             // advice.jsonl
    std::string recommendations;    // recommendations.jsonl
    std::string evaluation;         // evaluation.json
};

struct StageCounts {
    std::size_t processed = 0;  // records computed in this invocation
    std::size_t reused = 0;     // records already persisted and skipped
    std::size_t flagged = 0;    // validation flags carried in the artifacts
};

// Stage entry points shared by the CLI and the tests. Each is idempotent:
// identical config plus completed upstream artifacts yield byte-identical
// outputs, and already-persisted ids never trigger backend calls.
StageCounts cmd_analyze(const RunConfig& config);
StageCounts cmd_detox(const RunConfig& config);
StageCounts cmd_verify(const RunConfig& config);
StageCounts cmd_weekly(const RunConfig& config);
StageCounts cmd_recommend(const RunConfig& config);
StageCounts cmd_evaluate(const RunConfig& config);
StageCounts cmd_report(const RunConfig& config);

// ReportInputs round-trip through evaluation.json (used by cmd_report).
std::string evaluation_to_json(const ReportInputs& inputs);
ReportInputs evaluation_from_json(const std::string& content);

}  // namespace emotone
