#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emotone/artifacts.hpp"
#include "emotone/errors.hpp"
#include "emotone/pipeline.hpp"
#include "support/paths.hpp"
#include "support/synth.hpp"

using namespace emotone;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunConfig mock_config(const testsupport::TempDir& dir, const std::string& out_name,
                      std::size_t per_class) {
    RunConfig config;
    config.corpus_path = dir.file("corpus.csv");
    config.per_class_count = per_class;
    config.out_dir = dir.file(out_name);
    config.seed = 20250101;
    config.consumer_count = 3;
    config.texts_per_consumer = 4;
    return config;  // backends default to lexicon/mock
}

}  // namespace

TEST_CASE("analyze produces one populated record per sampled text") {
    testsupport::TempDir dir("analyze");
    testsupport::write_synth_corpus(dir.file("corpus.csv"), 2, 7);
    const RunConfig config = mock_config(dir, "out", 2);

    const StageCounts counts = cmd_analyze(config);
    CHECK(counts.processed == 8);
    CHECK(counts.reused == 0);

    const std::vector<AnalyzedText> analyzed =
        load_jsonl<AnalyzedText>(ArtifactPaths(config.out_dir).analyzed_raw);
    REQUIRE(analyzed.size() == 8);
    for (const AnalyzedText& t : analyzed) {
        CHECK(t.distribution.valid());
        CHECK(t.stimulus >= 0.0);
        CHECK(t.stimulus <= 1.0);
        CHECK(t.ebi >= 1.0 / 6 - 1e-12);
        CHECK(t.ebi <= 1.0 + 1e-12);
        CHECK_FALSE(t.record.text.empty());
    }
}

TEST_CASE("rerunning a completed stage reuses the artifact byte for byte") {
    testsupport::TempDir dir("idempotent");
    testsupport::write_synth_corpus(dir.file("corpus.csv"), 2, 9);
    const RunConfig config = mock_config(dir, "out", 2);

    cmd_analyze(config);
    const ArtifactPaths paths(config.out_dir);
    const std::string first = slurp(paths.analyzed_raw);

    const StageCounts again = cmd_analyze(config);
    CHECK(again.processed == 0);
    CHECK(again.reused == 8);
    CHECK(slurp(paths.analyzed_raw) == first);
}

TEST_CASE("two directories with the same seed get byte-identical artifacts") {
    testsupport::TempDir dir("deterministic");
    testsupport::write_synth_corpus(dir.file("corpus.csv"), 3, 11);
    RunConfig a = mock_config(dir, "out_a", 3);
    RunConfig b = mock_config(dir, "out_b", 3);

    for (const RunConfig* config : {&a, &b}) {
        cmd_analyze(*config);
        cmd_detox(*config);
        cmd_verify(*config);
    }
    for (const char* name :
         {"sample.jsonl", "analyzed_raw.jsonl", "rewrites.jsonl", "fidelity.jsonl"})
        CHECK(slurp(a.out_dir + "/" + name) == slurp(b.out_dir + "/" + name));
}

TEST_CASE("resume from a truncated artifact completes without re-calling done ids") {
    testsupport::TempDir dir("resume");
    testsupport::write_synth_corpus(dir.file("corpus.csv"), 2, 13);
    const RunConfig config = mock_config(dir, "out", 2);

    cmd_analyze(config);
    const ArtifactPaths paths(config.out_dir);
    const std::string full = slurp(paths.analyzed_raw);

    // simulate a crash after 3 records
    std::vector<std::string> lines;
    {
        std::istringstream in(full);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    REQUIRE(lines.size() == 8);
    {
        std::ofstream out(paths.analyzed_raw, std::ios::binary | std::ios::trunc);
        for (std::size_t i = 0; i < 3; ++i) out << lines[i] << '\n';
    }

    const StageCounts counts = cmd_analyze(config);
    CHECK(counts.reused == 3);
    CHECK(counts.processed == 5);
    CHECK(slurp(paths.analyzed_raw) == full);
}

TEST_CASE("detox persists validation statuses and honors the min-stimulus gate") {
    testsupport::TempDir dir("detox_stage");
    testsupport::write_synth_corpus(dir.file("corpus.csv"), 2, 17);

    SUBCASE("default: every text gets both modes") {
        const RunConfig config = mock_config(dir, "out", 2);
        cmd_analyze(config);
        const StageCounts counts = cmd_detox(config);
        CHECK(counts.processed == 8);
        const std::vector<RewriteRecord> rewrites =
            load_jsonl<RewriteRecord>(ArtifactPaths(config.out_dir).rewrites);
        REQUIRE(rewrites.size() == 8);
        for (const RewriteRecord& r : rewrites) {
            CHECK_FALSE(r.skipped_low_stimulus);
            CHECK_FALSE(r.bundle.balanced.empty());
            CHECK_FALSE(r.bundle.cool.empty());
        }
    }
    SUBCASE("min_stimulus gate skips low-stimulus texts") {
        RunConfig config = mock_config(dir, "out_gated", 2);
        config.min_stimulus = 2.0;  // impossible threshold: everything skipped
        cmd_analyze(config);
        cmd_detox(config);
        const std::vector<RewriteRecord> rewrites =
            load_jsonl<RewriteRecord>(ArtifactPaths(config.out_dir).rewrites);
        REQUIRE(rewrites.size() == 8);
        for (const RewriteRecord& r : rewrites) {
            CHECK(r.skipped_low_stimulus);
            CHECK(r.bundle.balanced == r.bundle.original);
            CHECK(r.bundle.cool == r.bundle.original);
        }
    }
}

TEST_CASE("verify computes per-pair fidelity and per-mode summaries") {
    testsupport::TempDir dir("verify_stage");
    testsupport::write_synth_corpus(dir.file("corpus.csv"), 2, 19);
    const RunConfig config = mock_config(dir, "out", 2);
    cmd_analyze(config);
    cmd_detox(config);
    const StageCounts counts = cmd_verify(config);
    CHECK(counts.processed == 16);  // 8 texts x 2 modes

    const ArtifactPaths paths(config.out_dir);
    const std::vector<FidelityRecord> records = load_jsonl<FidelityRecord>(paths.fidelity);
    REQUIRE(records.size() == 16);
    std::set<std::pair<std::int64_t, PresentationMode>> seen;
    for (const FidelityRecord& r : records) {
        CHECK(r.cosine >= -1.0);
        CHECK(r.cosine <= 1.0);
        seen.insert({r.text_id, r.mode});
    }
    CHECK(seen.size() == 16);

    const json summary = json::parse(slurp(paths.fidelity_summary));
    for (const char* mode : {"BALANCED", "COOL"}) {
        REQUIRE(summary.contains(mode));
        const double sum = summary[mode]["entailment_rate"].get<double>() +
                           summary[mode]["neutral_rate"].get<double>() +
                           summary[mode]["contradiction_rate"].get<double>();
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("verify before detox is an error naming the missing stage") {
        RunConfig fresh = mock_config(dir, "out_fresh", 2);
        CHECK_THROWS_WITH_AS(cmd_verify(fresh), doctest::Contains("detox"), DomainError);
    }
}

TEST_CASE("weekly simulates consumers deterministically and draws without replacement") {
    testsupport::TempDir dir("weekly_stage");
    testsupport::write_synth_corpus(dir.file("corpus.csv"), 3, 23);
    const RunConfig config = mock_config(dir, "out", 3);
    cmd_analyze(config);
    const StageCounts counts = cmd_weekly(config);
    CHECK(counts.processed == 3);

    const ArtifactPaths paths(config.out_dir);
    const std::vector<WeeklySummary> weekly = load_jsonl<WeeklySummary>(paths.weekly);
    REQUIRE(weekly.size() == 3);
    for (const WeeklySummary& w : weekly) {
        CHECK(w.n == 4);
        CHECK(w.hir >= 0.0);
        CHECK(w.hir <= 1.0);
        CHECK(w.ebi >= 1.0 / 6 - 1e-12);
        CHECK(w.ebi <= 1.0 + 1e-12);
        CHECK(w.mean_emotions.valid());
    }

    // schema: the serialized line carries the fixed field names
    const std::string first_line = slurp(paths.weekly).substr(0, slurp(paths.weekly).find('\n'));
    for (const char* field :
         {"consumer_id", "n", "mean_stimulus", "hir", "ebi", "emotions", "anger", "surprise"})
        CHECK(first_line.find(field) != std::string::npos);

    const std::string weekly_bytes = slurp(paths.weekly);
    const std::string advice_bytes = slurp(paths.advice);
    CHECK(cmd_weekly(config).reused == 3);
    CHECK(slurp(paths.weekly) == weekly_bytes);
    CHECK(slurp(paths.advice) == advice_bytes);
}

TEST_CASE("recommend emits one record per persona with mock graded ordering") {
    testsupport::TempDir dir("recommend_stage");
    const RunConfig config = mock_config(dir, "out", 2);
    const StageCounts counts = cmd_recommend(config);
    CHECK(counts.processed == 3);

    std::vector<std::string> lines;
    {
        std::istringstream in(slurp(ArtifactPaths(config.out_dir).recommendations));
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(line);
    }
    REQUIRE(lines.size() == 3);
    CHECK(json::parse(lines[0]).at("mode") == "COOL");      // P1 high sensitivity
    CHECK(json::parse(lines[1]).at("mode") == "BALANCED");  // P2 moderate
    CHECK(json::parse(lines[2]).at("mode") == "RAW");       // P3 stimulus-seeking

    CHECK(cmd_recommend(config).reused == 3);
}

TEST_CASE("evaluate composes the full report and is deterministic") {
    testsupport::TempDir dir("evaluate_stage");
    testsupport::write_synth_corpus(dir.file("corpus.csv"), 4, 29);

    RunConfig a = mock_config(dir, "out_a", 4);
    a.texts_per_consumer = 8;
    RunConfig b = mock_config(dir, "out_b", 4);
    b.texts_per_consumer = 8;

    for (const RunConfig* config : {&a, &b}) {
        cmd_analyze(*config);
        cmd_detox(*config);
        cmd_verify(*config);
        cmd_evaluate(*config);
    }

    for (const char* name : {"report.md", "evaluation.json", "fig2_emotion_means.csv",
                             "fig3_scatter.csv", "weekly.jsonl", "advice.jsonl",
                             "recommendations.jsonl", "analyzed_balanced.jsonl",
                             "analyzed_cool.jsonl"})
        CHECK(slurp(a.out_dir + "/" + name) == slurp(b.out_dir + "/" + name));

    const std::string report = slurp(a.out_dir + "/report.md");
    for (int section = 1; section <= 7; ++section)
        CHECK(report.find("## " + std::to_string(section) + ".") != std::string::npos);

    SUBCASE("report subcommand re-emits the identical report") {
        const std::string before = slurp(a.out_dir + "/report.md");
        std::filesystem::remove(a.out_dir + "/report.md");
        cmd_report(a);
        CHECK(slurp(a.out_dir + "/report.md") == before);
    }
    SUBCASE("evaluate without verify output names the missing stage") {
        RunConfig fresh = mock_config(dir, "out_fresh", 4);
        cmd_analyze(fresh);
        cmd_detox(fresh);
        CHECK_THROWS_WITH_AS(cmd_evaluate(fresh), doctest::Contains("verify"), DomainError);
    }
}

TEST_CASE("unreachable endpoints surface transport diagnostics with text context") {
    testsupport::TempDir dir("unreachable");
    testsupport::write_synth_corpus(dir.file("corpus.csv"), 1, 31);
    RunConfig config = mock_config(dir, "out", 1);
    config.classifier.endpoint = "http://127.0.0.1:9/classify";
    config.classifier.timeout_s = 0.2;
    config.classifier.max_retries = 0;
    CHECK_THROWS_WITH_AS(cmd_analyze(config), doctest::Contains("text id"), DomainError);
}
