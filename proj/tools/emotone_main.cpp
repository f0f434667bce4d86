#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "emotone/config.hpp"
#include "emotone/pipeline.hpp"

namespace {

struct CliOverrides {
    std::optional<std::string> config_path;
    std::optional<std::string> corpus;
    std::optional<std::uint64_t> seed;
    std::optional<double> theta;
    std::optional<std::size_t> per_class;
    std::optional<std::string> out_dir;
    std::optional<double> min_stimulus;
    bool mock_backends = false;
    bool allow_flagged = false;
    std::optional<std::string> classifier_endpoint;
    std::optional<std::string> chat_endpoint;
    std::optional<std::string> embedding_endpoint;
    std::optional<std::string> nli_endpoint;
    std::optional<std::string> personas;
    std::optional<std::string> browsing_log;
    std::optional<std::size_t> consumers;
    std::optional<std::size_t> per_consumer;
};

emotone::RunConfig resolve_config(const CliOverrides& o) {
    emotone::RunConfig config;
    if (o.config_path) config = emotone::load_config(*o.config_path);
    if (o.corpus) config.corpus_path = *o.corpus;
    if (o.seed) config.seed = *o.seed;
    if (o.theta) config.theta = *o.theta;
    if (o.per_class) config.per_class_count = *o.per_class;
    if (o.out_dir) config.out_dir = *o.out_dir;
    if (o.min_stimulus) config.min_stimulus = *o.min_stimulus;
    if (o.allow_flagged) config.allow_flagged = true;
    if (o.classifier_endpoint) config.classifier.endpoint = *o.classifier_endpoint;
    if (o.chat_endpoint) config.chat.endpoint = *o.chat_endpoint;
    if (o.embedding_endpoint) config.embedding.endpoint = *o.embedding_endpoint;
    if (o.nli_endpoint) config.nli.endpoint = *o.nli_endpoint;
    if (o.personas) config.personas_path = *o.personas;
    if (o.browsing_log) config.browsing_log_path = *o.browsing_log;
    if (o.consumers) config.consumer_count = *o.consumers;
    if (o.per_consumer) config.texts_per_consumer = *o.per_consumer;
    if (o.mock_backends) {
        config.classifier.endpoint = "lexicon";
        config.chat.endpoint = "mock";
        config.embedding.endpoint = "mock";
        config.nli.endpoint = "mock";
    }
    return config;
}

int report_counts(const char* stage, const emotone::StageCounts& counts, bool allow_flagged) {
    std::cout << stage << ": " << counts.processed << " processed, " << counts.reused
              << " reused";
    if (counts.flagged > 0) std::cout << ", " << counts.flagged << " flagged";
    std::cout << "\n";
    if (counts.flagged > 0 && !allow_flagged) {
        std::cerr << stage << ": " << counts.flagged
                  << " flagged validation status(es); rerun with --allow-flagged to accept\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Emotional-tone analysis and softening pipeline for news text"};
    app.require_subcommand(1);

    CliOverrides o;
    app.add_option("--config", o.config_path, "JSON config file (flags override its values)");
    app.add_option("--corpus", o.corpus, "corpus CSV path (class index, title, description)");
    app.add_option("--seed", o.seed, "master seed; stage seeds derive from it");
    app.add_option("--theta", o.theta, "high-impact threshold in [0,1]");
    app.add_option("--per-class", o.per_class, "sampled records per category");
    app.add_option("--out-dir", o.out_dir, "artifact output directory");
    app.add_option("--min-stimulus", o.min_stimulus,
                   "only rewrite texts with stimulus >= this value (default 0: rewrite all)");
    app.add_flag("--mock-backends", o.mock_backends,
                 "force the offline deterministic backends for all four endpoints");
    app.add_flag("--allow-flagged", o.allow_flagged,
                 "exit 0 even when validation statuses were flagged");
    app.add_option("--classifier-endpoint", o.classifier_endpoint,
                   "classifier URL or 'lexicon'");
    app.add_option("--chat-endpoint", o.chat_endpoint, "chat URL or 'mock'");
    app.add_option("--embedding-endpoint", o.embedding_endpoint, "embedding URL or 'mock'");
    app.add_option("--nli-endpoint", o.nli_endpoint, "NLI URL or 'mock'");
    app.add_option("--personas", o.personas, "personas JSONL (default: built-in three)");
    app.add_option("--browsing-log", o.browsing_log,
                   "browsing-event JSONL; replaces pseudo-consumer simulation");
    app.add_option("--consumers", o.consumers, "number of simulated consumers");
    app.add_option("--per-consumer", o.per_consumer, "texts drawn per simulated consumer");

    auto* analyze = app.add_subcommand("analyze", "sample the corpus and score every text");
    auto* detox = app.add_subcommand("detox", "rewrite sampled texts into BALANCED and COOL");
    auto* verify = app.add_subcommand("verify", "check semantic preservation of the rewrites");
    auto* weekly = app.add_subcommand("weekly", "weekly consumer summaries and advice");
    auto* recommend = app.add_subcommand("recommend", "persona-based mode recommendations");
    auto* evaluate = app.add_subcommand("evaluate", "run the statistical evaluation and report");
    auto* report = app.add_subcommand("report", "re-emit the report from evaluation.json");

    CLI11_PARSE(app, argc, argv);

    try {
        const emotone::RunConfig config = resolve_config(o);
        if (analyze->parsed())
            return report_counts("analyze", emotone::cmd_analyze(config), config.allow_flagged);
        if (detox->parsed())
            return report_counts("detox", emotone::cmd_detox(config), config.allow_flagged);
        if (verify->parsed())
            return report_counts("verify", emotone::cmd_verify(config), config.allow_flagged);
        if (weekly->parsed())
            return report_counts("weekly", emotone::cmd_weekly(config), config.allow_flagged);
        if (recommend->parsed())
            return report_counts("recommend", emotone::cmd_recommend(config),
                                 config.allow_flagged);
        if (evaluate->parsed())
            return report_counts("evaluate", emotone::cmd_evaluate(config), config.allow_flagged);
        if (report->parsed())
            return report_counts("report", emotone::cmd_report(config), config.allow_flagged);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
