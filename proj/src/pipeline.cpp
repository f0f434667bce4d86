#include "emotone/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "emotone/artifacts.hpp"
#include "emotone/classify.hpp"
#include "emotone/errors.hpp"
#include "emotone/parallel.hpp"
#include "emotone/rng.hpp"

namespace emotone {

namespace {

using nlohmann::json;

void ensure_dir(const std::string& dir) { std::filesystem::create_directories(dir); }

void require_artifact(const std::string& path, const char* producer) {
    if (!file_exists(path))
        throw DomainError("missing artifact " + path + "; run '" + producer + "' first");
}

// Appends, in input order, the records whose ids are not yet persisted.
// Writes happen single-threaded after the parallel compute step, so a
// partially written artifact is always an ordered prefix.
template <typename Item, typename Compute>
StageCounts extend_artifact(const std::string& path, const std::vector<Item>& items,
                            const std::set<std::int64_t>& done, std::size_t concurrency,
                            Compute compute) {
    StageCounts counts;
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (done.count(items[i].first)) {
            ++counts.reused;
        } else {
            pending.push_back(i);
        }
    }
    const std::function<std::string(std::size_t)> task = [&](std::size_t k) {
        const auto& [id, item] = items[pending[k]];
        try {
            return compute(id, item);
        } catch (const std::exception& e) {
            throw DomainError("text id " + std::to_string(id) + ": " + e.what());
        }
    };
    const std::vector<std::string> lines = parallel_map<std::string>(pending.size(), concurrency, task);
    append_lines(path, lines);
    counts.processed = pending.size();
    return counts;
}

std::vector<NewsRecord> load_or_create_sample(const RunConfig& config, const ArtifactPaths& paths) {
    if (file_exists(paths.sample)) return load_jsonl<NewsRecord>(paths.sample);
    const std::vector<NewsRecord> corpus = load_corpus(config.corpus_path);
    SamplePlan plan;
    plan.per_class_count = config.per_class_count;
    plan.seed = derive_seed(config.seed, "corpus");
    const std::vector<NewsRecord> sample = sample_balanced(corpus, plan);
    std::vector<std::string> lines;
    lines.reserve(sample.size());
    for (const NewsRecord& r : sample) lines.push_back(to_jsonl_line(r));
    append_lines(paths.sample, lines);
    return sample;
}

std::set<std::int64_t> persisted_ids(const std::string& path) {
    std::set<std::int64_t> ids;
    if (!file_exists(path)) return ids;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ids.insert(json::parse(line).at("id").get<std::int64_t>());
    }
    return ids;
}

// Classifies a list of (id, category, text) rows into AnalyzedText lines.
StageCounts analyze_texts_to(const std::string& path,
                             const std::vector<std::pair<std::int64_t, NewsRecord>>& rows,
                             const RunConfig& config) {
    const ClassifierGateway gateway(config.classifier);
    const std::set<std::int64_t> done = persisted_ids(path);
    return extend_artifact(path, rows, done, config.classifier_concurrency,
                           [&](std::int64_t, const NewsRecord& record) {
                               AnalyzedText analyzed =
                                   analyze_text(record, gateway.classify(record.text));
                               return to_jsonl_line(analyzed);
                           });
}

StageCounts run_weekly(const RunConfig& config, const ArtifactPaths& paths) {
    require_artifact(paths.analyzed_raw, "analyze");
    const std::vector<AnalyzedText> pool = load_jsonl<AnalyzedText>(paths.analyzed_raw);
    if (pool.empty()) throw DomainError("analyzed corpus is empty");

    std::map<std::int64_t, std::vector<AnalyzedText>> per_consumer;
    if (!config.browsing_log_path.empty()) {
        std::unordered_map<std::int64_t, const AnalyzedText*> by_id;
        for (const AnalyzedText& t : pool) by_id[t.record.id] = &t;
        const std::vector<BrowsingEvent> events = load_browsing_events(config.browsing_log_path);
        for (const auto& [key, text_ids] : group_by_consumer_week(events)) {
            std::vector<AnalyzedText>& texts = per_consumer[key.first];
            for (std::int64_t id : text_ids) {
                const auto it = by_id.find(id);
                if (it == by_id.end())
                    throw DomainError("browsing log references unknown text id " +
                                      std::to_string(id));
                texts.push_back(*it->second);
            }
        }
    } else {
        per_consumer = simulate_consumers(pool, config.consumer_count, config.texts_per_consumer,
                                          derive_seed(config.seed, "consumers"));
    }

    std::set<std::int64_t> done_weekly;
    for (const WeeklySummary& s : load_jsonl<WeeklySummary>(paths.weekly))
        done_weekly.insert(s.consumer_id);
    std::set<std::int64_t> done_advice;
    if (file_exists(paths.advice)) {
        std::ifstream in(paths.advice);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) done_advice.insert(json::parse(line).at("consumer_id").get<std::int64_t>());
    }

    const std::shared_ptr<ChatBackend> chat = make_chat_backend(config.chat);
    StageCounts counts;
    std::vector<std::string> weekly_lines;
    std::vector<std::string> advice_lines;
    for (const auto& [consumer_id, texts] : per_consumer) {
        const WeeklySummary summary =
            weekly_summary(texts, consumer_id, config.theta, config.weekly_ebi_mode);
        if (!done_weekly.count(consumer_id)) weekly_lines.push_back(to_jsonl_line(summary));
        if (!done_advice.count(consumer_id)) {
            const AdviceResult advice = generate_advice(summary, *chat);
            if (advice.flagged) ++counts.flagged;
            const json row = {{"consumer_id", consumer_id},
                              {"advice", advice.text},
                              {"flagged", advice.flagged}};
            advice_lines.push_back(row.dump());
            ++counts.processed;
        } else {
            ++counts.reused;
        }
    }
    append_lines(paths.weekly, weekly_lines);
    append_lines(paths.advice, advice_lines);
    return counts;
}

StageCounts run_recommend(const RunConfig& config, const ArtifactPaths& paths) {
    const std::vector<PersonaProfile> personas = config.personas_path.empty()
                                                     ? default_personas()
                                                     : load_personas(config.personas_path);
    if (personas.empty()) throw DomainError("no personas to recommend for");

    std::set<std::string> done;
    if (file_exists(paths.recommendations)) {
        std::ifstream in(paths.recommendations);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) done.insert(json::parse(line).at("persona_id").get<std::string>());
    }

    const std::shared_ptr<ChatBackend> chat = make_chat_backend(config.chat);
    StageCounts counts;
    std::vector<std::string> lines;
    for (const PersonaProfile& persona : personas) {
        if (done.count(persona.id)) {
            ++counts.reused;
            continue;
        }
        const ModeRecommendation rec = recommend_mode(persona, *chat);
        const json row = {{"persona_id", rec.persona_id},
                          {"mode", std::string(mode_name(rec.mode))},
                          {"rationale", rec.rationale}};
        lines.push_back(row.dump());
        ++counts.processed;
    }
    append_lines(paths.recommendations, lines);
    return counts;
}

json distribution_json(const EmotionDistribution& d) {
    json out;
    for (Emotion e : kEmotions) out[std::string(emotion_name(e))] = d[e];
    return out;
}

EmotionDistribution distribution_from(const json& j) {
    std::array<double, kEmotionCount> raw{};
    for (Emotion e : kEmotions)
        raw[static_cast<std::size_t>(e)] = j.at(std::string(emotion_name(e))).get<double>();
    return EmotionDistribution::from_values(raw);
}

}  // namespace

ArtifactPaths::ArtifactPaths(const std::string& out_dir)
    : sample(out_dir + "/sample.jsonl"),
      analyzed_raw(out_dir + "/analyzed_raw.jsonl"),
      rewrites(out_dir + "/rewrites.jsonl"),
      analyzed_balanced(out_dir + "/analyzed_balanced.jsonl"),
      analyzed_cool(out_dir + "/analyzed_cool.jsonl"),
      fidelity(out_dir + "/fidelity.jsonl"),
      fidelity_summary(out_dir + "/fidelity_summary.json"),
      weekly(out_dir + "/weekly.jsonl"),
      advice(out_dir + "/advice.jsonl"),
      recommendations(out_dir + "/recommendations.jsonl"),
      evaluation(out_dir + "/evaluation.json") {}

StageCounts cmd_analyze(const RunConfig& config) {
    config.validate();
    ensure_dir(config.out_dir);
    const ArtifactPaths paths(config.out_dir);
    const std::vector<NewsRecord> sample = load_or_create_sample(config, paths);
    std::vector<std::pair<std::int64_t, NewsRecord>> rows;
    rows.reserve(sample.size());
    for (const NewsRecord& r : sample) rows.emplace_back(r.id, r);
    return analyze_texts_to(paths.analyzed_raw, rows, config);
}

StageCounts cmd_detox(const RunConfig& config) {
    config.validate();
    const ArtifactPaths paths(config.out_dir);
    require_artifact(paths.analyzed_raw, "analyze");
    const std::vector<AnalyzedText> analyzed = load_jsonl<AnalyzedText>(paths.analyzed_raw);

    const std::shared_ptr<ChatBackend> chat = make_chat_backend(config.chat);
    const std::set<std::int64_t> done = persisted_ids(paths.rewrites);
    std::vector<std::pair<std::int64_t, const AnalyzedText*>> rows;
    for (const AnalyzedText& t : analyzed) rows.emplace_back(t.record.id, &t);

    StageCounts counts = extend_artifact(
        paths.rewrites, rows, done, config.chat_concurrency,
        [&](std::int64_t id, const AnalyzedText* text) {
            RewriteRecord record;
            record.id = id;
            if (config.min_stimulus > 0.0 && text->stimulus < config.min_stimulus) {
                record.skipped_low_stimulus = true;
                record.bundle.original = text->record.text;
                record.bundle.balanced = text->record.text;
                record.bundle.cool = text->record.text;
            } else {
                record.bundle = detoxify(text->record.text, *chat);
            }
            return to_jsonl_line(record);
        });

    for (const RewriteRecord& r : load_jsonl<RewriteRecord>(paths.rewrites)) {
        if (r.bundle.balanced_status != RewriteStatus::ok) ++counts.flagged;
        if (r.bundle.cool_status != RewriteStatus::ok) ++counts.flagged;
    }
    return counts;
}

StageCounts cmd_verify(const RunConfig& config) {
    config.validate();
    const ArtifactPaths paths(config.out_dir);
    require_artifact(paths.rewrites, "detox");
    const std::vector<RewriteRecord> rewrites = load_jsonl<RewriteRecord>(paths.rewrites);
    if (rewrites.empty()) throw DomainError("rewrites artifact is empty");

    std::set<std::pair<std::int64_t, PresentationMode>> done;
    for (const FidelityRecord& r : load_jsonl<FidelityRecord>(paths.fidelity))
        done.insert({r.text_id, r.mode});

    const std::shared_ptr<EmbeddingBackend> embedder = make_embedding_backend(config.embedding);
    const std::shared_ptr<NliBackend> nli = make_nli_backend(config.nli);

    struct Pair {
        std::int64_t id;
        PresentationMode mode;
        const std::string* original;
        const std::string* rewritten;
    };
    std::vector<Pair> pending;
    StageCounts counts;
    for (const RewriteRecord& r : rewrites) {
        for (PresentationMode mode : {PresentationMode::BALANCED, PresentationMode::COOL}) {
            if (done.count({r.id, mode})) {
                ++counts.reused;
                continue;
            }
            const std::string& rewritten =
                mode == PresentationMode::BALANCED ? r.bundle.balanced : r.bundle.cool;
            pending.push_back({r.id, mode, &r.bundle.original, &rewritten});
        }
    }

    const std::function<std::string(std::size_t)> task = [&](std::size_t k) {
        const Pair& p = pending[k];
        try {
            FidelityRecord record;
            record.text_id = p.id;
            record.mode = p.mode;
            const std::vector<double> a = embed(*p.original, *embedder);
            const std::vector<double> b = embed(*p.rewritten, *embedder);
            record.cosine = cosine_similarity(a, b);
            record.nli_label = nli_judge(*p.original, *p.rewritten, *nli);
            return to_jsonl_line(record);
        } catch (const std::exception& e) {
            throw DomainError("text id " + std::to_string(p.id) + ": " + e.what());
        }
    };
    append_lines(paths.fidelity,
                 parallel_map<std::string>(pending.size(), config.embedding_concurrency, task));
    counts.processed = pending.size();

    // Per-mode summaries, regenerated from the full artifact every run.
    const std::vector<FidelityRecord> all = load_jsonl<FidelityRecord>(paths.fidelity);
    json summary_doc;
    for (PresentationMode mode : {PresentationMode::BALANCED, PresentationMode::COOL}) {
        std::vector<FidelityRecord> of_mode;
        for (const FidelityRecord& r : all)
            if (r.mode == mode) of_mode.push_back(r);
        if (of_mode.empty()) continue;
        const FidelitySummary s = summarize_fidelity(of_mode);
        summary_doc[std::string(mode_name(mode))] = {{"mean_cosine", s.mean_cosine},
                                                     {"entailment_rate", s.entailment_rate},
                                                     {"neutral_rate", s.neutral_rate},
                                                     {"contradiction_rate", s.contradiction_rate}};
    }
    std::ofstream out(paths.fidelity_summary, std::ios::binary);
    if (!out) throw DomainError("cannot write " + paths.fidelity_summary);
    out << summary_doc.dump(1) << '\n';
    return counts;
}

StageCounts cmd_weekly(const RunConfig& config) {
    config.validate();
    return run_weekly(config, ArtifactPaths(config.out_dir));
}

StageCounts cmd_recommend(const RunConfig& config) {
    config.validate();
    ensure_dir(config.out_dir);
    return run_recommend(config, ArtifactPaths(config.out_dir));
}

StageCounts cmd_evaluate(const RunConfig& config) {
    config.validate();
    const ArtifactPaths paths(config.out_dir);
    require_artifact(paths.analyzed_raw, "analyze");
    require_artifact(paths.rewrites, "detox");
    require_artifact(paths.fidelity, "verify");

    StageCounts counts;

    // Re-analyze the rewrites (the analysis stage applied to each generated
    // mode), resume-aware like every other backend-calling step.
    const std::vector<RewriteRecord> rewrites = load_jsonl<RewriteRecord>(paths.rewrites);
    const std::vector<AnalyzedText> raw = load_jsonl<AnalyzedText>(paths.analyzed_raw);
    if (raw.size() != rewrites.size())
        throw ContractError("analyze and detox artifacts cover different record counts");
    std::unordered_map<std::int64_t, Category> category_by_id;
    for (const AnalyzedText& t : raw) category_by_id[t.record.id] = t.record.category;

    for (PresentationMode mode : {PresentationMode::BALANCED, PresentationMode::COOL}) {
        std::vector<std::pair<std::int64_t, NewsRecord>> rows;
        rows.reserve(rewrites.size());
        for (const RewriteRecord& r : rewrites) {
            NewsRecord record;
            record.id = r.id;
            record.category = category_by_id.at(r.id);
            record.text = mode == PresentationMode::BALANCED ? r.bundle.balanced : r.bundle.cool;
            rows.emplace_back(r.id, std::move(record));
        }
        const std::string& path =
            mode == PresentationMode::BALANCED ? paths.analyzed_balanced : paths.analyzed_cool;
        const StageCounts c = analyze_texts_to(path, rows, config);
        counts.processed += c.processed;
        counts.reused += c.reused;
    }

    // Tables 5-7 come from the weekly and recommend stages; compute them
    // here when their artifacts are absent so one evaluate call yields the
    // full report.
    if (!file_exists(paths.weekly) || !file_exists(paths.advice)) {
        const StageCounts c = run_weekly(config, paths);
        counts.flagged += c.flagged;
    }
    if (!file_exists(paths.recommendations)) run_recommend(config, paths);

    ConditionTexts by_condition;
    by_condition[PresentationMode::RAW] = raw;
    by_condition[PresentationMode::BALANCED] = load_jsonl<AnalyzedText>(paths.analyzed_balanced);
    by_condition[PresentationMode::COOL] = load_jsonl<AnalyzedText>(paths.analyzed_cool);

    ReportInputs inputs;
    for (const auto& [mode, texts] : by_condition)
        inputs.primary_metrics[mode] = aggregate(texts, config.theta);
    inputs.stat_tests = run_stat_tests(by_condition);
    inputs.category_rows = category_breakdown(by_condition);
    inputs.emotion_means = emotion_delta(by_condition);

    std::unordered_map<std::int64_t, double> raw_stimulus;
    for (const AnalyzedText& t : raw) raw_stimulus[t.record.id] = t.stimulus;
    std::map<PresentationMode, std::unordered_map<std::int64_t, double>> mode_stimulus;
    for (PresentationMode mode : {PresentationMode::BALANCED, PresentationMode::COOL})
        for (const AnalyzedText& t : by_condition.at(mode))
            mode_stimulus[mode][t.record.id] = t.stimulus;

    std::map<PresentationMode, std::vector<FidelityRecord>> fidelity_by_mode;
    for (const FidelityRecord& r : load_jsonl<FidelityRecord>(paths.fidelity))
        fidelity_by_mode[r.mode].push_back(r);
    for (const auto& [mode, records] : fidelity_by_mode) {
        inputs.fidelity[mode] = summarize_fidelity(records);
        std::vector<ScatterPoint>& points = inputs.scatter[mode];
        std::vector<double> reductions, similarities;
        for (const FidelityRecord& r : records) {
            ScatterPoint p;
            p.text_id = r.text_id;
            p.reduction = raw_stimulus.at(r.text_id) - mode_stimulus.at(mode).at(r.text_id);
            p.similarity = r.cosine;
            points.push_back(p);
            reductions.push_back(p.reduction);
            similarities.push_back(p.similarity);
        }
        inputs.reduction_similarity_r[mode] =
            reduction_similarity_correlation(reductions, similarities);
    }

    inputs.weekly = load_jsonl<WeeklySummary>(paths.weekly);
    {
        std::ifstream in(paths.advice);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const json j = json::parse(line);
            AdviceRow row;
            row.consumer_id = j.at("consumer_id").get<std::int64_t>();
            row.advice = j.at("advice").get<std::string>();
            row.flagged = j.at("flagged").get<bool>();
            if (row.flagged) ++counts.flagged;
            inputs.advice.push_back(std::move(row));
        }
    }
    {
        std::ifstream in(paths.recommendations);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const json j = json::parse(line);
            ModeRecommendation rec;
            rec.persona_id = j.at("persona_id").get<std::string>();
            rec.mode = mode_from_name(j.at("mode").get<std::string>());
            rec.rationale = j.at("rationale").get<std::string>();
            inputs.recommendations.push_back(std::move(rec));
        }
    }

    std::ofstream out(paths.evaluation, std::ios::binary);
    if (!out) throw DomainError("cannot write " + paths.evaluation);
    out << evaluation_to_json(inputs);
    emit_report(inputs, config.out_dir);

    for (const RewriteRecord& r : rewrites) {
        if (r.bundle.balanced_status != RewriteStatus::ok) ++counts.flagged;
        if (r.bundle.cool_status != RewriteStatus::ok) ++counts.flagged;
    }
    return counts;
}

StageCounts cmd_report(const RunConfig& config) {
    config.validate();
    const ArtifactPaths paths(config.out_dir);
    require_artifact(paths.evaluation, "evaluate");
    std::ifstream in(paths.evaluation);
    std::ostringstream buf;
    buf << in.rdbuf();
    const ReportInputs inputs = evaluation_from_json(buf.str());
    emit_report(inputs, config.out_dir);
    StageCounts counts;
    counts.processed = 1;
    return counts;
}

std::string evaluation_to_json(const ReportInputs& in) {
    json doc;
    for (const auto& [mode, stats] : in.primary_metrics)
        doc["primary_metrics"][std::string(mode_name(mode))] = {
            {"n", stats.n},
            {"mean_stimulus", stats.mean_stimulus},
            {"hir", stats.hir},
            {"mean_ebi", stats.mean_ebi},
            {"mean_fre", stats.mean_fre},
            {"mean_distribution", distribution_json(stats.mean_distribution)}};
    for (const StatTestResult& r : in.stat_tests)
        doc["stat_tests"].push_back({{"metric", r.metric},
                                     {"comparison", r.comparison},
                                     {"t", r.t},
                                     {"p_raw", r.p_raw},
                                     {"p_adjusted", r.p_adjusted},
                                     {"d", r.d}});
    for (const CategoryRow& r : in.category_rows)
        doc["category_breakdown"].push_back(
            {{"category", std::string(category_name(r.category))},
             {"mean_raw", r.mean_raw},
             {"mean_balanced", r.mean_balanced},
             {"mean_cool", r.mean_cool},
             {"delta_balanced_pct", r.delta_balanced_pct},
             {"delta_cool_pct", r.delta_cool_pct}});
    for (const auto& [mode, s] : in.fidelity)
        doc["fidelity"][std::string(mode_name(mode))] = {
            {"mean_cosine", s.mean_cosine},
            {"entailment_rate", s.entailment_rate},
            {"neutral_rate", s.neutral_rate},
            {"contradiction_rate", s.contradiction_rate}};
    for (const WeeklySummary& w : in.weekly)
        doc["weekly"].push_back({{"consumer_id", w.consumer_id},
                                 {"n", w.n},
                                 {"mean_stimulus", w.mean_stimulus},
                                 {"hir", w.hir},
                                 {"ebi", w.ebi},
                                 {"emotions", distribution_json(w.mean_emotions)}});
    for (const AdviceRow& a : in.advice)
        doc["advice"].push_back(
            {{"consumer_id", a.consumer_id}, {"advice", a.advice}, {"flagged", a.flagged}});
    for (const ModeRecommendation& r : in.recommendations)
        doc["recommendations"].push_back({{"persona_id", r.persona_id},
                                          {"mode", std::string(mode_name(r.mode))},
                                          {"rationale", r.rationale}});
    for (const auto& [mode, dist] : in.emotion_means)
        doc["emotion_means"][std::string(mode_name(mode))] = distribution_json(dist);
    for (const auto& [mode, points] : in.scatter) {
        json arr = json::array();
        for (const ScatterPoint& p : points)
            arr.push_back({{"text_id", p.text_id},
                           {"reduction", p.reduction},
                           {"similarity", p.similarity}});
        doc["scatter"][std::string(mode_name(mode))] = std::move(arr);
    }
    for (const auto& [mode, r] : in.reduction_similarity_r)
        doc["correlations"][std::string(mode_name(mode))] = r;
    return doc.dump(1) + "\n";
}

ReportInputs evaluation_from_json(const std::string& content) {
    const json doc = json::parse(content);
    ReportInputs in;
    for (const auto& [mode_str, j] : doc.at("primary_metrics").items()) {
        CollectionStats stats;
        stats.n = j.at("n").get<std::size_t>();
        stats.mean_stimulus = j.at("mean_stimulus").get<double>();
        stats.hir = j.at("hir").get<double>();
        stats.mean_ebi = j.at("mean_ebi").get<double>();
        stats.mean_fre = j.at("mean_fre").get<double>();
        stats.mean_distribution = distribution_from(j.at("mean_distribution"));
        in.primary_metrics[mode_from_name(mode_str)] = stats;
    }
    for (const json& j : doc.at("stat_tests")) {
        StatTestResult r;
        r.metric = j.at("metric").get<std::string>();
        r.comparison = j.at("comparison").get<std::string>();
        r.t = j.at("t").get<double>();
        r.p_raw = j.at("p_raw").get<double>();
        r.p_adjusted = j.at("p_adjusted").get<double>();
        r.d = j.at("d").get<double>();
        in.stat_tests.push_back(std::move(r));
    }
    for (const json& j : doc.at("category_breakdown")) {
        CategoryRow r;
        r.category = category_from_name(j.at("category").get<std::string>());
        r.mean_raw = j.at("mean_raw").get<double>();
        r.mean_balanced = j.at("mean_balanced").get<double>();
        r.mean_cool = j.at("mean_cool").get<double>();
        r.delta_balanced_pct = j.at("delta_balanced_pct").get<double>();
        r.delta_cool_pct = j.at("delta_cool_pct").get<double>();
        in.category_rows.push_back(r);
    }
    for (const auto& [mode_str, j] : doc.at("fidelity").items()) {
        FidelitySummary s;
        s.mean_cosine = j.at("mean_cosine").get<double>();
        s.entailment_rate = j.at("entailment_rate").get<double>();
        s.neutral_rate = j.at("neutral_rate").get<double>();
        s.contradiction_rate = j.at("contradiction_rate").get<double>();
        in.fidelity[mode_from_name(mode_str)] = s;
    }
    for (const json& j : doc.at("weekly")) {
        WeeklySummary w;
        w.consumer_id = j.at("consumer_id").get<std::int64_t>();
        w.n = j.at("n").get<std::size_t>();
        w.mean_stimulus = j.at("mean_stimulus").get<double>();
        w.hir = j.at("hir").get<double>();
        w.ebi = j.at("ebi").get<double>();
        w.mean_emotions = distribution_from(j.at("emotions"));
        in.weekly.push_back(w);
    }
    for (const json& j : doc.at("advice")) {
        AdviceRow a;
        a.consumer_id = j.at("consumer_id").get<std::int64_t>();
        a.advice = j.at("advice").get<std::string>();
        a.flagged = j.at("flagged").get<bool>();
        in.advice.push_back(std::move(a));
    }
    for (const json& j : doc.at("recommendations")) {
        ModeRecommendation r;
        r.persona_id = j.at("persona_id").get<std::string>();
        r.mode = mode_from_name(j.at("mode").get<std::string>());
        r.rationale = j.at("rationale").get<std::string>();
        in.recommendations.push_back(std::move(r));
    }
    for (const auto& [mode_str, j] : doc.at("emotion_means").items())
        in.emotion_means[mode_from_name(mode_str)] = distribution_from(j);
    for (const auto& [mode_str, arr] : doc.at("scatter").items()) {
        std::vector<ScatterPoint>& points = in.scatter[mode_from_name(mode_str)];
        for (const json& j : arr) {
            ScatterPoint p;
            p.text_id = j.at("text_id").get<std::int64_t>();
            p.reduction = j.at("reduction").get<double>();
            p.similarity = j.at("similarity").get<double>();
            points.push_back(p);
        }
    }
    for (const auto& [mode_str, r] : doc.at("correlations").items())
        in.reduction_similarity_r[mode_from_name(mode_str)] = r.get<double>();
    return in;
}

}  // namespace emotone
