// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when a
// gating criterion fails. Criterion 4 drives the real CLI binary end to end
// (path supplied as argv[1] by ctest).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "emotone/classify.hpp"
#include "emotone/detox.hpp"
#include "emotone/errors.hpp"
#include "emotone/fidelity.hpp"
#include "emotone/metrics.hpp"
#include "emotone/monitor.hpp"
#include "emotone/rng.hpp"
#include "emotone/stats.hpp"
#include "emotone/text.hpp"
#include "../support/backends.hpp"
#include "../support/synth.hpp"

using namespace emotone;
using nlohmann::json;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& message) { g_notes.push_back(message); }

void check(bool ok, const std::string& message) {
    if (!ok) {
        ++g_failures;
        note("FAILED: " + message);
    }
}

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    const int before = g_failures;
    g_notes.clear();
    try {
        body();
    } catch (const std::exception& e) {
        ++g_failures;
        note(std::string("exception: ") + e.what());
    }
    const bool ok = g_failures == before;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title << "\n";
    for (const std::string& n : g_notes) std::cout << "        " << n << "\n";
    std::cout.flush();
}

double elapsed_s(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

EmotionDistribution dist(std::array<double, 6> p) { return EmotionDistribution::normalized(p); }

EmotionDistribution random_distribution(std::mt19937_64& gen) {
    std::array<double, 6> raw{};
    for (double& x : raw) x = -std::log(1.0 - uniform_unit(gen)) + 1e-12;
    return EmotionDistribution::normalized(raw);
}

// ---------------------------------------------------------------- criterion 1
void formula_exactness() {
    const auto start = std::chrono::steady_clock::now();

    check(std::fabs(stimulus_score(dist({0.3, 0.2, 0.1, 0.1, 0.1, 0.2})) - 0.7) < 1e-12,
          "stimulus (0.3,0.2,0.1,0.1,0.1,0.2) = 0.7");
    check(std::fabs(stimulus_score(EmotionDistribution()) - 0.5) < 1e-12, "uniform stimulus 0.5");
    check(stimulus_score(dist({0, 0, 1, 0, 0, 0})) == 0.0, "one-hot sadness stimulus 0");

    check(std::fabs(emotion_balance_index(EmotionDistribution()) - 1.0) < 1e-12, "uniform EBI 1");
    check(std::fabs(emotion_balance_index(dist({1, 0, 0, 0, 0, 0})) - 1.0 / 6) < 1e-12,
          "one-hot EBI 1/6");
    check(std::fabs(emotion_balance_index(dist({1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0, 0})) - 0.5) <
              1e-12,
          "three-way EBI 0.5");

    const std::vector<double> scores = {0.7, 0.5, 0.61};
    check(std::fabs(high_impact_rate(scores, 0.6) - 2.0 / 3) < 1e-12, "HIR 2/3");
    check(high_impact_rate(std::vector<double>{0.6}, 0.6) == 0.0, "HIR strict at the boundary");
    check(high_impact_rate(std::vector<double>(800, 0.61), 0.6) == 1.0, "HIR saturation");

    std::mt19937_64 gen(20240817);
    for (int i = 0; i < 10000; ++i) {
        const EmotionDistribution d = random_distribution(gen);
        const double ebi = emotion_balance_index(d);
        if (!(ebi >= 1.0 / 6 - 1e-12 && ebi <= 1.0 + 1e-12)) {
            check(false, "EBI outside [1/6, 1] on random distribution");
            break;
        }
        double max_dev = 0.0;
        for (std::size_t k = 0; k < kEmotionCount; ++k)
            max_dev = std::max(max_dev, std::fabs(d.at(k) - 1.0 / 6));
        if (max_dev > 1e-9 && !(ebi < 1.0 - 1e-12)) {
            check(false, "EBI = 1 on a non-uniform distribution");
            break;
        }
        const double s = stimulus_score(d);
        if (!(s >= 0.0 && s <= 1.0) ||
            d[Emotion::anger] + d[Emotion::fear] + d[Emotion::surprise] > 1.0 + 1e-12) {
            check(false, "stimulus range or inactive-clamp property violated");
            break;
        }
    }

    const double runtime = elapsed_s(start);
    check(runtime < 1.0, "runtime " + std::to_string(runtime) + "s < 1s");
}

// ---------------------------------------------------------------- criterion 2
void paper_value_consistency() {
    const auto start = std::chrono::steady_clock::now();

    struct Reduction {
        double raw, treated, reported;
        const char* label;
    };
    // Reference report: S_mean 0.482 -> 0.419 / 0.389; HIR 0.446 -> 0.354 / 0.330.
    const Reduction reductions[] = {{0.482, 0.419, 13.1, "S_mean BALANCED"},
                                    {0.446, 0.354, 20.6, "HIR BALANCED"},
                                    {0.482, 0.389, 19.3, "S_mean COOL"},
                                    {0.446, 0.330, 26.0, "HIR COOL"}};
    for (const Reduction& r : reductions) {
        const double derived = percent_reduction(r.raw, r.treated);
        check(std::fabs(derived - r.reported) <= 0.1,
              std::string(r.label) + ": derived " + std::to_string(derived) + " vs reported " +
                  std::to_string(r.reported) + " (0.1 pp gate)");
    }

    for (const ReferenceTestRow& row : kReferenceTestRows) {
        const double derived = row.t / std::sqrt(kReferenceTestN);
        check(std::fabs(row.d - derived) < 0.001,
              std::string(row.metric) + " " + row.comparison + ": |d - t/sqrt(800)| = " +
                  std::to_string(std::fabs(row.d - derived)));
    }

    struct CategoryRef {
        const char* name;
        double raw, bal, cool, delta_bal, delta_cool;
    };
    const CategoryRef categories[] = {{"World", 0.659, 0.660, 0.645, -0.1, 2.2},
                                      {"Sports", 0.393, 0.312, 0.260, 20.6, 33.8},
                                      {"Business", 0.500, 0.396, 0.350, 20.8, 30.0},
                                      {"SciTech", 0.374, 0.308, 0.299, 17.8, 20.0}};
    for (const CategoryRef& c : categories) {
        const double dbal = percent_reduction(c.raw, c.bal);
        const double dcool = percent_reduction(c.raw, c.cool);
        check(std::fabs(dbal - c.delta_bal) <= 0.1,
              std::string(c.name) + " dBAL: derived " + std::to_string(dbal) + " vs reported " +
                  std::to_string(c.delta_bal) +
                  " (0.1 pp gate; the reported delta was computed from unrounded means)");
        check(std::fabs(dcool - c.delta_cool) <= 0.1,
              std::string(c.name) + " dCOOL: derived " + std::to_string(dcool) +
                  " vs reported " + std::to_string(c.delta_cool) + " (0.1 pp gate)");
    }

    const double runtime = elapsed_s(start);
    check(runtime < 1.0, "runtime " + std::to_string(runtime) + "s < 1s");
}

// ---------------------------------------------------------------- criterion 3
void statistics_oracle() {
    const json reference = json::parse(slurp(std::string(EMOTONE_SOURCE_DIR) +
                                             "/tests/fixtures/stat_reference.json"));

    check(reference.at("paired_t").size() == 20, "20 paired-t fixtures present");
    for (const json& fixture : reference.at("paired_t")) {
        const PairedTResult r = paired_t(fixture.at("baseline").get<std::vector<double>>(),
                                         fixture.at("treatment").get<std::vector<double>>());
        if (std::fabs(r.t - fixture.at("t").get<double>()) >= 1e-6 ||
            std::fabs(r.p_raw - fixture.at("p").get<double>()) >= 1e-6) {
            check(false, "paired_t fixture off by >= 1e-6");
            break;
        }
    }
    for (const json& fixture : reference.at("holm")) {
        const std::vector<double> adjusted =
            holm_adjust(fixture.at("p").get<std::vector<double>>());
        const std::vector<double> expected = fixture.at("adjusted").get<std::vector<double>>();
        for (std::size_t i = 0; i < adjusted.size(); ++i)
            if (std::fabs(adjusted[i] - expected[i]) >= 1e-6) {
                check(false, "holm fixture off by >= 1e-6");
                break;
            }
    }

    check(std::fabs(student_t_cdf(0.0, 1.0) - 0.5) < 1e-9, "Cauchy CDF(0) = 0.5 within 1e-9");
    check(std::fabs(student_t_cdf(1.0, 1.0) - 0.75) < 1e-9, "Cauchy CDF(1) = 0.75 within 1e-9");

    for (const json& block : reference.at("t_cdf")) {
        const double df = block.at("df").get<double>();
        const std::vector<double> ts = block.at("t").get<std::vector<double>>();
        const std::vector<double> cdfs = block.at("cdf").get<std::vector<double>>();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double ours = student_t_cdf(ts[i], df);
            if (std::fabs(ours - cdfs[i]) >= 1e-8) {
                check(false, "t CDF df=" + std::to_string(df) + " at t=" + std::to_string(ts[i]) +
                                 " off by " + std::to_string(std::fabs(ours - cdfs[i])));
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 4
struct BruteStats {
    double mean_s = 0, mean_ebi = 0, mean_fre = 0, hir = 0;
    std::array<double, 6> emotion_means{};
    std::map<std::string, std::pair<double, int>> category_sum;  // name -> (sum stimulus, n)
};

BruteStats brute_force(const std::string& jsonl_path) {
    BruteStats b;
    std::ifstream in(jsonl_path);
    std::string line;
    std::vector<json> rows;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(json::parse(line));
    const double n = static_cast<double>(rows.size());
    for (const json& row : rows) {
        const double s = row.at("stimulus").get<double>();
        b.mean_s += s / n;
        b.mean_ebi += row.at("ebi").get<double>() / n;
        b.mean_fre += row.at("fre").get<double>() / n;
        if (s > 0.6) b.hir += 1.0 / n;
        std::size_t k = 0;
        for (const char* name : {"anger", "fear", "sadness", "joy", "love", "surprise"})
            b.emotion_means[k++] += row.at("distribution").at(name).get<double>() / n;
        auto& [sum, count] = b.category_sum[row.at("category").get<std::string>()];
        sum += s;
        count += 1;
    }
    return b;
}

void end_to_end_mock_run(const std::string& cli_path) {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "emotone_acceptance_e2e";
    fs::remove_all(base);
    fs::create_directories(base);
    const std::string corpus = (base / "corpus.csv").string();
    testsupport::write_synth_corpus(corpus, 200, 8080);

    const auto run_pipeline = [&](const std::string& out_dir) {
        for (const char* stage : {"analyze", "detox", "verify", "evaluate"}) {
            const std::string command = "\"" + cli_path + "\" --corpus \"" + corpus +
                                        "\" --out-dir \"" + out_dir +
                                        "\" --seed 4242 --per-class 200 --mock-backends "
                                        "--allow-flagged " +
                                        stage + " > /dev/null";
            const int rc = std::system(command.c_str());
            if (rc != 0) throw DomainError(std::string(stage) + " exited with code " +
                                           std::to_string(rc));
        }
    };

    const auto start = std::chrono::steady_clock::now();
    run_pipeline((base / "out1").string());
    const double runtime = elapsed_s(start);
    check(runtime < 60.0, "first run took " + std::to_string(runtime) + "s (< 60s)");
    run_pipeline((base / "out2").string());

    // byte-identical across the two seeded runs
    for (const char* name :
         {"sample.jsonl", "analyzed_raw.jsonl", "rewrites.jsonl", "analyzed_balanced.jsonl",
          "analyzed_cool.jsonl", "fidelity.jsonl", "fidelity_summary.json", "weekly.jsonl",
          "advice.jsonl", "recommendations.jsonl", "evaluation.json", "report.md",
          "fig2_emotion_means.csv", "fig3_scatter.csv"}) {
        if (slurp((base / "out1" / name).string()) != slurp((base / "out2" / name).string())) {
            check(false, std::string(name) + " differs between identically-seeded runs");
        }
    }

    const std::string report = slurp((base / "out1" / "report.md").string());
    for (int section = 1; section <= 7; ++section)
        check(report.find("## " + std::to_string(section) + ".") != std::string::npos,
              "report section " + std::to_string(section) + " present");

    // independent brute-force oracle vs the persisted evaluation (1e-9)
    const json evaluation = json::parse(slurp((base / "out1" / "evaluation.json").string()));
    const std::map<std::string, std::string> condition_files = {
        {"RAW", "analyzed_raw.jsonl"},
        {"BALANCED", "analyzed_balanced.jsonl"},
        {"COOL", "analyzed_cool.jsonl"}};
    std::map<std::string, BruteStats> brute;
    for (const auto& [mode, file] : condition_files) {
        brute[mode] = brute_force((base / "out1" / file).string());
        const json& metrics = evaluation.at("primary_metrics").at(mode);
        check(std::fabs(metrics.at("mean_stimulus").get<double>() - brute[mode].mean_s) < 1e-9,
              mode + " mean stimulus matches brute force");
        check(std::fabs(metrics.at("mean_ebi").get<double>() - brute[mode].mean_ebi) < 1e-9,
              mode + " mean EBI matches brute force");
        check(std::fabs(metrics.at("mean_fre").get<double>() - brute[mode].mean_fre) < 1e-9,
              mode + " mean FRE matches brute force");
        check(std::fabs(metrics.at("hir").get<double>() - brute[mode].hir) < 1e-9,
              mode + " HIR matches brute force");
        std::size_t k = 0;
        for (const char* name : {"anger", "fear", "sadness", "joy", "love", "surprise"}) {
            if (std::fabs(evaluation.at("emotion_means").at(mode).at(name).get<double>() -
                          brute[mode].emotion_means[k++]) >= 1e-9)
                check(false, mode + " emotion mean " + name + " off from brute force");
        }
    }
    for (const json& row : evaluation.at("category_breakdown")) {
        const std::string category = row.at("category").get<std::string>();
        const auto& [raw_sum, raw_n] = brute.at("RAW").category_sum.at(category);
        check(std::fabs(row.at("mean_raw").get<double>() - raw_sum / raw_n) < 1e-9,
              category + " RAW mean matches brute force");
        check(raw_n == 200, category + " has 200 texts");
    }
}

// ---------------------------------------------------------------- criterion 5
void validator_behavior() {
    const std::string original(100, 'o');
    const auto rewritten = [](std::size_t n) {
        std::string s(n - 1, 'x');
        s += '.';
        return s;
    };
    check(validate_rewrite(original, rewritten(80), PresentationMode::BALANCED) ==
              RewriteStatus::ok,
          "length 80 of 100 accepted (lower boundary)");
    check(validate_rewrite(original, rewritten(120), PresentationMode::BALANCED) ==
              RewriteStatus::ok,
          "length 120 of 100 accepted (upper boundary)");
    check(validate_rewrite(original, rewritten(79), PresentationMode::BALANCED) ==
              RewriteStatus::length_violation,
          "length 79 of 100 rejected");
    check(validate_rewrite(original, rewritten(121), PresentationMode::BALANCED) ==
              RewriteStatus::length_violation,
          "length 121 of 100 rejected");

    // both inside the [80, 120] length window of the 100-char original
    const std::string one = "S" + std::string(98, 'x') + ".";
    const std::string two = "A" + std::string(57, 'x') + ". B" + std::string(38, 'y') + ".";
    check(validate_rewrite(original, one, PresentationMode::BALANCED) == RewriteStatus::ok,
          "BALANCED accepts exactly 1 sentence");
    check(validate_rewrite(original, two, PresentationMode::BALANCED) ==
              RewriteStatus::sentence_count_violation,
          "BALANCED rejects 2 sentences");
    check(validate_rewrite(original, two, PresentationMode::COOL) == RewriteStatus::ok,
          "COOL accepts exactly 2 sentences");
    check(validate_rewrite(original, one, PresentationMode::COOL) ==
              RewriteStatus::sentence_count_violation,
          "COOL rejects 1 sentence");

    // retry cap: a backend that always violates gets exactly 3 attempts per mode
    testsupport::RuleChatBackend bad([](const ChatRequest&) {
        return std::string("One piece of text. Two pieces of text. Three pieces of text.");
    });
    const RewriteBundle bundle = detoxify(std::string(55, 'o') + ".", bad);
    check(bundle.balanced_status == RewriteStatus::accepted_after_retries,
          "persistent violations flagged accepted_after_retries");
    check(bundle.cool_status == RewriteStatus::accepted_after_retries,
          "COOL flagged accepted_after_retries");
    check(static_cast<int>(bad.requests.size()) == 2 * kMaxRewriteAttempts,
          "exactly 3 attempts per text per mode, got " + std::to_string(bad.requests.size()));
}

// ---------------------------------------------------------------- criterion 6
void weekly_aggregation() {
    std::mt19937_64 gen(606);
    std::vector<AnalyzedText> pool;
    for (int i = 0; i < 800; ++i) {
        AnalyzedText t;
        t.record.id = i;
        t.distribution = random_distribution(gen);
        t.stimulus = stimulus_score(t.distribution);
        t.ebi = emotion_balance_index(t.distribution);
        t.fre = 40.0;
        pool.push_back(std::move(t));
    }

    const auto assignment = simulate_consumers(pool, 5, 100, 777);
    check(assignment.size() == 5, "5 consumers simulated");
    for (const auto& [consumer, texts] : assignment) {
        std::set<std::int64_t> ids;
        for (const AnalyzedText& t : texts) ids.insert(t.record.id);
        check(texts.size() == 100 && ids.size() == 100,
              "consumer " + std::to_string(consumer) + " drew 100 distinct texts");
    }
    const auto again = simulate_consumers(pool, 5, 100, 777);
    bool identical = true;
    for (const auto& [consumer, texts] : assignment) {
        const auto& other = again.at(consumer);
        for (std::size_t i = 0; i < texts.size(); ++i)
            identical &= other[i].record.id == texts[i].record.id;
    }
    check(identical, "assignments deterministic under the seed");

    for (const auto& [consumer, texts] : assignment) {
        const WeeklySummary s = weekly_summary(texts, consumer, 0.6);
        check(s.ebi >= 1.0 / 6 - 1e-12 && s.ebi <= 1.0 + 1e-12,
              "weekly EBI (of the mean distribution) in [1/6, 1]");
        const std::string serialized = weekly_summary_json(s);
        for (const char* field : {"\"consumer_id\"", "\"n\"", "\"mean_stimulus\"", "\"hir\"",
                                  "\"ebi\"", "\"emotions\"", "\"anger\"", "\"fear\"",
                                  "\"sadness\"", "\"joy\"", "\"love\"", "\"surprise\""})
            if (serialized.find(field) == std::string::npos)
                check(false, std::string("summary schema missing field ") + field);
    }
}

// ---------------------------------------------------------------- criterion 7
void fre_fixtures() {
    struct Fixture {
        const char* text;
        std::size_t words, sentences, syllables;
    };
    // hand-counted under the documented segmentation and syllable rules
    const Fixture fixtures[] = {
        {"The cat sat.", 3, 1, 3},
        {"Reports note steady progress. Officials confirm the plan.", 8, 2, 14},
        {"Prices surge! Analysts don't expect a stable outcome soon.", 9, 2, 15},
    };
    for (const Fixture& f : fixtures) {
        const TextStats s = fre_components(f.text);
        check(s.words == f.words && s.sentences == f.sentences && s.syllables == f.syllables,
              std::string("counts for \"") + f.text + "\"");
        const double expected = 206.835 -
                                1.015 * (static_cast<double>(f.words) / f.sentences) -
                                84.6 * (static_cast<double>(f.syllables) / f.words);
        check(flesch_reading_ease(f.text) == expected,
              std::string("FRE exact for \"") + f.text + "\"");
    }
}

// ---------------------------------------------------------------- criterion 8
void live_mode_check() {
    const char* classifier = std::getenv("EMOTONE_LIVE_CLASSIFIER");
    const char* corpus = std::getenv("EMOTONE_LIVE_CORPUS");
    if (!classifier || !corpus) {
        note("SKIPPED: live backends not configured "
             "(EMOTONE_LIVE_CLASSIFIER / EMOTONE_LIVE_CORPUS unset); non-gating");
        return;
    }
    // Non-gating: log divergences, never fail the build.
    try {
        const std::vector<NewsRecord> records = load_corpus(corpus);
        SamplePlan plan;
        plan.per_class_count = 200;
        plan.seed = derive_seed(42, "corpus");
        const std::vector<NewsRecord> sample = sample_balanced(records, plan);
        ClassifierGateway gateway(BackendConfig{classifier, 30.0, 2});
        double sum = 0.0;
        for (const NewsRecord& r : sample) sum += stimulus_score(gateway.classify(r.text));
        const double mean = sum / static_cast<double>(sample.size());
        if (std::fabs(mean - 0.482) > 0.05)
            note("DIVERGENCE (non-gating): live RAW mean stimulus " + std::to_string(mean) +
                 " vs reference 0.482 +/- 0.05");
        else
            note("live RAW mean stimulus " + std::to_string(mean) + " within 0.482 +/- 0.05");

        if (const char* nli = std::getenv("EMOTONE_LIVE_NLI"); nli && std::getenv("EMOTONE_LIVE_CHAT")) {
            auto chat = make_chat_backend(BackendConfig{std::getenv("EMOTONE_LIVE_CHAT"), 60.0, 2});
            auto judge = make_nli_backend(BackendConfig{nli, 30.0, 2});
            std::size_t contradictions = 0, total = 0;
            for (std::size_t i = 0; i < std::min<std::size_t>(sample.size(), 100); ++i) {
                const RewriteBundle bundle = detoxify(sample[i].text, *chat);
                if (nli_judge(sample[i].text, bundle.balanced, *judge) == NliLabel::contradiction)
                    ++contradictions;
                ++total;
            }
            const double rate = static_cast<double>(contradictions) / static_cast<double>(total);
            if (rate >= 0.10)
                note("DIVERGENCE (non-gating): live BALANCED contradiction rate " +
                     std::to_string(rate) + " >= 0.10");
            else
                note("live BALANCED contradiction rate " + std::to_string(rate) + " < 0.10");
        }
    } catch (const std::exception& e) {
        note(std::string("live check aborted (non-gating): ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    criterion(1, "formula exactness (stimulus, EBI, HIR; 10k property draws; < 1s)",
              formula_exactness);
    criterion(2, "reference-value consistency (reductions, d = t/sqrt(n), category deltas)",
              paper_value_consistency);
    criterion(3, "statistics oracle (frozen reference fixtures; analytic Cauchy)",
              statistics_oracle);
    if (cli_path.empty()) {
        ++g_failures;
        std::cout << "[FAIL] criterion 4: end-to-end mock run (CLI path missing)\n";
    } else {
        criterion(4, "end-to-end mock run (800 texts, < 60s, byte-identical, brute-force oracle)",
                  [&] { end_to_end_mock_run(cli_path); });
    }
    criterion(5, "validator behavior (closed [0.8L, 1.2L], sentence counts, 3-attempt cap)",
              validator_behavior);
    criterion(6, "weekly aggregation (5 x 100 without replacement, deterministic, schema)",
              weekly_aggregation);
    criterion(7, "FRE fixtures match hand-computed values exactly", fre_fixtures);
    criterion(8, "live-backend spot check (non-gating)", live_mode_check);

    if (g_failures > 0) {
        std::cout << g_failures << " acceptance check(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
