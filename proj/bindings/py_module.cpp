#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "emotone/backends.hpp"
#include "emotone/classify.hpp"
#include "emotone/detox.hpp"
#include "emotone/fidelity.hpp"
#include "emotone/metrics.hpp"
#include "emotone/monitor.hpp"
#include "emotone/stats.hpp"

namespace py = pybind11;

namespace {

emotone::EmotionDistribution dist_from_list(const std::vector<double>& p) {
    if (p.size() != emotone::kEmotionCount)
        throw py::value_error("expected 6 probabilities (anger, fear, sadness, joy, love, surprise)");
    std::array<double, emotone::kEmotionCount> raw{};
    for (std::size_t i = 0; i < emotone::kEmotionCount; ++i) raw[i] = p[i];
    return emotone::EmotionDistribution::normalized(raw);
}

py::dict dist_to_dict(const emotone::EmotionDistribution& d) {
    py::dict out;
    for (emotone::Emotion e : emotone::kEmotions)
        out[py::str(std::string(emotone::emotion_name(e)))] = d[e];
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Emotional-tone metrics, rewrite validation and evaluation statistics";

    m.def(
        "stimulus_score",
        [](const std::vector<double>& p) { return emotone::stimulus_score(dist_from_list(p)); },
        py::arg("distribution"),
        "min(1, p_anger + p_fear + p_surprise) of a 6-emotion distribution");
    m.def(
        "emotion_balance_index",
        [](const std::vector<double>& p) {
            return emotone::emotion_balance_index(dist_from_list(p));
        },
        py::arg("distribution"), "1 - L1 distance to uniform / 2; in [1/6, 1]");
    m.def(
        "high_impact_rate",
        [](const std::vector<double>& scores, double theta) {
            return emotone::high_impact_rate(scores, theta);
        },
        py::arg("scores"), py::arg("theta") = emotone::kDefaultTheta);
    m.def("flesch_reading_ease",
          [](const std::string& text) { return emotone::flesch_reading_ease(text); },
          py::arg("text"));
    m.def(
        "text_stats",
        [](const std::string& text) {
            const emotone::TextStats s = emotone::fre_components(text);
            return py::make_tuple(s.words, s.sentences, s.syllables);
        },
        py::arg("text"), "(words, sentences, syllables) under the pinned segmentation rules");
    m.def("truncate_for_classifier", &emotone::truncate_for_classifier, py::arg("text"));
    m.def(
        "lexicon_classify",
        [](const std::string& text) { return dist_to_dict(emotone::lexicon_classify(text)); },
        py::arg("text"), "deterministic offline 6-emotion distribution");

    m.def(
        "cosine_similarity",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            return emotone::cosine_similarity(a, b);
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "mock_embed",
        [](const std::string& text) {
            auto backend = emotone::make_mock_embedding_backend();
            return emotone::embed(text, *backend);
        },
        py::arg("text"), "hashed bag-of-words embedding used by the offline backend");

    m.def(
        "paired_t",
        [](const std::vector<double>& baseline, const std::vector<double>& treatment) {
            const emotone::PairedTResult r = emotone::paired_t(baseline, treatment);
            return py::make_tuple(r.t, r.p_raw, r.d);
        },
        py::arg("baseline"), py::arg("treatment"),
        "(t, two-tailed p, paired Cohen's d) on diffs = baseline - treatment");
    m.def(
        "holm_adjust",
        [](const std::vector<double>& p) { return emotone::holm_adjust(p); }, py::arg("p_values"));
    m.def("percent_reduction", &emotone::percent_reduction, py::arg("raw"), py::arg("treated"));
    m.def(
        "pearson_correlation",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return emotone::pearson_correlation(x, y);
        },
        py::arg("x"), py::arg("y"));
    m.def("student_t_cdf", &emotone::student_t_cdf, py::arg("t"), py::arg("df"));

    m.def(
        "build_prompts",
        [](const std::string& original, const std::string& mode) {
            const emotone::Prompts p =
                emotone::build_prompts(original, emotone::mode_from_name(mode));
            return py::make_tuple(p.system_prompt, p.user_prompt);
        },
        py::arg("original"), py::arg("mode"));
    m.def(
        "validate_rewrite",
        [](const std::string& original, const std::string& rewritten, const std::string& mode) {
            return std::string(emotone::rewrite_status_name(
                emotone::validate_rewrite(original, rewritten, emotone::mode_from_name(mode))));
        },
        py::arg("original"), py::arg("rewritten"), py::arg("mode"));
    m.def(
        "mock_detoxify",
        [](const std::string& original) {
            auto backend = emotone::make_mock_chat_backend();
            const emotone::RewriteBundle b = emotone::detoxify(original, *backend);
            py::dict out;
            out["original"] = b.original;
            out["balanced"] = b.balanced;
            out["cool"] = b.cool;
            out["balanced_status"] = std::string(emotone::rewrite_status_name(b.balanced_status));
            out["cool_status"] = std::string(emotone::rewrite_status_name(b.cool_status));
            return out;
        },
        py::arg("original"), "both presentation modes through the offline rule-based rewriter");

    m.def(
        "weekly_summary_json",
        [](std::int64_t consumer_id, std::size_t n, double mean_stimulus, double hir, double ebi,
           const std::vector<double>& emotions) {
            emotone::WeeklySummary s;
            s.consumer_id = consumer_id;
            s.n = n;
            s.mean_stimulus = mean_stimulus;
            s.hir = hir;
            s.ebi = ebi;
            s.mean_emotions = dist_from_list(emotions);
            return emotone::weekly_summary_json(s);
        },
        py::arg("consumer_id"), py::arg("n"), py::arg("mean_stimulus"), py::arg("hir"),
        py::arg("ebi"), py::arg("emotions"));
}
