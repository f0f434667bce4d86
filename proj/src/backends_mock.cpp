#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "emotone/backends.hpp"
#include "emotone/errors.hpp"
#include "emotone/lexicon.hpp"
#include "emotone/prompts.hpp"
#include "emotone/rng.hpp"
#include "emotone/text.hpp"

// Deterministic offline backends. The chat mock is rule-based test plumbing,
// not a claim about real model behavior: it parses the labelled block out of
// the user prompt and answers by fixed rules.

namespace emotone {

namespace {

class LexiconClassifierBackend final : public ClassifierBackend {
  public:
    std::array<double, kEmotionCount> raw_scores(const std::string& text) override {
        std::array<double, kEmotionCount> counts{};
        counts.fill(1.0);  // Laplace smoothing of 1 per emotion
        const Lexicon& table = builtin_lexicon();
        for (const std::string& word : split_words_lower(text)) {
            const auto it = table.find(word);
            if (it != table.end()) counts[static_cast<std::size_t>(it->second)] += 1.0;
        }
        return counts;
    }
};

// Sensational-word deletion plus a canned supplementary sentence for COOL.
class MockChatBackend final : public ChatBackend {
  public:
    std::string complete(const ChatRequest& request) override {
        if (prompts::has_block(request.user, prompts::kAdviceSummaryLabel))
            return advice_reply(prompts::extract_block(request.user, prompts::kAdviceSummaryLabel));
        if (prompts::has_block(request.user, prompts::kPersonaLabel))
            return recommend_reply(prompts::extract_block(request.user, prompts::kPersonaLabel));
        if (prompts::has_block(request.user, prompts::kRewriteTextLabel)) {
            const bool cool = request.user.find("supplementary sentence") != std::string::npos;
            return rewrite_reply(prompts::extract_block(request.user, prompts::kRewriteTextLabel),
                                 cool);
        }
        throw ProtocolError("mock chat backend: unrecognized prompt shape");
    }

  private:
    static std::string rewrite_reply(const std::string& original, bool cool) {
        std::string sentence;
        for (const std::string& token : split_tokens(original)) {
            const std::vector<std::string> words = split_words_lower(token);
            if (!words.empty() && is_sensational_word(words.front())) continue;
            std::string kept = token;
            while (!kept.empty() && (kept.back() == '.' || kept.back() == '!' || kept.back() == '?'))
                kept.pop_back();
            if (kept.empty()) continue;
            if (!sentence.empty()) sentence.push_back(' ');
            sentence += kept;
        }
        sentence.push_back('.');
        if (!cool) return sentence;

        // Longest canned supplement still within +20% of the original length.
        static const char* kSupplements[] = {
            "Background reports describe the wider situation and the terms involved.",
            "The topic has a longer history that readers can review calmly.",
            "This update is part of an ongoing story.",
            "More details are expected.",
        };
        const std::size_t original_len = utf8_length(original);
        for (const char* supplement : kSupplements) {
            const std::size_t total = utf8_length(sentence) + 1 + utf8_length(supplement);
            if (5 * total <= 6 * original_len) return sentence + " " + supplement;
        }
        return sentence + " " + kSupplements[3];
    }

    static std::string advice_reply(const std::string& summary_json) {
        // Pull the 3-decimal renderings straight out of the serialized summary.
        const std::string ms = field(summary_json, "mean_stimulus");
        const std::string hir = field(summary_json, "hir");
        std::string dominant = "anger";
        double best = -1.0;
        for (Emotion e : kEmotions) {
            const std::string v = field(summary_json, std::string(emotion_name(e)));
            const double x = v.empty() ? 0.0 : std::stod(v);
            if (x > best) {
                best = x;
                dominant = std::string(emotion_name(e));
            }
        }
        char pct[32];
        std::snprintf(pct, sizeof(pct), "%.1f", best * 100.0);
        std::ostringstream out;
        out << "Your dominant emotion this week is " << dominant << " at " << pct
            << "%, with a mean stimulus score of " << ms << " and an HIR of " << hir
            << ". Try adding calmer science or technology stories to your reading. "
               "Switching to the COOL or BALANCED mode can further reduce the impact.";
        return out.str();
    }

    static std::string recommend_reply(const std::string& description) {
        const std::string d = to_lower(description);
        if (d.find("sensitiv") != std::string::npos || d.find("anxiet") != std::string::npos ||
            d.find("doom") != std::string::npos)
            return "MODE: COOL\nREASON: Gentle, context-rich rewriting reduces anxiety and "
                   "keeps a highly sensitive reader from being overwhelmed.";
        if (d.find("stimulus-seeking") != std::string::npos || d.find("bold") != std::string::npos ||
            d.find("dramatic") != std::string::npos)
            return "MODE: RAW\nREASON: The original keeps the bold expression this reader "
                   "enjoys while the facts stay accurate.";
        return "MODE: BALANCED\nREASON: A single neutral sentence balances factual accuracy "
               "with a moderate emotional tone.";
    }

    // Value of `"key": <number>` inside the serialized summary, as written.
    static std::string field(const std::string& json, const std::string& key) {
        const std::string needle = "\"" + key + "\":";
        std::size_t pos = json.find(needle);
        if (pos == std::string::npos) return {};
        pos += needle.size();
        while (pos < json.size() && json[pos] == ' ') ++pos;
        std::size_t end = pos;
        while (end < json.size() && (std::isdigit(static_cast<unsigned char>(json[end])) ||
                                     json[end] == '.' || json[end] == '-'))
            ++end;
        return json.substr(pos, end - pos);
    }
};

class MockEmbeddingBackend final : public EmbeddingBackend {
  public:
    std::vector<double> embed(const std::string& text) override {
        std::vector<double> v(kMockEmbeddingDim, 0.0);
        for (const std::string& word : split_words_lower(text)) v[mock_embedding_index(word)] += 1.0;
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (double& x : v) x /= norm;
        return v;
    }
};

const std::set<std::string>& stopwords() {
    static const std::set<std::string> words = {
        "a",  "an",  "the", "is",   "are",  "was", "were", "be", "been", "to",
        "of", "in",  "on",  "at",   "for",  "and", "or",   "with", "it", "its",
        "this", "that", "will", "has", "have", "had", "by", "as", "from"};
    return words;
}

const std::set<std::string>& negation_tokens() {
    static const std::set<std::string> words = {"no",      "not",    "never", "none",
                                                "without", "denies", "denied"};
    return words;
}

// Content-word overlap rule: >= 0.6 entailment; <= 0.1 contradiction only if
// negation presence differs, otherwise neutral; neutral in between.
class MockNliBackend final : public NliBackend {
  public:
    NliScores score(const std::string& premise, const std::string& hypothesis) override {
        std::set<std::string> p_content, h_content;
        bool p_negated = false, h_negated = false;
        collect(premise, p_content, p_negated);
        collect(hypothesis, h_content, h_negated);

        std::size_t shared = 0;
        for (const std::string& w : h_content)
            if (p_content.count(w)) ++shared;
        const double ratio =
            h_content.empty() ? 0.0 : static_cast<double>(shared) / h_content.size();

        if (ratio >= 0.6) return {0.9, 0.08, 0.02};
        if (ratio <= 0.1 && p_negated != h_negated) return {0.05, 0.15, 0.8};
        return {0.1, 0.8, 0.1};
    }

  private:
    static void collect(const std::string& text, std::set<std::string>& content, bool& negated) {
        for (const std::string& w : split_words_lower(text)) {
            if (negation_tokens().count(w)) {
                negated = true;
                continue;
            }
            if (!stopwords().count(w)) content.insert(w);
        }
    }
};

}  // namespace

std::size_t mock_embedding_index(const std::string& lower_word) {
    return static_cast<std::size_t>(fnv1a64(lower_word) % kMockEmbeddingDim);
}

std::shared_ptr<ClassifierBackend> make_lexicon_backend() {
    return std::make_shared<LexiconClassifierBackend>();
}
std::shared_ptr<ChatBackend> make_mock_chat_backend() {
    return std::make_shared<MockChatBackend>();
}
std::shared_ptr<EmbeddingBackend> make_mock_embedding_backend() {
    return std::make_shared<MockEmbeddingBackend>();
}
std::shared_ptr<NliBackend> make_mock_nli_backend() {
    return std::make_shared<MockNliBackend>();
}

}  // namespace emotone
