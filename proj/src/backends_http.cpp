#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "emotone/backends.hpp"
#include "emotone/errors.hpp"

namespace emotone {

namespace {

using nlohmann::json;

struct ParsedUrl {
    std::string base;  // scheme://host:port
    std::string path;  // /path, defaults to "/"
};

ParsedUrl parse_url(const std::string& url) {
    const std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw ContractError("backend endpoint is not a URL: " + url);
    const std::size_t path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

// Exponential backoff: 0.5 s, 1 s, 2 s, ... between attempts; the config's
// max_retries caps the extra attempts after the first.
json post_with_retries(const BackendConfig& config, const std::string& token_env,
                       const json& body) {
    const ParsedUrl url = parse_url(config.endpoint);
    httplib::Client client(url.base);
    client.set_connection_timeout(std::chrono::duration<double>(config.timeout_s));
    client.set_read_timeout(std::chrono::duration<double>(config.timeout_s));
    if (const char* token = std::getenv(token_env.c_str()); token && *token)
        client.set_bearer_token_auth(token);

    const std::string payload = body.dump();
    std::string last_error;
    double backoff_s = 0.5;
    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::duration<double>(backoff_s));
            backoff_s *= 2.0;
        }
        httplib::Result res = client.Post(url.path, payload, "application/json");
        if (!res) {
            last_error = httplib::to_string(res.error());
            continue;
        }
        if (res->status < 200 || res->status >= 300) {
            last_error = "HTTP status " + std::to_string(res->status);
            continue;
        }
        try {
            return json::parse(res->body);
        } catch (const json::parse_error& e) {
            throw ProtocolError("backend returned invalid JSON: " + std::string(e.what()));
        }
    }
    throw TransportError("backend " + config.endpoint + " unreachable after " +
                         std::to_string(config.max_retries + 1) + " attempt(s): " + last_error);
}

class HttpClassifierBackend final : public ClassifierBackend {
  public:
    explicit HttpClassifierBackend(BackendConfig config) : config_(std::move(config)) {}

    std::array<double, kEmotionCount> raw_scores(const std::string& text) override {
        const json reply = post_with_retries(config_, "EMOTONE_CLASSIFIER_TOKEN", {{"text", text}});
        if (!reply.contains("scores") || !reply["scores"].is_object())
            throw ProtocolError("classifier reply missing 'scores' object");
        const json& scores = reply["scores"];
        if (scores.size() != kEmotionCount)
            throw ProtocolError("classifier returned " + std::to_string(scores.size()) +
                                " scores, expected 6");
        std::array<double, kEmotionCount> out{};
        for (Emotion e : kEmotions) {
            const std::string name(emotion_name(e));
            if (!scores.contains(name) || !scores[name].is_number())
                throw ProtocolError("classifier reply missing numeric score for '" + name + "'");
            out[static_cast<std::size_t>(e)] = scores[name].get<double>();
        }
        return out;
    }

  private:
    BackendConfig config_;
};

class HttpChatBackend final : public ChatBackend {
  public:
    explicit HttpChatBackend(BackendConfig config) : config_(std::move(config)) {}

    std::string complete(const ChatRequest& request) override {
        const json reply = post_with_retries(config_, "EMOTONE_CHAT_TOKEN",
                                             {{"system", request.system},
                                              {"user", request.user},
                                              {"temperature", request.temperature},
                                              {"max_tokens", request.max_tokens}});
        if (!reply.contains("text") || !reply["text"].is_string())
            throw ProtocolError("chat reply missing 'text' string");
        return reply["text"].get<std::string>();
    }

  private:
    BackendConfig config_;
};

class HttpEmbeddingBackend final : public EmbeddingBackend {
  public:
    explicit HttpEmbeddingBackend(BackendConfig config) : config_(std::move(config)) {}

    std::vector<double> embed(const std::string& text) override {
        const json reply = post_with_retries(config_, "EMOTONE_EMBEDDING_TOKEN", {{"text", text}});
        if (!reply.contains("vector") || !reply["vector"].is_array() || reply["vector"].empty())
            throw ProtocolError("embedding reply missing non-empty 'vector' array");
        std::vector<double> out;
        out.reserve(reply["vector"].size());
        for (const json& v : reply["vector"]) {
            if (!v.is_number()) throw ProtocolError("embedding vector has a non-numeric entry");
            out.push_back(v.get<double>());
        }
        return out;
    }

  private:
    BackendConfig config_;
};

class HttpNliBackend final : public NliBackend {
  public:
    explicit HttpNliBackend(BackendConfig config) : config_(std::move(config)) {}

    NliScores score(const std::string& premise, const std::string& hypothesis) override {
        const json reply = post_with_retries(config_, "EMOTONE_NLI_TOKEN",
                                             {{"premise", premise}, {"hypothesis", hypothesis}});
        if (!reply.contains("scores") || !reply["scores"].is_object())
            throw ProtocolError("NLI reply missing 'scores' object");
        const json& scores = reply["scores"];
        for (const char* label : {"entailment", "neutral", "contradiction"})
            if (!scores.contains(label) || !scores[label].is_number())
                throw ProtocolError(std::string("NLI reply missing numeric score for '") + label +
                                    "'");
        return {scores["entailment"].get<double>(), scores["neutral"].get<double>(),
                scores["contradiction"].get<double>()};
    }

  private:
    BackendConfig config_;
};

}  // namespace

std::shared_ptr<ClassifierBackend> make_classifier_backend(const BackendConfig& config) {
    if (config.endpoint == "lexicon") return make_lexicon_backend();
    return std::make_shared<HttpClassifierBackend>(config);
}

std::shared_ptr<ChatBackend> make_chat_backend(const BackendConfig& config) {
    if (config.endpoint == "mock") return make_mock_chat_backend();
    return std::make_shared<HttpChatBackend>(config);
}

std::shared_ptr<EmbeddingBackend> make_embedding_backend(const BackendConfig& config) {
    if (config.endpoint == "mock") return make_mock_embedding_backend();
    return std::make_shared<HttpEmbeddingBackend>(config);
}

std::shared_ptr<NliBackend> make_nli_backend(const BackendConfig& config) {
    if (config.endpoint == "mock") return make_mock_nli_backend();
    return std::make_shared<HttpNliBackend>(config);
}

}  // namespace emotone
