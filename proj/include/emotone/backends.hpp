#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "emotone/emotion.hpp"

namespace emotone {

// One config shape for all four model endpoints. `endpoint` is either an
// http(s) URL or an offline sentinel: "lexicon" for the classifier, "mock"
// for chat, embedding and NLI. Bearer tokens come from the environment
// (EMOTONE_<KIND>_TOKEN) and are never persisted.
struct BackendConfig {
    std::string endpoint;
    double timeout_s = 10.0;
    int max_retries = 2;  // extra attempts after the first, backoff 0.5 s doubling
};

using ClassifierBackendConfig = BackendConfig;

class ClassifierBackend {
  public:
    virtual ~ClassifierBackend() = default;
    // Raw (possibly unnormalized, possibly negative) scores keyed by the
    // canonical emotion order.
    virtual std::array<double, kEmotionCount> raw_scores(const std::string& text) = 0;
};

struct ChatRequest {
    std::string system;
    std::string user;
    double temperature = 0.0;
    int max_tokens = 0;
};

class ChatBackend {
  public:
    virtual ~ChatBackend() = default;
    virtual std::string complete(const ChatRequest& request) = 0;
};

class EmbeddingBackend {
  public:
    virtual ~EmbeddingBackend() = default;
    virtual std::vector<double> embed(const std::string& text) = 0;
};

struct NliScores {
    double entailment = 0.0;
    double neutral = 0.0;
    double contradiction = 0.0;
};

class NliBackend {
  public:
    virtual ~NliBackend() = default;
    virtual NliScores score(const std::string& premise, const std::string& hypothesis) = 0;
};

std::shared_ptr<ClassifierBackend> make_classifier_backend(const BackendConfig& config);
std::shared_ptr<ChatBackend> make_chat_backend(const BackendConfig& config);
std::shared_ptr<EmbeddingBackend> make_embedding_backend(const BackendConfig& config);
std::shared_ptr<NliBackend> make_nli_backend(const BackendConfig& config);

// Offline deterministic backends, also reachable through the factories.
std::shared_ptr<ClassifierBackend> make_lexicon_backend();
std::shared_ptr<ChatBackend> make_mock_chat_backend();
std::shared_ptr<EmbeddingBackend> make_mock_embedding_backend();
std::shared_ptr<NliBackend> make_mock_nli_backend();

// Hashed bag-of-words index used by the mock embedding (pinned so fixtures
// stay stable).
std::size_t mock_embedding_index(const std::string& lower_word);

inline constexpr std::size_t kMockEmbeddingDim = 256;

}  // namespace emotone
