#include "emotone/classify.hpp"

#include "emotone/errors.hpp"
#include "emotone/text.hpp"

namespace emotone {

std::string truncate_for_classifier(const std::string& text) {
    return truncate_tokens(text, kClassifierMaxTokens);
}

ClassifierGateway::ClassifierGateway(const ClassifierBackendConfig& config)
    : backend_(make_classifier_backend(config)) {
    if (!(config.timeout_s > 0.0)) throw ContractError("classifier timeout must be > 0");
    if (config.max_retries < 0) throw ContractError("classifier max_retries must be >= 0");
}

ClassifierGateway::ClassifierGateway(std::shared_ptr<ClassifierBackend> backend)
    : backend_(std::move(backend)) {
    if (!backend_) throw ContractError("classifier backend must not be null");
}

EmotionDistribution ClassifierGateway::classify(const std::string& text) const {
    const std::string truncated = truncate_for_classifier(text);
    return EmotionDistribution::normalized(backend_->raw_scores(truncated));
}

EmotionDistribution lexicon_classify(const std::string& text) {
    static const std::shared_ptr<ClassifierBackend> backend = make_lexicon_backend();
    return EmotionDistribution::normalized(backend->raw_scores(text));
}

}  // namespace emotone
