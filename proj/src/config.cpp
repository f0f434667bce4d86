#include "emotone/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emotone/errors.hpp"

namespace emotone {

namespace {

using nlohmann::json;

void read_backend(const json& j, const char* key, BackendConfig& out) {
    if (!j.contains(key)) return;
    const json& b = j.at(key);
    if (b.contains("endpoint")) out.endpoint = b.at("endpoint").get<std::string>();
    if (b.contains("timeout_s")) out.timeout_s = b.at("timeout_s").get<double>();
    if (b.contains("max_retries")) out.max_retries = b.at("max_retries").get<int>();
}

}  // namespace

void RunConfig::validate() const {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ContractError("config: theta must lie in [0,1]");
    if (per_class_count < 1) throw ContractError("config: per_class_count must be >= 1");
    if (!(classifier.timeout_s > 0.0) || !(chat.timeout_s > 0.0) ||
        !(embedding.timeout_s > 0.0) || !(nli.timeout_s > 0.0))
        throw ContractError("config: backend timeouts must be > 0");
    if (classifier.max_retries < 0 || chat.max_retries < 0 || embedding.max_retries < 0 ||
        nli.max_retries < 0)
        throw ContractError("config: max_retries must be >= 0");
    if (classifier_concurrency < 1 || chat_concurrency < 1 || embedding_concurrency < 1 ||
        nli_concurrency < 1)
        throw ContractError("config: concurrency limits must be >= 1");
    if (consumer_count < 1 || texts_per_consumer < 1)
        throw ContractError("config: consumer settings must be >= 1");
}

RunConfig parse_config_json(const std::string& content, RunConfig base) {
    json j;
    try {
        j = json::parse(content);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("config parse error: ") + e.what());
    }
    if (j.contains("corpus_path")) base.corpus_path = j.at("corpus_path").get<std::string>();
    if (j.contains("per_class_count"))
        base.per_class_count = j.at("per_class_count").get<std::size_t>();
    if (j.contains("theta")) base.theta = j.at("theta").get<double>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out_dir")) base.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("min_stimulus")) base.min_stimulus = j.at("min_stimulus").get<double>();
    if (j.contains("allow_flagged")) base.allow_flagged = j.at("allow_flagged").get<bool>();
    if (j.contains("backends")) {
        const json& b = j.at("backends");
        read_backend(b, "classifier", base.classifier);
        read_backend(b, "chat", base.chat);
        read_backend(b, "embedding", base.embedding);
        read_backend(b, "nli", base.nli);
    }
    if (j.contains("concurrency")) {
        const json& c = j.at("concurrency");
        if (c.contains("classifier"))
            base.classifier_concurrency = c.at("classifier").get<std::size_t>();
        if (c.contains("chat")) base.chat_concurrency = c.at("chat").get<std::size_t>();
        if (c.contains("embedding"))
            base.embedding_concurrency = c.at("embedding").get<std::size_t>();
        if (c.contains("nli")) base.nli_concurrency = c.at("nli").get<std::size_t>();
    }
    if (j.contains("consumers")) {
        const json& c = j.at("consumers");
        if (c.contains("count")) base.consumer_count = c.at("count").get<std::size_t>();
        if (c.contains("per_consumer"))
            base.texts_per_consumer = c.at("per_consumer").get<std::size_t>();
    }
    if (j.contains("weekly_ebi_of_mean"))
        base.weekly_ebi_mode = j.at("weekly_ebi_of_mean").get<bool>()
                                   ? WeeklyEbiMode::of_mean_distribution
                                   : WeeklyEbiMode::mean_of_texts;
    if (j.contains("personas_path")) base.personas_path = j.at("personas_path").get<std::string>();
    if (j.contains("browsing_log_path"))
        base.browsing_log_path = j.at("browsing_log_path").get<std::string>();
    return base;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str(), RunConfig{});
}

}  // namespace emotone
