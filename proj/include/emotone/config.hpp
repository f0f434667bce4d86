#pragma once

#include <cstdint>
#include <string>

#include "emotone/backends.hpp"
#include "emotone/monitor.hpp"

namespace emotone {

// Full run configuration. Values come from an optional JSON config file,
// overridden by command-line flags (flags win).
struct RunConfig {
    std::string corpus_path;
    std::size_t per_class_count = 200;
    double theta = 0.6;
    std::uint64_t seed = 42;
    std::string out_dir = "out";
    double min_stimulus = 0.0;  // detox gate; 0 rewrites every sampled text
    bool allow_flagged = false;

    BackendConfig classifier{"lexicon", 10.0, 2};
    BackendConfig chat{"mock", 30.0, 2};
    BackendConfig embedding{"mock", 10.0, 2};
    BackendConfig nli{"mock", 10.0, 2};

    std::size_t classifier_concurrency = 8;
    std::size_t chat_concurrency = 4;
    std::size_t embedding_concurrency = 8;
    std::size_t nli_concurrency = 8;

    std::size_t consumer_count = kDefaultConsumerCount;
    std::size_t texts_per_consumer = kDefaultTextsPerConsumer;
    WeeklyEbiMode weekly_ebi_mode = WeeklyEbiMode::of_mean_distribution;

    std::string personas_path;      // empty -> built-in personas
    std::string browsing_log_path;  // empty -> simulate pseudo-consumers

    void validate() const;  // throws ContractError on out-of-range values
};

RunConfig load_config(const std::string& path);

// Applies a config file's values on top of defaults (helper for the CLI).
RunConfig parse_config_json(const std::string& content, RunConfig base);

}  // namespace emotone
