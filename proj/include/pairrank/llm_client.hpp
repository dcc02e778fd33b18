#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "pairrank/comparator.hpp"

namespace pairrank {

/// Connection settings for a chat-completions style judge endpoint.
/// The API key is read from the environment variable named here and is
/// never logged or echoed in errors.
struct LlmClientConfig {
    std::string endpoint_url;                       // e.g. https://host/v1/chat/completions
    std::string model_name;
    std::string api_key_env = "PAIRRANK_API_KEY";
    std::pair<std::string, std::string> choice_tokens = {"A", "B"};
    int top_logprobs = 5;
    double timeout_s = 30.0;
    int max_retries = 2;
    int max_in_flight = 4;
    std::string templates_dir = "templates";
};

/// Comparator backed by an HTTP judge. Builds the prompt from the template
/// named by the query, requests temperature-0 output with top-k token
/// log-probabilities, and normalizes the choice-token logits into a
/// preference probability. Transport failures retry up to max_retries and
/// then surface as BackendError carrying the query pair; in-flight requests
/// are bounded by max_in_flight.
class LlmComparator final : public Comparator {
public:
    /// Fails fast (ConfigError) when the API key variable is unset or the
    /// config is invalid, before any query is issued.
    explicit LlmComparator(LlmClientConfig config);
    ~LlmComparator() override;

    ComparisonRecord compare(const ComparisonQuery& query) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace pairrank
