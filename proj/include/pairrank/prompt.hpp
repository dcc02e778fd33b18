#pragma once

#include <map>
#include <string>

#include "pairrank/comparator.hpp"

namespace pairrank {

/// Fills a pairwise comparison template. Recognized placeholders:
///   [source_text_input]  the group context (required iff the query has one)
///   [summary_1]          text of the first-listed candidate (required)
///   [summary_2]          text of the second-listed candidate (required)
///   [aspect]             the evaluation aspect (optional)
/// A template missing a required placeholder, or containing
/// [source_text_input] when the query carries no context, is a TemplateError.
/// Output is byte-exact deterministic.
std::string build_prompt(const ComparisonQuery& query, const std::string& templ);

/// Reads a template file as-is (UTF-8 text). Throws TemplateError when the
/// file cannot be read.
std::string load_template(const std::string& path);

/// Resolves template_id to "<dir>/<template_id>.txt".
std::string template_path(const std::string& templates_dir, const std::string& template_id);

struct ExtractionResult {
    double p_first = 0.5;
    /// True when one choice token was absent from the top-k list and its
    /// log-probability was floor-estimated as min(logprobs) - ln(k).
    bool floor_estimated = false;
};

/// Two-way softmax over the log-probabilities of the two choice tokens.
/// With exactly one token present, the missing side gets a floor estimate
/// and the result is flagged. With neither present, throws ExtractionError.
ExtractionResult extract_preference(const std::map<std::string, double>& token_logprobs,
                                    const std::pair<std::string, std::string>& choice_tokens);

} // namespace pairrank
