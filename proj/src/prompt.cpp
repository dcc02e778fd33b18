#include "pairrank/prompt.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace pairrank {

namespace {

void replace_all(std::string& text, const std::string& token, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
        text.replace(pos, token.size(), value);
        pos += value.size();
    }
}

} // namespace

std::string build_prompt(const ComparisonQuery& query, const std::string& templ) {
    static const std::string kContext = "[source_text_input]";
    static const std::string kFirst = "[summary_1]";
    static const std::string kSecond = "[summary_2]";
    static const std::string kAspect = "[aspect]";

    if (templ.find(kFirst) == std::string::npos)
        throw TemplateError("template lacks the " + kFirst + " placeholder");
    if (templ.find(kSecond) == std::string::npos)
        throw TemplateError("template lacks the " + kSecond + " placeholder");
    const bool wants_context = templ.find(kContext) != std::string::npos;
    if (wants_context && !query.context)
        throw TemplateError("template expects " + kContext + " but the query has no context");
    if (!wants_context && query.context)
        throw TemplateError("query carries context but the template has no " + kContext + " placeholder");

    std::string out = templ;
    if (wants_context) replace_all(out, kContext, *query.context);
    replace_all(out, kFirst, query.first.text);
    replace_all(out, kSecond, query.second.text);
    replace_all(out, kAspect, query.aspect);
    return out;
}

std::string load_template(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TemplateError("cannot read template file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string template_path(const std::string& templates_dir, const std::string& template_id) {
    if (template_id.empty()) throw TemplateError("empty template_id");
    return templates_dir + "/" + template_id + ".txt";
}

ExtractionResult extract_preference(const std::map<std::string, double>& token_logprobs,
                                    const std::pair<std::string, std::string>& choice_tokens) {
    const auto a = token_logprobs.find(choice_tokens.first);
    const auto b = token_logprobs.find(choice_tokens.second);
    if (a == token_logprobs.end() && b == token_logprobs.end())
        throw ExtractionError("neither choice token ('" + choice_tokens.first + "', '" +
                              choice_tokens.second + "') present in the returned log-probabilities");

    ExtractionResult result;
    double lp_a, lp_b;
    if (a != token_logprobs.end() && b != token_logprobs.end()) {
        lp_a = a->second;
        lp_b = b->second;
    } else {
        // Top-k truncation dropped one side; floor it at min(logprobs) - ln(k).
        double floor = std::numeric_limits<double>::infinity();
        for (const auto& [_, lp] : token_logprobs) floor = std::min(floor, lp);
        floor -= std::log(static_cast<double>(token_logprobs.size()));
        lp_a = a != token_logprobs.end() ? a->second : floor;
        lp_b = b != token_logprobs.end() ? b->second : floor;
        result.floor_estimated = true;
    }
    // Two-way softmax, stabilized.
    const double m = std::max(lp_a, lp_b);
    const double ea = std::exp(lp_a - m);
    const double eb = std::exp(lp_b - m);
    result.p_first = ea / (ea + eb);
    return result;
}

} // namespace pairrank
