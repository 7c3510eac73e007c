#include <cstdlib>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "pairrank/metrics.hpp"

namespace pairrank {

using nlohmann::json;

namespace {

struct EndpointParts {
    std::string base;  // scheme://host:port
    std::string path;
};

EndpointParts split_endpoint(const std::string& endpoint) {
    const auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos)
        throw ConfigError("judge endpoint must include a scheme: " + endpoint);
    const auto path_start = endpoint.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {endpoint, "/"};
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

}  // namespace

HttpJudge::HttpJudge(JudgeSettings settings) : settings_(std::move(settings)) {
    split_endpoint(settings_.endpoint);  // validate eagerly
}

Verdict HttpJudge::compare(const std::string& prompt, const std::string& response_a,
                           const std::string& response_b) const {
    const auto parts = split_endpoint(settings_.endpoint);

    httplib::Client client(parts.base);
    client.set_connection_timeout(0, settings_.timeout_ms * 1000);
    client.set_read_timeout(0, settings_.timeout_ms * 1000);
    client.set_write_timeout(0, settings_.timeout_ms * 1000);
    if (const char* key = std::getenv("JUDGE_API_KEY")) client.set_bearer_token_auth(key);

    const json body{{"prompt", prompt}, {"response_a", response_a}, {"response_b", response_b}};
    const std::string payload = body.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= settings_.max_retries; ++attempt) {
        auto result = client.Post(parts.path, payload, "application/json");
        if (!result) {
            last_error = "transport failure: " + httplib::to_string(result.error());
            continue;
        }
        if (result->status != 200) {
            last_error = "judge returned HTTP " + std::to_string(result->status);
            continue;
        }
        try {
            const auto reply = json::parse(result->body);
            const std::string better = reply.at("better").get<std::string>();
            if (better == "a") return Verdict::First;
            if (better == "b") return Verdict::Second;
            if (better == "tie") return Verdict::Tie;
            last_error = "judge verdict not one of a/b/tie: " + better;
        } catch (const json::exception& e) {
            last_error = std::string("malformed judge reply: ") + e.what();
        }
    }
    throw JudgeError("judge request failed after " + std::to_string(settings_.max_retries + 1) +
                     " attempts: " + last_error);
}

PairJudgeFn HttpJudge::as_pair_judge(std::string prompt) const {
    return [this, prompt = std::move(prompt)](const ResponseSample& a,
                                              const ResponseSample& b) -> Verdict {
        const auto render = [](const ResponseSample& s) {
            return "[id=" + std::to_string(s.id) + " len=" + std::to_string(s.length) + "]";
        };
        return compare(prompt, render(a), render(b));
    };
}

}  // namespace pairrank
