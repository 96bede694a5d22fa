#include "msol/llm_client.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace msol {

void ProviderConfig::validate() const {
    if (endpoint.empty()) throw std::invalid_argument("provider endpoint is empty");
    if (model.empty()) throw std::invalid_argument("provider model is empty");
    if (temperatures.empty()) throw std::invalid_argument("temperatures must be nonempty");
    for (double t : temperatures)
        if (!(t > 0.0 && t <= 2.0))
            throw std::invalid_argument("temperature " + std::to_string(t) +
                                        " outside (0, 2]");
    if (retries < 0) throw std::invalid_argument("retries must be >= 0");
}

std::string chat_request_body(const std::string& model, const std::string& content,
                              double temperature) {
    nlohmann::json body{
        {"model", model},
        {"messages", nlohmann::json::array({{{"role", "user"}, {"content", content}}})},
        {"temperature", temperature},
    };
    return body.dump();
}

HttpLlmClient::HttpLlmClient(ProviderConfig config) : config_(std::move(config)) {
    config_.validate();
    if (const char* key = std::getenv(config_.api_key_env.c_str())) api_key_ = key;
}

std::optional<std::string> HttpLlmClient::complete(const std::string& content,
                                                   double temperature) {
    // Split http://host[:port]/path into client target and request path.
    std::string url = config_.endpoint;
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return std::nullopt;
    auto path_begin = url.find('/', scheme_end + 3);
    std::string host = url.substr(0, path_begin == std::string::npos ? url.size() : path_begin);
    std::string path = path_begin == std::string::npos ? "/" : url.substr(path_begin);

    httplib::Client client(host);
    client.set_connection_timeout(config_.timeout_seconds, 0);
    client.set_read_timeout(config_.timeout_seconds, 0);
    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

    std::string body = chat_request_body(config_.model, content, temperature);
    for (int attempt = 0; attempt <= config_.retries; ++attempt) {
        auto res = client.Post(path, headers, body, "application/json");
        if (!res || res->status < 200 || res->status >= 300) continue;
        try {
            nlohmann::json reply = nlohmann::json::parse(res->body);
            return reply.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const nlohmann::json::exception&) {
            continue;  // malformed body counts against the retry budget
        }
    }
    return std::nullopt;
}

CassettePlayer::CassettePlayer(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cassette " + path);
    nlohmann::json j;
    in >> j;
    for (const auto& e : j.at("entries"))
        entries_.push_back({e.at("content").get<std::string>(), e.at("temperature").get<double>(),
                            e.at("response").get<std::string>()});
}

std::optional<std::string> CassettePlayer::complete(const std::string& content,
                                                    double temperature) {
    for (const Entry& e : entries_)
        if (e.content == content && e.temperature == temperature) return e.response;
    return std::nullopt;
}

CassetteRecorder::CassetteRecorder(std::unique_ptr<LlmClient> inner, std::string path)
    : inner_(std::move(inner)), path_(std::move(path)) {}

CassetteRecorder::~CassetteRecorder() {
    nlohmann::json entries = nlohmann::json::array();
    for (const Entry& e : recorded_)
        entries.push_back({{"content", e.content},
                           {"temperature", e.temperature},
                           {"response", e.response}});
    std::ofstream out(path_);
    out << nlohmann::json{{"entries", std::move(entries)}}.dump(2) << "\n";
}

std::optional<std::string> CassetteRecorder::complete(const std::string& content,
                                                      double temperature) {
    auto response = inner_->complete(content, temperature);
    if (response) recorded_.push_back({content, temperature, *response});
    return response;
}

}  // namespace msol
