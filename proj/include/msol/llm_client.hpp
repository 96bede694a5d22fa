#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace msol {

struct ProviderConfig {
    std::string endpoint;  // e.g. http://host:port/v1/chat/completions
    std::string model;
    std::string api_key_env = "LLM_API_KEY";
    std::vector<double> temperatures{0.9, 0.95, 1.0};
    int retries = 3;
    int timeout_seconds = 30;

    void validate() const;  // throws std::invalid_argument
};

// One chat completion round trip. Returns the reply text, or nullopt after
// the retry budget is exhausted (the producer then falls back to score 0).
class LlmClient {
  public:
    virtual ~LlmClient() = default;
    virtual std::optional<std::string> complete(const std::string& content,
                                                double temperature) = 0;
};

// POSTs {model, messages:[{role:"user",content}], temperature} and reads
// choices[0].message.content from the reply.
class HttpLlmClient : public LlmClient {
  public:
    explicit HttpLlmClient(ProviderConfig config);
    std::optional<std::string> complete(const std::string& content, double temperature) override;

  private:
    ProviderConfig config_;
    std::string api_key_;
};

// Replays request/response pairs recorded in a cassette file; unmatched
// requests behave like a network failure.
class CassettePlayer : public LlmClient {
  public:
    explicit CassettePlayer(const std::string& path);
    std::optional<std::string> complete(const std::string& content, double temperature) override;

  private:
    struct Entry {
        std::string content;
        double temperature;
        std::string response;
    };
    std::vector<Entry> entries_;
};

// Forwards to an inner client and records every exchange; the cassette is
// written on destruction.
class CassetteRecorder : public LlmClient {
  public:
    CassetteRecorder(std::unique_ptr<LlmClient> inner, std::string path);
    ~CassetteRecorder() override;
    std::optional<std::string> complete(const std::string& content, double temperature) override;

  private:
    std::unique_ptr<LlmClient> inner_;
    std::string path_;
    struct Entry {
        std::string content;
        double temperature;
        std::string response;
    };
    std::vector<Entry> recorded_;
};

// Serializes the request body exactly as HttpLlmClient sends it.
std::string chat_request_body(const std::string& model, const std::string& content,
                              double temperature);

}  // namespace msol
