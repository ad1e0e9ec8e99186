#ifndef RULEBENCH_EVAL_CLIENT_HPP
#define RULEBENCH_EVAL_CLIENT_HPP

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include <json.hpp>

#include "rulebench/core/fsio.hpp"
#include "rulebench/core/rng.hpp"
#include "rulebench/eval/http.hpp"
#include "rulebench/text/prompts.hpp"

namespace rulebench {

struct EndpointConfig {
  std::string base_url;
  std::string model_name;
  double temperature = 0.0;
  std::optional<int> max_output_tokens;  // endpoint-level cap; bundle cap wins
  std::chrono::seconds timeout{60};
  int max_retries = 3;
  // The key is read from this environment variable at request time and never
  // stored anywhere: not in configs, caches, records, or errors. Empty name
  // means "endpoint needs no auth" (mocks, local servers).
  std::string api_key_env = "RULEBENCH_API_KEY";
  int parallelism = 1;
  std::string cache_dir;       // empty disables the response cache
  int retry_base_ms = 250;     // backoff base; retry i sleeps base * 2^i
};

inline EndpointConfig endpoint_from_json(const nlohmann::json& j) {
  EndpointConfig cfg;
  cfg.base_url = j.at("base_url").get<std::string>();
  cfg.model_name = j.at("model_name").get<std::string>();
  cfg.temperature = j.value("temperature", 0.0);
  if (j.contains("max_output_tokens") && !j.at("max_output_tokens").is_null())
    cfg.max_output_tokens = j.at("max_output_tokens").get<int>();
  cfg.timeout = std::chrono::seconds(j.value("timeout_seconds", 60));
  cfg.max_retries = j.value("max_retries", 3);
  cfg.api_key_env = j.value("api_key_env", std::string("RULEBENCH_API_KEY"));
  cfg.parallelism = j.value("parallelism", 1);
  cfg.cache_dir = j.value("cache_dir", std::string());
  cfg.retry_base_ms = j.value("retry_base_ms", 250);
  return cfg;
}

// Authentication problems abort the run: retrying cannot fix a bad key, and
// burning the full prompt set against a 401 helps nobody.
class AuthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 128-bit content hash (two independently seeded splitmix lanes). Not
// cryptographic; used only to key the response cache and label records.
inline std::string content_hash128(const std::string& data) {
  std::uint64_t h1 = 0x9e3779b97f4a7c15ull;
  std::uint64_t h2 = 0xc2b2ae3d27d4eb4full;
  for (const unsigned char c : data) {
    h1 = detail::mix64(h1 ^ c);
    h2 = detail::mix64(h2 + (static_cast<std::uint64_t>(c) << 1 | 1));
  }
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(h1),
                static_cast<unsigned long long>(h2));
  return buf;
}

// Cache/record key for one upstream call: model, temperature, an optional
// salt (used to keep the judge's three votes distinct), and the prompt.
inline std::string prompt_cache_key(const EndpointConfig& cfg, const std::string& prompt,
                                    const std::string& salt) {
  char temp[32];
  std::snprintf(temp, sizeof temp, "%.6g", cfg.temperature);
  std::string composite = cfg.model_name;
  composite += '\x1f';
  composite += temp;
  composite += '\x1f';
  composite += salt;
  composite += '\x1f';
  composite += prompt;
  return content_hash128(composite);
}

struct ModelReply {
  bool ok = false;
  std::string text;         // first message content on success
  std::string error;        // failure description otherwise
  int status = 0;           // last HTTP status seen (0 = transport failure)
  bool from_cache = false;
  int attempts = 0;         // upstream calls actually made
  std::string prompt_hash;  // cache key, recorded for audit
  std::optional<int> completion_tokens;
};

namespace eval_detail {

inline nlohmann::json request_body(const EndpointConfig& cfg, const std::string& prompt,
                                   std::optional<int> max_tokens) {
  nlohmann::json body;
  body["model"] = cfg.model_name;
  body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", prompt}}});
  body["temperature"] = cfg.temperature;
  if (max_tokens) body["max_tokens"] = *max_tokens;
  return body;
}

inline bool parse_completion(const std::string& body, ModelReply& reply) {
  nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded()) {
    reply.error = "response body is not JSON";
    return false;
  }
  if (!j.contains("choices") || !j["choices"].is_array() || j["choices"].empty()) {
    reply.error = "response has no choices";
    return false;
  }
  const nlohmann::json& msg = j["choices"][0];
  if (!msg.contains("message") || !msg["message"].contains("content")) {
    reply.error = "response choice has no message content";
    return false;
  }
  reply.text = msg["message"]["content"].get<std::string>();
  if (j.contains("usage") && j["usage"].contains("completion_tokens"))
    reply.completion_tokens = j["usage"]["completion_tokens"].get<int>();
  return true;
}

inline std::filesystem::path cache_path(const EndpointConfig& cfg, const std::string& key) {
  return std::filesystem::path(cfg.cache_dir) / (key + ".json");
}

}  // namespace eval_detail

// One completion with caching and retry. Transient failures (connection
// errors, HTTP 429, HTTP 5xx) retry with exponential backoff up to
// max_retries; other 4xx are permanent; 401/403 throw AuthError. Exhausting
// retries returns a failure reply so the surrounding run can continue and
// record it.
inline ModelReply query_text(const EndpointConfig& cfg, const std::string& prompt,
                             std::optional<int> max_tokens, const Transport& transport,
                             const std::string& salt = std::string()) {
  ModelReply reply;
  reply.prompt_hash = prompt_cache_key(cfg, prompt, salt);

  const bool use_cache = !cfg.cache_dir.empty();
  const std::filesystem::path cached = use_cache ? eval_detail::cache_path(cfg, reply.prompt_hash)
                                                 : std::filesystem::path();
  if (use_cache && std::filesystem::exists(cached)) {
    const nlohmann::json j = nlohmann::json::parse(read_file(cached.string()));
    reply.ok = true;
    reply.from_cache = true;
    reply.status = 200;
    reply.text = j.at("text").get<std::string>();
    if (j.contains("completion_tokens") && !j.at("completion_tokens").is_null())
      reply.completion_tokens = j.at("completion_tokens").get<int>();
    return reply;
  }

  HttpRequest req;
  req.url = cfg.base_url;
  req.headers.emplace_back("Content-Type", "application/json");
  if (!cfg.api_key_env.empty()) {
    const char* key = std::getenv(cfg.api_key_env.c_str());
    if (key == nullptr || *key == '\0')
      throw AuthError("api key environment variable '" + cfg.api_key_env +
                      "' is unset or empty; export it or set api_key_env");
    req.headers.emplace_back("Authorization", std::string("Bearer ") + key);
  }
  req.body = eval_detail::request_body(cfg, prompt, max_tokens).dump();

  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    if (attempt > 0) {
      const auto delay = std::chrono::milliseconds(
          static_cast<std::int64_t>(cfg.retry_base_ms) << (attempt - 1));
      if (delay.count() > 0) std::this_thread::sleep_for(delay);
    }
    ++reply.attempts;
    const HttpResponse resp = transport(req);
    reply.status = resp.status;

    if (!resp.transport_ok) {
      reply.error = resp.error.empty() ? "transport failure" : resp.error;
      continue;  // transient
    }
    if (resp.status == 401 || resp.status == 403)
      throw AuthError("endpoint rejected credentials (HTTP " + std::to_string(resp.status) +
                      "); check the key in $" + cfg.api_key_env);
    if (resp.status == 429 || resp.status >= 500) {
      reply.error = "HTTP " + std::to_string(resp.status);
      continue;  // transient
    }
    if (resp.status < 200 || resp.status >= 300) {
      reply.error = "HTTP " + std::to_string(resp.status) + " (permanent)";
      return reply;
    }
    if (!eval_detail::parse_completion(resp.body, reply)) return reply;

    reply.ok = true;
    reply.error.clear();  // drop messages left over from retried attempts
    if (use_cache) {
      nlohmann::json j;
      j["text"] = reply.text;
      j["completion_tokens"] =
          reply.completion_tokens ? nlohmann::json(*reply.completion_tokens) : nlohmann::json(nullptr);
      write_file_atomic(cached.string(), j.dump());
    }
    return reply;
  }

  if (reply.error.empty()) reply.error = "retries exhausted";
  reply.error = "retries exhausted: " + reply.error;
  return reply;
}

// The bundle's token cap wins over the endpoint default: Summarization and
// Combined prompts must reach the wire with their 1000-token budget.
inline ModelReply query_model(const EndpointConfig& cfg, const PromptBundle& bundle,
                              const Transport& transport) {
  const std::optional<int> cap =
      bundle.max_output_tokens ? bundle.max_output_tokens : cfg.max_output_tokens;
  return query_text(cfg, bundle.prompt_text(), cap, transport);
}

}  // namespace rulebench

#endif  // RULEBENCH_EVAL_CLIENT_HPP
