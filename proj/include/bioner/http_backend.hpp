#pragma once

// Chat-completions wire client. Any server speaking the common shape
// (POST {endpoint}/chat/completions, response choices[0].message.content)
// plugs in; the auth token comes from an environment variable so it never
// shows up in shell history.
//
// Pulls in httplib, so only translation units that actually talk HTTP
// should include this header.

#include <cstdlib>
#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "bioner/inference.hpp"

namespace bioner {

struct WireConfig {
  std::string endpoint;  // scheme://host:port[/path-prefix]
  std::string model;
  std::string auth_env = "LLM_API_KEY";
  std::size_t timeout_sec = 120;
};

class WireBackend : public Backend {
 public:
  explicit WireBackend(WireConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.endpoint.empty()) throw Error("wire backend needs an endpoint");
    std::size_t host_start = cfg_.endpoint.find("://");
    host_start = host_start == std::string::npos ? 0 : host_start + 3;
    const std::size_t slash = cfg_.endpoint.find('/', host_start);
    if (slash == std::string::npos) {
      base_ = cfg_.endpoint;
    } else {
      base_ = cfg_.endpoint.substr(0, slash);
      prefix_ = cfg_.endpoint.substr(slash);
      while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
    }
  }

  std::string generate(const GenerationRequest& req) override {
    if (req.max_output_chars == 0) {
      throw Error("max_output_chars must be positive");
    }
    nlohmann::json body;
    body["model"] = cfg_.model;
    body["messages"] =
        nlohmann::json::array({{{"role", "user"}, {"content", req.prompt}}});
    body["temperature"] = req.temperature;

    // one client per call: httplib clients are not safe to share across
    // concurrent generate() calls
    httplib::Client cli(base_);
    cli.set_connection_timeout(static_cast<time_t>(cfg_.timeout_sec), 0);
    cli.set_read_timeout(static_cast<time_t>(cfg_.timeout_sec), 0);
    cli.set_write_timeout(static_cast<time_t>(cfg_.timeout_sec), 0);

    httplib::Headers headers;
    if (const char* token = std::getenv(cfg_.auth_env.c_str());
        token && *token) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }

    const auto res = cli.Post(prefix_ + "/chat/completions", headers,
                              body.dump(), "application/json");
    if (!res) {
      const auto err = res.error();
      const auto kind = err == httplib::Error::ConnectionTimeout
                            ? BackendErrorKind::timeout
                            : BackendErrorKind::transport;
      throw BackendError(kind, httplib::to_string(err));
    }
    if (res->status < 200 || res->status >= 300) {
      throw BackendError(BackendErrorKind::http_status,
                         "status " + std::to_string(res->status));
    }
    const nlohmann::json reply =
        nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("choices") ||
        !reply["choices"].is_array() || reply["choices"].empty() ||
        !reply["choices"][0].contains("message") ||
        !reply["choices"][0]["message"].contains("content") ||
        !reply["choices"][0]["message"]["content"].is_string()) {
      throw BackendError(BackendErrorKind::malformed_response,
                         "no choices[0].message.content in reply");
    }
    return truncate_chars(
        reply["choices"][0]["message"]["content"].get<std::string>(),
        req.max_output_chars);
  }

  std::string name() const override { return "wire(" + cfg_.model + ")"; }

 private:
  WireConfig cfg_;
  std::string base_;
  std::string prefix_;
};

}  // namespace bioner
