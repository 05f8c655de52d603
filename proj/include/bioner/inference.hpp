#pragma once

// Generation backend contract plus the batch driver. The production wire
// client lives in http_backend.hpp; everything here is in-process and
// deterministic, which is what the test pyramid leans on.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bioner/codec.hpp"
#include "bioner/core.hpp"
#include "bioner/errors.hpp"
#include "bioner/promptgen.hpp"
#include "bioner/random.hpp"

namespace bioner {

struct GenerationRequest {
  std::string prompt;
  std::size_t max_output_chars = 65536;  // must stay > 0
  double temperature = 0;
  std::string id;
};

enum class BackendErrorKind { transport, http_status, malformed_response, timeout };

inline std::string to_string(BackendErrorKind k) {
  switch (k) {
    case BackendErrorKind::transport: return "transport";
    case BackendErrorKind::http_status: return "http_status";
    case BackendErrorKind::malformed_response: return "malformed_response";
    default: return "timeout";
  }
}

class BackendError : public Error {
 public:
  BackendError(BackendErrorKind kind, const std::string& detail)
      : Error(to_string(kind) + ": " + detail), kind(kind) {}
  BackendErrorKind kind;
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string generate(const GenerationRequest& req) = 0;
  virtual std::string name() const = 0;
};

// Cuts a UTF-8 string after max_chars code points without splitting one.
inline std::string truncate_chars(const std::string& s, std::size_t max_chars) {
  std::size_t chars = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) == 0x80) continue;
    if (chars == max_chars) return s.substr(0, i);
    ++chars;
  }
  return s;
}

// Runs fn(0..n-1) on min(parallelism, n) worker threads. fn must not throw.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t parallelism, Fn&& fn) {
  if (parallelism < 1) throw Error("parallelism must be at least 1");
  const std::size_t workers = std::min(parallelism, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

struct RunOptions {
  std::size_t parallelism = 1;
  std::size_t retries = 3;  // further attempts after the first failure
  std::size_t backoff_ms = 50;
};

struct BatchItem {
  std::string output;
  std::optional<BackendErrorKind> error;
  std::string error_detail;
  std::size_t attempts = 0;

  bool ok() const { return !error.has_value(); }
};

// Index-aligned batch execution with bounded concurrency and per-slot
// retry; a failing request never takes the batch down.
inline std::vector<BatchItem> run_batch(
    const std::vector<GenerationRequest>& requests, Backend& backend,
    const RunOptions& opts = {}) {
  for (const GenerationRequest& r : requests) {
    if (r.max_output_chars == 0) {
      throw Error("max_output_chars must be positive (request '" + r.id + "')");
    }
  }
  std::vector<BatchItem> results(requests.size());
  parallel_for(requests.size(), opts.parallelism, [&](std::size_t i) {
    BatchItem& slot = results[i];
    for (std::size_t attempt = 0; attempt <= opts.retries; ++attempt) {
      ++slot.attempts;
      try {
        slot.output = backend.generate(requests[i]);
        slot.error.reset();
        slot.error_detail.clear();
        return;
      } catch (const BackendError& e) {
        slot.error = e.kind;
        slot.error_detail = e.what();
      } catch (const std::exception& e) {
        slot.error = BackendErrorKind::transport;
        slot.error_detail = e.what();
      }
      if (attempt < opts.retries && opts.backoff_ms > 0) {
        std::this_thread::sleep_for(
            std::chrono::milliseconds(opts.backoff_ms << attempt));
      }
    }
  });
  return results;
}

// ------------------------------------------------------------- mocks ----

class EchoBackend : public Backend {
 public:
  std::string generate(const GenerationRequest& req) override {
    return truncate_chars(req.prompt, req.max_output_chars);
  }
  std::string name() const override { return "echo"; }
};

// Arbitrary behavior per request, for fault injection in tests.
class ScriptedBackend : public Backend {
 public:
  using Fn = std::function<std::string(const GenerationRequest&)>;
  explicit ScriptedBackend(Fn fn, std::string name = "scripted")
      : fn_(std::move(fn)), name_(std::move(name)) {}
  std::string generate(const GenerationRequest& req) override {
    return truncate_chars(fn_(req), req.max_output_chars);
  }
  std::string name() const override { return name_; }

 private:
  Fn fn_;
  std::string name_;
};

// A perfect model: answers every prompt with the gold encoding of the
// sentence embedded in it. Prompts are recognized exactly when they were
// rendered with the same template; otherwise the longest corpus sentence
// text occurring verbatim in the prompt decides.
class EchoGoldBackend : public Backend {
 public:
  EchoGoldBackend(const std::vector<Sentence>& corpus,
                  const std::map<std::string, DatasetSchema>& schemas,
                  Strategy strategy, const PromptTemplate& tmpl) {
    for (const Sentence& s : corpus) {
      const auto it = schemas.find(s.dataset);
      if (it == schemas.end()) {
        throw SchemaNotFound("no schema for dataset '" + s.dataset + "'");
      }
      const std::size_t idx = payloads_.size();
      payloads_.push_back(encode(strategy, s, it->second).payload);
      texts_.push_back(s.text);
      by_prompt_.emplace(render_prompt(s, it->second, tmpl), idx);
    }
  }

  std::string generate(const GenerationRequest& req) override {
    const auto it = by_prompt_.find(req.prompt);
    if (it != by_prompt_.end()) {
      return truncate_chars(payloads_[it->second], req.max_output_chars);
    }
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < texts_.size(); ++i) {
      if (texts_[i].empty() || req.prompt.find(texts_[i]) == std::string::npos) {
        continue;
      }
      if (!best || texts_[i].size() > texts_[*best].size()) best = i;
    }
    if (!best) {
      throw UnknownSentence("prompt does not contain any corpus sentence");
    }
    return truncate_chars(payloads_[*best], req.max_output_chars);
  }

  std::string name() const override { return "echo-gold"; }

 private:
  std::vector<std::string> payloads_;
  std::vector<std::string> texts_;
  std::unordered_map<std::string, std::size_t> by_prompt_;
};

// ----------------------------------------------------- seeded noise ----

struct Perturbation {
  std::string text;
  std::vector<std::size_t> touched;  // original code point positions
};

inline constexpr std::string_view kNoiseAlphabet =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 ";

// Per-character noise: each input position is substituted, deleted, or gets
// an insertion before it with probability rate. The replacement alphabet
// carries no format metacharacters, so noise garbles content rather than
// inventing structure.
inline Perturbation perturb_text(const std::string& payload, Rng& rng,
                                 double rate) {
  const std::u32string in = utf8_decode(payload, /*lossy=*/true);
  Perturbation out;
  std::u32string text;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (unit_rand(rng) >= rate) {
      text.push_back(in[i]);
      continue;
    }
    out.touched.push_back(i);
    switch (bounded_rand(rng, 3)) {
      case 0:  // substitute
        text.push_back(static_cast<char32_t>(
            kNoiseAlphabet[bounded_rand(rng, kNoiseAlphabet.size())]));
        break;
      case 1:  // delete
        break;
      default:  // insert before
        text.push_back(static_cast<char32_t>(
            kNoiseAlphabet[bounded_rand(rng, kNoiseAlphabet.size())]));
        text.push_back(in[i]);
        break;
    }
  }
  out.text = utf8_encode(text);
  return out;
}

// Wraps a backend with deterministic character noise; the per-prompt rng
// stream is seed ^ fnv1a(prompt), so tests can reproduce the corruption.
class PerturbingBackend : public Backend {
 public:
  PerturbingBackend(Backend& inner, std::uint64_t seed, double rate)
      : inner_(inner), seed_(seed), rate_(rate) {}

  std::string generate(const GenerationRequest& req) override {
    const std::string clean = inner_.generate(req);
    Rng rng(seed_ ^ fnv1a(req.prompt));
    return truncate_chars(perturb_text(clean, rng, rate_).text,
                          req.max_output_chars);
  }

  std::string name() const override {
    return "perturbing(" + inner_.name() + ")";
  }

 private:
  Backend& inner_;
  std::uint64_t seed_;
  double rate_;
};

}  // namespace bioner
