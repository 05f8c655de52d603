#pragma once

// Entity selector stage: wrap candidate spans in marker tokens, build the
// contrastive training set (gold positives vs. boundary-shifted and
// type-swapped negatives), and filter predictions through a scoring
// backend. Scores come from a string-in/number-out contract so mocks and a
// wire model are interchangeable.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bioner/core.hpp"
#include "bioner/corpus_io.hpp"
#include "bioner/errors.hpp"
#include "bioner/inference.hpp"
#include "bioner/random.hpp"

namespace bioner {

inline constexpr std::string_view kMarkerOpen = "⟨e⟩";    // ⟨e⟩
inline constexpr std::string_view kMarkerClose = "⟨/e⟩";  // ⟨/e⟩

struct MarkedCandidate {
  std::string sentence_id;
  EntitySpan candidate;
  std::string marked_text;
  std::string selector_input;
};

inline MarkedCandidate mark_candidate(const Sentence& s, const EntitySpan& e,
                                      std::string_view s1 = kMarkerOpen,
                                      std::string_view s2 = kMarkerClose) {
  if (s1.empty() || s2.empty()) throw Error("marker tokens must be non-empty");
  if (s.text.find(s1) != std::string::npos ||
      s.text.find(s2) != std::string::npos) {
    throw MarkerCollision("sentence '" + s.id +
                          "' contains a marker token literally");
  }
  const std::u32string text = s.text32();
  if (e.end > text.size() || e.start >= e.end) {
    throw Error("candidate span out of bounds for sentence '" + s.id + "'");
  }
  std::u32string marked;
  marked.reserve(text.size() + 8);
  marked.append(text, 0, e.start);
  marked += utf8_decode(s1);
  marked.append(text, e.start, e.end - e.start);
  marked += utf8_decode(s2);
  marked.append(text, e.end, text.size() - e.end);

  MarkedCandidate out;
  out.sentence_id = s.id;
  out.candidate = e;
  out.marked_text = utf8_encode(marked);
  out.selector_input = e.etype + " | " + out.marked_text;
  return out;
}

enum class ProvenanceKind { gold, shift_start, shift_end, type_swap };

inline std::string to_string(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::gold: return "gold";
    case ProvenanceKind::shift_start: return "shift_start";
    case ProvenanceKind::shift_end: return "shift_end";
    default: return "type_swap";
  }
}

inline ProvenanceKind provenance_from_string(std::string_view s) {
  if (s == "gold") return ProvenanceKind::gold;
  if (s == "shift_start") return ProvenanceKind::shift_start;
  if (s == "shift_end") return ProvenanceKind::shift_end;
  if (s == "type_swap") return ProvenanceKind::type_swap;
  throw ParseError("unknown provenance '" + std::string(s) + "'");
}

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::gold;
  int delta = 0;          // token shift, for shift_* kinds
  std::string old_type;   // for type_swap
  std::string new_type;

  bool operator==(const Provenance&) const = default;
};

struct SelectorSample {
  MarkedCandidate candidate;
  int label = 0;  // 1 iff provenance is gold
  Provenance provenance;
  std::string dataset;
};

namespace selector_detail {

struct Anchor {
  const Sentence* sentence;
  const DatasetSchema* schema;
  EntitySpan entity;
};

// Shifts one boundary of the anchor to the edge of the token delta
// positions away; empty or out-of-range results are rejected.
inline std::optional<EntitySpan> shifted_span(const Sentence& s,
                                              const EntitySpan& anchor,
                                              bool move_start, int delta) {
  const std::u32string text = s.text32();
  const std::vector<Token> tokens = tokenize(text, s.language);
  const auto span = token_span_of(anchor.start, anchor.end, tokens);
  if (!span) return std::nullopt;
  const long long base = move_start ? static_cast<long long>(span->first)
                                    : static_cast<long long>(span->second);
  const long long target = base + delta;
  if (target < 0 || target >= static_cast<long long>(tokens.size())) {
    return std::nullopt;
  }
  std::size_t start = anchor.start;
  std::size_t end = anchor.end;
  if (move_start) {
    start = tokens[static_cast<std::size_t>(target)].start;
  } else {
    end = tokens[static_cast<std::size_t>(target)].end;
  }
  if (start >= end) return std::nullopt;
  return make_span(text, start, end, anchor.etype);
}

inline bool equals_any_gold(const Sentence& s, const EntitySpan& cand) {
  for (const EntitySpan& g : s.entities) {
    if (g == cand) return true;
  }
  return false;
}

}  // namespace selector_detail

// Builds ceil(total*(1-neg_ratio)) positives and the rest negatives, all
// draws from one seeded stream so a fixed seed reproduces the file byte for
// byte. Negatives are resampled until pure: never equal to any gold
// (span, type) of their sentence.
inline std::vector<SelectorSample> gen_selector_dataset(
    const std::vector<Sentence>& corpus,
    const std::map<std::string, DatasetSchema>& schemas, std::uint64_t seed,
    std::size_t total = 10000, double neg_ratio = 0.5,
    std::string_view s1 = kMarkerOpen, std::string_view s2 = kMarkerClose) {
  if (neg_ratio < 0 || neg_ratio > 1) {
    throw Error("neg_ratio must lie in [0,1]");
  }
  std::vector<selector_detail::Anchor> pool;
  for (const Sentence& s : corpus) {
    if (s.text.find(s1) != std::string::npos ||
        s.text.find(s2) != std::string::npos) {
      continue;  // unmarkable sentence
    }
    const auto it = schemas.find(s.dataset);
    if (it == schemas.end()) {
      throw SchemaNotFound("no schema for dataset '" + s.dataset + "'");
    }
    for (const EntitySpan& e : s.entities) {
      pool.push_back({&s, &it->second, e});
    }
  }
  if (pool.empty()) throw Error("corpus has no markable entities");

  const auto n_pos = static_cast<std::size_t>(
      std::ceil(static_cast<double>(total) * (1.0 - neg_ratio)));
  const std::size_t n_neg = total - std::min(total, n_pos);

  Rng rng(seed);
  std::vector<SelectorSample> out;
  out.reserve(total);

  for (std::size_t k = 0; k < n_pos; ++k) {
    const auto& a = pool[bounded_rand(rng, pool.size())];
    SelectorSample sample;
    sample.candidate = mark_candidate(*a.sentence, a.entity, s1, s2);
    sample.label = 1;
    sample.provenance = {ProvenanceKind::gold, 0, "", ""};
    sample.dataset = a.sentence->dataset;
    out.push_back(std::move(sample));
  }

  // 9 perturbations, flat: shift start/end by one of {-2,-1,+1,+2}, or swap
  // the type
  static constexpr int kDeltas[4] = {-2, -1, 1, 2};
  std::size_t produced = 0;
  const std::size_t max_anchor_draws = 64 * (n_neg + 1);
  std::size_t draws = 0;
  while (produced < n_neg) {
    if (++draws > max_anchor_draws) {
      throw InsufficientNegatives(
          "could not produce " + std::to_string(n_neg) + " negatives (" +
          std::to_string(produced) + " found)");
    }
    const auto& a = pool[bounded_rand(rng, pool.size())];
    for (int tries = 0; tries < 16; ++tries) {
      const std::uint64_t pick = bounded_rand(rng, 9);
      std::optional<EntitySpan> cand;
      Provenance prov;
      if (pick < 8) {
        const bool move_start = pick < 4;
        const int delta = kDeltas[pick % 4];
        cand = selector_detail::shifted_span(*a.sentence, a.entity, move_start,
                                             delta);
        prov.kind = move_start ? ProvenanceKind::shift_start
                               : ProvenanceKind::shift_end;
        prov.delta = delta;
      } else {
        std::vector<const std::string*> others;
        for (const TypeDef& td : a.schema->types) {
          if (td.name != a.entity.etype) others.push_back(&td.name);
        }
        if (!others.empty()) {
          EntitySpan e = a.entity;
          e.etype = *others[bounded_rand(rng, others.size())];
          cand = e;
          prov.kind = ProvenanceKind::type_swap;
          prov.old_type = a.entity.etype;
          prov.new_type = e.etype;
        }
      }
      if (!cand || selector_detail::equals_any_gold(*a.sentence, *cand)) {
        continue;
      }
      SelectorSample sample;
      sample.candidate = mark_candidate(*a.sentence, *cand, s1, s2);
      sample.label = 0;
      sample.provenance = prov;
      sample.dataset = a.sentence->dataset;
      out.push_back(std::move(sample));
      ++produced;
      break;
    }
  }
  return out;
}

// ----------------------------------------------------- score backends ----

class SelectorBackend {
 public:
  virtual ~SelectorBackend() = default;
  virtual double score(const std::string& selector_input) = 0;
  virtual std::string name() const = 0;
};

class ConstantScoreBackend : public SelectorBackend {
 public:
  explicit ConstantScoreBackend(double v) : v_(v) {}
  double score(const std::string&) override { return v_; }
  std::string name() const override { return "constant"; }

 private:
  double v_;
};

// Scores 1 exactly when the marked candidate is a gold entity of its
// sentence, found by stripping the markers back out of the input.
class GoldOracleScoreBackend : public SelectorBackend {
 public:
  explicit GoldOracleScoreBackend(const std::vector<Sentence>& corpus,
                                  std::string_view s1 = kMarkerOpen,
                                  std::string_view s2 = kMarkerClose)
      : s1_(utf8_decode(s1)), s2_(utf8_decode(s2)) {
    for (const Sentence& s : corpus) {
      auto& golds = gold_by_text_[s.text];
      for (const EntitySpan& e : s.entities) golds.insert(e);
    }
  }

  double score(const std::string& selector_input) override {
    const std::size_t sep = selector_input.find(" | ");
    if (sep == std::string::npos) return 0;
    const std::string etype = selector_input.substr(0, sep);
    std::u32string marked = utf8_decode(selector_input.substr(sep + 3), true);
    const std::size_t open = marked.find(s1_);
    if (open == std::u32string::npos) return 0;
    marked.erase(open, s1_.size());
    const std::size_t close = marked.find(s2_, open);
    if (close == std::u32string::npos) return 0;
    marked.erase(close, s2_.size());
    const auto it = gold_by_text_.find(utf8_encode(marked));
    if (it == gold_by_text_.end()) return 0;
    EntitySpan cand{open, close, etype, ""};
    return it->second.count(cand) ? 1.0 : 0.0;
  }

  std::string name() const override { return "gold-oracle"; }

 private:
  std::u32string s1_, s2_;
  std::map<std::string, std::set<EntitySpan>> gold_by_text_;
};

// Sends the selector input through a generation backend; the model must
// answer with a number in [0,1] on the first line.
class WireScoreBackend : public SelectorBackend {
 public:
  explicit WireScoreBackend(Backend& inner) : inner_(inner) {}

  double score(const std::string& selector_input) override {
    GenerationRequest req;
    req.prompt = selector_input;
    req.max_output_chars = 64;
    std::string reply = inner_.generate(req);
    const std::size_t nl = reply.find('\n');
    if (nl != std::string::npos) reply.resize(nl);
    char* end = nullptr;
    const double v = std::strtod(reply.c_str(), &end);
    if (end == reply.c_str()) {
      throw BackendError(BackendErrorKind::malformed_response,
                         "selector reply is not a number: '" + reply + "'");
    }
    return std::min(1.0, std::max(0.0, v));
  }

  std::string name() const override { return "wire-score(" + inner_.name() + ")"; }

 private:
  Backend& inner_;
};

// --------------------------------------------------------- filtering ----

struct ScoredPrediction {
  EntitySpan entity;
  double score = 0;
  bool kept = false;
  bool backend_failed = false;
  std::string diagnostic;
};

struct FilterResult {
  std::vector<EntitySpan> kept;       // input order
  std::vector<ScoredPrediction> audit;
};

// Keeps predictions scoring >= threshold. A backend failure keeps the
// candidate (fail-open): a flaky selector must not silently delete
// predictions.
inline FilterResult filter_predictions(const Sentence& s,
                                       const std::vector<EntitySpan>& preds,
                                       SelectorBackend& backend,
                                       double threshold = 0.5,
                                       std::size_t parallelism = 1,
                                       std::string_view s1 = kMarkerOpen,
                                       std::string_view s2 = kMarkerClose) {
  FilterResult out;
  out.audit.resize(preds.size());
  parallel_for(preds.size(), parallelism, [&](std::size_t i) {
    ScoredPrediction& a = out.audit[i];
    a.entity = preds[i];
    try {
      const MarkedCandidate mc = mark_candidate(s, preds[i], s1, s2);
      a.score = backend.score(mc.selector_input);
      a.kept = a.score >= threshold;
    } catch (const std::exception& e) {
      a.backend_failed = true;
      a.kept = true;
      a.score = 1.0;
      a.diagnostic = e.what();
    }
  });
  for (const ScoredPrediction& a : out.audit) {
    if (a.kept) out.kept.push_back(a.entity);
  }
  return out;
}

// --------------------------------------------------------- file format ----

inline void emit_selector_file(const std::vector<SelectorSample>& samples,
                               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const SelectorSample& s : samples) {
    ordered_json meta;
    meta["kind"] = to_string(s.provenance.kind);
    if (s.provenance.kind == ProvenanceKind::shift_start ||
        s.provenance.kind == ProvenanceKind::shift_end) {
      meta["delta"] = s.provenance.delta;
    }
    if (s.provenance.kind == ProvenanceKind::type_swap) {
      meta["old_type"] = s.provenance.old_type;
      meta["new_type"] = s.provenance.new_type;
    }
    meta["dataset"] = s.dataset;
    meta["id"] = s.candidate.sentence_id;
    meta["start"] = s.candidate.candidate.start;
    meta["end"] = s.candidate.candidate.end;
    meta["type"] = s.candidate.candidate.etype;
    ordered_json rec;
    rec["input"] = s.candidate.selector_input;
    rec["label"] = s.label;
    rec["meta"] = std::move(meta);
    out << rec.dump() << '\n';
  }
  if (!out) throw IoError("write to " + path.string() + " failed");
}

inline std::vector<SelectorSample> load_selector_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<SelectorSample> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
      throw ParseError(lineno, "invalid JSON record");
    }
    const json& meta = detail::require_field(rec, "meta", lineno);
    SelectorSample s;
    s.candidate.selector_input = detail::require_string(rec, "input", lineno);
    const json& label = detail::require_field(rec, "label", lineno);
    if (!label.is_number_integer() ||
        (label.get<int>() != 0 && label.get<int>() != 1)) {
      throw ParseError(lineno, "label must be 0 or 1");
    }
    s.label = label.get<int>();
    s.provenance.kind =
        provenance_from_string(detail::require_string(meta, "kind", lineno));
    if (meta.contains("delta")) s.provenance.delta = meta["delta"].get<int>();
    if (meta.contains("old_type")) {
      s.provenance.old_type = meta["old_type"].get<std::string>();
    }
    if (meta.contains("new_type")) {
      s.provenance.new_type = meta["new_type"].get<std::string>();
    }
    s.dataset = detail::require_string(meta, "dataset", lineno);
    s.candidate.sentence_id = detail::require_string(meta, "id", lineno);
    s.candidate.candidate.start = detail::require_offset(meta, "start", lineno);
    s.candidate.candidate.end = detail::require_offset(meta, "end", lineno);
    s.candidate.candidate.etype = detail::require_string(meta, "type", lineno);
    const std::size_t sep = s.candidate.selector_input.find(" | ");
    if (sep != std::string::npos) {
      s.candidate.marked_text = s.candidate.selector_input.substr(sep + 3);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace bioner
