#pragma once

// Exact-span scoring with a four-way error taxonomy and token-level
// boundary-deviation histograms.
//
// Matching is staged and one-to-one: exact (span,type) pairs first, then
// exact-span/wrong-type, then overlapping/same-type, then overlapping/
// wrong-type, then leftovers. Within the overlap stages candidates are
// ranked by larger character overlap, smaller |dstart|+|dend|, leftmost
// gold; predictions are processed in (start, end, type) order.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bioner/core.hpp"
#include "bioner/corpus_io.hpp"
#include "bioner/errors.hpp"

namespace bioner {

enum class ErrorCategory { Type, Span, TypeAndSpan, Spurious };

inline std::string to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Type: return "Type";
    case ErrorCategory::Span: return "Span";
    case ErrorCategory::TypeAndSpan: return "TypeAndSpan";
    default: return "Spurious";
  }
}

struct MatchedError {
  EntitySpan pred;
  ErrorCategory category;
  std::optional<EntitySpan> gold;  // absent only for Spurious
};

struct MatchResult {
  std::vector<std::pair<EntitySpan, EntitySpan>> true_positives;  // pred, gold
  std::vector<MatchedError> errors;
  std::vector<EntitySpan> missed;
};

namespace eval_detail {

inline std::size_t overlap(const EntitySpan& a, const EntitySpan& b) {
  const std::size_t lo = std::max(a.start, b.start);
  const std::size_t hi = std::min(a.end, b.end);
  return hi > lo ? hi - lo : 0;
}

inline std::size_t boundary_distance(const EntitySpan& a, const EntitySpan& b) {
  const auto d = [](std::size_t x, std::size_t y) {
    return x > y ? x - y : y - x;
  };
  return d(a.start, b.start) + d(a.end, b.end);
}

inline void check_no_duplicates(const std::vector<EntitySpan>& v,
                                const char* which) {
  std::vector<EntitySpan> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw DuplicateEntity(std::string(which) + " list contains (" +
                            std::to_string(sorted[i].start) + "," +
                            std::to_string(sorted[i].end) + "," +
                            sorted[i].etype + ") twice");
    }
  }
}

}  // namespace eval_detail

inline MatchResult match_entities(const std::vector<EntitySpan>& pred,
                                  const std::vector<EntitySpan>& gold) {
  eval_detail::check_no_duplicates(pred, "prediction");
  eval_detail::check_no_duplicates(gold, "gold");

  std::vector<EntitySpan> preds = pred;
  std::sort(preds.begin(), preds.end());
  std::vector<EntitySpan> golds = gold;
  std::sort(golds.begin(), golds.end());

  std::vector<bool> pred_used(preds.size(), false);
  std::vector<bool> gold_used(golds.size(), false);
  MatchResult out;

  // stage 1: exact (span, type)
  for (std::size_t i = 0; i < preds.size(); ++i) {
    for (std::size_t j = 0; j < golds.size(); ++j) {
      if (!gold_used[j] && preds[i] == golds[j]) {
        pred_used[i] = gold_used[j] = true;
        out.true_positives.emplace_back(preds[i], golds[j]);
        break;
      }
    }
  }

  // stages 2-4 share the greedy pick; the candidate predicate varies
  const auto run_stage = [&](ErrorCategory cat, auto&& is_candidate) {
    for (std::size_t i = 0; i < preds.size(); ++i) {
      if (pred_used[i]) continue;
      std::optional<std::size_t> best;
      for (std::size_t j = 0; j < golds.size(); ++j) {
        if (gold_used[j] || !is_candidate(preds[i], golds[j])) continue;
        if (!best) {
          best = j;
          continue;
        }
        const std::size_t ov_new = eval_detail::overlap(preds[i], golds[j]);
        const std::size_t ov_old = eval_detail::overlap(preds[i], golds[*best]);
        if (ov_new != ov_old) {
          if (ov_new > ov_old) best = j;
          continue;
        }
        const std::size_t d_new =
            eval_detail::boundary_distance(preds[i], golds[j]);
        const std::size_t d_old =
            eval_detail::boundary_distance(preds[i], golds[*best]);
        if (d_new < d_old) best = j;  // equal: keep the leftmost (lower j)
      }
      if (best) {
        pred_used[i] = gold_used[*best] = true;
        out.errors.push_back({preds[i], cat, golds[*best]});
      }
    }
  };

  run_stage(ErrorCategory::Type, [](const EntitySpan& p, const EntitySpan& g) {
    return p.start == g.start && p.end == g.end && p.etype != g.etype;
  });
  run_stage(ErrorCategory::Span, [](const EntitySpan& p, const EntitySpan& g) {
    return eval_detail::overlap(p, g) > 0 && p.etype == g.etype &&
           !(p.start == g.start && p.end == g.end);
  });
  run_stage(ErrorCategory::TypeAndSpan,
            [](const EntitySpan& p, const EntitySpan& g) {
              return eval_detail::overlap(p, g) > 0 && p.etype != g.etype &&
                     !(p.start == g.start && p.end == g.end);
            });

  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (!pred_used[i]) {
      out.errors.push_back({preds[i], ErrorCategory::Spurious, std::nullopt});
    }
  }
  for (std::size_t j = 0; j < golds.size(); ++j) {
    if (!gold_used[j]) out.missed.push_back(golds[j]);
  }
  return out;
}

struct Metrics {
  std::size_t tp = 0;
  std::size_t n_pred = 0;
  std::size_t n_gold = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

inline Metrics make_metrics(std::size_t tp, std::size_t n_pred,
                            std::size_t n_gold) {
  Metrics m{tp, n_pred, n_gold, 0, 0, 0};
  if (n_pred > 0) m.precision = static_cast<double>(tp) / n_pred;
  if (n_gold > 0) m.recall = static_cast<double>(tp) / n_gold;
  if (m.precision + m.recall > 0) {
    m.f1 = 2 * m.precision * m.recall / (m.precision + m.recall);
  }
  return m;
}

struct EvalReport {
  Metrics overall;
  std::map<std::string, Metrics> per_type;
  std::array<std::size_t, 4> error_counts{};  // indexed by ErrorCategory
  std::size_t missed = 0;
  std::map<long long, std::size_t> deviation;  // boundary deviation → count

  std::size_t errors(ErrorCategory c) const {
    return error_counts[static_cast<std::size_t>(c)];
  }
};

// Sums matching outcomes across sentences; per-type figures come from
// rerunning the matcher on the type-restricted lists.
class EvalAccumulator {
 public:
  void add(const MatchResult& m) {
    std::vector<EntitySpan> preds, golds;
    for (const auto& [p, g] : m.true_positives) {
      preds.push_back(p);
      golds.push_back(g);
    }
    for (const MatchedError& e : m.errors) {
      preds.push_back(e.pred);
      if (e.gold) golds.push_back(*e.gold);
      ++errs_[static_cast<std::size_t>(e.category)];
    }
    for (const EntitySpan& g : m.missed) golds.push_back(g);
    tp_ += m.true_positives.size();
    n_pred_ += preds.size();
    n_gold_ += golds.size();
    missed_ += m.missed.size();

    std::vector<std::string> types;
    for (const EntitySpan& e : preds) types.push_back(e.etype);
    for (const EntitySpan& e : golds) types.push_back(e.etype);
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    for (const std::string& t : types) {
      std::vector<EntitySpan> pt, gt;
      for (const EntitySpan& e : preds) {
        if (e.etype == t) pt.push_back(e);
      }
      for (const EntitySpan& e : golds) {
        if (e.etype == t) gt.push_back(e);
      }
      const MatchResult mt = match_entities(pt, gt);
      auto& c = per_type_[t];
      c.tp += mt.true_positives.size();
      c.n_pred += pt.size();
      c.n_gold += gt.size();
    }
  }

  void add_deviation(const std::map<long long, std::size_t>& hist) {
    for (const auto& [d, n] : hist) deviation_[d] += n;
  }

  EvalReport report() const {
    EvalReport r;
    r.overall = make_metrics(tp_, n_pred_, n_gold_);
    for (const auto& [t, c] : per_type_) {
      r.per_type[t] = make_metrics(c.tp, c.n_pred, c.n_gold);
    }
    r.error_counts = errs_;
    r.missed = missed_;
    r.deviation = deviation_;
    return r;
  }

 private:
  struct Counts {
    std::size_t tp = 0, n_pred = 0, n_gold = 0;
  };
  std::size_t tp_ = 0, n_pred_ = 0, n_gold_ = 0, missed_ = 0;
  std::array<std::size_t, 4> errs_{};
  std::map<std::string, Counts> per_type_;
  std::map<long long, std::size_t> deviation_;
};

inline EvalReport compute_metrics(const MatchResult& m) {
  EvalAccumulator acc;
  acc.add(m);
  return acc.report();
}

// Token-level deviation of Span and TypeAndSpan errors against their matched
// gold, on the owning sentence. Pairs that map to no token are skipped.
inline std::map<long long, std::size_t> boundary_deviation_histogram(
    const MatchResult& m, const std::u32string& text, Language lang) {
  std::map<long long, std::size_t> hist;
  const std::vector<Token> tokens = tokenize(text, lang);
  for (const MatchedError& e : m.errors) {
    if (!e.gold || (e.category != ErrorCategory::Span &&
                    e.category != ErrorCategory::TypeAndSpan)) {
      continue;
    }
    const auto pt = token_span_of(e.pred.start, e.pred.end, tokens);
    const auto gt = token_span_of(e.gold->start, e.gold->end, tokens);
    if (!pt || !gt) continue;
    const auto diff = [](std::size_t a, std::size_t b) {
      return a > b ? static_cast<long long>(a - b)
                   : static_cast<long long>(b - a);
    };
    hist[std::max(diff(pt->first, gt->first), diff(pt->second, gt->second))]++;
  }
  return hist;
}

inline std::map<long long, std::size_t> boundary_deviation_histogram(
    const MatchResult& m, const Sentence& s) {
  return boundary_deviation_histogram(m, s.text32(), s.language);
}

enum class ReportFormat { text, machine };

inline std::string render_report(const EvalReport& r, ReportFormat format) {
  if (format == ReportFormat::machine) {
    std::string out;
    const auto line = [&](ordered_json j) { out += j.dump() + "\n"; };
    ordered_json overall;
    overall["record"] = "overall";
    overall["precision"] = r.overall.precision;
    overall["recall"] = r.overall.recall;
    overall["f1"] = r.overall.f1;
    overall["tp"] = r.overall.tp;
    overall["predictions"] = r.overall.n_pred;
    overall["gold"] = r.overall.n_gold;
    line(std::move(overall));
    for (const auto& [t, m] : r.per_type) {
      ordered_json j;
      j["record"] = "type";
      j["type"] = t;
      j["precision"] = m.precision;
      j["recall"] = m.recall;
      j["f1"] = m.f1;
      j["tp"] = m.tp;
      j["predictions"] = m.n_pred;
      j["gold"] = m.n_gold;
      line(std::move(j));
    }
    ordered_json errs;
    errs["record"] = "errors";
    for (ErrorCategory c : {ErrorCategory::Type, ErrorCategory::Span,
                            ErrorCategory::TypeAndSpan, ErrorCategory::Spurious}) {
      errs[to_string(c)] = r.errors(c);
    }
    errs["missed"] = r.missed;
    line(std::move(errs));
    for (const auto& [d, n] : r.deviation) {
      ordered_json j;
      j["record"] = "deviation";
      j["tokens"] = d;
      j["count"] = n;
      line(std::move(j));
    }
    return out;
  }

  char buf[160];
  std::string out;
  const auto row = [&](const std::string& label, const Metrics& m) {
    std::snprintf(buf, sizeof(buf),
                  "%-14s P %6.4f  R %6.4f  F1 %6.4f  (tp %zu, pred %zu, gold "
                  "%zu)\n",
                  label.c_str(), m.precision, m.recall, m.f1, m.tp, m.n_pred,
                  m.n_gold);
    out += buf;
  };
  row("overall", r.overall);
  for (const auto& [t, m] : r.per_type) row("  " + t, m);
  std::snprintf(buf, sizeof(buf),
                "errors: Type %zu  Span %zu  TypeAndSpan %zu  Spurious %zu  "
                "missed %zu\n",
                r.errors(ErrorCategory::Type), r.errors(ErrorCategory::Span),
                r.errors(ErrorCategory::TypeAndSpan),
                r.errors(ErrorCategory::Spurious), r.missed);
  out += buf;
  if (!r.deviation.empty()) {
    out += "boundary deviation (tokens: count):";
    for (const auto& [d, n] : r.deviation) {
      std::snprintf(buf, sizeof(buf), " %lld: %zu", d, n);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace bioner
