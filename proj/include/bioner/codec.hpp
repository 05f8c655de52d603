#pragma once

// Encoding of gold annotations into the three generative tagging formats and
// robust decoding of (possibly imperfect) model output back into
// character-exact entity spans.
//
//   json     - array of {"start_idx","end_idx","type","entity"} records,
//              character offsets, end-exclusive.
//   html     - source text with <type:entity> ... </type:entity> wrapped
//              around each span; nested spans nest their tags.
//   symbolic - one line per schema type, "<type>: <sentence>", with '[' and
//              ']' marking entity boundaries of that type only.
//
// Decoding is total: malformed payloads produce diagnostics, never crashes.
// Structural repair (bracket/tag balancing) happens before alignment, and
// entity-text evidence outranks claimed numeric indices.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bioner/alignment.hpp"
#include "bioner/core.hpp"
#include "bioner/errors.hpp"
#include "bioner/unicode.hpp"

namespace bioner {

enum class Strategy { json, html, symbolic };

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::json: return "json";
    case Strategy::html: return "html";
    default: return "symbolic";
  }
}

inline Strategy strategy_from_string(std::string_view s) {
  if (s == "json") return Strategy::json;
  if (s == "html") return Strategy::html;
  if (s == "symbolic") return Strategy::symbolic;
  throw ParseError("unknown strategy '" + std::string(s) + "'");
}

struct TaggedText {
  Strategy strategy = Strategy::symbolic;
  std::string payload;
  std::string dataset;
};

enum class DiagSeverity { info, repair, dropped, error };

inline std::string to_string(DiagSeverity s) {
  switch (s) {
    case DiagSeverity::info: return "info";
    case DiagSeverity::repair: return "repair";
    case DiagSeverity::dropped: return "dropped";
    default: return "error";
  }
}

struct Diagnostic {
  DiagSeverity severity;
  std::string message;
};

struct DecodeOutcome {
  std::vector<EntitySpan> entities;
  std::vector<Diagnostic> diagnostics;
  bool failed = false;  // failed implies entities is empty

  std::size_t count(DiagSeverity s) const {
    std::size_t n = 0;
    for (const auto& d : diagnostics) n += d.severity == s;
    return n;
  }
};

struct CodecOptions {
  double alignment_max_ratio = kDefaultAlignmentMaxRatio;
};

namespace codec_detail {

// a.start < b.start < a.end < b.end in either order: spans that overlap
// without containment cannot be expressed by nested tags or brackets.
inline bool crossing(const EntitySpan& a, const EntitySpan& b) {
  return (a.start < b.start && b.start < a.end && a.end < b.end) ||
         (b.start < a.start && a.start < b.end && b.end < a.end);
}

inline void check_no_crossing(const std::vector<EntitySpan>& ents,
                              bool same_type_only, const char* format) {
  for (std::size_t i = 0; i < ents.size(); ++i) {
    for (std::size_t j = i + 1; j < ents.size(); ++j) {
      if (same_type_only && ents[i].etype != ents[j].etype) continue;
      if (crossing(ents[i], ents[j])) {
        throw OverlapUnserializable(
            std::string(format) + " format cannot serialize crossing spans [" +
            std::to_string(ents[i].start) + "," + std::to_string(ents[i].end) +
            ") and [" + std::to_string(ents[j].start) + "," +
            std::to_string(ents[j].end) + ")");
      }
    }
  }
}

inline std::u32string escape_symbolic(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    switch (c) {
      case U'\\': out += U"\\\\"; break;
      case U'[': out += U"\\["; break;
      case U']': out += U"\\]"; break;
      case U'\n': out += U"\\n"; break;  // the format is line-structured
      case U'\r': out += U"\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::u32string escape_html(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    if (c == U'\\' || c == U'<' || c == U'>') out.push_back(U'\\');
    out.push_back(c);
  }
  return out;
}

inline char32_t unescape_char(char32_t c) {
  if (c == U'n') return U'\n';
  if (c == U'r') return U'\r';
  return c;
}

inline std::u32string unescape(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == U'\\' && i + 1 < s.size()) {
      out.push_back(unescape_char(s[++i]));
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

// all occurrence start offsets of needle in hay
inline std::vector<std::size_t> find_occurrences(const std::u32string& hay,
                                                 const std::u32string& needle) {
  std::vector<std::size_t> out;
  if (needle.empty() || needle.size() > hay.size()) return out;
  for (std::size_t pos = hay.find(needle); pos != std::u32string::npos;
       pos = hay.find(needle, pos + 1)) {
    out.push_back(pos);
  }
  return out;
}

// occurrence whose start is nearest to hint; ties go left
inline std::optional<std::size_t> nearest_occurrence(
    const std::u32string& hay, const std::u32string& needle, long long hint) {
  const auto occs = find_occurrences(hay, needle);
  if (occs.empty()) return std::nullopt;
  std::size_t best = occs[0];
  long long best_d = std::abs(static_cast<long long>(occs[0]) - hint);
  for (std::size_t occ : occs) {
    const long long d = std::abs(static_cast<long long>(occ) - hint);
    if (d < best_d) {
      best = occ;
      best_d = d;
    }
  }
  return best;
}

inline std::size_t edit_distance_u32(const std::u32string& a,
                                     const std::u32string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1),
                         cur[j - 1] + 1, prev[j] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Deduplicates exact (start,end,type) repeats and sorts canonically.
inline void finish_entities(DecodeOutcome& out) {
  std::sort(out.entities.begin(), out.entities.end());
  std::vector<EntitySpan> uniq;
  for (auto& e : out.entities) {
    if (!uniq.empty() && uniq.back() == e) {
      out.diagnostics.push_back(
          {DiagSeverity::info, "duplicate entity (" + std::to_string(e.start) +
                                   "," + std::to_string(e.end) + "," + e.etype +
                                   ") dropped"});
      continue;
    }
    uniq.push_back(std::move(e));
  }
  out.entities = std::move(uniq);
}

inline void mark_failed(DecodeOutcome& out, const std::string& msg) {
  out.failed = true;
  out.entities.clear();
  out.diagnostics.push_back({DiagSeverity::error, msg});
}

}  // namespace codec_detail

// ---------------------------------------------------------------- JSON ----

inline TaggedText encode_json(const Sentence& s) {
  std::vector<EntitySpan> ents = s.entities;
  std::sort(ents.begin(), ents.end());
  const std::u32string text = s.text32();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const EntitySpan& e : ents) {
    nlohmann::ordered_json rec;
    rec["start_idx"] = e.start;
    rec["end_idx"] = e.end;
    rec["type"] = e.etype;
    rec["entity"] =
        utf8_encode(std::u32string_view(text).substr(e.start, e.end - e.start));
    arr.push_back(std::move(rec));
  }
  return {Strategy::json, arr.dump(), s.dataset};
}

inline DecodeOutcome decode_json(const TaggedText& t, const Sentence& source) {
  DecodeOutcome out;
  const std::u32string src = utf8_decode(source.text, /*lossy=*/true);
  nlohmann::json payload = nlohmann::json::parse(t.payload, nullptr, false);
  if (payload.is_discarded() || !payload.is_array()) {
    codec_detail::mark_failed(out, "payload is not a JSON array");
    return out;
  }
  for (const auto& rec : payload) {
    if (!rec.is_object() || !rec.contains("start_idx") ||
        !rec.contains("end_idx") || !rec.contains("type") ||
        !rec.contains("entity") || !rec["start_idx"].is_number_integer() ||
        !rec["end_idx"].is_number_integer() || !rec["type"].is_string() ||
        !rec["entity"].is_string()) {
      out.diagnostics.push_back(
          {DiagSeverity::dropped, "malformed record " + rec.dump()});
      continue;
    }
    const long long start = rec["start_idx"].get<long long>();
    const long long end = rec["end_idx"].get<long long>();
    const std::string etype = rec["type"].get<std::string>();
    const std::string entity = rec["entity"].get<std::string>();
    const std::u32string entity32 = utf8_decode(entity, /*lossy=*/true);
    const bool in_range = start >= 0 && start < end &&
                          end <= static_cast<long long>(src.size());
    if (in_range) {
      const auto slice = std::u32string_view(src).substr(
          static_cast<std::size_t>(start),
          static_cast<std::size_t>(end - start));
      if (slice == entity32) {
        out.entities.push_back(make_span(src, static_cast<std::size_t>(start),
                                         static_cast<std::size_t>(end), etype));
        continue;
      }
    }
    // indices disagree with the entity text: the text is the stronger
    // evidence, so search for the occurrence nearest the claimed start
    auto occ = codec_detail::nearest_occurrence(src, entity32, start);
    if (occ) {
      out.entities.push_back(
          make_span(src, *occ, *occ + entity32.size(), etype));
      out.diagnostics.push_back(
          {DiagSeverity::repair,
           "indices (" + std::to_string(start) + "," + std::to_string(end) +
               ") for '" + entity + "' repaired to (" + std::to_string(*occ) +
               "," + std::to_string(*occ + entity32.size()) + ")"});
    } else {
      out.diagnostics.push_back(
          {DiagSeverity::dropped,
           "record for '" + entity + "' not locatable in source"});
    }
  }
  codec_detail::finish_entities(out);
  return out;
}

// ---------------------------------------------------------------- HTML ----

inline TaggedText encode_html(const Sentence& s) {
  codec_detail::check_no_crossing(s.entities, /*same_type_only=*/false, "html");
  const std::u32string text = s.text32();

  std::vector<EntitySpan> ents = s.entities;
  // at equal start: longer (outer) span opens first; type breaks exact ties
  std::sort(ents.begin(), ents.end(), [](const EntitySpan& a, const EntitySpan& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.end != b.end) return a.end > b.end;
    return a.etype < b.etype;
  });

  const auto tag_content = [&](const EntitySpan& e) {
    std::u32string type32 = codec_detail::escape_html(utf8_decode(e.etype, true));
    std::u32string ent32 = codec_detail::escape_html(
        std::u32string_view(text).substr(e.start, e.end - e.start));
    std::u32string content = type32 + U":" + ent32;
    if (!content.empty() && content[0] == U'/') content.insert(0, 1, U'\\');
    return content;
  };

  std::u32string payload;
  std::vector<const EntitySpan*> stack;
  std::size_t next = 0;
  for (std::size_t p = 0; p <= text.size(); ++p) {
    while (!stack.empty() && stack.back()->end == p) {
      payload += U"</" + tag_content(*stack.back()) + U">";
      stack.pop_back();
    }
    while (next < ents.size() && ents[next].start == p) {
      payload += U"<" + tag_content(ents[next]) + U">";
      stack.push_back(&ents[next]);
      ++next;
    }
    if (p < text.size()) {
      payload += codec_detail::escape_html(std::u32string_view(&text[p], 1));
    }
  }
  return {Strategy::html, utf8_encode(payload), s.dataset};
}

inline DecodeOutcome decode_html(const TaggedText& t, const Sentence& source,
                                 const CodecOptions& opts = {}) {
  DecodeOutcome out;
  const std::u32string src = utf8_decode(source.text, /*lossy=*/true);
  const std::u32string payload = utf8_decode(t.payload, /*lossy=*/true);

  struct TagEvent {
    bool is_close;
    std::u32string type;
    std::u32string entity;
    std::size_t body_pos;
  };
  std::u32string body;
  std::vector<TagEvent> events;

  for (std::size_t i = 0; i < payload.size();) {
    const char32_t c = payload[i];
    if (c == U'\\' && i + 1 < payload.size()) {
      body.push_back(codec_detail::unescape_char(payload[i + 1]));
      i += 2;
      continue;
    }
    if (c != U'<') {
      body.push_back(c);
      ++i;
      continue;
    }
    // scan the tag, escape-aware
    std::u32string raw;
    std::size_t j = i + 1;
    bool terminated = false;
    while (j < payload.size()) {
      if (payload[j] == U'>') {
        terminated = true;
        break;
      }
      if (payload[j] == U'\\' && j + 1 < payload.size()) {
        raw.push_back(payload[j]);
        raw.push_back(payload[j + 1]);
        j += 2;
      } else {
        raw.push_back(payload[j]);
        ++j;
      }
    }
    if (!terminated) {
      out.diagnostics.push_back(
          {DiagSeverity::dropped, "unterminated '<' treated as literal text"});
      body.push_back(c);
      ++i;
      continue;
    }
    const bool is_close = !raw.empty() && raw[0] == U'/';
    const std::u32string rest = is_close ? raw.substr(1) : raw;
    const std::size_t colon = rest.find(U':');
    if (colon == std::u32string::npos) {
      out.diagnostics.push_back(
          {DiagSeverity::dropped,
           "tag without ':' dropped: <" + utf8_encode(raw) + ">"});
    } else {
      events.push_back({is_close, codec_detail::unescape(rest.substr(0, colon)),
                        codec_detail::unescape(rest.substr(colon + 1)),
                        body.size()});
    }
    i = j + 1;
  }

  // stack matching keyed on (type, entity text)
  struct Open {
    std::u32string type;
    std::u32string entity;
    std::size_t body_pos;
  };
  struct Candidate {
    std::u32string type;
    std::u32string entity;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Open> stack;
  std::vector<Candidate> candidates;
  for (const TagEvent& ev : events) {
    if (!ev.is_close) {
      stack.push_back({ev.type, ev.entity, ev.body_pos});
      continue;
    }
    std::optional<std::size_t> match;
    for (std::size_t k = stack.size(); k-- > 0;) {
      if (stack[k].type == ev.type && stack[k].entity == ev.entity) {
        match = k;
        break;
      }
    }
    if (!match) {
      out.diagnostics.push_back(
          {DiagSeverity::dropped, "closing tag </" + utf8_encode(ev.type) +
                                      ":" + utf8_encode(ev.entity) +
                                      "> has no opener"});
      continue;
    }
    for (std::size_t k = stack.size(); k-- > *match + 1;) {
      out.diagnostics.push_back(
          {DiagSeverity::dropped, "tag <" + utf8_encode(stack[k].type) + ":" +
                                      utf8_encode(stack[k].entity) +
                                      "> never closed"});
      stack.pop_back();
    }
    candidates.push_back(
        {ev.type, ev.entity, stack.back().body_pos, ev.body_pos});
    stack.pop_back();
  }
  for (const Open& o : stack) {
    out.diagnostics.push_back(
        {DiagSeverity::dropped, "tag <" + utf8_encode(o.type) + ":" +
                                    utf8_encode(o.entity) + "> never closed"});
  }

  CharAlignment align;
  try {
    align = align_to_source(body, src, opts.alignment_max_ratio);
  } catch (const AlignmentRejected& e) {
    codec_detail::mark_failed(out, std::string("payload rejected: ") + e.what());
    return out;
  }

  for (const Candidate& c : candidates) {
    const auto span = align.map_span(c.begin, c.end);
    const std::string entity_utf8 = utf8_encode(c.entity);
    if (span) {
      const auto slice =
          std::u32string_view(src).substr(span->first, span->second - span->first);
      if (slice == c.entity) {
        out.entities.push_back(make_span(src, span->first, span->second,
                                         utf8_encode(c.type)));
        continue;
      }
    }
    // embedded entity text outranks the body span it wrapped
    const long long hint =
        span ? static_cast<long long>(span->first) : 0;
    auto occ = codec_detail::nearest_occurrence(src, c.entity, hint);
    if (occ) {
      out.entities.push_back(
          make_span(src, *occ, *occ + c.entity.size(), utf8_encode(c.type)));
      out.diagnostics.push_back(
          {DiagSeverity::repair, "span for '" + entity_utf8 +
                                     "' recovered by text search at " +
                                     std::to_string(*occ)});
    } else if (span && span->second > span->first) {
      out.entities.push_back(
          make_span(src, span->first, span->second, utf8_encode(c.type)));
      out.diagnostics.push_back(
          {DiagSeverity::repair,
           "embedded text '" + entity_utf8 +
               "' not found in source; aligned span used instead"});
    } else {
      out.diagnostics.push_back(
          {DiagSeverity::dropped,
           "tag pair for '" + entity_utf8 + "' unlocatable"});
    }
  }
  codec_detail::finish_entities(out);
  return out;
}

// ------------------------------------------------------------ symbolic ----

inline TaggedText encode_symbolic(const Sentence& s,
                                  const DatasetSchema& schema) {
  codec_detail::check_no_crossing(s.entities, /*same_type_only=*/true,
                                  "symbolic");
  const std::u32string text = s.text32();
  for (const EntitySpan& e : s.entities) {
    if (!schema.has_type(e.etype)) {
      throw Error("entity type '" + e.etype + "' not in schema '" +
                  schema.name + "'");
    }
  }

  std::u32string payload;
  bool first_line = true;
  for (const TypeDef& td : schema.types) {
    std::vector<EntitySpan> ents;
    for (const EntitySpan& e : s.entities) {
      if (e.etype == td.name) ents.push_back(e);
    }
    std::sort(ents.begin(), ents.end(),
              [](const EntitySpan& a, const EntitySpan& b) {
                if (a.start != b.start) return a.start < b.start;
                return a.end > b.end;  // outer bracket first
              });
    if (!first_line) payload.push_back(U'\n');
    first_line = false;
    payload += utf8_decode(td.name);
    payload += U": ";
    std::vector<std::size_t> end_stack;
    std::size_t next = 0;
    for (std::size_t p = 0; p <= text.size(); ++p) {
      while (!end_stack.empty() && end_stack.back() == p) {
        payload.push_back(U']');
        end_stack.pop_back();
      }
      while (next < ents.size() && ents[next].start == p) {
        payload.push_back(U'[');
        end_stack.push_back(ents[next].end);
        ++next;
      }
      if (p < text.size()) {
        payload +=
            codec_detail::escape_symbolic(std::u32string_view(&text[p], 1));
      }
    }
  }
  return {Strategy::symbolic, utf8_encode(payload), s.dataset};
}

namespace codec_detail {

// Resolves a possibly corrupted type label against the schema: exact match,
// otherwise the unique nearest type within a small edit distance.
inline std::optional<std::string> resolve_label(const std::u32string& label,
                                                const DatasetSchema& schema,
                                                bool& repaired) {
  repaired = false;
  std::optional<std::string> best;
  std::size_t best_d = 0;
  bool tie = false;
  for (const TypeDef& td : schema.types) {
    const std::u32string type32 = utf8_decode(td.name);
    if (label == type32) {
      repaired = false;
      return td.name;
    }
    const std::size_t budget =
        std::min<std::size_t>(2, type32.size() > 0 ? type32.size() - 1 : 0);
    const std::size_t d = edit_distance_u32(label, type32);
    if (d == 0 || d > budget) continue;
    if (!best || d < best_d) {
      best = td.name;
      best_d = d;
      tie = false;
    } else if (d == best_d) {
      tie = true;
    }
  }
  if (best && !tie) {
    repaired = true;
    return best;
  }
  return std::nullopt;
}

}  // namespace codec_detail

inline DecodeOutcome decode_symbolic(const TaggedText& t,
                                     const DatasetSchema& schema,
                                     const Sentence& source,
                                     const CodecOptions& opts = {}) {
  DecodeOutcome out;
  const std::u32string src = utf8_decode(source.text, /*lossy=*/true);
  const std::u32string payload = utf8_decode(t.payload, /*lossy=*/true);

  std::vector<std::u32string> lines;
  {
    std::size_t pos = 0;
    while (pos <= payload.size()) {
      std::size_t nl = payload.find(U'\n', pos);
      if (nl == std::u32string::npos) nl = payload.size();
      lines.push_back(payload.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }

  std::set<std::string> seen_types;
  bool any_recognized = false;
  for (const std::u32string& line : lines) {
    if (line.empty()) continue;
    // split off the type label: prefer ": ", fall back to a bare ':'
    std::size_t sep = line.find(U": ");
    std::size_t body_at;
    if (sep != std::u32string::npos) {
      body_at = sep + 2;
    } else {
      sep = line.find(U':');
      if (sep == std::u32string::npos) {
        out.diagnostics.push_back(
            {DiagSeverity::dropped,
             "line without a type label dropped: " +
                 utf8_encode(line.substr(0, 40))});
        continue;
      }
      body_at = sep + 1;
    }
    bool repaired = false;
    const auto type =
        codec_detail::resolve_label(line.substr(0, sep), schema, repaired);
    if (!type) {
      out.diagnostics.push_back(
          {DiagSeverity::dropped,
           "unknown type label '" + utf8_encode(line.substr(0, sep)) +
               "' dropped"});
      continue;
    }
    if (repaired) {
      out.diagnostics.push_back(
          {DiagSeverity::repair, "label '" + utf8_encode(line.substr(0, sep)) +
                                     "' repaired to '" + *type + "'"});
    }
    if (!seen_types.insert(*type).second) {
      out.diagnostics.push_back(
          {DiagSeverity::dropped,
           "duplicate line for type '" + *type + "' dropped"});
      continue;
    }
    any_recognized = true;

    // strip escapes and collect bracket events in stripped-body coordinates
    const std::u32string raw = line.substr(body_at);
    std::u32string body;
    struct Ev {
      bool open;
      std::size_t pos;
    };
    std::vector<Ev> evs;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const char32_t c = raw[i];
      if (c == U'\\' && i + 1 < raw.size()) {
        body.push_back(codec_detail::unescape_char(raw[++i]));
      } else if (c == U'[') {
        evs.push_back({true, body.size()});
      } else if (c == U']') {
        evs.push_back({false, body.size()});
      } else {
        body.push_back(c);
      }
    }
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const Ev& ev : evs) {
      if (ev.open) {
        stack.push_back(ev.pos);
      } else if (stack.empty()) {
        out.diagnostics.push_back(
            {DiagSeverity::dropped, "unmatched ']' in line '" + *type +
                                        "' discarded"});
      } else {
        pairs.emplace_back(stack.back(), ev.pos);
        stack.pop_back();
      }
    }
    for (std::size_t k = 0; k < stack.size(); ++k) {
      out.diagnostics.push_back(
          {DiagSeverity::dropped,
           "unmatched '[' in line '" + *type + "' discarded"});
    }

    CharAlignment align;
    try {
      align = align_to_source(body, src, opts.alignment_max_ratio);
    } catch (const AlignmentRejected&) {
      out.diagnostics.push_back(
          {DiagSeverity::error, "line for type '" + *type +
                                    "' rejected: copy diverges too far from "
                                    "the source sentence"});
      continue;
    }
    for (const auto& [bs, be] : pairs) {
      if (bs >= be) {
        out.diagnostics.push_back(
            {DiagSeverity::dropped,
             "empty bracket pair in line '" + *type + "'"});
        continue;
      }
      const auto span = align.map_span(bs, be);
      if (!span || span->second <= span->first) {
        out.diagnostics.push_back(
            {DiagSeverity::dropped,
             "bracket pair in line '" + *type + "' unlocatable in source"});
        continue;
      }
      out.entities.push_back(make_span(src, span->first, span->second, *type));
    }
  }

  if (!any_recognized) {
    codec_detail::mark_failed(out,
                              "no line has a recognizable type label prefix");
    return out;
  }
  codec_detail::finish_entities(out);
  return out;
}

// ---------------------------------------------------------- dispatchers ----

inline TaggedText encode(Strategy strategy, const Sentence& s,
                         const DatasetSchema& schema) {
  switch (strategy) {
    case Strategy::json: return encode_json(s);
    case Strategy::html: return encode_html(s);
    default: return encode_symbolic(s, schema);
  }
}

inline DecodeOutcome decode(const TaggedText& t, const DatasetSchema& schema,
                            const Sentence& source,
                            const CodecOptions& opts = {}) {
  switch (t.strategy) {
    case Strategy::json: return decode_json(t, source);
    case Strategy::html: return decode_html(t, source, opts);
    default: return decode_symbolic(t, schema, source, opts);
  }
}

}  // namespace bioner
