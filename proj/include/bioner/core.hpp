#pragma once

// Domain types shared by the whole toolkit: sentences, entity spans, dataset
// schemas, and the tokenizer that defines the token unit used for boundary
// shifts and deviation statistics.
//
// Offset convention: all spans are Unicode scalar value indices into the
// sentence text, start inclusive, end exclusive.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "bioner/errors.hpp"
#include "bioner/unicode.hpp"

namespace bioner {

enum class Language { zh, en };

inline std::string to_string(Language lang) {
  return lang == Language::zh ? "zh" : "en";
}

inline Language language_from_string(std::string_view s) {
  if (s == "zh") return Language::zh;
  if (s == "en") return Language::en;
  throw ParseError("unknown language '" + std::string(s) + "'");
}

struct EntitySpan {
  std::size_t start = 0;  // inclusive, code points
  std::size_t end = 0;    // exclusive, code points
  std::string etype;
  std::string text;  // derived surface; excluded from identity

  // Identity is (start, end, etype); the gold set is a set over these.
  friend bool operator==(const EntitySpan& a, const EntitySpan& b) {
    return a.start == b.start && a.end == b.end && a.etype == b.etype;
  }
  friend std::strong_ordering operator<=>(const EntitySpan& a,
                                          const EntitySpan& b) {
    return std::tie(a.start, a.end, a.etype) <=>
           std::tie(b.start, b.end, b.etype);
  }
};

inline EntitySpan make_span(const std::u32string& text, std::size_t start,
                            std::size_t end, std::string etype) {
  EntitySpan e;
  e.start = start;
  e.end = end;
  e.etype = std::move(etype);
  if (start <= end && end <= text.size()) {
    e.text = utf8_encode(std::u32string_view(text).substr(start, end - start));
  }
  return e;
}

struct Sentence {
  std::string id;
  std::string text;  // UTF-8
  Language language = Language::en;
  std::string dataset;
  std::vector<EntitySpan> entities;

  std::u32string text32() const { return utf8_decode(text); }
};

struct TypeDef {
  std::string name;
  std::string definition;
};

struct DatasetSchema {
  std::string name;
  Language language = Language::en;
  std::vector<TypeDef> types;  // order fixes symbolic line order

  bool has_type(std::string_view t) const {
    return std::any_of(types.begin(), types.end(),
                       [&](const TypeDef& d) { return d.name == t; });
  }
};

struct Token {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Token& a, const Token& b) {
    return a.start == b.start && a.end == b.end;
  }
};

inline std::string token_surface(const std::u32string& text, const Token& t) {
  return utf8_encode(
      std::u32string_view(text).substr(t.start, t.end - t.start));
}

// Chinese: every non-separator character is a token (Latin fragments
// embedded in Chinese text included). English: maximal ASCII letter/digit
// runs form tokens; every other non-separator character stands alone.
inline std::vector<Token> tokenize(std::u32string_view text, Language lang) {
  std::vector<Token> tokens;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    if (lang == Language::en && is_word_char(text[i])) {
      std::size_t j = i + 1;
      while (j < n && is_word_char(text[j])) ++j;
      tokens.push_back({i, j});
      i = j;
    } else {
      tokens.push_back({i, i + 1});
      ++i;
    }
  }
  return tokens;
}

inline std::vector<Token> tokenize(std::string_view utf8_text, Language lang) {
  return tokenize(std::u32string_view(utf8_decode(utf8_text)), lang);
}

// First and last token overlapping [start, end), or nullopt when the span
// covers only separator characters.
inline std::optional<std::pair<std::size_t, std::size_t>> token_span_of(
    std::size_t start, std::size_t end, const std::vector<Token>& tokens) {
  std::optional<std::size_t> first, last;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (tokens[k].start < end && tokens[k].end > start) {
      if (!first) first = k;
      last = k;
    } else if (first && tokens[k].start >= end) {
      break;
    }
  }
  if (!first) return std::nullopt;
  return std::make_pair(*first, *last);
}

inline std::pair<std::size_t, std::size_t> char_span_to_token_span(
    const EntitySpan& span, const std::vector<Token>& tokens) {
  auto ts = token_span_of(span.start, span.end, tokens);
  if (!ts) {
    throw NoTokenOverlap("span [" + std::to_string(span.start) + "," +
                         std::to_string(span.end) +
                         ") overlaps no token (separators only)");
  }
  return *ts;
}

enum class ViolationKind {
  offset_out_of_range,
  duplicate_entity,
  unknown_type,
  text_mismatch,
  language_mismatch,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  int entity_index = -1;  // -1 for sentence-level problems
};

inline std::vector<Violation> validate_sentence(const Sentence& s,
                                                const DatasetSchema& schema) {
  std::vector<Violation> out;
  const std::u32string text = utf8_decode(s.text, /*lossy=*/true);
  if (s.language != schema.language) {
    out.push_back({ViolationKind::language_mismatch,
                   "sentence language " + to_string(s.language) +
                       " != schema language " + to_string(schema.language),
                   -1});
  }
  std::set<std::tuple<std::size_t, std::size_t, std::string>> seen;
  for (std::size_t i = 0; i < s.entities.size(); ++i) {
    const EntitySpan& e = s.entities[i];
    const int idx = static_cast<int>(i);
    if (e.start >= e.end || e.end > text.size()) {
      out.push_back({ViolationKind::offset_out_of_range,
                     "entity " + std::to_string(i) + " span [" +
                         std::to_string(e.start) + "," +
                         std::to_string(e.end) + ") invalid for text length " +
                         std::to_string(text.size()),
                     idx});
      continue;
    }
    if (!seen.insert({e.start, e.end, e.etype}).second) {
      out.push_back({ViolationKind::duplicate_entity,
                     "duplicate entity (" + std::to_string(e.start) + "," +
                         std::to_string(e.end) + "," + e.etype + ")",
                     idx});
    }
    if (!schema.has_type(e.etype)) {
      out.push_back({ViolationKind::unknown_type,
                     "type '" + e.etype + "' not in schema '" + schema.name +
                         "'",
                     idx});
    }
    const std::string slice =
        utf8_encode(std::u32string_view(text).substr(e.start, e.end - e.start));
    if (e.text != slice) {
      out.push_back({ViolationKind::text_mismatch,
                     "entity " + std::to_string(i) + " text '" + e.text +
                         "' != slice '" + slice + "'",
                     idx});
    }
  }
  return out;
}

}  // namespace bioner
